#ifndef KXSTREAM_H
#define KXSTREAM_H

/*
 * C interface to the streaming independent-set library. All functions are
 * thread-compatible: handles must not be shared across threads without
 * external synchronization, and error text is thread-local.
 *
 * Functions returning kxs_status put their result in an out-parameter and
 * report failures through the status code; kxs_last_error() describes the
 * most recent failure on the calling thread. Strings handed out through
 * char** out-parameters are owned by the caller and released with
 * kxs_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kxs_status {
  KXS_OK = 0,
  KXS_ERR_PARSE = 1,    /* malformed stream/constraint text or bad option value */
  KXS_ERR_CONTRACT = 2, /* documented precondition violated (weights, bounds, k) */
  KXS_ERR_SIZE = 3,     /* ground set too large for an exhaustive routine */
  KXS_ERR_INVALID = 4,  /* null handle or misuse of the API surface */
  KXS_ERR_PROPERTY = 5, /* reserved for property-check failures */
  KXS_ERR_NOMEM = 6
} kxs_status;

/* A parsed element stream (JSONL, one element per line). */
typedef struct kxs_stream kxs_stream;
/* A parsed constraint (independence system) built from its JSON config. */
typedef struct kxs_system kxs_system;

kxs_status kxs_stream_parse_text(const char* text, kxs_stream** out);
kxs_status kxs_stream_load(const char* path, kxs_stream** out);
size_t kxs_stream_size(const kxs_stream* stream);
void kxs_stream_free(kxs_stream* stream);

kxs_status kxs_system_parse_text(const char* json_text, kxs_system** out);
kxs_status kxs_system_load(const char* path, kxs_system** out);
/* The extendibility parameter the constraint was declared with. */
int kxs_system_k(const kxs_system* system);
void kxs_system_free(kxs_system* system);

typedef struct kxs_run_options {
  /* One of "exact", "offline-greedy", "unweighted-greedy", "gog-bounded",
   * "gog-unbounded", "theorem1". NULL selects "theorem1". */
  const char* algorithm;
  /* Extendibility parameter to run with; 0 uses the constraint's declared
   * value. */
  int k;
  /* Exact weight bounds as decimal or fraction strings ("0.125", "3/16").
   * Required by gog-bounded, must stay NULL for every other algorithm. */
  const char* wmin;
  const char* wmax;
  /* Nonzero: cross-check against brute force (ground sets up to 20
   * elements) and add opt_weight/ratio to the report. */
  int verify;
  /* Nonzero: keep engine instrumentation logs alive during the run. */
  int instrument;
} kxs_run_options;

/* Runs one algorithm over the stream in arrival order. *report_json
 * receives the run report; it is deterministic for fixed inputs except for
 * its wall_time_ms field. options may be NULL for all defaults. */
kxs_status kxs_run(const kxs_stream* stream, const kxs_system* system,
                   const kxs_run_options* options, char** report_json);

/* Exhaustively audits the constraint against its declared parameter on the
 * given ground elements: down-closedness, extendibility, and the base-ratio
 * property. *passed is set to 1 when every audit holds, 0 otherwise;
 * *report_json receives the findings either way. */
kxs_status kxs_check_system(const kxs_system* system, const kxs_stream* ground,
                            int* passed, char** report_json);

/* Runs the property suite on generated instances. k_list may be NULL to
 * audit the defaults {2, 4}. *passed is set to 1 when every check holds;
 * *report_text receives a human-readable summary with replay data for any
 * failing instance. */
kxs_status kxs_verify_suite(uint64_t seed, size_t trials, const int* k_list,
                            size_t k_count, int* passed, char** report_text);

/* Description of the most recent failure on this thread; empty string if
 * none. Valid until the next library call on the same thread. */
const char* kxs_last_error(void);

void kxs_string_free(char* text);

const char* kxs_version(void);

#ifdef __cplusplus
}
#endif

#endif /* KXSTREAM_H */
