#include "kxstream.h"

#include "core/error.hpp"
#include "io/jsonl.hpp"
#include "runner/run.hpp"
#include "systems/systems.hpp"
#include "verify/suite.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

struct kxs_stream {
  std::vector<kxs::Element> elements;
};

struct kxs_system {
  std::unique_ptr<kxs::IndependenceSystem> sys;
};

namespace {

thread_local std::string g_last_error;

kxs_status map_code(kxs::ErrorCode code) {
  switch (code) {
    case kxs::ErrorCode::parse: return KXS_ERR_PARSE;
    case kxs::ErrorCode::contract: return KXS_ERR_CONTRACT;
    case kxs::ErrorCode::size: return KXS_ERR_SIZE;
    case kxs::ErrorCode::invalid: return KXS_ERR_INVALID;
    case kxs::ErrorCode::property: return KXS_ERR_PROPERTY;
  }
  return KXS_ERR_INVALID;
}

template <typename Fn>
kxs_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const kxs::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KXS_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KXS_ERR_INVALID;
  }
}

kxs_status fail_invalid(const char* message) {
  g_last_error = message;
  return KXS_ERR_INVALID;
}

// Caller-owned copy; released with kxs_string_free (malloc/free pairing so
// C callers never touch the C++ allocator).
char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

kxs_status kxs_stream_parse_text(const char* text, kxs_stream** out) {
  if (!text || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<kxs_stream>();
    handle->elements = kxs::parse_stream_text(text);
    *out = handle.release();
    return KXS_OK;
  });
}

kxs_status kxs_stream_load(const char* path, kxs_stream** out) {
  if (!path || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<kxs_stream>();
    handle->elements = kxs::parse_stream_file(path);
    *out = handle.release();
    return KXS_OK;
  });
}

size_t kxs_stream_size(const kxs_stream* stream) {
  return stream ? stream->elements.size() : 0;
}

void kxs_stream_free(kxs_stream* stream) {
  delete stream;
}

kxs_status kxs_system_parse_text(const char* json_text, kxs_system** out) {
  if (!json_text || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    const auto parsed = nlohmann::json::parse(std::string(json_text), nullptr, false);
    if (parsed.is_discarded()) kxs::throw_parse("constraint config is not valid JSON");
    auto handle = std::make_unique<kxs_system>();
    handle->sys = kxs::make_system(parsed);
    *out = handle.release();
    return KXS_OK;
  });
}

kxs_status kxs_system_load(const char* path, kxs_system** out) {
  if (!path || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<kxs_system>();
    handle->sys = kxs::load_system_file(path);
    *out = handle.release();
    return KXS_OK;
  });
}

int kxs_system_k(const kxs_system* system) {
  return system && system->sys ? system->sys->declared_k() : 0;
}

void kxs_system_free(kxs_system* system) {
  delete system;
}

kxs_status kxs_run(const kxs_stream* stream, const kxs_system* system,
                   const kxs_run_options* options, char** report_json) {
  if (!stream || !system || !system->sys || !report_json) {
    return fail_invalid("null argument");
  }
  *report_json = nullptr;
  return guarded([&] {
    kxs::RunOptions run;
    if (options) {
      if (options->algorithm) {
        run.algorithm = kxs::algorithm_from_name(options->algorithm);
      }
      if (options->k < 0) kxs::throw_contract("k must be positive");
      run.k = options->k;
      if (options->wmin) run.wmin = kxs::Weight::parse(options->wmin);
      if (options->wmax) run.wmax = kxs::Weight::parse(options->wmax);
      run.verify = options->verify != 0;
      run.instrument = options->instrument != 0;
    }
    const auto report = kxs::run_stream(stream->elements, *system->sys, run);
    *report_json = copy_out(report.dump());
    return KXS_OK;
  });
}

kxs_status kxs_check_system(const kxs_system* system, const kxs_stream* ground,
                            int* passed, char** report_json) {
  if (!system || !system->sys || !ground || !passed || !report_json) {
    return fail_invalid("null argument");
  }
  *passed = 0;
  *report_json = nullptr;
  return guarded([&] {
    kxs::ElementSet pointers;
    pointers.reserve(ground->elements.size());
    for (const kxs::Element& e : ground->elements) {
      system->sys->validate_element(e);
      pointers.push_back(&e);
    }
    const kxs::CheckResult audit = kxs::check_definition_of(*system->sys, pointers);
    nlohmann::ordered_json report;
    report["type"] = system->sys->type_name();
    report["declared_k"] = system->sys->declared_k();
    report["ground_size"] = ground->elements.size();
    report["trials"] = audit.trials;
    report["failures"] = audit.failures;
    report["passed"] = audit.passed();
    report["messages"] = audit.messages;
    *passed = audit.passed() ? 1 : 0;
    *report_json = copy_out(report.dump());
    return KXS_OK;
  });
}

kxs_status kxs_verify_suite(uint64_t seed, size_t trials, const int* k_list,
                            size_t k_count, int* passed, char** report_text) {
  if (!passed || !report_text || (k_count > 0 && !k_list)) {
    return fail_invalid("null argument");
  }
  *passed = 0;
  *report_text = nullptr;
  return guarded([&] {
    kxs::SuiteOptions options;
    options.seed = seed;
    options.trials = trials;
    if (k_count > 0) {
      options.k_list.assign(k_list, k_list + k_count);
      for (int k : options.k_list) {
        if (k < 1) kxs::throw_contract("k_list entries must be positive");
      }
    }
    const auto results = kxs::verify_suite(options);
    bool all = true;
    for (const auto& r : results) all = all && r.passed();
    *passed = all ? 1 : 0;
    *report_text = copy_out(kxs::format_suite_report(results));
    return KXS_OK;
  });
}

const char* kxs_last_error(void) {
  return g_last_error.c_str();
}

void kxs_string_free(char* text) {
  std::free(text);
}

const char* kxs_version(void) {
  return "1.0.0";
}

}  // extern "C"
