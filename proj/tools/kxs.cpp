#include "kxstream.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct StreamDeleter {
  void operator()(kxs_stream* s) const { kxs_stream_free(s); }
};
struct SystemDeleter {
  void operator()(kxs_system* s) const { kxs_system_free(s); }
};
using StreamHandle = std::unique_ptr<kxs_stream, StreamDeleter>;
using SystemHandle = std::unique_ptr<kxs_system, SystemDeleter>;

struct OwnedText {
  char* text = nullptr;
  OwnedText() = default;
  OwnedText(const OwnedText&) = delete;
  OwnedText& operator=(const OwnedText&) = delete;
  ~OwnedText() { kxs_string_free(text); }
};

int exit_code_for(kxs_status status) {
  switch (status) {
    case KXS_OK: return 0;
    case KXS_ERR_PARSE:
    case KXS_ERR_INVALID: return 1;
    case KXS_ERR_CONTRACT:
    case KXS_ERR_SIZE:
    case KXS_ERR_NOMEM: return 2;
    case KXS_ERR_PROPERTY: return 3;
  }
  return 1;
}

int report_failure(kxs_status status) {
  std::fprintf(stderr, "error: %s\n", kxs_last_error());
  return exit_code_for(status);
}

StreamHandle load_stream(const std::string& path, kxs_status& status) {
  kxs_stream* raw = nullptr;
  status = kxs_stream_load(path.c_str(), &raw);
  return StreamHandle(raw);
}

SystemHandle load_system(const std::string& path, kxs_status& status) {
  kxs_system* raw = nullptr;
  status = kxs_system_load(path.c_str(), &raw);
  return SystemHandle(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming maximum-weight independent sets under k-extendible constraints"};
  app.set_version_flag("--version", kxs_version());
  app.require_subcommand(1);

  std::string stream_path;
  std::string constraint_path;
  std::string algorithm = "theorem1";
  int k = 0;
  std::string wmin;
  std::string wmax;
  bool cross_check = false;
  bool instrument = false;

  CLI::App* run = app.add_subcommand(
      "run", "Run one algorithm over an element stream and print its report");
  run->add_option("--stream-file", stream_path,
                  "element stream, one JSON object per line")
      ->required();
  run->add_option("--constraint-file", constraint_path, "constraint config JSON")
      ->required();
  run->add_option("--algorithm", algorithm,
                  "exact, offline-greedy, unweighted-greedy, gog-bounded, "
                  "gog-unbounded or theorem1 (default)");
  run->add_option("--k", k, "override the constraint's declared parameter")
      ->check(CLI::PositiveNumber);
  run->add_option("--wmin", wmin,
                  "exact lower weight bound, decimal or fraction (gog-bounded only)");
  run->add_option("--wmax", wmax,
                  "exact upper weight bound, decimal or fraction (gog-bounded only)");
  run->add_flag("--verify", cross_check,
                "cross-check against brute force and report opt_weight and "
                "ratio (up to 20 elements)");
  run->add_flag("--instrument", instrument,
                "keep engine instrumentation logs alive during the run");

  std::uint64_t seed = 1;
  std::size_t trials = 500;
  std::vector<int> k_list;

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the property suite on generated instances");
  verify->add_option("--seed", seed, "base seed for instance generation");
  verify->add_option("--trials", trials, "instances per corpus check");
  verify->add_option("--k", k_list, "parameters to audit (repeatable; default 2 4)")
      ->check(CLI::PositiveNumber);

  std::string check_stream_path;
  std::string check_constraint_path;

  CLI::App* check = app.add_subcommand(
      "check-system",
      "Audit a constraint against its declared parameter on given elements");
  check->add_option("--constraint-file", check_constraint_path,
                    "constraint config JSON")
      ->required();
  check->add_option("--stream-file", check_stream_path,
                    "ground elements to audit over")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (run->parsed()) {
    kxs_status status = KXS_OK;
    const StreamHandle stream = load_stream(stream_path, status);
    if (status != KXS_OK) return report_failure(status);
    const SystemHandle system = load_system(constraint_path, status);
    if (status != KXS_OK) return report_failure(status);

    kxs_run_options options{};
    options.algorithm = algorithm.c_str();
    options.k = k;
    options.wmin = wmin.empty() ? nullptr : wmin.c_str();
    options.wmax = wmax.empty() ? nullptr : wmax.c_str();
    options.verify = cross_check ? 1 : 0;
    options.instrument = instrument ? 1 : 0;

    OwnedText report;
    status = kxs_run(stream.get(), system.get(), &options, &report.text);
    if (status != KXS_OK) return report_failure(status);
    std::printf("%s\n", report.text);
    return 0;
  }

  if (verify->parsed()) {
    int passed = 0;
    OwnedText report;
    const kxs_status status =
        kxs_verify_suite(seed, trials, k_list.empty() ? nullptr : k_list.data(),
                         k_list.size(), &passed, &report.text);
    if (status != KXS_OK) return report_failure(status);
    std::fputs(report.text, stdout);
    return passed ? 0 : 3;
  }

  if (check->parsed()) {
    kxs_status status = KXS_OK;
    const SystemHandle system = load_system(check_constraint_path, status);
    if (status != KXS_OK) return report_failure(status);
    const StreamHandle ground = load_stream(check_stream_path, status);
    if (status != KXS_OK) return report_failure(status);

    int passed = 0;
    OwnedText report;
    status = kxs_check_system(system.get(), ground.get(), &passed, &report.text);
    if (status != KXS_OK) return report_failure(status);
    std::printf("%s\n", report.text);
    return passed ? 0 : 3;
  }

  return 1;
}
