#pragma once

#include "core/element.hpp"
#include "core/system.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kxs {

enum class Algorithm {
  exact,
  offline_greedy,
  unweighted_greedy,
  gog_bounded,
  gog_unbounded,
  theorem1,
};

// Maps CLI names ("exact", "offline-greedy", "unweighted-greedy",
// "gog-bounded", "gog-unbounded", "theorem1"); unknown names raise an
// invalid-argument error.
Algorithm algorithm_from_name(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

struct RunOptions {
  Algorithm algorithm = Algorithm::theorem1;
  // 0 means "use the constraint's declared parameter".
  int k = 0;
  // Required by gog-bounded, rejected elsewhere.
  std::optional<Weight> wmin;
  std::optional<Weight> wmax;
  // Cross-check against brute force and add opt_weight/ratio to the
  // report. Refused (size error) beyond 20 elements.
  bool verify = false;
  // Keep engine instrumentation logs alive during the run. The report
  // does not change; this is for debugging sessions that attach to the
  // library directly.
  bool instrument = false;
};

// Runs one algorithm over the ground set in arrival order and assembles
// the report. Elements are validated against the constraint up front;
// weight-shape and weight-range violations surface as contract errors.
// Report fields are deterministic for fixed inputs except wall_time_ms.
nlohmann::ordered_json run_stream(const std::vector<Element>& ground,
                                  const IndependenceSystem& sys,
                                  const RunOptions& options);

}  // namespace kxs
