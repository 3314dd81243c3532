#pragma once

#include "core/system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kxs {

// Outcome of one property check: how many property evaluations ran, how
// many failed, and capped failure reports. Reports for generated instances
// carry the instance seed plus a full serialization (constraint config and
// stream JSONL) so a failure can be replayed from the command line.
struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;

  bool passed() const { return failures == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 500;
  std::vector<int> k_list = {2, 4};
};

// The individual checks. Each is deterministic in (seed, trials, k_list);
// the same arguments always audit the same instances. Entries of k_list
// that are not powers of two are rounded up where an engine needs that.

// Rounding a weight to a power of k and shifting by its group index keeps
// it inside [w/2, w]; the rounded weight alone stays inside (w/k, w].
CheckResult check_weight_rounding(std::uint64_t seed, std::size_t samples,
                                  const std::vector<int>& k_list);

// Streaming greedy output B versus every independent set A of the same
// fixture: k|B \ A| >= |A \ B| for every arrival order. Orders are
// exhausted up to exhaustive_max_n elements and sampled beyond that.
CheckResult check_exchange_bound(std::uint64_t seed, int exhaustive_max_n,
                                 std::size_t sampled_permutations);

// Per-class counting bound of the bounded merge: for every class i,
// k^2 |T_{i+1}| + k |T_i \ T_{i+1}| >= |OPT n E_i|.
CheckResult check_merge_counting(std::uint64_t seed, std::size_t trials,
                                 const std::vector<int>& k_list);

// w(OPT) <= 2k w(T) for the bounded engine on k-power corpora.
CheckResult check_bounded_ratio(std::uint64_t seed, std::size_t trials,
                                const std::vector<int>& k_list);

// w(OPT) <= 4k w(T) for the dynamic engine on wide-exponent corpora.
CheckResult check_unbounded_ratio(std::uint64_t seed, std::size_t trials,
                                  const std::vector<int>& k_list);

// w(OPT) <= 8k log2(k) w(winner) for the full split pipeline on
// arbitrary-weight corpora (k here is the rounded parameter).
CheckResult check_pipeline_ratio(std::uint64_t seed, std::size_t trials,
                                 const std::vector<int>& k_list);

// Space accounting, all comparisons exact: the bounded bank holds
// imax - imin + 1 instances with k^(count-1) wmin <= wmax, its element
// peak stays within rho * count + |T|, and the dynamic peak obeys
// k^(peak-2) <= (2 k rho)^2 with rho taken from brute force.
CheckResult check_space_bounds(std::uint64_t seed, std::size_t trials,
                               const std::vector<int>& k_list);

// Replaying the dynamic engine's final window over the kept elements
// through the bounded engine reproduces the output set, and the dropped
// part of the optimum costs at most half of it.
CheckResult check_window_replay(std::uint64_t seed, std::size_t trials,
                                const std::vector<int>& k_list);

// Definition audit for one constraint at its declared parameter:
// down-closedness, extendibility, and the base-ratio property. Exhaustive;
// |ground| is capped by the underlying checkers.
CheckResult check_definition_of(const IndependenceSystem& sys,
                                ElementSpan ground);

// The audit above over the shipped fixture systems and a capped number of
// generated instances (trials beyond the cap add nothing; the sweeps are
// exhaustive per instance).
CheckResult check_definitions(std::uint64_t seed, std::size_t trials,
                              const std::vector<int>& k_list);

// Baselines: the offline weighted greedy stays within factor k of the
// optimum, and the streaming unweighted greedy always ends on a base.
CheckResult check_baselines(std::uint64_t seed, std::size_t trials,
                            const std::vector<int>& k_list);

// Runs every check with budgets derived from options.trials.
std::vector<CheckResult> verify_suite(const SuiteOptions& options);

// One line per check plus failure details, ending with a pass/fail tally.
std::string format_suite_report(const std::vector<CheckResult>& results);

}  // namespace kxs
