#include "runner/run.hpp"

#include "bounded/gog.hpp"
#include "core/error.hpp"
#include "exact/exact.hpp"
#include "greedy/greedy.hpp"
#include "reduction/reduction.hpp"
#include "unbounded/dynamic_gog.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kxs {

namespace {

struct AlgoOutcome {
  ElementSet solution;
  std::uint64_t oracle_calls = 0;
  std::uint64_t global_calls = 0;
  std::size_t peak_stored = 0;
  std::size_t peak_instances = 1;
  std::uint64_t discarded_count = 0;
  Weight discarded_weight;
  std::uint64_t self_loops = 0;
  std::optional<std::size_t> rho_upper;

  bool window_reported = false;
  bool has_window = false;
  long long imin = 0;
  long long imax = 0;

  bool split_reported = false;
  int ell = 0;
  int winner_group = 0;
  std::vector<std::size_t> group_counts;
};

long long kpower_exponent(const Element& u, int k) {
  if (auto e = exact_log_k(u.weight, k)) return *e;
  throw_contract("weight of '" + u.id + "' is " + u.weight.str() +
                 ", not a power of " + std::to_string(k) +
                 "; gog modes take exact k-power weights (use theorem1 for "
                 "arbitrary weights)");
}

AlgoOutcome run_exact(const std::vector<Element>& ground,
                      const IndependenceSystem& sys) {
  AlgoOutcome out;
  ElementSet ptrs;
  ptrs.reserve(ground.size());
  for (const Element& u : ground) ptrs.push_back(&u);
  ExactResult r = brute_force_opt(ptrs, sys, &out.oracle_calls);
  out.solution = std::move(r.opt_set);
  out.peak_stored = ground.size();
  out.rho_upper = r.max_independent_size;
  return out;
}

AlgoOutcome run_offline(const std::vector<Element>& ground,
                        const IndependenceSystem& sys, int k_given) {
  AlgoOutcome out;
  ElementSet ptrs;
  ptrs.reserve(ground.size());
  for (const Element& u : ground) ptrs.push_back(&u);
  out.solution = offline_greedy(ptrs, sys, &out.oracle_calls);
  out.peak_stored = ground.size();
  out.rho_upper = std::size_t(k_given) * out.solution.size();
  return out;
}

AlgoOutcome run_unweighted(const std::vector<Element>& ground,
                           const IndependenceSystem& sys, int k_given) {
  AlgoOutcome out;
  GreedyState greedy(sys, &out.oracle_calls);
  for (const Element& u : ground) greedy.feed(u);
  out.solution = greedy.solution();
  out.peak_stored = out.solution.size();
  out.rho_upper = std::size_t(k_given) * out.solution.size();
  return out;
}

AlgoOutcome run_bounded(const std::vector<Element>& ground,
                        const IndependenceSystem& sys, int k2,
                        const Weight& wmin, const Weight& wmax,
                        bool instrument) {
  AlgoOutcome out;
  GreedyOfGreedies engine(wmin, wmax, k2, sys, &out.oracle_calls, instrument);
  for (const Element& u : ground) {
    long long e = kpower_exponent(u, k2);
    if (u.weight < wmin || u.weight > wmax) {
      throw_contract("weight of '" + u.id + "' is " + u.weight.str() +
                     ", outside the declared bounds [" + wmin.str() + ", " +
                     wmax.str() + "]");
    }
    engine.feed(u, e);
  }
  out.solution = engine.finalize();
  out.peak_stored = engine.peak_stored();
  out.peak_instances = engine.instance_count();
  out.self_loops = engine.self_loops_filtered();
  return out;
}

AlgoOutcome run_unbounded(const std::vector<Element>& ground,
                          const IndependenceSystem& sys, int k_given, int k2,
                          bool instrument) {
  AlgoOutcome out;
  DynamicGreedyOfGreedies engine(k2, sys, &out.oracle_calls, &out.global_calls,
                                 instrument);
  for (const Element& u : ground) {
    engine.feed(u, KPowerWeight{k2, kpower_exponent(u, k2)});
  }
  out.solution = engine.finalize();
  out.peak_stored = engine.peak_stored();
  out.peak_instances = engine.peak_instances();
  out.self_loops = engine.self_loops_filtered();
  out.discarded_count = engine.discarded_count();
  out.discarded_weight = engine.discarded_weight();
  out.rho_upper = std::size_t(k_given) * engine.g();
  out.window_reported = true;
  out.has_window = engine.has_window();
  if (engine.has_window()) {
    out.imin = engine.imin();
    out.imax = engine.imax();
  }
  return out;
}

struct DynSink final : KPowerSink {
  DynamicGreedyOfGreedies engine;

  DynSink(int k2, const IndependenceSystem& sys, std::uint64_t* calls,
          std::uint64_t* global_calls, bool instrument)
      : engine(k2, sys, calls, global_calls, instrument) {}

  void feed(const Element& u, KPowerWeight w2) override { engine.feed(u, w2); }
  ElementSet finish() override { return engine.finalize(); }
};

AlgoOutcome run_theorem1(const std::vector<Element>& ground,
                         const IndependenceSystem& sys, int k_given, int k2,
                         bool instrument) {
  AlgoOutcome out;
  std::vector<DynSink*> sinks;
  SplitRunner split(
      k2,
      [&](int) {
        auto sink = std::make_unique<DynSink>(k2, sys, &out.oracle_calls,
                                              &out.global_calls, instrument);
        sinks.push_back(sink.get());
        return sink;
      },
      instrument);

  // The groups run concurrently, so space is accounted across all of them
  // after every arrival rather than by summing per-group peaks.
  std::size_t peak_stored = 0;
  std::size_t peak_instances = 0;
  for (const Element& u : ground) {
    split.feed(u);
    std::size_t stored = 0;
    std::size_t live = 0;
    for (const DynSink* s : sinks) {
      stored += s->engine.stored_elements();
      live += s->engine.has_window()
                  ? std::size_t(s->engine.imax() - s->engine.imin() + 2)
                  : 1;
    }
    peak_stored = std::max(peak_stored, stored);
    peak_instances = std::max(peak_instances, live);
  }
  SplitOutcome result = split.finish();
  std::size_t final_stored = 0;
  std::size_t g_total = 0;
  for (const DynSink* s : sinks) {
    final_stored += s->engine.stored_elements();
    g_total += s->engine.g();
    out.self_loops += s->engine.self_loops_filtered();
    out.discarded_count += s->engine.discarded_count();
    out.discarded_weight += s->engine.discarded_weight();
  }
  out.peak_stored = std::max(peak_stored, final_stored);
  out.peak_instances = peak_instances;
  out.solution = std::move(result.best);
  out.rho_upper = std::size_t(k_given) * g_total;
  out.split_reported = true;
  out.ell = split.ell();
  out.winner_group = result.winner_group;
  out.group_counts = std::move(result.group_counts);
  return out;
}

}  // namespace

Algorithm algorithm_from_name(std::string_view name) {
  if (name == "exact") return Algorithm::exact;
  if (name == "offline-greedy") return Algorithm::offline_greedy;
  if (name == "unweighted-greedy") return Algorithm::unweighted_greedy;
  if (name == "gog-bounded") return Algorithm::gog_bounded;
  if (name == "gog-unbounded") return Algorithm::gog_unbounded;
  if (name == "theorem1") return Algorithm::theorem1;
  throw_parse("unknown algorithm '" + std::string(name) +
              "' (choices: exact, offline-greedy, unweighted-greedy, "
              "gog-bounded, gog-unbounded, theorem1)");
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::exact: return "exact";
    case Algorithm::offline_greedy: return "offline-greedy";
    case Algorithm::unweighted_greedy: return "unweighted-greedy";
    case Algorithm::gog_bounded: return "gog-bounded";
    case Algorithm::gog_unbounded: return "gog-unbounded";
    case Algorithm::theorem1: return "theorem1";
  }
  throw_invalid("algorithm enum out of range");
}

nlohmann::ordered_json run_stream(const std::vector<Element>& ground,
                                  const IndependenceSystem& sys,
                                  const RunOptions& options) {
  if (options.k < 0) throw_contract("k must be positive");
  const int k_given = options.k > 0 ? options.k : sys.declared_k();
  if (k_given < 1) throw_contract("constraint declares a parameter below 1");
  const bool rounds_k = options.algorithm == Algorithm::gog_bounded ||
                        options.algorithm == Algorithm::gog_unbounded ||
                        options.algorithm == Algorithm::theorem1;
  const int k2 = rounds_k ? round_k(k_given) : k_given;

  if (options.wmin.has_value() != options.wmax.has_value()) {
    throw_contract("weight bounds come as a pair; give both wmin and wmax");
  }
  if (options.algorithm == Algorithm::gog_bounded) {
    if (!options.wmin) {
      throw_contract("gog-bounded needs the weight bounds wmin and wmax");
    }
  } else if (options.wmin) {
    throw_contract("weight bounds only apply to gog-bounded");
  }
  if (options.verify && ground.size() > 20) {
    throw_size("verification compares against exhaustive search and needs at "
               "most 20 elements, got " + std::to_string(ground.size()));
  }

  std::set<std::string_view> ids_seen;
  for (const Element& u : ground) {
    if (!ids_seen.insert(u.id).second) {
      throw_contract("duplicate element id '" + u.id + "'");
    }
    if (!u.weight.is_positive()) {
      throw_contract("weight of '" + u.id + "' must be positive");
    }
    sys.validate_element(u);
  }

  const auto started = std::chrono::steady_clock::now();
  AlgoOutcome out;
  switch (options.algorithm) {
    case Algorithm::exact:
      out = run_exact(ground, sys);
      break;
    case Algorithm::offline_greedy:
      out = run_offline(ground, sys, k_given);
      break;
    case Algorithm::unweighted_greedy:
      out = run_unweighted(ground, sys, k_given);
      break;
    case Algorithm::gog_bounded:
      out = run_bounded(ground, sys, k2, *options.wmin, *options.wmax,
                        options.instrument);
      break;
    case Algorithm::gog_unbounded:
      out = run_unbounded(ground, sys, k_given, k2, options.instrument);
      break;
    case Algorithm::theorem1:
      out = run_theorem1(ground, sys, k_given, k2, options.instrument);
      break;
  }
  const auto finished = std::chrono::steady_clock::now();

  std::vector<std::string> ids;
  ids.reserve(out.solution.size());
  for (const Element* e : out.solution) ids.push_back(e->id);
  std::sort(ids.begin(), ids.end());
  const Weight solution_weight = set_weight(out.solution);

  nlohmann::ordered_json report;
  report["algorithm"] = std::string(algorithm_name(options.algorithm));
  report["k_given"] = k_given;
  report["k_rounded"] = k2;
  report["element_count"] = ground.size();
  report["solution"] = ids;
  report["solution_size"] = out.solution.size();
  report["solution_weight"] = solution_weight.str();
  if (out.rho_upper) {
    report["rho_upper"] = *out.rho_upper;
  } else {
    report["rho_upper"] = nullptr;
  }
  report["peak_stored_elements"] = out.peak_stored;
  report["peak_instance_count"] = out.peak_instances;
  report["oracle_calls"] = out.oracle_calls;
  report["global_greedy_oracle_calls"] = out.global_calls;
  report["discarded_count"] = out.discarded_count;
  report["discarded_weight"] = out.discarded_weight.str();
  report["self_loops_filtered"] = out.self_loops;
  if (out.window_reported) {
    if (out.has_window) {
      nlohmann::ordered_json window;
      window["imin"] = out.imin;
      window["imax"] = out.imax;
      report["final_window"] = std::move(window);
    } else {
      report["final_window"] = nullptr;
    }
  }
  if (out.split_reported) {
    report["ell"] = out.ell;
    report["group_counts"] = out.group_counts;
    report["winner_group"] = out.winner_group;
  }
  if (options.verify) {
    Weight opt_weight;
    if (options.algorithm == Algorithm::exact) {
      opt_weight = solution_weight;
    } else {
      ElementSet ptrs;
      ptrs.reserve(ground.size());
      for (const Element& u : ground) ptrs.push_back(&u);
      opt_weight = brute_force_opt(ptrs, sys).opt_weight;
    }
    report["opt_weight"] = opt_weight.str();
    if (!solution_weight.is_zero()) {
      report["ratio"] = (opt_weight / solution_weight).str();
    } else if (opt_weight.is_zero()) {
      report["ratio"] = "1";
    } else {
      report["ratio"] = nullptr;
    }
  }
  report["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               finished - started)
                               .count();
  return report;
}

}  // namespace kxs
