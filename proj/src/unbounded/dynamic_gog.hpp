#pragma once

#include "core/kpower.hpp"
#include "core/system.hpp"
#include "greedy/greedy.hpp"
#include "greedy/merge.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kxs {

// Streaming engine for k-power weights with no bounds known in advance.
// A global unweighted greedy tracks a feasible set of size g; the maximum
// weight seen and g together define a sliding window of per-class greedy
// instances [imin, imax] with wmin = wmax/(2gk)^2, imin = ceil(log_k wmin),
// imax = log_k wmax. Instances below a rising imin are deleted; when imin
// falls (g grew), the old bottom instance is cloned into the new indices;
// when wmax rises, fresh instances cover the new top, but only at indices
// the new window actually keeps (doomed ones are never materialized).
//
// An element is "discarded" if it never reaches the instance that is the
// window bottom at termination: that covers arrivals below the current
// wmin and elements whose instances were all deleted later. The engine
// tracks the discarded count and weight exactly without storing elements,
// by keeping per-class counters that are flushed into the discard totals
// whenever imin climbs past their class.
class DynamicGreedyOfGreedies {
 public:
  // k must be a power of two >= 2. oracle_calls counts instance-bank and
  // merge queries plus the per-arrival self-loop filter; global_calls
  // counts the global greedy's queries separately. With instrument set,
  // per-instance fed logs, the discard log and a per-arrival window trace
  // are kept (test bookkeeping, excluded from space accounting).
  DynamicGreedyOfGreedies(int k, const IndependenceSystem& sys,
                          std::uint64_t* oracle_calls = nullptr,
                          std::uint64_t* global_calls = nullptr,
                          bool instrument = false);

  // w2 carries the operating weight k^exponent; control flow never looks
  // at u.weight except to price discards in original units for reports.
  void feed(const Element& u, KPowerWeight w2);

  // Descending merge over the final window; call once, stream exhausted.
  ElementSet finalize();

  int k() const { return k_; }
  bool has_window() const { return has_window_; }
  long long imin() const { return imin_; }
  long long imax() const { return imax_; }
  Weight wmax() const { return Weight::kpow(k_, imax_); }
  const Weight& wmin() const { return wmin_; }
  std::size_t g() const { return global_.size(); }
  const ElementSet& global_solution() const { return global_.solution(); }

  std::size_t arrivals() const { return arrivals_; }
  std::uint64_t self_loops_filtered() const { return self_loops_; }
  std::uint64_t discarded_count() const { return discarded_count_; }
  const Weight& discarded_weight() const { return discarded_weight_; }

  // Live instance count is imax - imin + 2 after every arrival (the window
  // plus the global greedy); the peak is the max over arrivals.
  std::size_t peak_instances() const { return peak_instances_; }
  // Elements held in greedy solutions (window instances plus global) and,
  // once built, T.
  std::size_t peak_stored() const { return peak_stored_; }
  std::size_t stored_elements() const { return stored_; }

  std::map<long long, ElementSet> outputs() const;  // live C_i by class

  struct Snapshot {
    std::size_t arrival;
    long long imin;
    long long imax;
    std::size_t g;
  };

  // Instrumented views: fed logs E_i for live instances, discarded
  // elements F, per-arrival window trace, merge snapshots T_i by class.
  std::map<long long, ElementSet> fed_sets() const;
  const ElementSet& discard_log() const { return discard_log_; }
  const std::vector<Snapshot>& window_trace() const { return trace_; }
  const std::map<long long, ElementSet>& merge_trace() const { return merge_trace_; }

 private:
  struct Instance {
    GreedyState greedy;
    ElementSet fed;  // instrument only
  };
  struct Bucket {
    std::uint64_t count = 0;
    Weight weight;
    ElementSet members;  // instrument only
  };

  void flush_buckets_below(long long bound);

  int k_;
  const IndependenceSystem* sys_;
  Oracle filter_;
  std::uint64_t* oracle_calls_;
  bool instrument_;
  GreedyState global_;
  std::map<long long, Instance> instances_;
  std::map<long long, Bucket> buckets_;  // pending fed-element tallies by class
  bool has_window_ = false;
  bool finished_ = false;
  long long imin_ = 0;
  long long imax_ = -1;
  Weight wmin_;
  std::size_t arrivals_ = 0;
  std::uint64_t self_loops_ = 0;
  std::uint64_t discarded_count_ = 0;
  Weight discarded_weight_;
  std::size_t stored_ = 0;
  std::size_t peak_instances_ = 0;
  std::size_t peak_stored_ = 0;
  ElementSet discard_log_;
  std::vector<Snapshot> trace_;
  MergeResult merge_;
  std::map<long long, ElementSet> merge_trace_;
  ElementSet result_;
};

}  // namespace kxs
