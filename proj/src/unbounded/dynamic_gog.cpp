#include "unbounded/dynamic_gog.hpp"

#include "core/error.hpp"
#include "reduction/reduction.hpp"

#include <algorithm>
#include <string>

namespace kxs {

DynamicGreedyOfGreedies::DynamicGreedyOfGreedies(int k, const IndependenceSystem& sys,
                                                 std::uint64_t* oracle_calls,
                                                 std::uint64_t* global_calls,
                                                 bool instrument)
    : k_(k),
      sys_(&sys),
      filter_(sys, oracle_calls),
      oracle_calls_(oracle_calls),
      instrument_(instrument),
      global_(sys, global_calls) {
  log2_exact(k);
}

void DynamicGreedyOfGreedies::flush_buckets_below(long long bound) {
  while (!buckets_.empty() && buckets_.begin()->first < bound) {
    Bucket& b = buckets_.begin()->second;
    discarded_count_ += b.count;
    discarded_weight_ += b.weight;
    if (instrument_) {
      discard_log_.insert(discard_log_.end(), b.members.begin(), b.members.end());
    }
    buckets_.erase(buckets_.begin());
  }
}

void DynamicGreedyOfGreedies::feed(const Element& u, KPowerWeight w2) {
  if (finished_) throw_contract("feed after finalize");
  if (w2.base_k != k_) {
    throw_contract("element \"" + u.id + "\" carries base-" + std::to_string(w2.base_k) +
                   " operating weight in a base-" + std::to_string(k_) + " engine");
  }
  ++arrivals_;
  if (filter_.is_self_loop(u)) {
    ++self_loops_;
    return;
  }

  if (global_.feed(u)) ++stored_;

  long long e = w2.exponent;
  long long pimin = imin_, pimax = imax_;
  bool had = has_window_;
  if (!had || e > imax_) imax_ = e;

  // wmin = wmax / (2gk)^2, exact. g >= 1 here: the first surviving element
  // is always accepted by the then-empty global greedy.
  BigInt m = BigInt(2) * static_cast<long long>(g()) * k_;
  wmin_ = wmax() / Weight(BigRat(m * m));
  imin_ = ceil_log_k(wmin_, k_);
  has_window_ = true;

  if (!had) {
    for (long long i = imin_; i <= imax_; ++i) {
      instances_.emplace(i, Instance{GreedyState(*sys_, oracle_calls_), {}});
    }
  } else {
    // Deletions first: everything below the new bottom goes away, and the
    // pending tallies of those classes become discards for good.
    while (!instances_.empty() && instances_.begin()->first < imin_) {
      stored_ -= instances_.begin()->second.greedy.size();
      instances_.erase(instances_.begin());
    }
    // A falling bottom (g grew): the old bottom instance is cloned into
    // every new low index, fed history included.
    if (imin_ < pimin) {
      const Instance& src = instances_.at(pimin);
      for (long long i = imin_; i < pimin; ++i) {
        instances_.emplace(i, src);
        stored_ += src.greedy.size();
      }
    }
    // Fresh instances for the new top, but only at indices the new window
    // keeps; classes in (pimax, imin_) would be deleted in the same breath
    // and are never materialized.
    for (long long i = std::max(pimax + 1, imin_); i <= imax_; ++i) {
      instances_.emplace(i, Instance{GreedyState(*sys_, oracle_calls_), {}});
    }
  }
  flush_buckets_below(imin_);

  if (instances_.size() != static_cast<std::size_t>(imax_ - imin_ + 1) ||
      instances_.begin()->first != imin_ || instances_.rbegin()->first != imax_) {
    throw_contract("window drift: live instances disagree with [imin, imax]");
  }
  peak_instances_ = std::max(peak_instances_, instances_.size() + 1);

  if (e >= imin_) {
    for (long long i = imin_; i <= e; ++i) {
      Instance& inst = instances_.at(i);
      if (instrument_) inst.fed.push_back(&u);
      if (inst.greedy.feed(u)) ++stored_;
    }
    Bucket& b = buckets_[e];
    b.count += 1;
    b.weight += u.weight;
    if (instrument_) b.members.push_back(&u);
  } else {
    ++discarded_count_;
    discarded_weight_ += u.weight;
    if (instrument_) discard_log_.push_back(&u);
  }

  peak_stored_ = std::max(peak_stored_, stored_);
  if (instrument_) trace_.push_back({arrivals_, imin_, imax_, g()});
}

ElementSet DynamicGreedyOfGreedies::finalize() {
  if (finished_) return result_;
  finished_ = true;
  if (!has_window_) return result_;
  std::vector<ElementSet> outs;
  outs.reserve(instances_.size());
  for (const auto& [i, inst] : instances_) outs.push_back(inst.greedy.solution());
  merge_ = merge_descending(outs, *sys_, oracle_calls_);
  for (std::size_t j = 0; j < merge_.trace.size(); ++j) {
    merge_trace_[imin_ + static_cast<long long>(j)] = merge_.trace[j];
  }
  stored_ += merge_.T.size();
  peak_stored_ = std::max(peak_stored_, stored_);
  result_ = merge_.T;
  return result_;
}

std::map<long long, ElementSet> DynamicGreedyOfGreedies::outputs() const {
  std::map<long long, ElementSet> out;
  for (const auto& [i, inst] : instances_) out[i] = inst.greedy.solution();
  return out;
}

std::map<long long, ElementSet> DynamicGreedyOfGreedies::fed_sets() const {
  std::map<long long, ElementSet> out;
  for (const auto& [i, inst] : instances_) out[i] = inst.fed;
  return out;
}

}  // namespace kxs
