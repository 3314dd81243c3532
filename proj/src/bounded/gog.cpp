#include "bounded/gog.hpp"

#include "core/error.hpp"
#include "reduction/reduction.hpp"

#include <algorithm>
#include <string>

namespace kxs {

GreedyOfGreedies::GreedyOfGreedies(const Weight& wmin, const Weight& wmax, int k,
                                   const IndependenceSystem& sys,
                                   std::uint64_t* oracle_calls, bool instrument)
    : k_(k), filter_(sys, oracle_calls), oracle_calls_(oracle_calls),
      instrument_(instrument) {
  log2_exact(k);
  if (!wmin.is_positive() || !wmax.is_positive()) {
    throw_contract("weight bounds must be positive");
  }
  if (wmax < wmin) {
    throw_contract("weight bounds out of order: wmin " + wmin.str() + " > wmax " +
                   wmax.str());
  }
  imin_ = ceil_log_k(wmin, k);
  imax_ = floor_log_k(wmax, k);
  if (imax_ >= imin_) {
    std::size_t count = static_cast<std::size_t>(imax_ - imin_ + 1);
    bank_.reserve(count);
    for (std::size_t j = 0; j < count; ++j) bank_.emplace_back(sys, oracle_calls);
    if (instrument_) fed_sets_.assign(count, {});
  }
}

void GreedyOfGreedies::feed(const Element& u, long long exponent) {
  if (finished_) throw_contract("feed after finalize");
  if (filter_.is_self_loop(u)) {
    ++self_loops_;
    return;
  }
  if (bank_.empty()) return;  // no representable class; nothing can hold u
  if (exponent > imax_) {
    throw_contract("element \"" + u.id + "\" has class " + std::to_string(exponent) +
                   " above the bank top " + std::to_string(imax_));
  }
  for (long long i = imin_; i <= exponent; ++i) {
    std::size_t j = static_cast<std::size_t>(i - imin_);
    if (instrument_) fed_sets_[j].push_back(&u);
    if (bank_[j].feed(u)) ++stored_count_;
  }
  peak_stored_ = std::max(peak_stored_, stored_count_);
}

std::vector<ElementSet> GreedyOfGreedies::outputs() const {
  std::vector<ElementSet> out;
  out.reserve(bank_.size());
  for (const GreedyState& state : bank_) out.push_back(state.solution());
  return out;
}

ElementSet GreedyOfGreedies::finalize() {
  if (finished_) return merge_.T;
  finished_ = true;
  if (bank_.empty()) return {};
  merge_ = merge_descending(outputs(), bank_.front().system(), oracle_calls_);
  peak_stored_ = std::max(peak_stored_, stored_count_ + merge_.T.size());
  return merge_.T;
}

std::size_t GreedyOfGreedies::stored_elements() const {
  std::size_t total = finished_ ? merge_.T.size() : 0;
  for (const GreedyState& state : bank_) total += state.size();
  return total;
}

}  // namespace kxs
