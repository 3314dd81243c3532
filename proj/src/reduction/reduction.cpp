#include "reduction/reduction.hpp"

#include "core/error.hpp"

#include <string>

namespace kxs {

int round_k(int k_in) {
  if (k_in < 1) throw_contract("k must be >= 1, got " + std::to_string(k_in));
  int k = 2;
  while (k < k_in) {
    if (k > (1 << 29)) throw_contract("k too large to round: " + std::to_string(k_in));
    k <<= 1;
  }
  return k;
}

long long class_index(const Weight& w) {
  if (!w.is_positive()) throw_contract("class_index requires a positive weight");
  return w.floor_log2();
}

KPowerWeight kpower_round(const Weight& w, int k) {
  int ell = log2_exact(k);
  return KPowerWeight{k, floor_div(class_index(w), ell)};
}

int group_of(const Weight& w, int k) {
  int ell = log2_exact(k);
  return static_cast<int>(floor_mod(class_index(w), ell));
}

std::optional<long long> exact_log_k(const Weight& w, int k) {
  if (!w.is_positive()) return std::nullopt;
  KPowerWeight rounded = kpower_round(w, k);
  if (rounded.value() == w) return rounded.exponent;
  return std::nullopt;
}

long long floor_log_k(const Weight& w, int k) { return kpower_round(w, k).exponent; }

long long ceil_log_k(const Weight& w, int k) {
  KPowerWeight down = kpower_round(w, k);
  return down.value() == w ? down.exponent : down.exponent + 1;
}

SplitRunner::SplitRunner(int k, const InnerFactory& factory, bool instrument)
    : k_(k), ell_(log2_exact(k)), instrument_(instrument) {
  inner_.reserve(ell_);
  for (int j = 0; j < ell_; ++j) inner_.push_back(factory(j));
  group_counts_.assign(ell_, 0);
  if (instrument_) fed_log_.assign(ell_, {});
}

void SplitRunner::feed(const Element& u) {
  if (!u.weight.is_positive()) {
    throw_contract("element \"" + u.id + "\" has non-positive weight");
  }
  int j = group_of(u.weight, k_);
  ++group_counts_[j];
  if (instrument_) fed_log_[j].push_back(&u);
  inner_[j]->feed(u, kpower_round(u.weight, k_));
}

SplitOutcome SplitRunner::finish() {
  SplitOutcome out;
  out.group_counts = group_counts_;
  out.outputs.reserve(inner_.size());
  for (auto& alg : inner_) out.outputs.push_back(alg->finish());
  out.winner_group = 0;
  out.best = out.outputs[0];
  out.best_weight = set_weight(out.best);
  for (int j = 1; j < static_cast<int>(out.outputs.size()); ++j) {
    Weight w = set_weight(out.outputs[j]);
    if (w > out.best_weight) {
      out.best_weight = w;
      out.best = out.outputs[j];
      out.winner_group = j;
    }
  }
  return out;
}

ElementSet run_split(ElementStream& stream, int k,
                     const SplitRunner::InnerFactory& factory) {
  SplitRunner runner(k, factory);
  while (const Element* u = stream.next()) runner.feed(*u);
  return runner.finish().best;
}

}  // namespace kxs
