#pragma once

#include "core/kpower.hpp"
#include "core/stream.hpp"
#include "core/system.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace kxs {

// Smallest power of two >= max(k_in, 2). The approximation machinery needs
// the extendibility parameter in that form; rounding up only loosens the
// constraint the instance actually satisfies. At most doubles k_in.
int round_k(int k_in);

// The unique integer i with 2^i <= w < 2^(i+1), for w > 0.
long long class_index(const Weight& w);

// Rounds w down to a power of k: exponent floor(class_index(w) / log2 k),
// floor taken toward minus infinity so sub-unit weights land on negative
// exponents.
KPowerWeight kpower_round(const Weight& w, int k);

// Which of the log2(k) sub-streams an element of weight w belongs to:
// class_index(w) mod log2(k), always in [0, log2 k).
int group_of(const Weight& w, int k);

// Exact exponent e with k^e == w, when w is a power of k.
std::optional<long long> exact_log_k(const Weight& w, int k);

// Largest e with k^e <= w, and smallest e with k^e >= w.
long long floor_log_k(const Weight& w, int k);
long long ceil_log_k(const Weight& w, int k);

// Consumer side of the split: a streaming algorithm that takes elements
// whose operating weight is a power of k. Solutions are reported in
// original weights; the operating weight only drives control flow.
class KPowerSink {
 public:
  virtual ~KPowerSink() = default;
  virtual void feed(const Element& u, KPowerWeight w2) = 0;
  virtual ElementSet finish() = 0;
};

struct SplitOutcome {
  ElementSet best;                        // winner measured in original weights
  Weight best_weight;                     // original weight of the winner
  int winner_group = 0;                   // lowest group index on ties
  std::vector<ElementSet> outputs;        // per-group solutions C_j
  std::vector<std::size_t> group_counts;  // elements dispatched per group
};

// Splits an arbitrary-weight stream into log2(k) sub-streams by weight
// class and runs one inner instance per group. Element u goes to group
// class_index(w(u)) mod log2(k) carrying the rounded weight kpower_round(w).
// Each element is dispatched exactly once; the groups partition the stream.
class SplitRunner {
 public:
  using InnerFactory = std::function<std::unique_ptr<KPowerSink>(int group)>;

  // k must already be a power of two >= 2 (see round_k). With instrument
  // set, per-group fed logs are kept for tests; they are bookkeeping, not
  // algorithm state.
  SplitRunner(int k, const InnerFactory& factory, bool instrument = false);

  int k() const { return k_; }
  int ell() const { return ell_; }

  void feed(const Element& u);
  SplitOutcome finish();

  const std::vector<ElementSet>& fed_log() const { return fed_log_; }

 private:
  int k_;
  int ell_;
  bool instrument_;
  std::vector<std::unique_ptr<KPowerSink>> inner_;
  std::vector<std::size_t> group_counts_;
  std::vector<ElementSet> fed_log_;
};

// Convenience driver: split the whole stream, return the winning solution.
ElementSet run_split(ElementStream& stream, int k,
                     const SplitRunner::InnerFactory& factory);

}  // namespace kxs
