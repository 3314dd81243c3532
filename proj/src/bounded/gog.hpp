#pragma once

#include "core/kpower.hpp"
#include "core/system.hpp"
#include "greedy/greedy.hpp"
#include "greedy/merge.hpp"

#include <cstdint>
#include <vector>

namespace kxs {

// Streaming engine for k-power weights with known bounds: one greedy
// instance per power of k in [wmin, wmax]. An element of weight k^e is fed
// to every instance with index <= e, so lower instances see supersets of
// what higher ones see; the finishing merge stitches the per-class bases
// together from the top class down.
class GreedyOfGreedies {
 public:
  // k must be a power of two >= 2. The bank covers exactly the powers of k
  // inside [wmin, wmax] (indices ceil(log_k wmin) .. floor(log_k wmax));
  // when no power of k lands in the range the bank is empty and finalize
  // returns the empty set. With instrument set, per-instance fed logs are
  // kept for tests (bookkeeping only, excluded from space accounting).
  GreedyOfGreedies(const Weight& wmin, const Weight& wmax, int k,
                   const IndependenceSystem& sys,
                   std::uint64_t* oracle_calls = nullptr, bool instrument = false);

  int k() const { return k_; }
  bool bank_empty() const { return bank_.empty(); }
  long long imin() const { return imin_; }
  long long imax() const { return imax_; }
  std::size_t instance_count() const { return bank_.size(); }

  // exponent is the element's operating weight as a power of k. Arrivals
  // are screened for self-loops first (one oracle call); survivors must
  // not exceed imax (contract error), while exponents below imin feed an
  // empty instance range and are accepted as no-ops, which is what
  // replaying a dynamic run against a fixed final window requires. One
  // further oracle call per instance fed.
  void feed(const Element& u, long long exponent);

  std::uint64_t self_loops_filtered() const { return self_loops_; }

  // Descending merge over the per-class outputs; call once, after the
  // stream is exhausted.
  ElementSet finalize();

  // Per-class outputs C_i, indexed by j = i - imin.
  std::vector<ElementSet> outputs() const;
  // Instrumented fed sets E_i and merge snapshots T_i (the latter fill at
  // finalize), same indexing.
  const std::vector<ElementSet>& fed_sets() const { return fed_sets_; }
  const std::vector<ElementSet>& merge_trace() const { return merge_.trace; }

  // Elements held in greedy solutions plus, once built, T. Instrumentation
  // logs do not count.
  std::size_t stored_elements() const;
  std::size_t peak_stored() const { return peak_stored_; }

 private:
  int k_;
  Oracle filter_;
  std::uint64_t* oracle_calls_ = nullptr;
  long long imin_ = 0;
  long long imax_ = -1;
  std::vector<GreedyState> bank_;
  std::vector<ElementSet> fed_sets_;
  MergeResult merge_;
  bool instrument_;
  bool finished_ = false;
  std::uint64_t self_loops_ = 0;
  std::size_t stored_count_ = 0;
  std::size_t peak_stored_ = 0;
};

}  // namespace kxs
