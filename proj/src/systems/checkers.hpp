#pragma once

#include "core/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kxs {

// Exhaustive verifiers for the two constraint-family definitions the
// algorithms rely on. All of them materialize the full 2^n independence
// table first, so ground sets are capped hard (size error beyond the cap).

struct IndependenceTable {
  ElementSet ground;
  std::vector<char> independent;  // indexed by subset bitmask

  bool test(std::uint32_t mask) const { return independent[mask] != 0; }
  int size() const { return static_cast<int>(ground.size()); }
  ElementSet members(std::uint32_t mask) const;
};

IndependenceTable build_independence_table(const IndependenceSystem& sys,
                                           ElementSpan ground, int max_n,
                                           std::uint64_t* oracle_calls = nullptr);

// A pair (T, T \ {e}) where the superset is independent but the subset
// is not, disproving down-closedness.
struct DownClosedWitness {
  ElementSet superset;
  ElementSet subset;
};

std::optional<DownClosedWitness> find_down_closed_violation(
    const IndependenceSystem& sys, ElementSpan ground);

// Witness against k-extendibility: independent sets S <= T and an element
// u outside T with S + u independent, where no Y <= T \ S of size at most
// k makes T \ Y + u independent.
struct ExtendibilityWitness {
  ElementSet T;
  ElementSet S;
  const Element* u = nullptr;
};

std::optional<ExtendibilityWitness> find_extendibility_violation(
    const IndependenceSystem& sys, ElementSpan ground, int k);

// True iff for every independent T, every S <= T and every u outside T
// with S + u independent there is a repair set Y <= T \ S, |Y| <= k, such
// that T \ Y + u stays independent. |ground| <= 14.
bool check_k_extendible(const IndependenceSystem& sys, ElementSpan ground, int k);

// Witness against the bounded-base-ratio property: a subset S whose
// restricted family has maximal independent sets of sizes differing by
// more than a factor of k.
struct SetSystemWitness {
  ElementSet S;
  ElementSet small_base;
  ElementSet large_base;
};

std::optional<SetSystemWitness> find_set_system_violation(
    const IndependenceSystem& sys, ElementSpan ground, int k);

// True iff every subset's maximal independent subsets have sizes within a
// factor of k of each other (an S with no nonempty independent subset
// counts as satisfying). |ground| <= 14.
bool check_k_set_system(const IndependenceSystem& sys, ElementSpan ground, int k);

// Smallest k >= 1 for which check_k_extendible holds. Always terminates:
// every independence system on n elements is n-extendible. |ground| <= 12.
int min_extendibility(const IndependenceSystem& sys, ElementSpan ground);

}  // namespace kxs
