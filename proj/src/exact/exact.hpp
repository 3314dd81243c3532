#pragma once

#include "core/system.hpp"

#include <cstdint>

namespace kxs {

struct ExactResult {
  ElementSet opt_set;
  Weight opt_weight;
  std::uint64_t independent_count = 0;  // number of independent sets, empty set included
  std::size_t max_independent_size = 0;  // largest cardinality over all independent sets
};

// Exact maximum-weight independent set by depth-first subset enumeration
// over elements in ascending id order, inclusion branch first. Supersets of
// a dependent set are pruned (sound for down-closed systems, which is the
// documented input contract). Ties go to the first optimum in that visit
// order, so results are fully deterministic. |ground| <= 20.
ExactResult brute_force_opt(ElementSpan ground, const IndependenceSystem& sys,
                            std::uint64_t* oracle_calls = nullptr);

// Greedy over elements sorted by weight non-increasing, ties by ascending
// id. Output is a base: no remaining element extends it.
ElementSet offline_greedy(ElementSpan ground, const IndependenceSystem& sys,
                          std::uint64_t* oracle_calls = nullptr);

}  // namespace kxs
