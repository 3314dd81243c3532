#pragma once

#include "core/element.hpp"
#include "core/system.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace kxs {

enum class SystemKind { partition_intersection, hypergraph_matching };
enum class WeightMode { k_power, arbitrary };

struct InstanceSpec {
  std::uint64_t seed = 1;
  int n = 8;
  SystemKind kind = SystemKind::partition_intersection;
  WeightMode mode = WeightMode::k_power;
  // Structure parameter (layer count or max arity) and, in k_power mode,
  // the weight base. Must be a power of two >= 2 when k_power is used.
  int k = 2;
  // k_power mode draws exponents from [exp_lo, exp_hi]; arbitrary mode
  // draws a messy fraction and scales it by 2^e for e in the same range.
  long long exp_lo = 0;
  long long exp_hi = 6;
};

struct Instance {
  std::vector<Element> ground;
  std::unique_ptr<IndependenceSystem> system;

  ElementSet pointers() const {
    ElementSet out;
    out.reserve(ground.size());
    for (const Element& e : ground) out.push_back(&e);
    return out;
  }
};

// Reproducible: the same spec always yields the same instance, down to
// attribute draws, independent of platform. Generated elements carry no
// self-loops (capacities are kept positive) so streaming runs match the
// analysis preconditions out of the box.
Instance random_instance(const InstanceSpec& spec);

}  // namespace kxs
