#include "exact/random_instance.hpp"

#include "core/error.hpp"
#include "systems/systems.hpp"

#include <random>
#include <set>
#include <string>

namespace kxs {

namespace {

// mt19937_64 output is specified by the standard; taking residues keeps
// every draw platform-independent (distribution classes are not portable).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t span) { return rng() % span; }

long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string padded(const char* prefix, std::uint64_t i) {
  std::string num = std::to_string(i);
  if (num.size() < 2) num.insert(0, 2 - num.size(), '0');
  return prefix + num;
}

std::unique_ptr<IndependenceSystem> make_partition_system(std::mt19937_64& rng,
                                                          std::vector<Element>& ground,
                                                          int n, int k) {
  int parts = std::max(2, n / 2);
  std::vector<PartitionMatroidIntersection::Layer> layers(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    layers[j].key_attr = padded("p", j);
    for (int p = 0; p < parts; ++p) {
      layers[j].capacities[padded("v", p)] = 1 + static_cast<long long>(draw(rng, 2));
    }
    layers[j].default_capacity = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      ground[i].attrs[layers[j].key_attr] = padded("v", draw(rng, parts));
    }
  }
  return std::make_unique<PartitionMatroidIntersection>(std::move(layers));
}

std::unique_ptr<IndependenceSystem> make_matching_system(std::mt19937_64& rng,
                                                         std::vector<Element>& ground,
                                                         int n, int k) {
  int vertices = std::max(k + 1, n * k / 3);
  for (int i = 0; i < n; ++i) {
    int arity = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(k)));
    std::set<std::uint64_t> picked;
    while (static_cast<int>(picked.size()) < arity) {
      picked.insert(draw(rng, static_cast<std::uint64_t>(vertices)));
    }
    std::vector<std::string> edge;
    for (std::uint64_t v : picked) edge.push_back(padded("x", v));
    ground[i].attrs["vertices"] = std::move(edge);
  }
  return std::make_unique<HypergraphMatching>("vertices", k);
}

}  // namespace

Instance random_instance(const InstanceSpec& spec) {
  if (spec.n < 0 || spec.n > 99) throw_contract("instance size out of range");
  if (spec.k < 1) throw_contract("instance k must be >= 1");
  if (spec.exp_lo > spec.exp_hi) throw_contract("empty exponent range");

  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.ground.resize(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) inst.ground[i].id = padded("e", i);

  switch (spec.kind) {
    case SystemKind::partition_intersection:
      inst.system = make_partition_system(rng, inst.ground, spec.n, spec.k);
      break;
    case SystemKind::hypergraph_matching:
      inst.system = make_matching_system(rng, inst.ground, spec.n, spec.k);
      break;
  }

  for (Element& e : inst.ground) {
    if (spec.mode == WeightMode::k_power) {
      e.weight = Weight::kpow(spec.k, draw_range(rng, spec.exp_lo, spec.exp_hi));
    } else {
      Weight fraction = Weight::from_fraction(
          BigInt(1 + draw(rng, 1000000)), BigInt(1 + draw(rng, 1000)));
      e.weight = fraction * Weight::pow2(draw_range(rng, spec.exp_lo, spec.exp_hi));
    }
  }
  return inst;
}

}  // namespace kxs
