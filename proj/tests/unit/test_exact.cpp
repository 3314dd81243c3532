#include "core/error.hpp"
#include "exact/exact.hpp"
#include "exact/random_instance.hpp"
#include "reduction/reduction.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace kxs;
using namespace kxs::testing;

TEST_CASE("brute force on a rank-1 matroid keeps the heavier element") {
  auto sys = uniform_matroid(1);
  std::vector<Element> ground;
  ground.push_back(uel("a", "5"));
  ground.push_back(uel("b", "3"));
  auto result = brute_force_opt(ptrs(ground), *sys);
  CHECK(ids_of(result.opt_set) == std::vector<std::string>{"a"});
  CHECK(result.opt_weight == Weight::parse("5"));
  // Independent sets: {}, {a}, {b}.
  CHECK(result.independent_count == 3);
  CHECK(result.max_independent_size == 1);
}

TEST_CASE("brute force on the empty ground set") {
  auto sys = uniform_matroid(1);
  auto result = brute_force_opt({}, *sys);
  CHECK(result.opt_set.empty());
  CHECK(result.opt_weight == Weight());
  CHECK(result.independent_count == 1);
  CHECK(result.max_independent_size == 0);
}

TEST_CASE("brute force finds the best K22 matching") {
  auto edges = k22_edges();
  auto sys = matching();
  auto result = brute_force_opt(ptrs(edges), *sys);
  CHECK(ids_of(result.opt_set) == std::vector<std::string>{"a-r1", "b-r2"});
  CHECK(result.opt_weight == Weight::parse("8"));
  CHECK(result.independent_count == 7);
  CHECK(result.max_independent_size == 2);
}

TEST_CASE("brute force tie-break is the first optimum in id-ascending visit order") {
  auto sys = uniform_matroid(1);
  std::vector<Element> ground;
  ground.push_back(uel("b", "2"));
  ground.push_back(uel("a", "2"));
  ground.push_back(uel("c", "2"));
  auto result = brute_force_opt(ptrs(ground), *sys);
  CHECK(ids_of(result.opt_set) == std::vector<std::string>{"a"});
}

TEST_CASE("brute force keeps the first optimum found on ties") {
  // Rank-2 uniform matroid, weights 2, 2, 4: both {a, c} and {b, c} weigh
  // 6. The inclusion-first DFS over a, b, c reaches {a, c} before {b, c}
  // and later optima only replace on strict improvement.
  auto sys = uniform_matroid(2);
  std::vector<Element> ground;
  ground.push_back(uel("a", "2"));
  ground.push_back(uel("b", "2"));
  ground.push_back(uel("c", "4"));
  auto result = brute_force_opt(ptrs(ground), *sys);
  CHECK(ids_of(result.opt_set) == std::vector<std::string>{"a", "c"});
  CHECK(result.opt_weight == Weight::parse("6"));
}

TEST_CASE("brute force refuses more than 20 elements") {
  auto sys = uniform_matroid(3);
  std::vector<Element> ground;
  for (int i = 0; i < 21; ++i) ground.push_back(uel("u" + std::to_string(i), "1"));
  CHECK_THROWS_AS(brute_force_opt(ptrs(ground), *sys), Error);
}

TEST_CASE("offline greedy takes elements heaviest first") {
  auto edges = k22_edges();
  auto sys = matching();
  std::uint64_t calls = 0;
  auto out = offline_greedy(ptrs(edges), *sys, &calls);
  // Order: a-r1 (4), b-r2 (4), a-r2, b-r1. The two heavy edges fit; the
  // light ones clash with them.
  CHECK(ids_of(out) == std::vector<std::string>{"a-r1", "b-r2"});
  CHECK(calls == 4);
}

TEST_CASE("offline greedy breaks weight ties by ascending id") {
  auto sys = uniform_matroid(1);
  std::vector<Element> ground;
  ground.push_back(uel("zz", "7"));
  ground.push_back(uel("aa", "7"));
  auto out = offline_greedy(ptrs(ground), *sys);
  CHECK(ids_of(out) == std::vector<std::string>{"aa"});
}

TEST_CASE("offline greedy output is a base") {
  auto path = p4_edges();
  auto sys = matching();
  auto out = offline_greedy(ptrs(path), *sys);
  // All weights equal: takes e1, skips e2, takes e3.
  CHECK(ids_of(out) == std::vector<std::string>{"e1", "e3"});
  for (const Element& e : path) {
    if (set_contains(out, &e)) continue;
    ElementSet extended = out;
    extended.push_back(&e);
    CHECK_FALSE(sys->is_independent(extended));
  }
}

TEST_CASE("generated instances are reproducible and well formed") {
  InstanceSpec spec;
  spec.seed = 42;
  spec.n = 10;
  spec.kind = SystemKind::partition_intersection;
  spec.mode = WeightMode::k_power;
  spec.k = 4;
  spec.exp_lo = -2;
  spec.exp_hi = 5;

  auto inst1 = random_instance(spec);
  auto inst2 = random_instance(spec);
  REQUIRE(inst1.ground.size() == 10);
  for (std::size_t i = 0; i < inst1.ground.size(); ++i) {
    CHECK(inst1.ground[i].id == inst2.ground[i].id);
    CHECK(inst1.ground[i].weight == inst2.ground[i].weight);
    CHECK(inst1.ground[i].attrs == inst2.ground[i].attrs);
  }
  CHECK(inst1.system->declared_k() == 4);

  for (const Element& e : inst1.ground) {
    CHECK_NOTHROW(inst1.system->validate_element(e));
    CHECK_FALSE(is_self_loop(e, *inst1.system));
    // k-power weights are exact powers of the base.
    auto exp = exact_log_k(e.weight, 4);
    CHECK(exp.has_value());
    if (exp) {
      CHECK(*exp >= spec.exp_lo);
      CHECK(*exp <= spec.exp_hi);
    }
  }

  InstanceSpec other = spec;
  other.seed = 43;
  auto inst3 = random_instance(other);
  bool any_difference = false;
  for (std::size_t i = 0; i < inst1.ground.size(); ++i) {
    if (inst1.ground[i].weight != inst3.ground[i].weight ||
        inst1.ground[i].attrs != inst3.ground[i].attrs) {
      any_difference = true;
    }
  }
  CHECK(any_difference);
}

TEST_CASE("generated matching instances carry valid hyperedges") {
  InstanceSpec spec;
  spec.seed = 7;
  spec.n = 12;
  spec.kind = SystemKind::hypergraph_matching;
  spec.mode = WeightMode::arbitrary;
  spec.k = 3;
  auto inst = random_instance(spec);
  CHECK(inst.system->declared_k() == 3);
  for (const Element& e : inst.ground) {
    CHECK_NOTHROW(inst.system->validate_element(e));
    CHECK(e.weight > Weight());
    CHECK_FALSE(is_self_loop(e, *inst.system));
  }
}

TEST_CASE("offline greedy never beats brute force") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.n = 9;
    spec.kind = seed % 2 ? SystemKind::partition_intersection
                         : SystemKind::hypergraph_matching;
    spec.mode = seed % 3 ? WeightMode::k_power : WeightMode::arbitrary;
    spec.k = 2;
    auto inst = random_instance(spec);
    auto opt = brute_force_opt(inst.pointers(), *inst.system);
    auto greedy = offline_greedy(inst.pointers(), *inst.system);
    CHECK(set_weight(greedy) <= opt.opt_weight);
    CHECK(inst.system->is_independent(greedy));
    CHECK(inst.system->is_independent(opt.opt_set));
  }
}
