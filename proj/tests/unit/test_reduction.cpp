#include "core/error.hpp"
#include "exact/random_instance.hpp"
#include "greedy/greedy.hpp"
#include "reduction/reduction.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

using namespace kxs;
using namespace kxs::testing;

namespace {

// Inner instance that accepts greedily; good enough to exercise the split
// mechanics without dragging in the full bounded-window engine.
class GreedySink : public KPowerSink {
 public:
  explicit GreedySink(const IndependenceSystem& sys) : greedy_(sys) {}
  void feed(const Element& u, KPowerWeight) override { greedy_.feed(u); }
  ElementSet finish() override { return greedy_.solution(); }

 private:
  GreedyState greedy_;
};

// Inner instance that records what it was handed.
class RecordingSink : public KPowerSink {
 public:
  struct Entry {
    std::string id;
    long long exponent;
  };

  void feed(const Element& u, KPowerWeight w2) override {
    entries.push_back({u.id, w2.exponent});
  }
  ElementSet finish() override { return {}; }

  std::vector<Entry> entries;
};

}  // namespace

TEST_CASE("round_k lands on the next power of two") {
  CHECK(round_k(1) == 2);
  CHECK(round_k(2) == 2);
  CHECK(round_k(3) == 4);
  CHECK(round_k(4) == 4);
  CHECK(round_k(5) == 8);
  CHECK(round_k(8) == 8);
  CHECK(round_k(9) == 16);
  CHECK(round_k(1000) == 1024);
  CHECK_THROWS_AS(round_k(0), Error);
  CHECK_THROWS_AS(round_k(-3), Error);

  for (int k = 1; k <= 200; ++k) {
    int r = round_k(k);
    CHECK(r >= 2);
    CHECK(r >= k);
    CHECK((r & (r - 1)) == 0);
    CHECK(r <= 2 * std::max(k, 1));
  }
}

TEST_CASE("log2_exact inverts small powers of two") {
  CHECK(log2_exact(2) == 1);
  CHECK(log2_exact(4) == 2);
  CHECK(log2_exact(8) == 3);
  CHECK(log2_exact(1024) == 10);
  CHECK_THROWS_AS(log2_exact(1), Error);
  CHECK_THROWS_AS(log2_exact(3), Error);
  CHECK_THROWS_AS(log2_exact(0), Error);
  CHECK_THROWS_AS(log2_exact(-4), Error);
}

TEST_CASE("class_index brackets weights between powers of two") {
  CHECK(class_index(Weight::parse("1")) == 0);
  CHECK(class_index(Weight::parse("10")) == 3);
  CHECK(class_index(Weight::parse("0.25")) == -2);
  CHECK(class_index(Weight::parse("0.3")) == -2);
  CHECK(class_index(Weight::parse("3")) == 1);
  for (long long i = -6; i <= 6; ++i) {
    CHECK(class_index(Weight::pow2(i)) == i);
    CHECK(class_index(Weight::pow2(i) * 3) == i + 1);
  }
  CHECK_THROWS_AS(class_index(Weight()), Error);
}

TEST_CASE("kpower_round floors onto powers of k") {
  CHECK(kpower_round(Weight::parse("16"), 4).exponent == 2);
  CHECK(kpower_round(Weight::parse("10"), 4).exponent == 1);
  CHECK(kpower_round(Weight::parse("3"), 4).exponent == 0);
  CHECK(kpower_round(Weight::parse("0.25"), 4).exponent == -1);
  CHECK(kpower_round(Weight::parse("0.5"), 4).exponent == -1);
  CHECK(kpower_round(Weight::parse("5"), 2).exponent == 2);
  CHECK(kpower_round(Weight::parse("16"), 4).value() == Weight::parse("16"));
}

TEST_CASE("rounded weight stays within the promised window of the original") {
  // For every w and power-of-two k: w/k < w2 <= w, and the group shift
  // recovers w up to a factor of two: w/2 < w2 * 2^group <= w.
  std::vector<const char*> samples{"1",    "2",     "3",  "10", "16",  "100",
                                   "0.25", "0.125", "5/7", "1/3", "1000", "12345"};
  for (int k : {2, 4, 8, 16}) {
    for (const char* text : samples) {
      Weight w = Weight::parse(text);
      KPowerWeight w2 = kpower_round(w, k);
      Weight rounded = w2.value();
      CHECK(rounded <= w);
      CHECK(w < rounded * Weight(static_cast<long long>(k)));

      Weight shifted = rounded * Weight::pow2(group_of(w, k));
      CHECK(shifted <= w);
      CHECK(w < shifted * Weight(2));
    }
  }
}

TEST_CASE("group_of cycles through the weight classes") {
  CHECK(group_of(Weight::parse("1"), 4) == 0);
  CHECK(group_of(Weight::parse("2"), 4) == 1);
  CHECK(group_of(Weight::parse("4"), 4) == 0);
  CHECK(group_of(Weight::parse("10"), 4) == 1);
  CHECK(group_of(Weight::parse("0.5"), 4) == 1);
  CHECK(group_of(Weight::parse("0.25"), 4) == 0);
  for (long long i = -5; i <= 10; ++i) {
    CHECK(group_of(Weight::pow2(i), 8) == static_cast<int>(floor_mod(i, 3)));
  }
  CHECK(group_of(Weight::parse("7"), 2) == 0);
}

TEST_CASE("exact_log_k recognizes exact powers only") {
  auto e = exact_log_k(Weight::parse("16"), 4);
  REQUIRE(e.has_value());
  CHECK(*e == 2);
  CHECK(exact_log_k(Weight::parse("0.25"), 4) == -1);
  CHECK(exact_log_k(Weight::parse("1"), 8) == 0);
  CHECK_FALSE(exact_log_k(Weight::parse("10"), 4).has_value());
  CHECK_FALSE(exact_log_k(Weight::parse("2"), 4).has_value());
  CHECK_FALSE(exact_log_k(Weight(), 4).has_value());
}

TEST_CASE("floor and ceil logarithms agree with exact powers and bracket the rest") {
  CHECK(floor_log_k(Weight::parse("10"), 4) == 1);
  CHECK(ceil_log_k(Weight::parse("10"), 4) == 2);
  CHECK(floor_log_k(Weight::parse("16"), 4) == 2);
  CHECK(ceil_log_k(Weight::parse("16"), 4) == 2);
  CHECK(floor_log_k(Weight::from_fraction(1, 5), 4) == -2);
  CHECK(ceil_log_k(Weight::from_fraction(1, 5), 4) == -1);

  for (int k : {2, 4, 8}) {
    for (const char* text : {"1", "2", "7", "64", "0.3", "1/7", "4096"}) {
      Weight w = Weight::parse(text);
      long long lo = floor_log_k(w, k);
      long long hi = ceil_log_k(w, k);
      CHECK(Weight::kpow(k, lo) <= w);
      CHECK(w <= Weight::kpow(k, hi));
      CHECK(hi - lo <= 1);
      CHECK((lo == hi) == exact_log_k(w, k).has_value());
    }
  }
}

TEST_CASE("split dispatches each element to exactly one group") {
  InstanceSpec spec;
  spec.seed = 11;
  spec.n = 14;
  spec.mode = WeightMode::arbitrary;
  spec.k = 2;
  auto inst = random_instance(spec);

  const int k = 8;
  std::vector<RecordingSink*> sinks(3, nullptr);
  SplitRunner runner(
      k,
      [&](int group) {
        auto sink = std::make_unique<RecordingSink>();
        sinks[group] = sink.get();
        return sink;
      },
      true);
  CHECK(runner.ell() == 3);

  for (const Element& e : inst.ground) runner.feed(e);
  auto outcome = runner.finish();

  std::size_t total = 0;
  for (int j = 0; j < 3; ++j) {
    REQUIRE(sinks[j] != nullptr);
    total += sinks[j]->entries.size();
    CHECK(outcome.group_counts[j] == sinks[j]->entries.size());
    CHECK(runner.fed_log()[j].size() == sinks[j]->entries.size());
    for (std::size_t i = 0; i < sinks[j]->entries.size(); ++i) {
      const Element* fed = runner.fed_log()[j][i];
      CHECK(fed->id == sinks[j]->entries[i].id);
      CHECK(group_of(fed->weight, k) == j);
      CHECK(sinks[j]->entries[i].exponent == kpower_round(fed->weight, k).exponent);
    }
  }
  CHECK(total == inst.ground.size());
}

TEST_CASE("split winner is measured in original weights, ties to the lowest group") {
  // k = 4 gives two groups. Element a (weight 4) lands in group 0; b and c
  // (weight 2 each) land in group 1. Both group solutions weigh 4 in
  // original terms, so the lowest group index wins.
  std::vector<Element> ground;
  ground.push_back(uel("a", "4"));
  ground.push_back(uel("b", "2"));
  ground.push_back(uel("c", "2"));
  auto sys = uniform_matroid(2);

  SplitRunner runner(4, [&](int) { return std::make_unique<GreedySink>(*sys); });
  for (const Element& e : ground) runner.feed(e);
  auto outcome = runner.finish();

  CHECK(outcome.group_counts == std::vector<std::size_t>{1, 2});
  CHECK(ids_of(outcome.outputs[0]) == std::vector<std::string>{"a"});
  CHECK(ids_of(outcome.outputs[1]) == std::vector<std::string>{"b", "c"});
  CHECK(outcome.best_weight == Weight::parse("4"));
  CHECK(outcome.winner_group == 0);
  CHECK(ids_of(outcome.best) == std::vector<std::string>{"a"});
}

TEST_CASE("split with k = 2 is the inner algorithm unchanged") {
  auto edges = k22_edges();
  auto sys = matching();

  SplitRunner runner(2, [&](int) { return std::make_unique<GreedySink>(*sys); });
  for (const Element& e : edges) runner.feed(e);
  auto outcome = runner.finish();

  GreedyState plain(*sys);
  for (const Element& e : edges) plain.feed(e);

  CHECK(outcome.outputs.size() == 1);
  CHECK(ids_of(outcome.best) == ids_of(plain.solution()));
  CHECK(outcome.winner_group == 0);
}

TEST_CASE("split rejects non-positive weights and odd k") {
  auto sys = uniform_matroid(1);
  SplitRunner runner(4, [&](int) { return std::make_unique<GreedySink>(*sys); });
  Element zero;
  zero.id = "z";
  CHECK_THROWS_AS(runner.feed(zero), Error);
  CHECK_THROWS_AS(SplitRunner(3, [&](int) { return std::make_unique<GreedySink>(*sys); }),
                  Error);
  CHECK_THROWS_AS(SplitRunner(1, [&](int) { return std::make_unique<GreedySink>(*sys); }),
                  Error);
}

TEST_CASE("element stream replays a permutation exactly once") {
  auto edges = k22_edges();
  ElementStream stream(edges, {3, 1, 0, 2});
  std::vector<std::string> seen;
  while (const Element* u = stream.next()) seen.push_back(u->id);
  CHECK(seen == std::vector<std::string>{"b-r2", "a-r2", "a-r1", "b-r1"});
  CHECK(stream.next() == nullptr);
  CHECK(stream.delivered() == 4);
  CHECK_THROWS_AS(ElementStream(edges, {0, 1}), Error);
}
