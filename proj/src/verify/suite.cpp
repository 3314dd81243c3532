#include "verify/suite.hpp"

#include "bounded/gog.hpp"
#include "core/error.hpp"
#include "exact/exact.hpp"
#include "exact/random_instance.hpp"
#include "greedy/greedy.hpp"
#include "io/jsonl.hpp"
#include "reduction/reduction.hpp"
#include "systems/checkers.hpp"
#include "systems/systems.hpp"
#include "unbounded/dynamic_gog.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace kxs {

namespace {

constexpr std::size_t kMessageCap = 3;

// Corpus salts keep the instance streams of the different checks apart
// while letting checks that audit the same corpus (ratio, counting, space,
// replay) regenerate identical instances from identical arguments.
constexpr std::uint64_t kBoundedSalt = 0xB0;
constexpr std::uint64_t kArbitrarySalt = 0xF2;
constexpr std::uint64_t kDefinitionSalt = 0x9E;
constexpr std::uint64_t kBaselineSalt = 0x5B;
constexpr std::uint64_t kExchangeSalt = 0xE8;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt,
                          std::uint64_t index) {
  return mix(base ^ mix(salt) ^ mix(index + 1));
}

void record_failure(CheckResult& r, std::string message) {
  ++r.failures;
  if (r.messages.size() < kMessageCap) r.messages.push_back(std::move(message));
}

std::vector<std::pair<int, std::size_t>> split_trials(
    const std::vector<int>& k_list, std::size_t trials) {
  std::vector<std::pair<int, std::size_t>> out;
  if (k_list.empty()) return out;
  const std::size_t base = trials / k_list.size();
  const std::size_t extra = trials % k_list.size();
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    out.emplace_back(k_list[i], base + (i < extra ? 1 : 0));
  }
  return out;
}

std::string kind_name(SystemKind kind) {
  return kind == SystemKind::partition_intersection ? "partition_intersection"
                                                    : "hypergraph_matching";
}

std::string describe_instance(const InstanceSpec& spec, const Instance& inst) {
  std::ostringstream out;
  out << "seed=" << spec.seed << " n=" << spec.n << " kind=" << kind_name(spec.kind)
      << " mode=" << (spec.mode == WeightMode::k_power ? "k-power" : "arbitrary")
      << " k=" << spec.k << " exp=[" << spec.exp_lo << ", " << spec.exp_hi << "]\n"
      << "constraint: " << inst.system->config().dump() << "\n"
      << "stream:\n" << serialize_stream(inst.ground);
  return out.str();
}

std::string id_list(ElementSpan s) {
  std::vector<std::string> ids;
  ids.reserve(s.size());
  for (const Element* e : s) ids.push_back(e->id);
  std::sort(ids.begin(), ids.end());
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

std::vector<std::string> sorted_ids(ElementSpan s) {
  std::vector<std::string> ids;
  ids.reserve(s.size());
  for (const Element* e : s) ids.push_back(e->id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// The corpora. Bounded instances carry k-power weights inside a fixed
// exponent window; the unbounded corpus reuses the same seeds, so it holds
// the same constraint structures (the generator draws structure before
// weights) with exponents spread over a width-12 range that forces the
// dynamic window to slide; the arbitrary corpus feeds the split pipeline
// messy fractions.
InstanceSpec bounded_corpus_spec(std::uint64_t seed, int k2, std::size_t index) {
  InstanceSpec spec;
  spec.seed = derive_seed(seed, kBoundedSalt, index * 8 + std::uint64_t(k2 % 8));
  spec.n = 10 + int(index % 7);
  spec.kind = index % 2 == 0 ? SystemKind::partition_intersection
                             : SystemKind::hypergraph_matching;
  spec.mode = WeightMode::k_power;
  spec.k = k2;
  spec.exp_lo = index % 3 == 0 ? -2 : 0;
  spec.exp_hi = spec.exp_lo + 8;
  return spec;
}

InstanceSpec unbounded_corpus_spec(std::uint64_t seed, int k2, std::size_t index) {
  InstanceSpec spec = bounded_corpus_spec(seed, k2, index);
  spec.exp_lo = -3;
  spec.exp_hi = 9;
  return spec;
}

InstanceSpec arbitrary_corpus_spec(std::uint64_t seed, int k, std::size_t index) {
  InstanceSpec spec;
  spec.seed = derive_seed(seed, kArbitrarySalt, index * 8 + std::uint64_t(k % 8));
  spec.n = 10 + int(index % 5);
  spec.kind = index % 2 == 0 ? SystemKind::partition_intersection
                             : SystemKind::hypergraph_matching;
  spec.mode = WeightMode::arbitrary;
  spec.k = k;
  spec.exp_lo = -2;
  spec.exp_hi = 9;
  return spec;
}

long long exponent_of(const Element& u, int k2) {
  auto e = exact_log_k(u.weight, k2);
  if (!e) throw_contract("corpus weight is not a power of k");
  return *e;
}

// Hand-built fixtures with known parameters, shared by the exchange,
// definition and baseline checks.
struct Fixture {
  std::string name;
  int k = 1;
  std::vector<Element> ground;
  std::unique_ptr<IndependenceSystem> sys;

  ElementSet pointers() const {
    ElementSet out;
    out.reserve(ground.size());
    for (const Element& e : ground) out.push_back(&e);
    return out;
  }

  std::string describe() const {
    std::ostringstream out;
    out << "fixture=" << name << " k=" << k << "\n"
        << "constraint: " << sys->config().dump() << "\n"
        << "stream:\n" << serialize_stream(ground);
    return out.str();
  }
};

Element make_edge(std::string id, long long w, std::vector<std::string> vertices) {
  Element u;
  u.id = std::move(id);
  u.weight = Weight(w);
  u.attrs["v"] = std::move(vertices);
  return u;
}

Element make_job(std::string id, long long w, std::string machine, std::string day) {
  Element u;
  u.id = std::move(id);
  u.weight = Weight(w);
  u.attrs["machine"] = std::move(machine);
  u.attrs["day"] = std::move(day);
  return u;
}

Element make_plain(std::string id, long long w) {
  Element u;
  u.id = std::move(id);
  u.weight = Weight(w);
  return u;
}

std::vector<Fixture> hand_fixtures() {
  std::vector<Fixture> out;

  {
    Fixture fx;
    fx.name = "crossed-assignment";
    fx.k = 2;
    fx.ground.push_back(make_edge("a-r1", 4, {"a", "r1"}));
    fx.ground.push_back(make_edge("a-r2", 1, {"a", "r2"}));
    fx.ground.push_back(make_edge("b-r1", 1, {"b", "r1"}));
    fx.ground.push_back(make_edge("b-r2", 4, {"b", "r2"}));
    fx.sys = std::make_unique<HypergraphMatching>("v", 2);
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;
    fx.name = "path-matching";
    fx.k = 2;
    fx.ground.push_back(make_edge("e1", 5, {"a", "b"}));
    fx.ground.push_back(make_edge("e2", 4, {"b", "c"}));
    fx.ground.push_back(make_edge("e3", 3, {"c", "d"}));
    fx.sys = std::make_unique<HypergraphMatching>("v", 2);
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;
    fx.name = "triangle-matching";
    fx.k = 2;
    fx.ground.push_back(make_edge("ab", 3, {"a", "b"}));
    fx.ground.push_back(make_edge("bc", 2, {"b", "c"}));
    fx.ground.push_back(make_edge("ca", 1, {"c", "a"}));
    fx.sys = std::make_unique<HypergraphMatching>("v", 2);
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;
    fx.name = "triple-matching";
    fx.k = 3;
    fx.ground.push_back(make_edge("t0", 10, {"a", "b", "c"}));
    fx.ground.push_back(make_edge("t1", 4, {"a", "d", "e"}));
    fx.ground.push_back(make_edge("t2", 4, {"b", "f", "g"}));
    fx.ground.push_back(make_edge("t3", 4, {"c", "h", "i"}));
    fx.sys = std::make_unique<HypergraphMatching>("v", 3);
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;
    fx.name = "skewed-explicit";
    fx.k = 3;
    fx.ground.push_back(make_plain("a", 7));
    fx.ground.push_back(make_plain("b", 3));
    fx.ground.push_back(make_plain("c", 2));
    fx.ground.push_back(make_plain("d", 1));
    fx.sys = std::make_unique<ExplicitSystem>(
        std::vector<std::string>{"a", "b", "c", "d"},
        std::vector<std::vector<std::string>>{{"a"}, {"b", "c", "d"}}, 3);
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;
    fx.name = "two-layer-schedule";
    fx.k = 2;
    fx.ground.push_back(make_job("j1", 9, "m1", "mon"));
    fx.ground.push_back(make_job("j2", 8, "m1", "tue"));
    fx.ground.push_back(make_job("j3", 7, "m2", "mon"));
    fx.ground.push_back(make_job("j4", 6, "m2", "tue"));
    fx.ground.push_back(make_job("j5", 5, "m3", "mon"));
    fx.ground.push_back(make_job("j6", 4, "m3", "tue"));
    std::vector<PartitionMatroidIntersection::Layer> layers(2);
    layers[0].key_attr = "machine";
    layers[0].default_capacity = 1;
    layers[1].key_attr = "day";
    layers[1].default_capacity = 2;
    fx.sys = std::make_unique<PartitionMatroidIntersection>(std::move(layers));
    out.push_back(std::move(fx));
  }
  return out;
}

Fixture generated_fixture(const InstanceSpec& spec, std::string name) {
  Instance inst = random_instance(spec);
  Fixture fx;
  fx.name = std::move(name);
  fx.k = inst.system->declared_k();
  fx.ground = std::move(inst.ground);
  fx.sys = std::move(inst.system);
  return fx;
}

}  // namespace

CheckResult check_weight_rounding(std::uint64_t seed, std::size_t samples,
                                  const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "weight-rounding";
  for (int k_raw : k_list) {
    const int k2 = round_k(k_raw);
    const int ell = log2_exact(k2);
    std::mt19937_64 rng(derive_seed(seed, 0xA1, std::uint64_t(k2)));
    std::uniform_int_distribution<long long> num_draw(1, 1000000000LL);
    std::uniform_int_distribution<long long> den_draw(1, 1000000LL);
    std::uniform_int_distribution<long long> exp_draw(-40, 40);
    for (std::size_t i = 0; i < samples; ++i) {
      const Weight w = Weight::from_fraction(BigInt(num_draw(rng)), BigInt(den_draw(rng))) *
                       Weight::pow2(exp_draw(rng));
      ++r.trials;
      const Weight rounded = kpower_round(w, k2).value();
      const int group = group_of(w, k2);
      const Weight shifted = rounded * Weight::pow2(group);
      const bool ok = group >= 0 && group < ell && rounded <= w &&
                      w < rounded * k2 && shifted <= w && w <= shifted * 2;
      if (!ok) {
        record_failure(r, "k=" + std::to_string(k2) + " w=" + w.str() +
                              ": rounded=" + rounded.str() + " group=" +
                              std::to_string(group) + " shifted=" + shifted.str() +
                              " escapes the half-to-full bracket");
      }
    }
  }
  return r;
}

CheckResult check_exchange_bound(std::uint64_t seed, int exhaustive_max_n,
                                 std::size_t sampled_permutations) {
  CheckResult r;
  r.name = "greedy-exchange";

  std::vector<Fixture> fixtures = hand_fixtures();
  {
    InstanceSpec spec;
    spec.seed = derive_seed(seed, kExchangeSalt, 1);
    spec.n = 6;
    spec.kind = SystemKind::partition_intersection;
    spec.mode = WeightMode::k_power;
    spec.k = 2;
    spec.exp_lo = 0;
    spec.exp_hi = 4;
    fixtures.push_back(generated_fixture(spec, "generated-partition-6"));
    spec.seed = derive_seed(seed, kExchangeSalt, 2);
    spec.n = 7;
    spec.kind = SystemKind::hypergraph_matching;
    fixtures.push_back(generated_fixture(spec, "generated-hypergraph-7"));
    spec.seed = derive_seed(seed, kExchangeSalt, 3);
    spec.n = 8;
    spec.kind = SystemKind::partition_intersection;
    spec.k = 4;
    fixtures.push_back(generated_fixture(spec, "generated-partition-8"));
    spec.seed = derive_seed(seed, kExchangeSalt, 4);
    spec.n = 9;
    spec.kind = SystemKind::hypergraph_matching;
    spec.k = 2;
    fixtures.push_back(generated_fixture(spec, "generated-hypergraph-9"));
  }

  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const Fixture& fx = fixtures[f];
    const ElementSet pointers = fx.pointers();
    const IndependenceTable table = build_independence_table(*fx.sys, pointers, 14);
    const int n = table.size();

    std::vector<std::uint32_t> independent_masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (table.test(m)) independent_masks.push_back(m);
    }

    const auto table_greedy = [&](const std::vector<int>& order) {
      std::uint32_t b = 0;
      for (int idx : order) {
        const std::uint32_t candidate = b | (1u << idx);
        if (table.test(candidate)) b = candidate;
      }
      return b;
    };

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    // Guard the bitmask replica against the real streaming greedy once per
    // fixture before trusting it for the permutation sweep.
    {
      GreedyState greedy(*fx.sys);
      for (const Element& e : fx.ground) greedy.feed(e);
      std::uint32_t streamed = 0;
      for (std::size_t i = 0; i < pointers.size(); ++i) {
        if (set_contains(greedy.solution(), pointers[i])) streamed |= 1u << i;
      }
      if (streamed != table_greedy(order)) {
        record_failure(r, "greedy replica diverges from the streaming greedy on " +
                              fx.describe());
        continue;
      }
    }

    const auto audit_order = [&](const std::vector<int>& perm) {
      ++r.trials;
      const std::uint32_t b = table_greedy(perm);
      for (std::uint32_t a : independent_masks) {
        const int excess = std::popcount(a & ~b);
        const int fresh = std::popcount(b & ~a);
        if (fx.k * fresh < excess) {
          std::string order_text;
          for (int idx : perm) {
            if (!order_text.empty()) order_text += ",";
            order_text += pointers[std::size_t(idx)]->id;
          }
          record_failure(r, "exchange bound fails: order=[" + order_text +
                                "] B={" + id_list(table.members(b)) + "} A={" +
                                id_list(table.members(a)) + "} on " + fx.describe());
          return;
        }
      }
    };

    if (n <= exhaustive_max_n) {
      std::vector<int> perm = order;
      do {
        audit_order(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      std::mt19937_64 rng(derive_seed(seed, kExchangeSalt, 100 + f));
      std::vector<int> perm = order;
      for (std::size_t i = 0; i < sampled_permutations; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        audit_order(perm);
      }
    }
  }
  return r;
}

CheckResult check_merge_counting(std::uint64_t seed, std::size_t trials,
                                 const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "merge-class-bound";
  for (auto [k_raw, count] : split_trials(k_list, trials)) {
    const int k2 = round_k(k_raw);
    for (std::size_t i = 0; i < count; ++i) {
      const InstanceSpec spec = bounded_corpus_spec(seed, k2, i);
      const Instance inst = random_instance(spec);
      ++r.trials;

      GreedyOfGreedies engine(Weight::kpow(k2, spec.exp_lo),
                              Weight::kpow(k2, spec.exp_hi), k2, *inst.system,
                              nullptr, true);
      for (const Element& e : inst.ground) engine.feed(e, exponent_of(e, k2));
      engine.finalize();

      const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
      const std::set<const Element*> opt_set(opt.opt_set.begin(), opt.opt_set.end());

      const auto& fed = engine.fed_sets();
      const auto& trace = engine.merge_trace();
      bool ok = trace.size() == fed.size();
      for (std::size_t j = 0; ok && j < fed.size(); ++j) {
        const std::size_t t_here = trace[j].size();
        const std::size_t t_above = j + 1 < trace.size() ? trace[j + 1].size() : 0;
        std::size_t opt_in_class = 0;
        for (const Element* e : fed[j]) {
          if (opt_set.count(e)) ++opt_in_class;
        }
        const std::size_t lhs = std::size_t(k2) * std::size_t(k2) * t_above +
                                std::size_t(k2) * (t_here - t_above);
        if (lhs < opt_in_class) ok = false;
      }
      if (!ok) {
        record_failure(r, "per-class counting bound fails on " +
                              describe_instance(spec, inst));
      }
    }
  }
  return r;
}

CheckResult check_bounded_ratio(std::uint64_t seed, std::size_t trials,
                                const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "bounded-ratio";
  for (auto [k_raw, count] : split_trials(k_list, trials)) {
    const int k2 = round_k(k_raw);
    for (std::size_t i = 0; i < count; ++i) {
      const InstanceSpec spec = bounded_corpus_spec(seed, k2, i);
      const Instance inst = random_instance(spec);
      ++r.trials;

      GreedyOfGreedies engine(Weight::kpow(k2, spec.exp_lo),
                              Weight::kpow(k2, spec.exp_hi), k2, *inst.system);
      for (const Element& e : inst.ground) engine.feed(e, exponent_of(e, k2));
      const ElementSet T = engine.finalize();

      const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
      const Weight got = set_weight(T);
      if (!(inst.system->is_independent(T) && got <= opt.opt_weight &&
            got * (2 * k2) >= opt.opt_weight)) {
        record_failure(r, "2k ratio fails: w(T)=" + got.str() + " w(OPT)=" +
                              opt.opt_weight.str() + " on " +
                              describe_instance(spec, inst));
      }
    }
  }
  return r;
}

CheckResult check_unbounded_ratio(std::uint64_t seed, std::size_t trials,
                                  const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "unbounded-ratio";
  for (auto [k_raw, count] : split_trials(k_list, trials)) {
    const int k2 = round_k(k_raw);
    for (std::size_t i = 0; i < count; ++i) {
      const InstanceSpec spec = unbounded_corpus_spec(seed, k2, i);
      const Instance inst = random_instance(spec);
      ++r.trials;

      DynamicGreedyOfGreedies engine(k2, *inst.system);
      for (const Element& e : inst.ground) {
        engine.feed(e, KPowerWeight{k2, exponent_of(e, k2)});
      }
      const ElementSet T = engine.finalize();

      const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
      const Weight got = set_weight(T);
      if (!(inst.system->is_independent(T) && got <= opt.opt_weight &&
            got * (4 * k2) >= opt.opt_weight)) {
        record_failure(r, "4k ratio fails: w(T)=" + got.str() + " w(OPT)=" +
                              opt.opt_weight.str() + " on " +
                              describe_instance(spec, inst));
      }
    }
  }
  return r;
}

CheckResult check_pipeline_ratio(std::uint64_t seed, std::size_t trials,
                                 const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "pipeline-ratio";
  for (auto [k_raw, count] : split_trials(k_list, trials)) {
    const int k2 = round_k(k_raw);
    for (std::size_t i = 0; i < count; ++i) {
      const InstanceSpec spec = arbitrary_corpus_spec(seed, k_raw, i);
      const Instance inst = random_instance(spec);
      ++r.trials;

      struct Sink final : KPowerSink {
        DynamicGreedyOfGreedies engine;
        explicit Sink(int k2_in, const IndependenceSystem& sys)
            : engine(k2_in, sys) {}
        void feed(const Element& u, KPowerWeight w2) override { engine.feed(u, w2); }
        ElementSet finish() override { return engine.finalize(); }
      };
      SplitRunner split(k2, [&](int) {
        return std::make_unique<Sink>(k2, *inst.system);
      });
      for (const Element& e : inst.ground) split.feed(e);
      const SplitOutcome outcome = split.finish();

      const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
      const long long bound = 8LL * k2 * split.ell();
      if (!(inst.system->is_independent(outcome.best) &&
            outcome.best_weight <= opt.opt_weight &&
            outcome.best_weight * bound >= opt.opt_weight)) {
        record_failure(r, "8k log2(k) ratio fails: w(best)=" +
                              outcome.best_weight.str() + " w(OPT)=" +
                              opt.opt_weight.str() + " bound=" +
                              std::to_string(bound) + " on " +
                              describe_instance(spec, inst));
      }
    }
  }
  return r;
}

CheckResult check_space_bounds(std::uint64_t seed, std::size_t trials,
                               const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "space-bounds";
  for (auto [k_raw, count] : split_trials(k_list, trials)) {
    const int k2 = round_k(k_raw);
    for (std::size_t i = 0; i < count; ++i) {
      {
        const InstanceSpec spec = bounded_corpus_spec(seed, k2, i);
        const Instance inst = random_instance(spec);
        ++r.trials;

        const Weight wmin = Weight::kpow(k2, spec.exp_lo);
        const Weight wmax = Weight::kpow(k2, spec.exp_hi);
        GreedyOfGreedies engine(wmin, wmax, k2, *inst.system);
        for (const Element& e : inst.ground) engine.feed(e, exponent_of(e, k2));
        const ElementSet T = engine.finalize();

        const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
        const std::size_t instances = engine.instance_count();
        const bool count_ok =
            instances == std::size_t(engine.imax() - engine.imin() + 1) &&
            Weight::kpow(k2, (long long)instances - 1) * wmin <= wmax;
        const bool peak_ok = engine.peak_stored() <=
                             opt.max_independent_size * instances + T.size();
        if (!(count_ok && peak_ok)) {
          record_failure(r, "bounded space bound fails: instances=" +
                                std::to_string(instances) + " peak=" +
                                std::to_string(engine.peak_stored()) + " rho=" +
                                std::to_string(opt.max_independent_size) + " on " +
                                describe_instance(spec, inst));
        }
      }
      {
        const InstanceSpec spec = unbounded_corpus_spec(seed, k2, i);
        const Instance inst = random_instance(spec);
        ++r.trials;

        DynamicGreedyOfGreedies engine(k2, *inst.system);
        for (const Element& e : inst.ground) {
          engine.feed(e, KPowerWeight{k2, exponent_of(e, k2)});
        }
        engine.finalize();

        const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
        const long long rho = (long long)opt.max_independent_size;
        const Weight lhs = Weight::kpow(k2, (long long)engine.peak_instances() - 2);
        const Weight rhs(BigRat(BigInt(2 * k2 * rho) * BigInt(2 * k2 * rho)));
        if (!(rho >= 1 && lhs <= rhs)) {
          record_failure(r, "dynamic window bound fails: peak=" +
                                std::to_string(engine.peak_instances()) + " rho=" +
                                std::to_string(rho) + " on " +
                                describe_instance(spec, inst));
        }
      }
    }
  }
  return r;
}

CheckResult check_window_replay(std::uint64_t seed, std::size_t trials,
                                const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "window-replay";
  for (auto [k_raw, count] : split_trials(k_list, trials)) {
    const int k2 = round_k(k_raw);
    for (std::size_t i = 0; i < count; ++i) {
      const InstanceSpec spec = unbounded_corpus_spec(seed, k2, i);
      const Instance inst = random_instance(spec);
      ++r.trials;

      DynamicGreedyOfGreedies engine(k2, *inst.system, nullptr, nullptr, true);
      for (const Element& e : inst.ground) {
        engine.feed(e, KPowerWeight{k2, exponent_of(e, k2)});
      }
      if (!engine.has_window()) continue;
      const long long imin = engine.imin();
      const long long imax = engine.imax();
      const ElementSet T = engine.finalize();

      const std::set<const Element*> dropped(engine.discard_log().begin(),
                                             engine.discard_log().end());
      GreedyOfGreedies replay(Weight::kpow(k2, imin), Weight::kpow(k2, imax), k2,
                              *inst.system);
      for (const Element& e : inst.ground) {
        if (dropped.count(&e)) continue;
        replay.feed(e, exponent_of(e, k2));
      }
      const ElementSet T2 = replay.finalize();

      const ExactResult opt = brute_force_opt(inst.pointers(), *inst.system);
      Weight lost;
      for (const Element* e : opt.opt_set) {
        if (dropped.count(e)) lost += e->weight;
      }
      if (!(sorted_ids(T) == sorted_ids(T2) && lost * 2 <= opt.opt_weight)) {
        record_failure(r, "window replay fails: |T|=" + std::to_string(T.size()) +
                              " |T'|=" + std::to_string(T2.size()) + " lost=" +
                              lost.str() + " w(OPT)=" + opt.opt_weight.str() +
                              " on " + describe_instance(spec, inst));
      }
    }
  }
  return r;
}

CheckResult check_definition_of(const IndependenceSystem& sys, ElementSpan ground) {
  CheckResult r;
  r.name = "definition-audit";
  const int k = sys.declared_k();
  r.trials = 3;
  if (auto w = find_down_closed_violation(sys, ground)) {
    record_failure(r, "down-closedness fails: independent {" +
                          id_list(w->superset) + "} loses member yet {" +
                          id_list(w->subset) + "} is dependent");
  }
  if (auto w = find_extendibility_violation(sys, ground, k)) {
    record_failure(r, std::to_string(k) + "-extendibility fails: T={" +
                          id_list(w->T) + "} S={" + id_list(w->S) + "} u=" +
                          w->u->id + " admits no repair set of size " +
                          std::to_string(k));
  }
  if (auto w = find_set_system_violation(sys, ground, k)) {
    record_failure(r, std::to_string(k) + "-set-system fails: S={" +
                          id_list(w->S) + "} has bases {" +
                          id_list(w->small_base) + "} and {" +
                          id_list(w->large_base) + "}");
  }
  return r;
}

CheckResult check_definitions(std::uint64_t seed, std::size_t trials,
                              const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "definition-checkers";

  const auto fold = [&r](const CheckResult& sub, const std::string& context) {
    r.trials += sub.trials;
    r.failures += sub.failures;
    for (const std::string& m : sub.messages) {
      if (r.messages.size() < kMessageCap) {
        r.messages.push_back(m + " on " + context);
      }
    }
  };

  for (const Fixture& fx : hand_fixtures()) {
    const ElementSet pointers = fx.pointers();
    fold(check_definition_of(*fx.sys, pointers), fx.describe());
  }

  // The exhaustive sweeps are expensive, so the generated portion is capped;
  // coverage comes from varying seeds, not from volume per run.
  const std::size_t generated = std::min<std::size_t>(trials, 16);
  for (auto [k_raw, count] : split_trials(k_list, generated)) {
    for (std::size_t i = 0; i < count; ++i) {
      InstanceSpec spec;
      spec.seed = derive_seed(seed, kDefinitionSalt, i * 8 + std::uint64_t(k_raw % 8));
      spec.n = 7 + int(i % 4);
      spec.kind = i % 2 == 0 ? SystemKind::partition_intersection
                             : SystemKind::hypergraph_matching;
      spec.mode = WeightMode::k_power;
      spec.k = round_k(k_raw);
      spec.exp_lo = 0;
      spec.exp_hi = 5;
      const Instance inst = random_instance(spec);
      fold(check_definition_of(*inst.system, inst.pointers()),
           describe_instance(spec, inst));
    }
  }
  return r;
}

CheckResult check_baselines(std::uint64_t seed, std::size_t trials,
                            const std::vector<int>& k_list) {
  CheckResult r;
  r.name = "baselines";

  const auto audit = [&r](const IndependenceSystem& sys, ElementSpan ground,
                          int k, const std::string& context) {
    ++r.trials;
    const ExactResult opt = brute_force_opt(ground, sys);
    const ElementSet greedy = offline_greedy(ground, sys);
    if (set_weight(greedy) * k < opt.opt_weight) {
      record_failure(r, "offline greedy misses factor " + std::to_string(k) +
                            ": w(G)=" + set_weight(greedy).str() + " w(OPT)=" +
                            opt.opt_weight.str() + " on " + context);
      return;
    }
    GreedyState stream(sys);
    for (const Element* e : ground) stream.feed(*e);
    for (const Element* e : ground) {
      if (set_contains(stream.solution(), e)) continue;
      ElementSet probe = stream.solution();
      probe.push_back(e);
      if (sys.is_independent(probe)) {
        record_failure(r, "streaming greedy output is not a base: " + e->id +
                              " still fits on " + context);
        return;
      }
    }
  };

  for (const Fixture& fx : hand_fixtures()) {
    const ElementSet pointers = fx.pointers();
    audit(*fx.sys, pointers, fx.k, fx.describe());
  }

  const std::size_t generated = std::min<std::size_t>(trials, 60);
  for (auto [k_raw, count] : split_trials(k_list, generated)) {
    for (std::size_t i = 0; i < count; ++i) {
      InstanceSpec spec;
      spec.seed = derive_seed(seed, kBaselineSalt, i * 8 + std::uint64_t(k_raw % 8));
      spec.n = 9 + int(i % 6);
      spec.kind = i % 2 == 0 ? SystemKind::hypergraph_matching
                             : SystemKind::partition_intersection;
      spec.mode = i % 3 == 0 ? WeightMode::arbitrary : WeightMode::k_power;
      spec.k = spec.mode == WeightMode::k_power ? round_k(k_raw) : k_raw;
      spec.exp_lo = -1;
      spec.exp_hi = 6;
      const Instance inst = random_instance(spec);
      audit(*inst.system, inst.pointers(), inst.system->declared_k(),
            describe_instance(spec, inst));
    }
  }
  return r;
}

std::vector<CheckResult> verify_suite(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  const std::size_t rounding_samples =
      options.trials > 0 ? std::max<std::size_t>(options.trials * 20, 1000) : 0;
  const std::size_t perms =
      options.trials > 0 ? std::min<std::size_t>(options.trials, 240) : 0;
  out.push_back(check_weight_rounding(options.seed, rounding_samples, options.k_list));
  if (perms > 0) {
    out.push_back(check_exchange_bound(options.seed, 7, perms));
  } else {
    CheckResult skipped;
    skipped.name = "greedy-exchange";
    out.push_back(skipped);
  }
  out.push_back(check_merge_counting(options.seed, options.trials, options.k_list));
  out.push_back(check_bounded_ratio(options.seed, options.trials, options.k_list));
  out.push_back(check_unbounded_ratio(options.seed, options.trials, options.k_list));
  out.push_back(check_pipeline_ratio(options.seed, options.trials, options.k_list));
  out.push_back(check_space_bounds(options.seed, options.trials, options.k_list));
  out.push_back(check_window_replay(options.seed, options.trials, options.k_list));
  out.push_back(check_definitions(options.seed, options.trials, options.k_list));
  out.push_back(check_baselines(options.seed, options.trials, options.k_list));
  return out;
}

std::string format_suite_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    out << (r.passed() ? "[pass] " : "[FAIL] ") << r.name << "  trials=" << r.trials
        << " failures=" << r.failures << "\n";
    if (r.passed()) ++passed;
    for (const std::string& m : r.messages) {
      std::istringstream lines(m);
      std::string line;
      while (std::getline(lines, line)) out << "    " << line << "\n";
    }
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace kxs
