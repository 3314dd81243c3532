#include "exact/exact.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <string>

namespace kxs {

namespace {

constexpr std::size_t kExactCap = 20;

struct Search {
  const IndependenceSystem* sys;
  std::uint64_t* oracle_calls;
  ElementSet order;    // ground in ascending id order
  ElementSet current;  // independent by construction
  Weight current_weight;
  ExactResult result;

  bool extend_ok(const Element* e) {
    current.push_back(e);
    if (oracle_calls) ++*oracle_calls;
    bool ok = sys->is_independent(current);
    current.pop_back();
    return ok;
  }

  void visit(std::size_t i) {
    if (i == order.size()) {
      ++result.independent_count;
      result.max_independent_size = std::max(result.max_independent_size, current.size());
      if (current_weight > result.opt_weight) {
        result.opt_weight = current_weight;
        result.opt_set = current;
      }
      return;
    }
    const Element* e = order[i];
    if (extend_ok(e)) {
      current.push_back(e);
      current_weight += e->weight;
      visit(i + 1);
      current_weight = current_weight - e->weight;
      current.pop_back();
    }
    visit(i + 1);
  }
};

}  // namespace

ExactResult brute_force_opt(ElementSpan ground, const IndependenceSystem& sys,
                            std::uint64_t* oracle_calls) {
  if (ground.size() > kExactCap) {
    throw_size("exact enumeration caps at " + std::to_string(kExactCap) +
               " elements, got " + std::to_string(ground.size()));
  }
  Search search;
  search.sys = &sys;
  search.oracle_calls = oracle_calls;
  search.order.assign(ground.begin(), ground.end());
  std::sort(search.order.begin(), search.order.end(),
            [](const Element* a, const Element* b) { return a->id < b->id; });
  search.visit(0);
  return std::move(search.result);
}

ElementSet offline_greedy(ElementSpan ground, const IndependenceSystem& sys,
                          std::uint64_t* oracle_calls) {
  ElementSet order(ground.begin(), ground.end());
  std::sort(order.begin(), order.end(), [](const Element* a, const Element* b) {
    if (a->weight != b->weight) return b->weight < a->weight;
    return a->id < b->id;
  });
  ElementSet solution;
  for (const Element* e : order) {
    solution.push_back(e);
    if (oracle_calls) ++*oracle_calls;
    if (!sys.is_independent(solution)) solution.pop_back();
  }
  return solution;
}

}  // namespace kxs
