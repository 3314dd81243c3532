#pragma once

#include "core/system.hpp"

#include <cstdint>
#include <utility>

namespace kxs {

// Single-pass unweighted greedy: accept an arriving element iff the current
// solution stays independent with it. Exactly one oracle call per feed.
// Copying a state is the supported way to fork it; copies keep sharing the
// original call counter so accounting stays global.
class GreedyState {
 public:
  explicit GreedyState(const IndependenceSystem& sys, std::uint64_t* oracle_calls = nullptr)
      : oracle_(sys, oracle_calls) {}

  bool feed(const Element& u) {
    solution_.push_back(&u);
    if (oracle_.is_independent(solution_)) return true;
    solution_.pop_back();
    return false;
  }

  const ElementSet& solution() const { return solution_; }
  std::size_t size() const { return solution_.size(); }
  const IndependenceSystem& system() const { return oracle_.system(); }

 private:
  Oracle oracle_;
  ElementSet solution_;
};

}  // namespace kxs
