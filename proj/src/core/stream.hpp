#pragma once

#include "core/element.hpp"
#include "core/error.hpp"

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace kxs {

// Single-pass cursor over a parsed ground set, optionally in a permuted
// order. Engines consume elements through next() exactly once; tests use
// the permuted form to replay the same ground set in many arrival orders.
class ElementStream {
 public:
  explicit ElementStream(std::span<const Element> items) : items_(items) {
    order_.resize(items.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  }

  ElementStream(std::span<const Element> items, std::vector<std::size_t> order)
      : items_(items), order_(std::move(order)) {
    if (order_.size() != items_.size()) {
      throw_contract("stream permutation length does not match ground set");
    }
  }

  const Element* next() {
    if (pos_ >= order_.size()) return nullptr;
    return &items_[order_[pos_++]];
  }

  std::size_t delivered() const { return pos_; }
  std::size_t size() const { return order_.size(); }

 private:
  std::span<const Element> items_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
};

}  // namespace kxs
