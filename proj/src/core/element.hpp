#pragma once

#include "core/weight.hpp"

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kxs {

// Attribute values are either a single token or a list of tokens; constraint
// types pick out the attributes they understand and ignore the rest.
using AttrValue = std::variant<std::string, std::vector<std::string>>;
using AttrMap = std::map<std::string, AttrValue, std::less<>>;

struct Element {
  std::string id;
  Weight weight;
  AttrMap attrs;
};

// Query sets and solutions are views into ground-set storage owned by the
// caller; pointers stay valid for the lifetime of that storage.
using ElementSet = std::vector<const Element*>;
using ElementSpan = std::span<const Element* const>;

inline Weight set_weight(ElementSpan s) {
  Weight total;
  for (const Element* e : s) total += e->weight;
  return total;
}

inline bool set_contains(ElementSpan s, const Element* e) {
  for (const Element* x : s) {
    if (x == e) return true;
  }
  return false;
}

}  // namespace kxs
