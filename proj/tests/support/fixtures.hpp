#pragma once

#include "core/element.hpp"
#include "core/system.hpp"
#include "systems/systems.hpp"

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kxs::testing {

inline Element el(std::string id, const char* weight,
                  std::initializer_list<std::pair<std::string, AttrValue>> attrs = {}) {
  Element e;
  e.id = std::move(id);
  e.weight = Weight::parse(weight);
  for (auto& [key, value] : attrs) e.attrs.emplace(key, value);
  return e;
}

inline ElementSet ptrs(const std::vector<Element>& ground) {
  ElementSet out;
  out.reserve(ground.size());
  for (const Element& e : ground) out.push_back(&e);
  return out;
}

inline const Element* by_id(const std::vector<Element>& ground, std::string_view id) {
  for (const Element& e : ground) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

inline std::vector<std::string> ids_of(ElementSpan s) {
  std::vector<std::string> out;
  for (const Element* e : s) out.push_back(e->id);
  std::sort(out.begin(), out.end());
  return out;
}

// Uniform matroid of the given rank: a single partition layer where every
// element shares one key value with capacity = rank.
inline std::unique_ptr<IndependenceSystem> uniform_matroid(long long rank) {
  PartitionMatroidIntersection::Layer layer;
  layer.key_attr = "g";
  layer.capacities["all"] = rank;
  layer.default_capacity = rank;
  std::vector<PartitionMatroidIntersection::Layer> layers{layer};
  return std::make_unique<PartitionMatroidIntersection>(std::move(layers));
}

inline Element uel(std::string id, const char* weight) {
  return el(std::move(id), weight, {{"g", std::string("all")}});
}

// Bipartite matching as graph (arity-2 hypergraph) edges.
inline Element edge2(std::string id, const char* weight, std::string a, std::string b) {
  return el(std::move(id), weight,
            {{"vertices", std::vector<std::string>{std::move(a), std::move(b)}}});
}

inline std::unique_ptr<IndependenceSystem> matching(int k = 2) {
  return std::make_unique<HypergraphMatching>("vertices", k);
}

// The four edges of K_{2,2} with the weights used across the test corpus:
// best matching is {a-r1, b-r2} at weight 8.
inline std::vector<Element> k22_edges() {
  std::vector<Element> out;
  out.push_back(edge2("a-r1", "4", "a", "r1"));
  out.push_back(edge2("a-r2", "1", "a", "r2"));
  out.push_back(edge2("b-r1", "1", "b", "r1"));
  out.push_back(edge2("b-r2", "4", "b", "r2"));
  return out;
}

// Path a-b-c-d: three edges where the middle one conflicts with both ends.
inline std::vector<Element> p4_edges() {
  std::vector<Element> out;
  out.push_back(edge2("e1", "1", "a", "b"));
  out.push_back(edge2("e2", "1", "b", "c"));
  out.push_back(edge2("e3", "1", "c", "d"));
  return out;
}

inline std::vector<Element> triangle_edges() {
  std::vector<Element> out;
  out.push_back(edge2("e1", "1", "a", "b"));
  out.push_back(edge2("e2", "1", "b", "c"));
  out.push_back(edge2("e3", "1", "a", "c"));
  return out;
}

}  // namespace kxs::testing
