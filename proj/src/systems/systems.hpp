#pragma once

#include "core/system.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace kxs {

// Intersection of k partition matroids. Each layer reads one attribute off
// an element and caps how many chosen elements may share each attribute
// value. A set is independent iff every layer's caps all hold.
class PartitionMatroidIntersection : public IndependenceSystem {
 public:
  struct Layer {
    std::string key_attr;
    std::map<std::string, long long> capacities;
    long long default_capacity = 1;
  };

  explicit PartitionMatroidIntersection(std::vector<Layer> layers);

  using IndependenceSystem::is_independent;
  int declared_k() const override { return static_cast<int>(layers_.size()); }
  bool is_independent(ElementSpan s) const override;
  void validate_element(const Element& u) const override;
  std::string type_name() const override { return "partition_intersection"; }
  nlohmann::ordered_json config() const override;

 private:
  const std::string& key_of(const Element& u, const Layer& layer) const;
  long long capacity_of(const Layer& layer, const std::string& key) const;

  std::vector<Layer> layers_;
};

// Elements are hyperedges over a vertex universe (an attribute carrying up
// to k vertex names); a set is independent iff its edges are pairwise
// vertex-disjoint.
class HypergraphMatching : public IndependenceSystem {
 public:
  HypergraphMatching(std::string vertex_attr, int k);

  using IndependenceSystem::is_independent;
  int declared_k() const override { return k_; }
  bool is_independent(ElementSpan s) const override;
  void validate_element(const Element& u) const override;
  std::string type_name() const override { return "hypergraph_matching"; }
  nlohmann::ordered_json config() const override;

 private:
  const std::vector<std::string>& vertices_of(const Element& u) const;

  std::string vertex_attr_;
  int k_;
};

// A family of independent sets given outright, for desk-scale fixtures.
// Ground sets are capped at 20 ids; membership is one table lookup on a
// bitmask. The constructor inserts the empty set and, unless raw mode is
// requested, closes the family downward so the oracle is always a legal
// independence system; raw mode keeps the family as given so the checkers
// can be pointed at a deliberately broken one.
class ExplicitSystem : public IndependenceSystem {
 public:
  static constexpr int kMaxGround = 20;

  ExplicitSystem(std::vector<std::string> ground_ids,
                 const std::vector<std::vector<std::string>>& independent_sets,
                 int declared_k, bool close_downward = true);

  using IndependenceSystem::is_independent;
  int declared_k() const override { return k_; }
  bool is_independent(ElementSpan s) const override;
  void validate_element(const Element& u) const override;
  std::string type_name() const override { return "explicit"; }
  nlohmann::ordered_json config() const override;

  bool mask_independent(std::uint32_t mask) const { return table_[mask]; }
  const std::vector<std::string>& ground_ids() const { return ids_; }

 private:
  std::uint32_t index_of(const std::string& id) const;

  std::vector<std::string> ids_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
  std::vector<bool> table_;
  int k_;
  bool closed_;
};

// Builds a system from {"type", "k", "params"}. Unknown types, missing
// params and a "k" that contradicts the type's structure raise parse errors.
std::unique_ptr<IndependenceSystem> make_system(const nlohmann::json& config);
std::unique_ptr<IndependenceSystem> load_system_file(const std::string& path);

}  // namespace kxs
