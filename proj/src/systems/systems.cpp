#include "systems/systems.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kxs {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// PartitionMatroidIntersection

PartitionMatroidIntersection::PartitionMatroidIntersection(std::vector<Layer> layers)
    : layers_(std::move(layers)) {
  if (layers_.empty()) throw_parse("partition_intersection needs at least one partition");
  for (const Layer& layer : layers_) {
    if (layer.key_attr.empty()) throw_parse("partition layer with empty key_attr");
    if (layer.default_capacity < 0) throw_parse("negative default_capacity");
    for (const auto& [key, cap] : layer.capacities) {
      if (cap < 0) throw_parse("negative capacity for key \"" + key + "\"");
    }
  }
}

const std::string& PartitionMatroidIntersection::key_of(const Element& u,
                                                        const Layer& layer) const {
  auto it = u.attrs.find(layer.key_attr);
  if (it == u.attrs.end()) {
    throw_contract("element \"" + u.id + "\" lacks attr \"" + layer.key_attr + "\"");
  }
  const auto* s = std::get_if<std::string>(&it->second);
  if (!s) {
    throw_contract("element \"" + u.id + "\" attr \"" + layer.key_attr +
                   "\" must be a single string");
  }
  return *s;
}

long long PartitionMatroidIntersection::capacity_of(const Layer& layer,
                                                    const std::string& key) const {
  auto it = layer.capacities.find(key);
  return it == layer.capacities.end() ? layer.default_capacity : it->second;
}

bool PartitionMatroidIntersection::is_independent(ElementSpan s) const {
  for (const Layer& layer : layers_) {
    std::unordered_map<std::string, long long> used;
    for (const Element* e : s) {
      const std::string& key = key_of(*e, layer);
      if (++used[key] > capacity_of(layer, key)) return false;
    }
  }
  return true;
}

void PartitionMatroidIntersection::validate_element(const Element& u) const {
  for (const Layer& layer : layers_) key_of(u, layer);
}

ordered_json PartitionMatroidIntersection::config() const {
  ordered_json parts = ordered_json::array();
  for (const Layer& layer : layers_) {
    ordered_json caps = ordered_json::object();
    for (const auto& [key, cap] : layer.capacities) caps[key] = cap;
    parts.push_back({{"key_attr", layer.key_attr},
                     {"capacities", caps},
                     {"default_capacity", layer.default_capacity}});
  }
  return {{"type", type_name()},
          {"k", declared_k()},
          {"params", {{"partitions", parts}}}};
}

// ---------------------------------------------------------------------------
// HypergraphMatching

HypergraphMatching::HypergraphMatching(std::string vertex_attr, int k)
    : vertex_attr_(std::move(vertex_attr)), k_(k) {
  if (vertex_attr_.empty()) throw_parse("hypergraph_matching needs a vertex_attr");
  if (k_ < 1) throw_parse("hypergraph_matching needs k >= 1");
}

const std::vector<std::string>& HypergraphMatching::vertices_of(const Element& u) const {
  auto it = u.attrs.find(vertex_attr_);
  if (it == u.attrs.end()) {
    throw_contract("element \"" + u.id + "\" lacks attr \"" + vertex_attr_ + "\"");
  }
  const auto* v = std::get_if<std::vector<std::string>>(&it->second);
  if (!v) {
    throw_contract("element \"" + u.id + "\" attr \"" + vertex_attr_ +
                   "\" must be an array of vertex names");
  }
  return *v;
}

bool HypergraphMatching::is_independent(ElementSpan s) const {
  std::unordered_set<std::string> seen;
  for (const Element* e : s) {
    for (const std::string& v : vertices_of(*e)) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

void HypergraphMatching::validate_element(const Element& u) const {
  const auto& verts = vertices_of(u);
  if (verts.empty()) {
    throw_contract("element \"" + u.id + "\" has an empty hyperedge");
  }
  if (static_cast<int>(verts.size()) > k_) {
    throw_contract("element \"" + u.id + "\" has arity " +
                   std::to_string(verts.size()) + " but k = " + std::to_string(k_));
  }
  std::set<std::string> distinct(verts.begin(), verts.end());
  if (distinct.size() != verts.size()) {
    throw_contract("element \"" + u.id + "\" repeats a vertex in its hyperedge");
  }
}

ordered_json HypergraphMatching::config() const {
  return {{"type", type_name()},
          {"k", k_},
          {"params", {{"vertex_attr", vertex_attr_}}}};
}

// ---------------------------------------------------------------------------
// ExplicitSystem

ExplicitSystem::ExplicitSystem(std::vector<std::string> ground_ids,
                               const std::vector<std::vector<std::string>>& independent_sets,
                               int declared_k, bool close_downward)
    : ids_(std::move(ground_ids)), k_(declared_k), closed_(close_downward) {
  if (ids_.size() > kMaxGround) {
    throw_size("explicit system ground set has " + std::to_string(ids_.size()) +
               " elements; the table form caps out at " + std::to_string(kMaxGround));
  }
  if (k_ < 1) throw_parse("explicit system needs k >= 1");
  for (std::uint32_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) throw_parse("explicit system with empty element id");
    if (!index_.emplace(ids_[i], i).second) {
      throw_parse("explicit system repeats id \"" + ids_[i] + "\"");
    }
  }
  table_.assign(std::size_t{1} << ids_.size(), false);
  table_[0] = true;
  for (const auto& set : independent_sets) {
    std::uint32_t mask = 0;
    for (const std::string& id : set) {
      std::uint32_t bit = std::uint32_t{1} << index_of(id);
      if (mask & bit) throw_parse("independent set repeats id \"" + id + "\"");
      mask |= bit;
    }
    table_[mask] = true;
  }
  if (close_downward) {
    // Peel one element at a time; scanning masks in decreasing order means
    // every superset has already been processed.
    for (std::size_t mask = table_.size(); mask-- > 0;) {
      if (!table_[mask]) continue;
      for (std::uint32_t i = 0; i < ids_.size(); ++i) {
        if (mask & (std::size_t{1} << i)) table_[mask ^ (std::size_t{1} << i)] = true;
      }
    }
  }
}

std::uint32_t ExplicitSystem::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw_contract("element id \"" + id + "\" is not in the explicit ground set");
  }
  return it->second;
}

bool ExplicitSystem::is_independent(ElementSpan s) const {
  std::uint32_t mask = 0;
  for (const Element* e : s) mask |= std::uint32_t{1} << index_of(e->id);
  return table_[mask];
}

void ExplicitSystem::validate_element(const Element& u) const { index_of(u.id); }

ordered_json ExplicitSystem::config() const {
  ordered_json family = ordered_json::array();
  // Emit maximal sets only; the constructor re-closes them.
  for (std::size_t mask = 0; mask < table_.size(); ++mask) {
    if (!table_[mask] || mask == 0) continue;
    bool maximal = true;
    for (std::uint32_t i = 0; i < ids_.size() && maximal; ++i) {
      std::size_t up = mask | (std::size_t{1} << i);
      if (up != mask && table_[up]) maximal = false;
    }
    if (!maximal) continue;
    ordered_json set = ordered_json::array();
    for (std::uint32_t i = 0; i < ids_.size(); ++i) {
      if (mask & (std::size_t{1} << i)) set.push_back(ids_[i]);
    }
    family.push_back(set);
  }
  return {{"type", type_name()},
          {"k", k_},
          {"params",
           {{"elements", ids_}, {"independent", family}, {"closure", closed_}}}};
}

// ---------------------------------------------------------------------------
// Factory

namespace {

long long int_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw_parse(where + ": missing integer field \"" + key + "\"");
  }
  return obj[key].get<long long>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw_parse(where + ": missing string field \"" + key + "\"");
  }
  return obj[key].get<std::string>();
}

std::unique_ptr<IndependenceSystem> make_partition(const json& params, int k_given) {
  if (!params.contains("partitions") || !params["partitions"].is_array()) {
    throw_parse("partition_intersection params need a \"partitions\" array");
  }
  std::vector<PartitionMatroidIntersection::Layer> layers;
  for (const json& p : params["partitions"]) {
    PartitionMatroidIntersection::Layer layer;
    layer.key_attr = string_field(p, "key_attr", "partition layer");
    if (p.contains("capacities")) {
      if (!p["capacities"].is_object()) {
        throw_parse("partition layer \"capacities\" must be an object");
      }
      for (auto it = p["capacities"].begin(); it != p["capacities"].end(); ++it) {
        if (!it.value().is_number_integer()) {
          throw_parse("capacity for key \"" + it.key() + "\" must be an integer");
        }
        layer.capacities[it.key()] = it.value().get<long long>();
      }
    }
    if (p.contains("default_capacity")) {
      layer.default_capacity = int_field(p, "default_capacity", "partition layer");
    }
    layers.push_back(std::move(layer));
  }
  auto sys = std::make_unique<PartitionMatroidIntersection>(std::move(layers));
  if (k_given != 0 && k_given != sys->declared_k()) {
    throw_parse("config k=" + std::to_string(k_given) + " but the partition list has " +
                std::to_string(sys->declared_k()) + " layers");
  }
  return sys;
}

std::unique_ptr<IndependenceSystem> make_hypergraph(const json& params, int k_given) {
  if (k_given < 1) throw_parse("hypergraph_matching needs a positive \"k\"");
  std::string attr = params.contains("vertex_attr")
                         ? string_field(params, "vertex_attr", "hypergraph params")
                         : std::string("vertices");
  return std::make_unique<HypergraphMatching>(std::move(attr), k_given);
}

std::unique_ptr<IndependenceSystem> make_explicit(const json& params, int k_given) {
  if (k_given < 1) throw_parse("explicit system needs a positive \"k\"");
  if (!params.contains("elements") || !params["elements"].is_array()) {
    throw_parse("explicit params need an \"elements\" array");
  }
  std::vector<std::string> ids;
  for (const json& x : params["elements"]) {
    if (!x.is_string()) throw_parse("explicit \"elements\" entries must be strings");
    ids.push_back(x.get<std::string>());
  }
  std::vector<std::vector<std::string>> family;
  if (params.contains("independent")) {
    if (!params["independent"].is_array()) {
      throw_parse("explicit \"independent\" must be an array of arrays");
    }
    for (const json& set : params["independent"]) {
      if (!set.is_array()) throw_parse("explicit \"independent\" must be an array of arrays");
      std::vector<std::string> one;
      for (const json& x : set) {
        if (!x.is_string()) throw_parse("independent set entries must be strings");
        one.push_back(x.get<std::string>());
      }
      family.push_back(std::move(one));
    }
  }
  bool closure = true;
  if (params.contains("closure")) {
    if (!params["closure"].is_boolean()) throw_parse("explicit \"closure\" must be a boolean");
    closure = params["closure"].get<bool>();
  }
  return std::make_unique<ExplicitSystem>(std::move(ids), family, k_given, closure);
}

}  // namespace

std::unique_ptr<IndependenceSystem> make_system(const json& config) {
  if (!config.is_object()) throw_parse("constraint config must be a JSON object");
  std::string type = string_field(config, "type", "constraint config");
  int k_given = 0;
  if (config.contains("k")) {
    if (!config["k"].is_number_integer()) throw_parse("constraint config \"k\" must be an integer");
    k_given = config["k"].get<int>();
    if (k_given < 1) throw_parse("constraint config \"k\" must be >= 1");
  }
  json params = config.contains("params") ? config["params"] : json::object();
  if (!params.is_object()) throw_parse("constraint config \"params\" must be an object");

  if (type == "partition_intersection") return make_partition(params, k_given);
  if (type == "hypergraph_matching") return make_hypergraph(params, k_given);
  if (type == "explicit") return make_explicit(params, k_given);
  throw_parse("unknown constraint type \"" + type + "\"");
}

std::unique_ptr<IndependenceSystem> load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_parse("cannot open constraint file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json config = json::parse(buf.str(), nullptr, false);
  if (config.is_discarded()) throw_parse("constraint file is not valid JSON: " + path);
  return make_system(config);
}

}  // namespace kxs
