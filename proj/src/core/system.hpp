#pragma once

#include "core/element.hpp"

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>

namespace kxs {

// Independence oracle over element sets. Implementations must be
// down-closed and must answer membership queries without mutating state.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  // The extendibility parameter the constraint is declared with.
  virtual int declared_k() const = 0;

  virtual bool is_independent(ElementSpan s) const = 0;

  bool is_independent(std::initializer_list<const Element*> s) const {
    return is_independent(ElementSpan(s.begin(), s.size()));
  }

  // Rejects elements whose attributes the constraint cannot interpret.
  // Called once per element at ingestion; throws a contract error.
  virtual void validate_element(const Element& u) const { (void)u; }

  virtual std::string type_name() const = 0;

  // Round-trippable configuration, used to serialize failing instances.
  virtual nlohmann::ordered_json config() const = 0;
};

// Thin counting front for the oracle. Engines route every membership query
// through one of these so reported call counts are exact; clones of a greedy
// state share the same counter.
class Oracle {
 public:
  Oracle(const IndependenceSystem& sys, std::uint64_t* calls)
      : sys_(&sys), calls_(calls) {}

  bool is_independent(ElementSpan s) const {
    if (calls_) ++*calls_;
    return sys_->is_independent(s);
  }

  // An element that is dependent on its own is invisible to every
  // independent set and can be dropped on arrival. One oracle call.
  bool is_self_loop(const Element& u) const {
    const Element* one[1] = {&u};
    return !is_independent(ElementSpan(one, 1));
  }

  const IndependenceSystem& system() const { return *sys_; }

 private:
  const IndependenceSystem* sys_;
  std::uint64_t* calls_;
};

inline bool is_self_loop(const Element& u, const IndependenceSystem& sys) {
  const Element* one[1] = {&u};
  return !sys.is_independent(ElementSpan(one, 1));
}

}  // namespace kxs
