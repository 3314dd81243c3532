#pragma once

#include "core/error.hpp"
#include "core/weight.hpp"

namespace kxs {

// A weight constrained to an integer power of k. The bounded and dynamic
// engines only ever compare and bucket these, so carrying the exponent is
// both exact and cheap; the rational value is materialized on demand.
struct KPowerWeight {
  int base_k = 2;
  long long exponent = 0;

  Weight value() const { return Weight::kpow(base_k, exponent); }

  friend bool operator==(const KPowerWeight& a, const KPowerWeight& b) {
    check_same_base(a, b);
    return a.exponent == b.exponent;
  }
  friend bool operator<(const KPowerWeight& a, const KPowerWeight& b) {
    check_same_base(a, b);
    return a.exponent < b.exponent;
  }

 private:
  static void check_same_base(const KPowerWeight& a, const KPowerWeight& b) {
    if (a.base_k != b.base_k) {
      throw_contract("comparing power weights with different bases");
    }
  }
};

}  // namespace kxs
