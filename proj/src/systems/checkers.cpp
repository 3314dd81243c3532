#include "systems/checkers.hpp"

#include "core/error.hpp"

#include <bit>
#include <string>

namespace kxs {

namespace {

constexpr int kCheckerCap = 14;
constexpr int kSweepCap = 12;

int popcount(std::uint32_t x) { return std::popcount(x); }

}  // namespace

ElementSet IndependenceTable::members(std::uint32_t mask) const {
  ElementSet out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) out.push_back(ground[i]);
  }
  return out;
}

IndependenceTable build_independence_table(const IndependenceSystem& sys,
                                           ElementSpan ground, int max_n,
                                           std::uint64_t* oracle_calls) {
  if (static_cast<int>(ground.size()) > max_n) {
    throw_size("ground set of " + std::to_string(ground.size()) +
               " elements exceeds the enumeration cap of " + std::to_string(max_n));
  }
  IndependenceTable table;
  table.ground.assign(ground.begin(), ground.end());
  std::size_t n = ground.size();
  table.independent.assign(std::size_t{1} << n, 0);
  ElementSet scratch;
  scratch.reserve(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    scratch.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) scratch.push_back(ground[i]);
    }
    if (oracle_calls) ++*oracle_calls;
    table.independent[mask] = sys.is_independent(scratch) ? 1 : 0;
  }
  return table;
}

std::optional<DownClosedWitness> find_down_closed_violation(
    const IndependenceSystem& sys, ElementSpan ground) {
  IndependenceTable table = build_independence_table(sys, ground, kCheckerCap);
  std::size_t n = ground.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!table.test(mask)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      if ((mask & bit) && !table.test(mask ^ bit)) {
        return DownClosedWitness{table.members(mask), table.members(mask ^ bit)};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Looks for a repair set Y <= avail (a bitmask) with |Y| <= k such that
// (T \ Y) + u is independent. Checked in order of growing |Y| for the two
// cheap tiers, then by general submask walk.
bool repair_exists(const IndependenceTable& table, std::uint32_t t_mask,
                   std::uint32_t u_bit, std::uint32_t avail, int k) {
  if (table.test(t_mask | u_bit)) return true;  // Y = {} works
  if (k == 0) return false;
  std::size_t n = table.ground.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t bit = std::uint32_t{1} << i;
    if ((avail & bit) && table.test((t_mask ^ bit) | u_bit)) return true;
  }
  if (k == 1) return false;
  for (std::uint32_t y = avail; y != 0; y = (y - 1) & avail) {
    if (popcount(y) <= k && table.test((t_mask ^ y) | u_bit)) return true;
  }
  return false;
}

}  // namespace

std::optional<ExtendibilityWitness> find_extendibility_violation(
    const IndependenceSystem& sys, ElementSpan ground, int k) {
  if (k < 0) throw_contract("extendibility parameter must be nonnegative");
  IndependenceTable table = build_independence_table(sys, ground, kCheckerCap);
  std::size_t n = ground.size();
  for (std::uint32_t t_mask = 0; t_mask < (std::uint32_t{1} << n); ++t_mask) {
    if (!table.test(t_mask)) continue;
    // Walk S over submasks of T, including T itself and the empty set.
    std::uint32_t s_mask = t_mask;
    while (true) {
      if (table.test(s_mask)) {
        for (std::size_t ui = 0; ui < n; ++ui) {
          std::uint32_t u_bit = std::uint32_t{1} << ui;
          if (t_mask & u_bit) continue;
          if (!table.test(s_mask | u_bit)) continue;
          if (!repair_exists(table, t_mask, u_bit, t_mask & ~s_mask, k)) {
            return ExtendibilityWitness{table.members(t_mask), table.members(s_mask),
                                        table.ground[ui]};
          }
        }
      }
      if (s_mask == 0) break;
      s_mask = (s_mask - 1) & t_mask;
    }
  }
  return std::nullopt;
}

bool check_k_extendible(const IndependenceSystem& sys, ElementSpan ground, int k) {
  return !find_extendibility_violation(sys, ground, k).has_value();
}

std::optional<SetSystemWitness> find_set_system_violation(
    const IndependenceSystem& sys, ElementSpan ground, int k) {
  if (k < 1) throw_contract("set system parameter must be >= 1");
  IndependenceTable table = build_independence_table(sys, ground, kCheckerCap);
  std::size_t n = ground.size();
  for (std::uint32_t s_mask = 0; s_mask < (std::uint32_t{1} << n); ++s_mask) {
    int min_size = -1, max_size = -1;
    std::uint32_t min_mask = 0, max_mask = 0;
    // Bases of the restriction to S: independent subsets of S that no
    // element of S extends.
    std::uint32_t b_mask = s_mask;
    while (true) {
      if (table.test(b_mask)) {
        bool maximal = true;
        for (std::size_t i = 0; i < n && maximal; ++i) {
          std::uint32_t bit = std::uint32_t{1} << i;
          if ((s_mask & bit) && !(b_mask & bit) && table.test(b_mask | bit)) {
            maximal = false;
          }
        }
        if (maximal) {
          int size = popcount(b_mask);
          if (min_size < 0 || size < min_size) {
            min_size = size;
            min_mask = b_mask;
          }
          if (size > max_size) {
            max_size = size;
            max_mask = b_mask;
          }
        }
      }
      if (b_mask == 0) break;
      b_mask = (b_mask - 1) & s_mask;
    }
    if (min_size >= 0 && max_size > k * min_size) {
      return SetSystemWitness{table.members(s_mask), table.members(min_mask),
                              table.members(max_mask)};
    }
  }
  return std::nullopt;
}

bool check_k_set_system(const IndependenceSystem& sys, ElementSpan ground, int k) {
  return !find_set_system_violation(sys, ground, k).has_value();
}

int min_extendibility(const IndependenceSystem& sys, ElementSpan ground) {
  if (static_cast<int>(ground.size()) > kSweepCap) {
    throw_size("min_extendibility sweep caps at " + std::to_string(kSweepCap) +
               " elements, got " + std::to_string(ground.size()));
  }
  int n = static_cast<int>(ground.size());
  for (int k = 1; k < n; ++k) {
    if (check_k_extendible(sys, ground, k)) return k;
  }
  // Any independence system on n elements is n-extendible: Y = T \ S always
  // repairs, since S + u is independent by assumption.
  return n < 1 ? 1 : n;
}

}  // namespace kxs
