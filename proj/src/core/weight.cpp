#include "core/weight.hpp"

#include "core/error.hpp"

#include <cctype>
#include <cstdlib>

namespace kxs {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  return BigInt(std::string(s));
}

}  // namespace

Weight Weight::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw_parse("empty weight literal: \"" + std::string(text) + "\"");

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw_parse("malformed fraction weight: \"" + std::string(text) + "\"");
    }
    BigInt d = parse_digits(den);
    if (d.is_zero()) throw_parse("zero denominator in weight: \"" + std::string(text) + "\"");
    BigRat v(parse_digits(num), d);
    if (negative) v = -v;
    return Weight(v);
  }

  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) throw_parse("malformed weight: \"" + std::string(text) + "\"");
    BigRat v(parse_digits(s));
    if (negative) v = -v;
    return Weight(v);
  }

  std::string_view ip = s.substr(0, dot);
  std::string_view fp = s.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw_parse("malformed weight: \"" + std::string(text) + "\"");
  if (!ip.empty() && !all_digits(ip)) throw_parse("malformed weight: \"" + std::string(text) + "\"");
  if (!fp.empty() && !all_digits(fp)) throw_parse("malformed weight: \"" + std::string(text) + "\"");

  BigInt scaled = ip.empty() ? BigInt(0) : parse_digits(ip);
  BigInt den(1);
  for (char c : fp) {
    scaled *= 10;
    scaled += (c - '0');
    den *= 10;
  }
  BigRat v(scaled, den);
  if (negative) v = -v;
  return Weight(v);
}

Weight Weight::from_fraction(BigInt num, BigInt den) {
  if (den.is_zero()) throw_contract("weight with zero denominator");
  return Weight(BigRat(std::move(num), std::move(den)));
}

Weight Weight::pow2(long long e) {
  BigInt one(1);
  if (e >= 0) return Weight(BigRat(one << static_cast<unsigned>(e)));
  return Weight(BigRat(one, one << static_cast<unsigned>(-e)));
}

Weight Weight::kpow(int k, long long e) {
  return pow2(static_cast<long long>(log2_exact(k)) * e);
}

Weight Weight::operator/(const Weight& o) const {
  if (o.is_zero()) throw_contract("division of a weight by zero");
  return Weight(v_ / o.v_);
}

long long Weight::floor_log2() const {
  if (v_ <= 0) throw_contract("floor_log2 requires a positive weight");
  BigInt p = numerator();
  BigInt q = denominator();
  // Bit lengths pin the ratio into 2^(c-1) < p/q < 2^(c+1), so the floor is
  // either c or c - 1; one exact cross-multiplied comparison settles it.
  long long c = static_cast<long long>(mp::msb(p)) - static_cast<long long>(mp::msb(q));
  bool ge_c;
  if (c >= 0) {
    ge_c = p >= (q << static_cast<unsigned>(c));
  } else {
    ge_c = (p << static_cast<unsigned>(-c)) >= q;
  }
  return ge_c ? c : c - 1;
}

std::string Weight::str() const {
  BigInt p = numerator();
  BigInt q = denominator();
  bool negative = p < 0;
  if (negative) p = -p;

  long long twos = 0, fives = 0;
  BigInt rest = q;
  while (!rest.is_zero() && (rest & 1) == 0) {
    rest >>= 1;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    std::string out = negative ? "-" : "";
    out += p.str();
    out += "/";
    out += q.str();
    return out;
  }

  long long places = std::max(twos, fives);
  for (long long i = twos; i < places; ++i) p <<= 1;
  for (long long i = fives; i < places; ++i) p *= 5;

  std::string digits = p.str();
  std::string out = negative ? "-" : "";
  if (places == 0) {
    out += digits;
    return out;
  }
  if (static_cast<long long>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  }
  std::string ip = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  std::string fp = digits.substr(digits.size() - static_cast<std::size_t>(places));
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  out += ip;
  if (!fp.empty()) {
    out += ".";
    out += fp;
  }
  return out;
}

int log2_exact(int k) {
  if (k < 2 || (k & (k - 1)) != 0) {
    throw_contract("expected a power of two >= 2, got " + std::to_string(k));
  }
  int e = 0;
  while ((1 << e) < k) ++e;
  return e;
}

}  // namespace kxs
