#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace kxs {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational weight. All comparisons, sums and logarithm floors are
// computed over big integers; no floating point is involved anywhere.
class Weight {
 public:
  Weight() : v_(0) {}
  explicit Weight(long long n) : v_(n) {}
  explicit Weight(BigRat v) : v_(std::move(v)) {}

  // Parses "42", "-7", "0.125", "3/16". Decimal fractions and explicit
  // numerator/denominator forms are both exact. Throws a parse error on
  // anything else (exponents, hex, empty strings, stray characters).
  static Weight parse(std::string_view text);

  static Weight from_fraction(BigInt num, BigInt den);

  // 2^e for any integer e, as an exact rational.
  static Weight pow2(long long e);

  // k^e where k is a power of two (k >= 2). Exact for negative e as well.
  static Weight kpow(int k, long long e);

  bool is_zero() const { return v_.is_zero(); }
  bool is_positive() const { return v_ > 0; }

  const BigRat& value() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  // floor(log2 w) for w > 0, computed exactly from the bit lengths of the
  // numerator and denominator plus one big-integer comparison. Throws a
  // contract error for w <= 0.
  long long floor_log2() const;

  // Exact decimal rendering when the denominator is of the form 2^a * 5^b
  // (this covers every weight the algorithms can produce from decimal
  // input), otherwise falls back to "num/den".
  std::string str() const;

  Weight operator+(const Weight& o) const { return Weight(v_ + o.v_); }
  Weight operator-(const Weight& o) const { return Weight(v_ - o.v_); }
  Weight operator*(const Weight& o) const { return Weight(v_ * o.v_); }
  Weight operator/(const Weight& o) const;
  Weight& operator+=(const Weight& o) {
    v_ += o.v_;
    return *this;
  }
  Weight operator*(long long s) const { return Weight(v_ * s); }

  bool operator==(const Weight& o) const { return v_ == o.v_; }
  bool operator!=(const Weight& o) const { return v_ != o.v_; }
  bool operator<(const Weight& o) const { return v_ < o.v_; }
  bool operator<=(const Weight& o) const { return v_ <= o.v_; }
  bool operator>(const Weight& o) const { return v_ > o.v_; }
  bool operator>=(const Weight& o) const { return v_ >= o.v_; }

 private:
  BigRat v_;
};

// floor(a / b) for b > 0, rounding toward minus infinity.
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// a mod b in [0, b) for b > 0.
inline long long floor_mod(long long a, long long b) {
  return a - floor_div(a, b) * b;
}

// log2 of a power of two that fits in an int (2 -> 1, 8 -> 3). Throws a
// contract error if k is not a power of two or is below 2.
int log2_exact(int k);

}  // namespace kxs
