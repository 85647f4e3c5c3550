// Exact arithmetic in Q(sqrt(d)).
//
// QuadraticIrrational holds (u + v*sqrt(d))/w with big-integer coefficients,
// d squarefree >= 2, normalized so that w > 0 and gcd(u, v, w) = 1.  Every
// comparison and floor below is computed exactly; no floating point enters
// until an explicit conversion is requested.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pla/fixed_real.hpp"

namespace pla {

class QuadraticIrrational {
 public:
  // Validates d (squarefree, >= 2), v != 0, w != 0 and normalizes.
  QuadraticIrrational(BigInt u, BigInt v, BigInt d, BigInt w);

  const BigInt& u() const { return u_; }
  const BigInt& v() const { return v_; }
  const BigInt& d() const { return d_; }
  const BigInt& w() const { return w_; }

  bool is_rational() const { return v_ == 0; }

  // Sign of the value: -1, 0, +1.  Exact.
  int sign() const;

  QuadraticIrrational operator-() const;
  QuadraticIrrational operator+(const QuadraticIrrational& o) const;  // same d required
  QuadraticIrrational operator-(const QuadraticIrrational& o) const;
  QuadraticIrrational operator*(const QuadraticIrrational& o) const;

  QuadraticIrrational add_rational(const BigInt& p, const BigInt& q) const;
  QuadraticIrrational mul_int(const BigInt& n) const;
  QuadraticIrrational div_int(const BigInt& n) const;

  // Exact comparison with p/q (q > 0): sign of (value - p/q).
  int compare_rational(const BigInt& p, const BigInt& q) const;

  BigInt floor() const;
  // floor(value * 2^fbits) / 2^fbits; error < 2^-fbits, computed exactly.
  FixedReal to_fixed(int fbits = kDefaultFracBits) const;
  double to_double() const;

  std::string str() const;  // "(u+v*sqrt(d))/w"

  // Accepts "(u+v*sqrt(d))/w" and relaxed variants like "sqrt(2)", "sqrt2",
  // "1+sqrt3", "(1+sqrt(5))/2", plus the named constants "sqrt2", "golden",
  // "1+sqrt3".  Throws std::invalid_argument on anything else.
  static QuadraticIrrational parse(std::string_view text);

 private:
  struct raw_tag {};
  QuadraticIrrational(raw_tag, BigInt u, BigInt v, BigInt d, BigInt w);
  void normalize();

  BigInt u_, v_, d_, w_;
};

// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_squarefree_u64(std::uint64_t n);

}  // namespace pla
