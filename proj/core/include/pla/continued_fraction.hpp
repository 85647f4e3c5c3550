// Continued fractions of quadratic irrationals, their convergents, and the
// test sequence of squared convergent denominators.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pla/fixed_real.hpp"
#include "pla/quadratic.hpp"

namespace pla {

struct Convergent {
  std::size_t index = 0;     // k, starting at 0
  BigInt a;                  // numerator
  BigInt q;                  // denominator, >= 1
  BigInt partial_quotient;   // a_k of the expansion
};

// First `count` partial quotients a0, a1, ... in exact integer arithmetic
// (the classical P,Q recursion on (P + sqrt(D))/Q).  count >= 1.
std::vector<BigInt> cf_expansion(const QuadraticIrrational& c, std::size_t count);

// Heuristic expansion of an arbitrary fixed-point real by floor/invert.
// Quotients are only trustworthy while fraction bits remain; the returned
// list may be shorter than `count` when precision runs out.
std::vector<BigInt> cf_expansion_heuristic(const FixedReal& x, std::size_t count);

// Convergents a_k/q_k with gcd(a_k, q_k) = 1 and |c - a/q| < 1/q^2.
std::vector<Convergent> convergents(const QuadraticIrrational& c, std::size_t count);

// Exact check of |c - a/q| < 1/q^2 via the sign of (c*q - a)*q -+ 1.
bool convergent_within_q2(const QuadraticIrrational& c, const Convergent& cv);

// Ascending squared denominators q_k^2 <= n_max, duplicates removed
// (q = 1 repeats when the first two partial quotients are 1).
std::vector<std::uint64_t> sequence_S(const QuadraticIrrational& c, std::uint64_t n_max);

// Smallest member of the sequence that is >= x (empty optional if none up to
// the search bound ~x*max(4, a1^2)).
std::optional<std::uint64_t> sequence_S_ceiling(const QuadraticIrrational& c, std::uint64_t x);

struct RationalApprox {
  BigInt a;
  std::uint64_t q = 1;
  FixedReal beta;  // N*(c - a/q), |beta| <= 1 (verified exactly on the surd)
};

// The convergent a/q with q = sqrt(N); N must be a squared convergent
// denominator.  When q = 1 repeats, the later (closer) convergent is used.
RationalApprox rational_approx_at(const QuadraticIrrational& c, std::uint64_t N,
                                  int fbits = kDefaultFracBits);

// A named real constant for the slope: either an exact quadratic irrational
// or a fixed-point value flagged heuristic (e.g. a plain decimal literal).
class RealConstant {
 public:
  static RealConstant parse(std::string_view text, int fbits = kDefaultFracBits);
  static RealConstant from_surd(QuadraticIrrational q);
  static RealConstant from_fixed(FixedReal x, std::string text);

  bool exact() const { return surd_.has_value(); }
  const QuadraticIrrational& surd() const;
  FixedReal to_fixed(int fbits = kDefaultFracBits) const;
  double to_double() const;
  const std::string& text() const { return text_; }

 private:
  std::optional<QuadraticIrrational> surd_;
  FixedReal fixed_;
  std::string text_;
};

}  // namespace pla
