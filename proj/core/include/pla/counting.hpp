// Counters for the simultaneous approximation inequalities
//
//   0 < p*alpha - r < p^(-1/5+eps)   (r prime)
//   0 < p*c*alpha - q < p^(-1/5+eps) (q integer)
//
// over primes p < N, together with the block counters T(P), S(P), R(P), N(P)
// and the two routes for integrating the solution count over alpha.
//
// Boundary handling: alpha is an exact fixed-point value and the threshold is
// an exact dyadic rational, so the r-side comparisons are exact integer
// comparisons.  The q-side involves c*alpha; candidates are located in 128-bit
// arithmetic and every reported solution is certified by exact sign tests on
// the quadratic surd, so no epsilon fudge exists anywhere.

#pragma once

#include <cstdint>
#include <vector>

#include "pla/fixed_real.hpp"
#include "pla/primes.hpp"
#include "pla/quadratic.hpp"

namespace pla {

// The window width p^(-1/5+eps), evaluated in double precision.  Both the
// counter and any recount oracle must use this same value; it is part of the
// operation's definition.
double approx_threshold(std::uint64_t p, double eps);

struct ApproxTriple {
  std::uint64_t p = 0;
  std::int64_t q = 0;
  std::uint64_t r = 0;
  double slack1 = 0.0;  // p*alpha - r, in (0, p^(-1/5+eps))
  double slack2 = 0.0;  // p*c*alpha - q, same window
};

struct CountFNResult {
  std::uint64_t count = 0;
  std::vector<ApproxTriple> triples;
  bool c_above_one = true;  // the hypothesis c > 1; counting proceeds either way
};

// Exact enumeration over primes p < N.  r_primes, when given, must cover
// [2, floor(N*alpha)+1] and saves re-sieving across calls.
CountFNResult count_f_n(const FixedReal& alpha, const QuadraticIrrational& c, double eps,
                        std::uint64_t N, const PrimeTable* r_primes = nullptr);

// (A^2 / 4B) * N^(3/5+eps) * (log N)^-2.  Requires 0 < A < B and N >= 3.
double g_n(double A, double B, double eps, std::uint64_t N);

// Exact Lebesgue measure of the union over (r prime, q integer) of
// [r/p,(r+eta)/p) n [q/(cp),(q+eta)/(cp)) n [a,b]; the union is disjoint for
// eta < 1 so the pairwise intersection lengths just add up.
double measure_b_p(std::uint64_t p, double a, double b, double c, double eta);

struct BlockParams {
  std::uint64_t P = 0;
  double a = 0.0, b = 0.0;
  double eps = 0.0;
  double mu = 0.0;     // (a+b)/(2a)
  double eta = 0.0;    // (mu P)^(-1/5+eps/2)
  double delta = 0.0;  // c*eta/2
  double nu = 0.0;     // (mu P)^(-6/5+eps/2) * min(1/2, 1/c)
  double c_value = 0.0;

  BlockParams(std::uint64_t P_, double a_, double b_, double eps_, double c_value_);
};

// Number of integers in [x, x+delta) for non-integer x given as a 128-bit
// fraction; equals floor(frac(x) + delta).
std::uint64_t window_count(const Frac128& frac_x, double delta);

struct WeightedWindowSum {
  double value = 0.0;
  double main_term = 0.0;
};

// T(P) = sum over the block of ([-cn] - [-(cn+delta)]) Lambda(n); the
// companion main term is delta*(b - a*mu)*P.
WeightedWindowSum count_t_p(const BlockParams& params, const QuadraticIrrational& c);

struct PrimeWindowSum {
  std::uint64_t value = 0;
  double main_term = 0.0;
};

// S(P): same window counted over primes r only (unit weights); main term
// delta*(b - a*mu)*P / log P.
PrimeWindowSum count_s_p(const BlockParams& params, const QuadraticIrrational& c);

struct PrimeRangeCount {
  std::uint64_t value = 0;
  double asymptote = 0.0;  // (mu - 1) P / log P
};

// R(P): primes in [P, mu P).
PrimeRangeCount count_r_p(const BlockParams& params);

// N(P) = R(P) * S(P); the p-conditions and (q,r)-conditions are independent.
std::uint64_t count_n_p(const BlockParams& params, const QuadraticIrrational& c);

struct IntegralFN {
  double mc_estimate = 0.0;
  double mc_stderr = 0.0;
  double exact_sum = 0.0;  // sum over p < N of measure_b_p with eta = threshold(p)
  std::uint64_t samples = 0;
};

// Monte-Carlo integral of the solution count over alpha in [a, b] (seeded,
// reproducible) next to the exact interval-measure route.  The sample loop
// fans out over `threads` workers; results are merged in sample order, so
// the outcome does not depend on the worker count.
IntegralFN integral_f_n(double a, double b, const QuadraticIrrational& c, double eps,
                        std::uint64_t N, std::uint64_t n_samples, std::uint64_t seed,
                        int threads = 1);

}  // namespace pla
