// Congruence-constrained fractional-part counts and their Fourier error
// terms, the resonance minimum over rational shifts, and the capped-integrand
// integral estimate used to average those error terms over alpha.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pla/continued_fraction.hpp"
#include "pla/expsum.hpp"
#include "pla/fixed_real.hpp"
#include "pla/quadratic.hpp"

namespace pla {

// The window N^(eps - 1/5), in (0, 1).  Requires N >= 2 and 0 < eps < 1/5.
double window_mu(std::uint64_t N, double eps);

struct SieveCell {
  std::uint64_t d1 = 1, d2 = 1, d3 = 1;
  std::uint64_t N = 0;
  double window = 0.0;
  std::uint64_t count = 0;
  double main_term = 0.0;  // N * window^2 / (d1 d2 d3)
  double error_observed = 0.0;
};

// Exact count of n with 1 <= n <= N/d1, {n d1 alpha / d2} < window/d2 and
// {n d1 c alpha / d3} < window/d3 (fixed-point fractional parts).
std::uint64_t count_sieve_s(const FixedReal& alpha, const QuadraticIrrational& c, std::uint64_t N,
                            double window, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3);

// Truncation length L = D^4 / window with D = N^eps; window = N^(eps-1/5)
// makes this window^3 * N^(4/5), so no separate eps argument is needed.
std::uint64_t fourier_cutoff_l(std::uint64_t N, double window);

// E(alpha; d1,d2,d3) = window^2/(d2 d3) * sum over (m1,m2) in [-L,L]^2,
// (m1,m2) != (0,0), of |sum_{1<=n<=N/d1} e(n d1 (alpha m1/d2 + c alpha m2/d3))|.
// Inner geometric sums in closed form with exact fallback near resonance.
double e_term(const FixedReal& alpha, const QuadraticIrrational& c, std::uint64_t N, double window,
              std::uint64_t d1, std::uint64_t d2, std::uint64_t d3);

// R(m2) = min over integers m of |m/d2 + c m2/d3| = ||d2 c m2 / d3|| / d2.
// Throws for m2 = 0 (the minimum would be 0).
double resonance_r(std::int64_t m2, std::uint64_t d2, std::uint64_t d3,
                   const QuadraticIrrational& c);

// Quadrature of int_A^B min(K, ||alpha x||^{-1}) d alpha against the
// reference bound min(K, max(1, 1/|x|) log K).  Adaptive; cells are split at
// the singular points alpha = m/x and refined until each contributes less
// than 1e-8 * K.
BoundDiagnostic integral_min_check(double A, double B, double K, double x);

struct JnAverage {
  double raw = 0.0;         // Monte-Carlo estimate of the cell-summed integral
  double normalized = 0.0;  // raw / (window^2 N / log^3 N)
  double stderr_norm = 0.0;
  std::uint64_t cells = 0;
  std::uint64_t samples = 0;
};

// Monte-Carlo average over alpha ~ U(A,B) of sum over cells d1 d2 d3 <= D of
// (d1 d2 d3)^eps E(alpha; d1,d2,d3).  N must belong to the squared-denominator
// sequence of c.  Samples fan out over `threads` workers and merge in order.
JnAverage j_n_average(const QuadraticIrrational& c, std::uint64_t N, double eps,
                      std::uint64_t alpha_samples, std::uint64_t seed, double A, double B,
                      int threads = 1);

// All (d1,d2,d3) with d1*d2*d3 <= bound, lexicographic.
std::vector<std::array<std::uint64_t, 3>> sieve_cells(std::uint64_t bound);

}  // namespace pla
