// Exponential sums over primes and their type-I/type-II reductions.
//
// All phases frac(h*c*n) are reduced mod 1 in 128-bit fixed point before any
// trigonometry, so sums over n up to ~1e7 carry no cancellation error from
// the phase accumulation.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pla/quadratic.hpp"

namespace pla {

struct ExpSumParams {
  std::uint64_t H = 0;
  std::uint64_t P = 0;
  std::uint64_t U = 0;
  std::uint64_t K = 0;
  double a = 0.0, b = 0.0, mu = 0.0;
};

struct ExpSumResult {
  double magnitude = 0.0;            // the sum of absolute values (real-valued sums)
  std::complex<double> value{};      // the complex value where one exists
  std::uint64_t n_terms = 0;
  double elapsed_ms = 0.0;
  bool empty_range = false;
  ExpSumParams params{};
};

struct BoundDiagnostic {
  double measured = 0.0;
  double bound_formula_value = 0.0;
  double ratio = 0.0;  // measured / bound_formula_value
};

// sum_{lo<=n<=hi} e(h*c*n) Lambda(n).
std::complex<double> prime_exp_sum(std::uint64_t h, const QuadraticIrrational& c, std::uint64_t lo,
                                   std::uint64_t hi);

// Z(H) = sum_{H<=h<=2H} |sum_{P a mu <= n <= b P} e(h c n) Lambda(n)|.
ExpSumResult zh_sum(std::uint64_t H, const QuadraticIrrational& c, std::uint64_t P, double a,
                    double b, double mu);

// Type-I piece: sum_{H<=h<=2H} sum_{l<=U^2} max_w |sum_{w<=k<=bP/l} e(h c k l)|,
// with w ranging over the integer cut points of [P a mu / l, b P / l].  Each
// inner geometric sum is evaluated in closed form from ||theta||; strata with
// ||theta|| < 1e-9 fall back to exact suffix summation.
ExpSumResult z1_sum(std::uint64_t H, const QuadraticIrrational& c, std::uint64_t P, double a,
                    double b, double mu, std::uint64_t U);

// Type-II piece: sum_{H<=h<=2H} |sum_{U<m<=bP/U} sum_k Lambda(m) b(k) e(h c m k)|,
// k over (max(V, P a mu / m), b P / m] with V = U.
ExpSumResult z2_sum(std::uint64_t H, const QuadraticIrrational& c, std::uint64_t P, double a,
                    double b, double mu, std::uint64_t U);

// One dyadic block: sum_{H<=h<=2H} sum_{K<=k<=2K} |b(k)| |sum_m Lambda(m) e(h c m k)|
// with m over [max(U+1, ceil(P a mu / k)), min(bP/U, bP/k)].
ExpSumResult zhk_sum(std::uint64_t H, std::uint64_t K, const QuadraticIrrational& c,
                     std::uint64_t P, double a, double b, double mu, std::uint64_t U);

// R_c(L, x) = sum_{l<=L} min(x/l, ||l c||^{-1}).
double r_c_sum(const QuadraticIrrational& c, std::uint64_t L, double x);

// (x/q + L + q) * log(2 L q x); the reference bound value with constant 1.
double r_c_bound(std::uint64_t L, double x, std::uint64_t q);

// Parameter choices J = ceil(P^{1/5}) and U = ceil(P^{2/5}).
std::uint64_t choose_j(std::uint64_t P);
std::uint64_t choose_u(std::uint64_t P);

// Dyadic K blocks [2^t U, 2^{t+1} U) clipped to bP/U, as (K, 2K) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> dyadic_blocks(std::uint64_t U,
                                                                   std::uint64_t k_hi);

// Inclusive summation range [ceil(P*a*mu), floor(b*P)]; empty when crossed.
std::pair<std::uint64_t, std::uint64_t> block_range(std::uint64_t P, double a, double b, double mu);

}  // namespace pla
