// Independent reference implementations used by the unit and acceptance
// suites.  Everything here is deliberately naive (direct loops, 256-bit
// fixed point, trial division) and shares no code path with the library
// routines it cross-checks, beyond the public FixedReal/surd primitives.

#pragma once

#include <complex>
#include <cstdint>

#include <pla/counting.hpp>
#include <pla/fixed_real.hpp>
#include <pla/quadratic.hpp>

namespace oracles {

inline constexpr int kOracleBits = 256;

bool trial_prime(std::uint64_t n);

// Naive double-loop recount of the simultaneous inequality solutions at
// 256-bit precision: for every prime p < N scan all integer candidates for
// r and q and test the strict inequalities directly.
std::uint64_t count_f_n_naive(const pla::FixedReal& alpha, const pla::QuadraticIrrational& c,
                              double eps, std::uint64_t N);

// Strict inequality recheck for one reported triple at doubled precision.
bool triple_ok(const pla::ApproxTriple& t, const pla::FixedReal& alpha,
               const pla::QuadraticIrrational& c, double eps);

// Per-term evaluation of sum e(h c n) Lambda(n) with 256-bit phase reduction
// and trial-division von Mangoldt.
std::complex<double> prime_exp_sum_naive(std::uint64_t h, const pla::QuadraticIrrational& c,
                                         std::uint64_t lo, std::uint64_t hi);

// max over w in [wmin, kmax] of |sum_{k=w}^{kmax} e(theta k)| by direct
// complex suffix accumulation, theta = frac(h c l) at 256 bits.
double z1_stratum_naive(std::uint64_t h, std::uint64_t l, const pla::QuadraticIrrational& c,
                        std::uint64_t wmin, std::uint64_t kmax);

// Monte-Carlo estimate of the measure of the union of intersection intervals
// for one p; returns (estimate, stderr).
std::pair<double, double> measure_b_p_mc(std::uint64_t p, double a, double b, double c, double eta,
                                         std::uint64_t samples, std::uint64_t seed);

// 256-bit recount of the congruence-constrained fractional-part count.
std::uint64_t count_sieve_s_naive(const pla::FixedReal& alpha, const pla::QuadraticIrrational& c,
                                  std::uint64_t N, double window, std::uint64_t d1,
                                  std::uint64_t d2, std::uint64_t d3);

// Direct double loop for the Fourier error term (no closed forms anywhere).
double e_term_naive(const pla::FixedReal& alpha, const pla::QuadraticIrrational& c,
                    std::uint64_t N, double window, std::uint64_t d1, std::uint64_t d2,
                    std::uint64_t d3);

// Midpoint Riemann sum for int_A^B min(K, ||alpha x||^{-1}) d alpha.
double riemann_min_integral(double A, double B, double K, double x, std::uint64_t points);

// T(P) window sum recomputed with 256-bit fractional parts.
double t_p_naive(std::uint64_t P, double a, double b, double delta,
                 const pla::QuadraticIrrational& c);

// Triple loop over (q, p, r) for the block solution count N(P).
std::uint64_t n_p_triple_loop(std::uint64_t P, double a, double b, double delta, double mu,
                              const pla::QuadraticIrrational& c);

}  // namespace oracles
