#include <doctest.h>

#include <cmath>

#include <pla/counting.hpp>
#include <pla/expsum.hpp>
#include <pla/rng.hpp>

#include "oracles.hpp"

using pla::BlockParams;
using pla::FixedReal;
using pla::QuadraticIrrational;

namespace {
const QuadraticIrrational kSqrt2{0, 1, 2, 1};
}

TEST_CASE("count is zero below the first prime") {
  auto r = pla::count_f_n(FixedReal::from_decimal("1.3"), kSqrt2, 0.15, 2);
  CHECK(r.count == 0);
  CHECK(r.triples.empty());
}

TEST_CASE("count is monotone in the window exponent") {
  FixedReal alpha = FixedReal::from_decimal("1.31");
  auto lo = pla::count_f_n(alpha, kSqrt2, 0.05, 2000);
  auto hi = pla::count_f_n(alpha, kSqrt2, 0.15, 2000);
  CHECK(hi.count >= lo.count);
}

TEST_CASE("count matches the naive 256-bit oracle and triples verify") {
  pla::SplitMix64 rng(43);
  for (int i = 0; i < 6; ++i) {
    FixedReal alpha = FixedReal::from_double(1.0 + rng.uniform01(), 128);
    double eps = 0.05 + 0.12 * rng.uniform01();
    std::uint64_t N = 200 + rng.next() % 1800;
    auto got = pla::count_f_n(alpha, kSqrt2, eps, N);
    CHECK(got.count == oracles::count_f_n_naive(alpha, kSqrt2, eps, N));
    CHECK(got.count == got.triples.size());  // the window admits one (r,q) pair per p here
    for (const auto& t : got.triples) CHECK(oracles::triple_ok(t, alpha, kSqrt2, eps));
  }
}

TEST_CASE("c below the theorem hypothesis is flagged, not rejected") {
  QuadraticIrrational small{0, 1, 2, 2};  // sqrt(2)/2 < 1
  auto r = pla::count_f_n(FixedReal::from_decimal("1.3"), small, 0.1, 100);
  CHECK_FALSE(r.c_above_one);
  auto ok = pla::count_f_n(FixedReal::from_decimal("1.3"), kSqrt2, 0.1, 100);
  CHECK(ok.c_above_one);
}

TEST_CASE("g_n formula and argument errors") {
  CHECK_THROWS_AS(pla::g_n(2.0, 2.0, 0.1, 100), std::invalid_argument);  // A = B
  CHECK_THROWS_AS(pla::g_n(1.0, 2.0, 0.1, 2), std::invalid_argument);    // N < 3
  double logN = std::log(144.0);
  CHECK(pla::g_n(1.0, 2.0, 0.1, 144) ==
        doctest::Approx(0.125 * std::pow(144.0, 0.7) / (logN * logN)));
}

TEST_CASE("measure_b_p interval algebra") {
  // nested intervals: measure of one (r,q) cell is at most eta/(c p)
  double c = kSqrt2.to_double();
  double m = pla::measure_b_p(97, 1.0, 2.0, c, 0.2);
  CHECK(m >= 0.0);
  CHECK(m <= 1.0);  // never exceeds b - a
  // count contributing primes for the sharper cap
  std::uint64_t contributing = 0;
  for (std::uint64_t r = 97; r <= 2 * 97 + 1; ++r)
    if (oracles::trial_prime(r))
      ++contributing;
  CHECK(m <= static_cast<double>(contributing) * 0.2 / (c * 97.0));
}

TEST_CASE("measure_b_p agrees with Monte Carlo within three sigma") {
  double c = kSqrt2.to_double();
  double exact = pla::measure_b_p(97, 1.0, 2.0, c, 0.2);
  auto [est, se] = oracles::measure_b_p_mc(97, 1.0, 2.0, c, 0.2, 10000000, 4242);
  CHECK(std::fabs(exact - est) <= 3.0 * se);
}

TEST_CASE("block parameters and their invariants") {
  BlockParams bp(100000, 1.0, 2.0, 0.1, kSqrt2.to_double());
  CHECK(bp.mu == doctest::Approx(1.5));
  CHECK(bp.eta == doctest::Approx(std::pow(150000.0, -0.15)));
  CHECK(bp.delta == doctest::Approx(kSqrt2.to_double() * bp.eta / 2.0));
  CHECK(bp.nu ==
        doctest::Approx(std::pow(150000.0, -1.15) * std::min(0.5, 1.0 / kSqrt2.to_double())));
  CHECK(bp.mu > 1.0);
  CHECK(bp.nu > 0.0);
  CHECK_THROWS_AS(BlockParams(100, 2.0, 1.0, 0.1, 1.4), std::invalid_argument);
}

TEST_CASE("window_count handles windows above one") {
  pla::SplitMix64 rng(47);
  for (int i = 0; i < 300; ++i) {
    FixedReal x = pla::random_unit_fixed(rng, 128);
    double delta = rng.uniform01() * 3.0;
    auto w = pla::window_count(x.frac128(), delta);
    CHECK(w >= static_cast<std::uint64_t>(std::floor(delta)));
    CHECK(w <= static_cast<std::uint64_t>(std::ceil(delta)));
    // reference: floor(frac + delta)
    double ref = std::floor(x.to_double() + delta);
    CHECK(std::fabs(static_cast<double>(w) - ref) <= 1.0);  // fp reference is itself fuzzy
  }
  CHECK(pla::window_count(pla::Frac128{0, 0}, 0.0) == 0);
}

TEST_CASE("windowed Lambda sum: zero window gives zero and the oracle agrees") {
  BlockParams bp(300, 1.0, 2.0, 0.1, kSqrt2.to_double());
  auto zero = bp;
  zero.delta = 0.0;
  CHECK(pla::count_t_p(zero, kSqrt2).value == 0.0);

  auto got = pla::count_t_p(bp, kSqrt2);
  double want = oracles::t_p_naive(300, 1.0, 2.0, bp.delta, kSqrt2);
  CHECK(got.value == doctest::Approx(want).epsilon(1e-10));
  CHECK(got.main_term == doctest::Approx(bp.delta * (2.0 - 1.5) * 300.0));
}

TEST_CASE("window width >= 1 forces at least floor(delta) per term") {
  BlockParams bp(50, 1.0, 2.0, 0.1, kSqrt2.to_double());
  auto wide = bp;
  wide.delta = 1.7;
  auto s = pla::count_s_p(wide, kSqrt2);
  auto [lo, hi] = pla::block_range(50, 1.0, 2.0, bp.mu);
  std::uint64_t primes = 0;
  for (std::uint64_t r = lo; r <= hi; ++r)
    if (oracles::trial_prime(r))
      ++primes;
  CHECK(s.value >= primes * 1);
  CHECK(s.value <= primes * 2);
}

TEST_CASE("prime block count R(P)") {
  BlockParams ten(10, 1.0, 2.0, 0.1, 1.5);  // mu = 1.5: primes in [10, 15)
  CHECK(pla::count_r_p(ten).value == 2);
  BlockParams two(2, 1.0, 3.0, 0.1, 1.5);  // mu = 2: primes in [2, 4)
  CHECK(pla::count_r_p(two).value == 2);
  BlockParams big(1000000, 1.0, 2.0, 0.1, 1.5);
  auto r = pla::count_r_p(big);
  std::uint64_t want = pla::sieve_primes(1000000, 1499999).count();
  CHECK(r.value == want);
  CHECK(r.asymptote == doctest::Approx(0.5 * 1000000.0 / std::log(1000000.0)));
}

TEST_CASE("N(P) equals R(P) * S(P) and the triple loop confirms it") {
  pla::SplitMix64 rng(53);
  for (int i = 0; i < 3; ++i) {
    std::uint64_t P = 40 + rng.next() % 160;
    BlockParams bp(P, 1.0, 2.0, 0.12, kSqrt2.to_double());
    std::uint64_t got = pla::count_n_p(bp, kSqrt2);
    CHECK(got == pla::count_r_p(bp).value * pla::count_s_p(bp, kSqrt2).value);
    CHECK(got == oracles::n_p_triple_loop(P, 1.0, 2.0, bp.delta, bp.mu, kSqrt2));
  }
}

TEST_CASE("integral routes agree within three combined sigma") {
  auto r = pla::integral_f_n(1.2, 1.8, kSqrt2, 0.1, 144, 400, 99, 2);
  CHECK(std::fabs(r.mc_estimate - r.exact_sum) <= 3.0 * std::max(r.mc_stderr, 1e-12));
  CHECK(r.exact_sum > 0.0);

  auto degenerate = pla::integral_f_n(1.2, 1.8, kSqrt2, 0.1, 2, 10, 1);
  CHECK(degenerate.mc_estimate == 0.0);
  CHECK(degenerate.exact_sum == 0.0);
  CHECK_THROWS_AS(pla::integral_f_n(1.2, 1.8, kSqrt2, 0.1, 144, 5, 1), std::invalid_argument);
}
