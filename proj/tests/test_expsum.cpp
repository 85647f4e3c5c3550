#include <doctest.h>

#include <cmath>

#include <pla/arith.hpp>
#include <pla/expsum.hpp>
#include <pla/rng.hpp>
#include <pla/vaughan.hpp>

#include "oracles.hpp"

using pla::QuadraticIrrational;

namespace {
const QuadraticIrrational kSqrt2{0, 1, 2, 1};
const QuadraticIrrational kGolden{1, 1, 5, 2};
}  // namespace

TEST_CASE("prime_exp_sum: two prime powers by hand") {
  // range (24,28) contains 25 = 5^2 and 27 = 3^3
  for (std::uint64_t h : {1ull, 3ull, 17ull}) {
    auto got = pla::prime_exp_sum(h, kSqrt2, 25, 27);
    auto f = kSqrt2.to_fixed(128);
    auto phase = [&](std::uint64_t n) {
      double ang = 2.0 * M_PI * f.mul_nat(h).mul_nat(n).frac().to_double();
      return std::complex<double>(std::cos(ang), std::sin(ang));
    };
    auto want = std::log(5.0) * phase(25) + std::log(3.0) * phase(27);
    CHECK(std::abs(got - want) < 1e-12);
  }
}

TEST_CASE("prime_exp_sum at h = 0 is the Chebyshev sum") {
  auto got = pla::prime_exp_sum(0, kSqrt2, 1, 100);
  double want = 0.0;
  for (std::uint64_t n = 1; n <= 100; ++n) want += pla::von_mangoldt(n);
  CHECK(got.imag() == 0.0);
  CHECK(got.real() == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("prime_exp_sum against the 256-bit per-term oracle") {
  auto got = pla::prime_exp_sum(3, kSqrt2, 100, 10000);
  auto want = oracles::prime_exp_sum_naive(3, kSqrt2, 100, 10000);
  CHECK(std::abs(got - want) < 1e-8);
}

TEST_CASE("zh_sum: empty range flags and returns zero") {
  auto r = pla::zh_sum(1, kSqrt2, 1, 1.0, 2.0, 1.5);  // lo = 2 > hi = 2? no: P=1 -> lo=2,hi=2
  auto r2 = pla::zh_sum(2, kSqrt2, 3, 3.0, 2.0, 2.0);  // lo = 18 > hi = 6
  CHECK(r2.empty_range);
  CHECK(r2.magnitude == 0.0);
  static_cast<void>(r);
}

TEST_CASE("zh_sum equals the direct double loop at small P") {
  std::uint64_t H = 1, P = 60;
  double a = 1.0, b = 2.0, mu = 1.5;
  auto r = pla::zh_sum(H, kSqrt2, P, a, b, mu);
  double want = 0.0;
  for (std::uint64_t h = H; h <= 2 * H; ++h)
    want += std::abs(oracles::prime_exp_sum_naive(h, kSqrt2, 90, 120));
  CHECK(r.magnitude == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("z1_sum: single stratum against the naive suffix maximum") {
  std::uint64_t P = 500;
  double a = 1.0, b = 2.0, mu = 1.5;
  auto r = pla::z1_sum(1, kSqrt2, P, a, b, mu, 1);
  double want = 0.0;
  for (std::uint64_t h = 1; h <= 2; ++h)
    want += oracles::z1_stratum_naive(h, 1, kSqrt2, 750, 1000);
  CHECK(r.magnitude == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("z1 closed form equals naive summation on random strata") {
  pla::SplitMix64 rng(41);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t h = 1 + rng.next() % 40;
    std::uint64_t l = 1 + rng.next() % 300;
    std::uint64_t wmin = 50 + rng.next() % 100;
    std::uint64_t kmax = wmin + 1 + rng.next() % 400;
    // library value via a one-stratum call shape: reuse the internal path by
    // computing through z1_sum with U=1 is not possible for arbitrary l, so
    // compare the building block directly.
    pla::FixedReal cf = kSqrt2.to_fixed(128);
    pla::Frac128 theta = cf.frac128().mul_u64(h * l);
    double dist = theta.dist_to_int();
    double best = 0.0;
    pla::Frac128 t{};
    for (std::uint64_t m = 1; m <= kmax + 1 - wmin; ++m) {
      t += theta;
      best = std::max(best, t.dist_to_int());
    }
    double closed = std::sin(M_PI * best) / std::sin(M_PI * dist);
    double naive = oracles::z1_stratum_naive(h, l, kSqrt2, wmin, kmax);
    CHECK(closed == doctest::Approx(naive).epsilon(1e-8));
  }
}

TEST_CASE("z1 per-stratum values obey min(P/l, ||h c l||^{-1}) for a=1,b=2") {
  std::uint64_t P = 400;
  double a = 1.0, b = 2.0, mu = 1.5;
  pla::Frac128 cf = kSqrt2.to_fixed(128).frac128();
  for (std::uint64_t h = 1; h <= 2; ++h) {
    for (std::uint64_t l = 1; l <= 9; ++l) {
      auto kmax = static_cast<std::uint64_t>(std::floor(b * P / static_cast<double>(l)));
      auto wmin = static_cast<std::uint64_t>(std::ceil(a * mu * P / static_cast<double>(l)));
      double naive = oracles::z1_stratum_naive(h, l, kSqrt2, wmin, kmax);
      double dist = cf.mul_u64(h * l).dist_to_int();
      CHECK(naive <= std::min(static_cast<double>(P) / l + 1.0, 1.0 / dist) + 1e-9);
    }
  }
}

TEST_CASE("z2 and zhk equal a naive triple loop at small parameters") {
  std::uint64_t H = 1, P = 200, U = 5;
  double a = 1.0, b = 2.0, mu = 1.5;
  auto z2 = pla::z2_sum(H, kSqrt2, P, a, b, mu, U);

  auto f256 = kSqrt2.to_fixed(256);
  auto phase = [&](std::uint64_t h, std::uint64_t m, std::uint64_t k) {
    double ang = 2.0 * M_PI * f256.mul_nat(h).mul_nat(m).mul_nat(k).frac().to_double();
    return std::complex<double>(std::cos(ang), std::sin(ang));
  };
  double want = 0.0;
  for (std::uint64_t h = H; h <= 2 * H; ++h) {
    std::complex<double> acc{};
    for (std::uint64_t m = U + 1; m <= static_cast<std::uint64_t>(b * P / U); ++m) {
      double lam = pla::von_mangoldt(m);
      if (lam == 0.0)
        continue;
      auto k_lo = static_cast<std::uint64_t>(std::ceil(a * mu * P / static_cast<double>(m)));
      auto k_hi = static_cast<std::uint64_t>(std::floor(b * P / static_cast<double>(m)));
      for (std::uint64_t k = std::max(k_lo, U + 1); k <= k_hi; ++k)
        acc += lam * static_cast<double>(pla::vaughan_b(k, U)) * phase(h, m, k);
    }
    want += std::abs(acc);
  }
  CHECK(z2.magnitude == doctest::Approx(want).epsilon(1e-8));

  // dyadic block sanity: Z2 <= (number of blocks) * max_K Z(H,K)
  auto k_cap = static_cast<std::uint64_t>(std::floor(b * P / static_cast<double>(U)));
  auto blocks = pla::dyadic_blocks(U, k_cap);
  CHECK(!blocks.empty());
  double zmax = 0.0, zsum = 0.0;
  for (const auto& [K, K2] : blocks) {
    auto zk = pla::zhk_sum(H, K, kSqrt2, P, a, b, mu, U);
    zmax = std::max(zmax, zk.magnitude);
    zsum += zk.magnitude;
  }
  CHECK(z2.magnitude <= static_cast<double>(blocks.size()) * zmax * (1.0 + 1e-9));
  CHECK(z2.magnitude <= zsum * (1.0 + 1e-9));
}

TEST_CASE("r_c_sum closed cases and oracle equality") {
  // L=1: ||sqrt2|| = sqrt2 - 1, reciprocal 1 + sqrt2
  CHECK(pla::r_c_sum(kSqrt2, 1, 10.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pla::r_c_sum(kSqrt2, 1, 2.0) == doctest::Approx(2.0));

  double got = pla::r_c_sum(kSqrt2, 1000, 10000.0);
  pla::FixedReal cf = kSqrt2.to_fixed(256);
  double want = 0.0;
  for (std::uint64_t l = 1; l <= 1000; ++l) {
    double dist = pla::dist_nearest_int(cf.mul_nat(l));
    want += std::min(10000.0 / l, 1.0 / dist);
  }
  CHECK(got == doctest::Approx(want).epsilon(1e-9));
  CHECK_THROWS_AS(pla::r_c_sum(kSqrt2, 0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(pla::r_c_sum(kSqrt2, 5, 0.5), std::invalid_argument);
}

TEST_CASE("r_c_bound plug-in value and monotonicity") {
  CHECK(pla::r_c_bound(1, 2.0, 1) == doctest::Approx(4.0 * std::log(4.0)));
  CHECK_THROWS_AS(pla::r_c_bound(1, 2.0, 0), std::invalid_argument);
  double base = pla::r_c_bound(100, 1000.0, 12);
  CHECK(pla::r_c_bound(200, 1000.0, 12) > base);
  CHECK(pla::r_c_bound(100, 2000.0, 12) > base);
}

TEST_CASE("parameter choices round upward") {
  CHECK(pla::choose_j(100000) == 10);
  CHECK(pla::choose_u(100000) == 100);
  CHECK(pla::choose_j(99999) == 10);   // ceil
  CHECK(pla::choose_u(101) == 7);      // 101^0.4 = 6.34...
}

TEST_CASE("both routes to Z(H) stay within a recorded factor") {
  std::uint64_t P = 2000;
  double a = 1.0, b = 2.0, mu = 1.5;
  std::uint64_t H = pla::choose_j(P);
  std::uint64_t U = pla::choose_u(P);
  auto direct = pla::zh_sum(H, kSqrt2, P, a, b, mu);
  auto z1 = pla::z1_sum(H, kSqrt2, P, a, b, mu, U);
  auto z2 = pla::z2_sum(H, kSqrt2, P, a, b, mu, U);
  double split = std::log(static_cast<double>(P)) * z1.magnitude + z2.magnitude;
  CHECK(direct.magnitude > 0.0);
  CHECK(split > 0.0);
  MESSAGE("route ratio (split/direct): " << split / direct.magnitude);
}
