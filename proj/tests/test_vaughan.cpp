#include <doctest.h>

#include <cmath>
#include <complex>

#include <pla/arith.hpp>
#include <pla/quadratic.hpp>
#include <pla/vaughan.hpp>

using pla::vaughan_b;
using pla::VaughanParams;

TEST_CASE("b(k) point values and parameter validation") {
  CHECK(vaughan_b(1, 1) == 1);
  CHECK(vaughan_b(1, 1000) == 1);
  CHECK(vaughan_b(6, 1) == 1);  // only d = 1 admitted
  CHECK_THROWS_AS(vaughan_b(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(VaughanParams(10, 10, 99), std::invalid_argument);  // UV > x
  CHECK_NOTHROW(VaughanParams(10, 10, 100));
}

TEST_CASE("b(k) table matches the divisor scan and is tau-bounded") {
  auto tau = pla::divisor_count_table(10000);
  for (std::uint64_t V : {1ull, 20ull, 100ull}) {
    auto table = pla::vaughan_b_table(10000, V);
    for (std::uint64_t k = 1; k <= 10000; ++k) {
      CHECK(table[k] == vaughan_b(k, V));
      CHECK(static_cast<std::uint64_t>(std::llabs(table[k])) <= tau[k]);
    }
  }
  // b vanishes on (1, V]: every divisor is admitted, so the Moebius sum does
  for (std::uint64_t k = 2; k <= 50; ++k) CHECK(vaughan_b(k, 50) == 0);
}

TEST_CASE("exact identity reconstructs Lambda pointwise") {
  for (std::uint64_t n = 21; n <= 2000; ++n)
    CHECK(std::fabs(pla::vaughan_lambda(n, 20, 20) - pla::von_mangoldt(n)) < 1e-9);
  // asymmetric parameters exercise the same identity
  for (std::uint64_t n = 13; n <= 500; ++n)
    CHECK(std::fabs(pla::vaughan_lambda(n, 12, 30) - pla::von_mangoldt(n)) < 1e-9);
  CHECK_THROWS_AS(pla::vaughan_lambda(10, 20, 20), std::invalid_argument);
}

TEST_CASE("decompose: zero function gives zero everywhere") {
  auto zero = [](std::uint64_t) { return std::complex<double>{}; };
  auto d = pla::vaughan_decompose(zero, VaughanParams(2, 2, 30));
  CHECK(d.t1 == 0.0);
  CHECK(std::abs(d.t2) == 0.0);
  CHECK(std::abs(d.lambda_weighted) == 0.0);
}

TEST_CASE("decompose: T2 against a direct double loop for f == 1") {
  auto one = [](std::uint64_t) { return std::complex<double>{1.0, 0.0}; };
  VaughanParams params(2, 2, 30);
  auto d = pla::vaughan_decompose(one, params);
  double direct = 0.0;
  for (std::uint64_t m = 3; m <= 30 / 2; ++m)
    for (std::uint64_t k = 3; k <= 30 / m; ++k)
      direct += pla::von_mangoldt(m) * static_cast<double>(vaughan_b(k, 2));
  CHECK(d.t2.real() == doctest::Approx(direct).epsilon(1e-12));
  CHECK(d.t2.imag() == doctest::Approx(0.0));
}

TEST_CASE("decompose: identity total equals the Lambda-weighted sum") {
  const auto c = pla::QuadraticIrrational::parse("sqrt2");
  pla::FixedReal cf = c.to_fixed(128);
  auto f = [&cf](std::uint64_t n) {
    double ang = 2.0 * M_PI * cf.mul_nat(n).frac().to_double();
    return std::complex<double>(std::cos(ang), std::sin(ang));
  };
  VaughanParams params(10, 10, 1000);
  auto d = pla::vaughan_decompose(f, params);

  std::complex<double> direct{};
  for (std::uint64_t n = 11; n <= 1000; ++n) direct += f(n) * pla::von_mangoldt(n);
  CHECK(std::abs(d.lambda_weighted - direct) < 1e-8);

  // the classical majorization with the recorded constant
  double majorant = std::log(2000.0) * d.t1 + std::abs(d.t2);
  CHECK(std::abs(direct) <= 4.0 * majorant);
  MESSAGE("Lambda-sum bound ratio: " << std::abs(direct) / majorant);
}
