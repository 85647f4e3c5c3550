#include <doctest.h>

#include <cmath>

#include <pla/rng.hpp>
#include <pla/vaaler.hpp>

using pla::delta_j;
using pla::psi;
using pla::psi_star;
using pla::VaalerKernel;

TEST_CASE("sawtooth point values") {
  CHECK(psi(0.25) == doctest::Approx(-0.25));
  CHECK(psi(0.0) == doctest::Approx(-0.5));
  CHECK(psi(-0.25) == doctest::Approx(0.25));
  CHECK(psi(3.0) == doctest::Approx(-0.5));
}

TEST_CASE("weight function W") {
  CHECK(pla::vaaler_w(0.5) == doctest::Approx(0.5));  // cot(pi/2) = 0
  // t -> 0: values approach 1
  CHECK(pla::vaaler_w(1e-6) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pla::vaaler_w(1e-3) == doctest::Approx(1.0).epsilon(1e-4));
  // even function
  for (double t : {0.1, 0.37, 0.9, 5e-5})
    CHECK(pla::vaaler_w(t) == doctest::Approx(pla::vaaler_w(-t)));
  // the Taylor guard joins the direct formula without a jump (the genuine
  // slope over this gap is about 1.3e-9)
  CHECK(std::fabs(pla::vaaler_w(0.99e-4) - pla::vaaler_w(1.01e-4)) < 3e-9);
  CHECK_THROWS_AS(pla::vaaler_w(0.0), std::invalid_argument);
  CHECK_THROWS_AS(pla::vaaler_w(1.0), std::invalid_argument);
  CHECK_THROWS_AS(pla::vaaler_w(-1.5), std::invalid_argument);
}

TEST_CASE("psi_star special points") {
  VaalerKernel k1(1), k16(16);
  CHECK(psi_star(0.0, k16) == doctest::Approx(0.0));
  CHECK(psi_star(0.5, k1) == doctest::Approx(0.0));  // sin(pi) = 0
}

TEST_CASE("delta_j special points") {
  VaalerKernel k1(1);
  for (int J : {1, 4, 16, 128}) {
    VaalerKernel k(J);
    CHECK(delta_j(0.0, k) == doctest::Approx(0.5));
  }
  CHECK(delta_j(0.5, k1) == doctest::Approx(0.0));
}

TEST_CASE("majorant property on uniform and near-integer points") {
  pla::SplitMix64 rng(29);
  for (int J : {1, 4, 16}) {
    VaalerKernel k(J);
    for (int i = 0; i < 20000; ++i) {
      double x = rng.uniform01() * 10.0 - 5.0;
      double d = delta_j(x, k);
      CHECK(d >= -1e-12);
      CHECK(std::fabs(psi_star(x, k) - psi(x)) <= d + 1e-10);
    }
    for (int i = 0; i < 300; ++i) {
      double x = static_cast<double>(static_cast<int>(rng.next() % 7) - 3) +
                 (rng.uniform01() - 0.5) * 2e-12;
      double d = delta_j(x, k);
      CHECK(d >= -1e-12);
      CHECK(std::fabs(psi_star(x, k) - psi(x)) <= d + 1e-10);
    }
  }
}

TEST_CASE("psi_star is odd") {
  pla::SplitMix64 rng(31);
  VaalerKernel k(32);
  for (int i = 0; i < 2000; ++i) {
    double x = rng.uniform01() * 6.0 - 3.0;
    CHECK(std::fabs(psi_star(-x, k) + psi_star(x, k)) < 1e-10);
  }
}

TEST_CASE("mean value of delta_j is 1/(2J+2)") {
  for (int J : {1, 4, 16}) {
    VaalerKernel k(J);
    // composite Simpson over one period
    const int n = 1 << 14;
    double h = 1.0 / n;
    double acc = delta_j(0.0, k) + delta_j(1.0, k);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * delta_j(i * h, k);
    double integral = acc * h / 3.0;
    CHECK(integral == doctest::Approx(1.0 / (2.0 * J + 2.0)).epsilon(1e-6));
  }
}
