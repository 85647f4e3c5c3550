#include <doctest.h>

#include <cmath>

#include <pla/continued_fraction.hpp>
#include <pla/quadratic.hpp>

using pla::BigInt;
using pla::Convergent;
using pla::QuadraticIrrational;

namespace {

const QuadraticIrrational kSqrt2{0, 1, 2, 1};
const QuadraticIrrational kSqrt3{0, 1, 3, 1};
const QuadraticIrrational kGolden{1, 1, 5, 2};

std::vector<std::uint64_t> quotients_u64(const QuadraticIrrational& c, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (const BigInt& a : pla::cf_expansion(c, n)) out.push_back(a.convert_to<std::uint64_t>());
  return out;
}

}  // namespace

TEST_CASE("type validation") {
  CHECK_THROWS_AS(QuadraticIrrational(0, 1, 4, 1), std::invalid_argument);   // square
  CHECK_THROWS_AS(QuadraticIrrational(0, 1, 12, 1), std::invalid_argument);  // not squarefree
  CHECK_THROWS_AS(QuadraticIrrational(0, 0, 2, 1), std::invalid_argument);   // rational
  CHECK_THROWS_AS(QuadraticIrrational(0, 1, 2, 0), std::invalid_argument);   // zero denom
  QuadraticIrrational neg(0, -2, 2, -4);  // normalizes to w > 0, gcd 1
  CHECK(neg.w() == 2);
  CHECK(neg.v() == 1);
}

TEST_CASE("expansion of classic constants") {
  CHECK(quotients_u64(kSqrt2, 5) == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
  CHECK(quotients_u64(kGolden, 6) == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1});
  CHECK(quotients_u64(QuadraticIrrational(2, 1, 2, 1), 4) ==
        std::vector<std::uint64_t>{3, 2, 2, 2});
  CHECK(quotients_u64(kSqrt3, 6) == std::vector<std::uint64_t>{1, 1, 2, 1, 2, 1});
}

TEST_CASE("convergents of sqrt(2) and the golden ratio") {
  auto cv = pla::convergents(kSqrt2, 5);
  REQUIRE(cv.size() == 5);
  std::vector<std::pair<int, int>> expect{{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}};
  for (std::size_t k = 0; k < cv.size(); ++k) {
    CHECK(cv[k].a == expect[k].first);
    CHECK(cv[k].q == expect[k].second);
  }
  auto gv = pla::convergents(kGolden, 6);
  std::vector<int> fib{1, 1, 2, 3, 5, 8};
  for (std::size_t k = 0; k < gv.size(); ++k) CHECK(gv[k].q == fib[k]);

  // zeroth convergent is floor(c)/1
  CHECK(pla::convergents(kSqrt3, 1)[0].a == 1);
  CHECK(pla::convergents(kSqrt3, 1)[0].q == 1);
}

TEST_CASE("convergent quality and recurrences hold exactly") {
  for (const auto& c : {kSqrt2, kSqrt3, kGolden}) {
    auto cv = pla::convergents(c, 20);
    for (const auto& v : cv) {
      CHECK(pla::convergent_within_q2(c, v));
      CHECK(boost::multiprecision::gcd(abs(v.a), v.q) == 1);
    }
    for (std::size_t k = 2; k < cv.size(); ++k) {
      CHECK(cv[k].a == cv[k].partial_quotient * cv[k - 1].a + cv[k - 2].a);
      CHECK(cv[k].q == cv[k].partial_quotient * cv[k - 1].q + cv[k - 2].q);
    }
    // denominators strictly increase once q reaches 2
    std::size_t first_ge2 = 0;
    while (first_ge2 < cv.size() && cv[first_ge2].q < 2) ++first_ge2;
    for (std::size_t k = first_ge2; k + 1 < cv.size(); ++k) CHECK(cv[k].q < cv[k + 1].q);
  }
}

TEST_CASE("squared denominator sequence") {
  CHECK(pla::sequence_S(kSqrt2, 200) == std::vector<std::uint64_t>{1, 4, 25, 144});
  CHECK(pla::sequence_S(kGolden, 70) == std::vector<std::uint64_t>{1, 4, 9, 25, 64});
  CHECK(pla::sequence_S(kSqrt3, 1) == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(pla::sequence_S(kSqrt2, 0), std::invalid_argument);

  // set semantics: exactly the squares of convergent denominators, ascending
  auto cv = pla::convergents(kSqrt2, 12);
  auto s = pla::sequence_S(kSqrt2, 1000000);
  std::size_t i = 0;
  for (const auto& v : cv) {
    auto q2 = (v.q * v.q).convert_to<std::uint64_t>();
    if (q2 > 1000000)
      break;
    CHECK(s[i++] == q2);
  }
  CHECK(i == s.size());
}

TEST_CASE("sequence ceiling helper") {
  CHECK(pla::sequence_S_ceiling(kSqrt2, 30).value() == 144);
  CHECK(pla::sequence_S_ceiling(kSqrt2, 144).value() == 144);
  CHECK(pla::sequence_S_ceiling(kSqrt2, 2).value() == 4);
}

TEST_CASE("rational approximation at a sequence member") {
  auto r25 = pla::rational_approx_at(kSqrt2, 25);
  CHECK(r25.a == 7);
  CHECK(r25.q == 5);
  CHECK(r25.beta.to_double() == doctest::Approx(25.0 * (std::sqrt(2.0) - 1.4)).epsilon(1e-9));
  CHECK(std::fabs(r25.beta.to_double()) <= 1.0);

  auto r4 = pla::rational_approx_at(kSqrt2, 4);
  CHECK(r4.a == 3);
  CHECK(r4.q == 2);
  CHECK(std::fabs(r4.beta.to_double()) == doctest::Approx(4.0 * (1.5 - std::sqrt(2.0))).epsilon(1e-9));

  // q = 1 members: the later (closer) convergent wins for the golden ratio
  auto g1 = pla::rational_approx_at(kGolden, 1);
  CHECK(g1.q == 1);
  CHECK(g1.a == 2);
  CHECK(std::fabs(g1.beta.to_double()) <= 1.0);

  CHECK_THROWS_AS(pla::rational_approx_at(kSqrt2, 26), std::invalid_argument);
  CHECK_THROWS_AS(pla::rational_approx_at(kSqrt2, 9), std::invalid_argument);
}

TEST_CASE("surd parsing and named constants") {
  CHECK(QuadraticIrrational::parse("sqrt2").to_double() == doctest::Approx(std::sqrt(2.0)));
  CHECK(QuadraticIrrational::parse("golden").to_double() ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));
  CHECK(QuadraticIrrational::parse("1+sqrt3").to_double() ==
        doctest::Approx(1.0 + std::sqrt(3.0)));
  CHECK(QuadraticIrrational::parse("(1+2*sqrt(3))/5").to_double() ==
        doctest::Approx((1.0 + 2.0 * std::sqrt(3.0)) / 5.0));
  CHECK(QuadraticIrrational::parse("(0+1*sqrt(2))/1").to_double() ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(QuadraticIrrational::parse("(1-sqrt(5))/2").to_double() ==
        doctest::Approx((1.0 - std::sqrt(5.0)) / 2.0));
  CHECK_THROWS_AS(QuadraticIrrational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticIrrational::parse("sqrt(four)"), std::invalid_argument);
}

TEST_CASE("heuristic constants parse but refuse exact operations") {
  auto heur = pla::RealConstant::parse("2.718281828459045");
  CHECK_FALSE(heur.exact());
  CHECK(heur.to_double() == doctest::Approx(2.718281828459045));
  CHECK_THROWS_AS(heur.surd(), std::logic_error);

  auto exact = pla::RealConstant::parse("sqrt2");
  CHECK(exact.exact());
  CHECK(exact.surd().d() == 2);
}

TEST_CASE("heuristic expansion tracks the exact one while precision lasts") {
  auto fixed = kSqrt2.to_fixed(128);
  auto heur = pla::cf_expansion_heuristic(fixed, 20);
  auto exact = pla::cf_expansion(kSqrt2, 20);
  REQUIRE(heur.size() >= 15);  // plenty of precision for 20 quotients of sqrt2
  for (std::size_t i = 0; i < heur.size(); ++i) CHECK(heur[i] == exact[i]);
}

TEST_CASE("exact floor conversion to fixed point") {
  for (const auto& c : {kSqrt2, kSqrt3, kGolden}) {
    auto f = c.to_fixed(128);
    CHECK(f.to_double() == doctest::Approx(c.to_double()).epsilon(1e-15));
    // floor(value * 2^F) means the conversion never rounds up
    CHECK(c.add_rational(-f.floor(), 1).sign() > 0);
  }
  CHECK(kSqrt2.floor() == 1);
  CHECK((-kSqrt2).floor() == -2);
  CHECK(kGolden.floor() == 1);
}
