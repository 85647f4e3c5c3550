// Bilinear decomposition of Lambda-weighted sums.
//
// With b(k) = sum_{d|k, d<=V} mu(d) and a(l) = sum_{m*d=l, m<=U, d<=V}
// Lambda(m) mu(d), every n > U satisfies the exact identity
//
//   Lambda(n) = sum_{d|n, d<=V} mu(d) log(n/d)
//             - sum_{l|n, l<=UV} a(l)
//             - sum_{n=m*k, m>U, k>V} Lambda(m) b(k),
//
// which is the pointwise-testable form behind the usual type-I/type-II
// split of sum_{U<n<=x} f(n) Lambda(n).

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace pla {

// b(k) = sum_{d|k, d<=V} mu(d); |b(k)| <= tau(k).
std::int64_t vaughan_b(std::uint64_t k, std::uint64_t V);

// b(1..kmax) by a sieve over the moduli d <= V.
std::vector<std::int64_t> vaughan_b_table(std::uint64_t kmax, std::uint64_t V);

struct VaughanParams {
  std::uint64_t U = 1;
  std::uint64_t V = 1;
  std::uint64_t x = 1;

  VaughanParams(std::uint64_t U_, std::uint64_t V_, std::uint64_t x_) : U(U_), V(V_), x(x_) {
    validate();
  }
  void validate() const;
};

struct VaughanDecomposition {
  // T1 = sum_{l<=UV} max over cut points w in [1, x/l] of |sum_{w<=k<=x/l} f(kl)|.
  double t1 = 0.0;
  // T2 = sum_{U<m<=x/V} sum_{V<k<=x/m} Lambda(m) b(k) f(mk).
  std::complex<double> t2{};
  // The two type-I pieces of the exact identity and their assembled total:
  // lambda_weighted = type_one_log - type_one_coeff - t2 = sum_{U<n<=x} f(n) Lambda(n).
  std::complex<double> type_one_log{};
  std::complex<double> type_one_coeff{};
  std::complex<double> lambda_weighted{};
};

// Evaluates every piece exactly (direct summation).  f must be defined for
// all n in [1, x].  Throws std::invalid_argument if U*V > x.
VaughanDecomposition vaughan_decompose(const std::function<std::complex<double>(std::uint64_t)>& f,
                                       const VaughanParams& params);

// Lambda(n) reconstructed through the identity above; n > U required.
double vaughan_lambda(std::uint64_t n, std::uint64_t U, std::uint64_t V);

}  // namespace pla
