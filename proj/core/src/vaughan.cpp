#include "pla/vaughan.hpp"

#include <cmath>
#include <stdexcept>

#include "pla/arith.hpp"

namespace pla {

std::int64_t vaughan_b(std::uint64_t k, std::uint64_t V) {
  if (k == 0)
    throw std::invalid_argument("vaughan_b: k must be >= 1");
  std::int64_t b = 0;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0)
      continue;
    if (d <= V)
      b += moebius(d);
    std::uint64_t e = k / d;
    if (e != d && e <= V)
      b += moebius(e);
  }
  return b;
}

std::vector<std::int64_t> vaughan_b_table(std::uint64_t kmax, std::uint64_t V) {
  std::vector<std::int64_t> b(kmax + 1, 0);
  for (std::uint64_t d = 1; d <= V && d <= kmax; ++d) {
    int mu = moebius(d);
    if (mu == 0)
      continue;
    for (std::uint64_t k = d; k <= kmax; k += d) b[k] += mu;
  }
  return b;
}

void VaughanParams::validate() const {
  if (U < 1 || V < 1)
    throw std::invalid_argument("VaughanParams: U and V must be >= 1");
  if (U > x / V)  // U*V > x, phrased to avoid overflow
    throw std::invalid_argument("VaughanParams: need U*V <= x");
}

VaughanDecomposition vaughan_decompose(
    const std::function<std::complex<double>(std::uint64_t)>& f, const VaughanParams& params) {
  params.validate();
  const std::uint64_t U = params.U, V = params.V, x = params.x;
  VaughanDecomposition out;

  // T1: suffix sums over k for each stratum l.
  for (std::uint64_t l = 1; l <= U * V; ++l) {
    std::uint64_t kmax = x / l;
    if (kmax == 0)
      continue;
    std::complex<double> suffix{};
    double best = 0.0;
    for (std::uint64_t k = kmax; k >= 1; --k) {
      suffix += f(k * l);
      best = std::max(best, std::abs(suffix));
      if (k == 1)
        break;
    }
    out.t1 += best;
  }

  // type-I pieces of the exact identity
  for (std::uint64_t d = 1; d <= V; ++d) {
    int mu = moebius(d);
    if (mu == 0)
      continue;
    std::complex<double> inner{};
    for (std::uint64_t k = 1; k * d <= x; ++k) {
      if (k * d > U)
        inner += f(k * d) * std::log(static_cast<double>(k));
    }
    out.type_one_log += static_cast<double>(mu) * inner;
  }
  {
    // a(l) = sum_{m*d = l, m<=U, d<=V} Lambda(m) mu(d)
    std::vector<double> a(U * V + 1, 0.0);
    for (std::uint64_t m = 2; m <= U; ++m) {
      double lam = von_mangoldt(m);
      if (lam == 0.0)
        continue;
      for (std::uint64_t d = 1; d <= V; ++d) {
        int mu = moebius(d);
        if (mu != 0)
          a[m * d] += lam * mu;
      }
    }
    for (std::uint64_t l = 1; l <= U * V; ++l) {
      if (a[l] == 0.0)
        continue;
      std::complex<double> inner{};
      for (std::uint64_t k = 1; k * l <= x; ++k)
        if (k * l > U)
          inner += f(k * l);
      out.type_one_coeff += a[l] * inner;
    }
  }

  // T2: bilinear piece
  if (x / V > U) {
    std::vector<std::int64_t> b = vaughan_b_table(x / (U + 1), V);
    auto lambda_entries = von_mangoldt_range(U + 1, x / V);
    for (const auto& [m, lam] : lambda_entries) {
      for (std::uint64_t k = V + 1; k <= x / m; ++k) {
        if (b[k] == 0)
          continue;
        out.t2 += lam * static_cast<double>(b[k]) * f(m * k);
      }
    }
  }

  out.lambda_weighted = out.type_one_log - out.type_one_coeff - out.t2;
  return out;
}

namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    out.push_back(d);
    if (d != n / d)
      out.push_back(n / d);
  }
  return out;
}

// a(l) = sum_{m*d = l, m<=U, d<=V} Lambda(m) mu(d)
double vaughan_a(std::uint64_t l, std::uint64_t U, std::uint64_t V) {
  double a = 0.0;
  for (std::uint64_t d : divisors_of(l)) {
    std::uint64_t m = l / d;
    if (d <= V && m >= 2 && m <= U) {
      int mu = moebius(d);
      if (mu != 0)
        a += mu * von_mangoldt(m);
    }
  }
  return a;
}

}  // namespace

double vaughan_lambda(std::uint64_t n, std::uint64_t U, std::uint64_t V) {
  if (n <= U)
    throw std::invalid_argument("vaughan_lambda: need n > U");
  double part_log = 0.0, part_coeff = 0.0, part_bilinear = 0.0;
  for (std::uint64_t div : divisors_of(n)) {
    std::uint64_t co = n / div;
    if (div <= V) {
      int mu = moebius(div);
      if (mu != 0)
        part_log += mu * std::log(static_cast<double>(co));
    }
    if (div <= U * V)
      part_coeff += vaughan_a(div, U, V);
    if (div > U && co > V)
      part_bilinear += von_mangoldt(div) * static_cast<double>(vaughan_b(co, V));
  }
  return part_log - part_coeff - part_bilinear;
}

}  // namespace pla
