#include "pla/expsum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "pla/arith.hpp"
#include "pla/vaughan.hpp"

namespace pla {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::complex<double> unit_phase(const Frac128& f) {
  double ang = 2.0 * M_PI * f.to_double();
  return {std::cos(ang), std::sin(ang)};
}

// |sum_{k=w}^{kmax} e(theta k)| maximized over w in [wmin, kmax], theta given
// as an exact 128-bit fraction.  Closed form: the modulus is
// sin(pi ||theta (kmax+1-w)||) / sin(pi ||theta||).
double max_suffix_geometric(const Frac128& theta, std::uint64_t wmin, std::uint64_t kmax) {
  if (wmin > kmax)
    return 0.0;
  std::uint64_t m_max = kmax + 1 - wmin;
  double dist = theta.dist_to_int();
  if (dist < 1e-9) {
    // near-resonant stratum: exact suffix summation
    std::complex<double> suffix{};
    double best = 0.0;
    Frac128 ph = theta.mul_u64(kmax);
    for (std::uint64_t k = kmax;; --k) {
      suffix += unit_phase(ph);
      best = std::max(best, std::abs(suffix));
      if (k == wmin)
        break;
      ph += theta.complement();  // step phase down by theta, exactly
    }
    return best;
  }
  double best_dist = 0.0;
  Frac128 t{};
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    t += theta;
    best_dist = std::max(best_dist, t.dist_to_int());
  }
  return std::sin(M_PI * best_dist) / std::sin(M_PI * dist);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> block_range(std::uint64_t P, double a, double b,
                                                    double mu) {
  auto lo = static_cast<std::uint64_t>(std::ceil(static_cast<double>(P) * a * mu));
  auto hi = static_cast<std::uint64_t>(std::floor(b * static_cast<double>(P)));
  if (lo < 1)
    lo = 1;
  return {lo, hi};
}

std::complex<double> prime_exp_sum(std::uint64_t h, const QuadraticIrrational& c, std::uint64_t lo,
                                   std::uint64_t hi) {
  if (lo > hi)
    throw std::invalid_argument("prime_exp_sum: need lo <= hi");
  auto entries = von_mangoldt_range(lo, hi);
  if (h == 0) {
    double s = 0.0;
    for (const auto& [n, lam] : entries) s += lam;
    return {s, 0.0};
  }
  Frac128 step = c.to_fixed(128).frac128().mul_u64(h);  // frac(h*c), exact mod 1
  std::complex<double> acc{};
  for (const auto& [n, lam] : entries) acc += lam * unit_phase(step.mul_u64(n));
  return acc;
}

ExpSumResult zh_sum(std::uint64_t H, const QuadraticIrrational& c, std::uint64_t P, double a,
                    double b, double mu) {
  if (H < 1)
    throw std::invalid_argument("zh_sum: H must be >= 1");
  auto t0 = Clock::now();
  ExpSumResult r;
  r.params = {H, P, 0, 0, a, b, mu};
  auto [lo, hi] = block_range(P, a, b, mu);
  if (lo > hi) {
    r.empty_range = true;
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  auto entries = von_mangoldt_range(lo, hi);
  Frac128 base = c.to_fixed(128).frac128();
  for (std::uint64_t h = H; h <= 2 * H; ++h) {
    Frac128 step = base.mul_u64(h);
    std::complex<double> acc{};
    for (const auto& [n, lam] : entries) acc += lam * unit_phase(step.mul_u64(n));
    r.magnitude += std::abs(acc);
    r.n_terms += entries.size();
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

ExpSumResult z1_sum(std::uint64_t H, const QuadraticIrrational& c, std::uint64_t P, double a,
                    double b, double mu, std::uint64_t U) {
  if (U < 1)
    throw std::invalid_argument("z1_sum: U must be >= 1");
  auto t0 = Clock::now();
  ExpSumResult r;
  r.params = {H, P, U, 0, a, b, mu};
  Frac128 base = c.to_fixed(128).frac128();
  double bP = b * static_cast<double>(P);
  double lo_real = static_cast<double>(P) * a * mu;
  for (std::uint64_t h = H; h <= 2 * H; ++h) {
    for (std::uint64_t l = 1; l <= U * U; ++l) {
      auto kmax = static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(l)));
      auto wmin = static_cast<std::uint64_t>(std::ceil(lo_real / static_cast<double>(l)));
      if (wmin < 1)
        wmin = 1;
      if (wmin > kmax)
        continue;
      Frac128 theta = base.mul_u64(h * l);
      r.magnitude += max_suffix_geometric(theta, wmin, kmax);
      r.n_terms += kmax - wmin + 1;
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

ExpSumResult z2_sum(std::uint64_t H, const QuadraticIrrational& c, std::uint64_t P, double a,
                    double b, double mu, std::uint64_t U) {
  if (U < 1)
    throw std::invalid_argument("z2_sum: U must be >= 1");
  auto t0 = Clock::now();
  ExpSumResult r;
  r.params = {H, P, U, 0, a, b, mu};
  const std::uint64_t V = U;
  double bP = b * static_cast<double>(P);
  double lo_real = static_cast<double>(P) * a * mu;
  auto m_hi = static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(U)));
  if (m_hi <= U) {
    r.empty_range = true;
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  auto entries = von_mangoldt_range(U + 1, m_hi);
  std::vector<std::int64_t> btab = vaughan_b_table(
      static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(U + 1))) + 1, V);
  Frac128 base = c.to_fixed(128).frac128();
  for (std::uint64_t h = H; h <= 2 * H; ++h) {
    Frac128 hf = base.mul_u64(h);
    std::complex<double> acc{};
    for (const auto& [m, lam] : entries) {
      auto k_hi = static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(m)));
      auto k_lo = static_cast<std::uint64_t>(std::ceil(lo_real / static_cast<double>(m)));
      if (k_lo < V + 1)
        k_lo = V + 1;
      if (k_lo > k_hi)
        continue;
      Frac128 mf = hf.mul_u64(m);
      Frac128 ph = mf.mul_u64(k_lo);
      for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        if (btab[k] != 0)
          acc += lam * static_cast<double>(btab[k]) * unit_phase(ph);
        ph += mf;
        ++r.n_terms;
      }
    }
    r.magnitude += std::abs(acc);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

ExpSumResult zhk_sum(std::uint64_t H, std::uint64_t K, const QuadraticIrrational& c,
                     std::uint64_t P, double a, double b, double mu, std::uint64_t U) {
  if (U < 1)
    throw std::invalid_argument("zhk_sum: U must be >= 1");
  double bP = b * static_cast<double>(P);
  auto k_cap = static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(U)));
  if (K < U || K > k_cap)
    throw std::invalid_argument("zhk_sum: need U <= K <= bP/U");
  auto t0 = Clock::now();
  ExpSumResult r;
  r.params = {H, P, U, K, a, b, mu};
  double lo_real = static_cast<double>(P) * a * mu;
  auto m_cap = static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(U)));
  auto entries = von_mangoldt_range(U + 1, std::max(U + 1, m_cap));
  std::vector<std::int64_t> btab = vaughan_b_table(2 * K + 1, U);
  Frac128 base = c.to_fixed(128).frac128();
  for (std::uint64_t h = H; h <= 2 * H; ++h) {
    Frac128 hf = base.mul_u64(h);
    for (std::uint64_t k = K; k <= std::min(2 * K, k_cap); ++k) {
      if (btab[k] == 0)
        continue;
      auto m_hi = std::min(m_cap, static_cast<std::uint64_t>(std::floor(bP / static_cast<double>(k))));
      auto m_lo = static_cast<std::uint64_t>(std::ceil(lo_real / static_cast<double>(k)));
      if (m_lo < U + 1)
        m_lo = U + 1;
      if (m_lo > m_hi)
        continue;
      Frac128 kf = hf.mul_u64(k);
      std::complex<double> acc{};
      auto it = std::lower_bound(entries.begin(), entries.end(), m_lo,
                                 [](const auto& e, std::uint64_t v) { return e.first < v; });
      for (; it != entries.end() && it->first <= m_hi; ++it) {
        acc += it->second * unit_phase(kf.mul_u64(it->first));
        ++r.n_terms;
      }
      r.magnitude += static_cast<double>(std::llabs(btab[k])) * std::abs(acc);
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

double r_c_sum(const QuadraticIrrational& c, std::uint64_t L, double x) {
  if (L < 1 || !(x > 1.0))
    throw std::invalid_argument("r_c_sum: need L >= 1 and x > 1");
  Frac128 f = c.to_fixed(128).frac128();
  double total = 0.0;
  for (std::uint64_t l = 1; l <= L; ++l) {
    double dist = f.mul_u64(l).dist_to_int();
    double inv = dist > 1e-300 ? 1.0 / dist : x / static_cast<double>(l);
    total += std::min(x / static_cast<double>(l), inv);
  }
  return total;
}

double r_c_bound(std::uint64_t L, double x, std::uint64_t q) {
  if (q == 0)
    throw std::invalid_argument("r_c_bound: q must be >= 1");
  double dq = static_cast<double>(q);
  return (x / dq + static_cast<double>(L) + dq) *
         std::log(2.0 * static_cast<double>(L) * dq * x);
}

namespace {

// smallest j >= 1 with j^5 >= target; exact, immune to pow() rounding
std::uint64_t ceil_fifth_root(unsigned __int128 target) {
  auto pow5 = [](std::uint64_t j) {
    unsigned __int128 p = j;
    return p * j * j * j * j;
  };
  auto j = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(static_cast<unsigned long long>(target)), 0.2));
  if (j < 1)
    j = 1;
  while (pow5(j) < target) ++j;
  while (j > 1 && pow5(j - 1) >= target) --j;
  return j;
}

}  // namespace

std::uint64_t choose_j(std::uint64_t P) {
  // ceil(P^{1/5}) = smallest j with j^5 >= P
  return ceil_fifth_root(P);
}

std::uint64_t choose_u(std::uint64_t P) {
  // ceil(P^{2/5}) = smallest u with u^5 >= P^2
  return ceil_fifth_root(static_cast<unsigned __int128>(P) * P);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> dyadic_blocks(std::uint64_t U,
                                                                   std::uint64_t k_hi) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t K = U; K <= k_hi; K *= 2) out.emplace_back(K, std::min(2 * K, k_hi));
  return out;
}

}  // namespace pla
