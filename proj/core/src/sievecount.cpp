#include "pla/sievecount.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "pla/parallel.hpp"
#include "pla/rng.hpp"

namespace pla {

double window_mu(std::uint64_t N, double eps) {
  if (N < 2)
    throw std::invalid_argument("window_mu: N must be >= 2");
  if (!(eps > 0.0) || !(eps < 0.2))
    throw std::invalid_argument("window_mu: need 0 < eps < 1/5");
  return std::pow(static_cast<double>(N), eps - 0.2);
}

std::uint64_t count_sieve_s(const FixedReal& alpha, const QuadraticIrrational& c, std::uint64_t N,
                            double window, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1)
    throw std::invalid_argument("count_sieve_s: moduli must be >= 1");
  if (!(window > 0.0) || !(window < 1.0))
    throw std::invalid_argument("count_sieve_s: window must lie in (0,1)");
  const int fbits = alpha.frac_bits();
  // step_1 = frac(d1 * alpha / d2); alpha is exact, so only the division floors.
  Frac128 step1 = alpha.mul_nat(d1).div_nat(d2).frac128();
  Frac128 step2 = c.to_fixed(fbits).mul_exact(alpha).mul_nat(d1).div_nat(d3).frac128();
  Frac128 th1 = Frac128::from_double(window / static_cast<double>(d2));
  Frac128 th2 = Frac128::from_double(window / static_cast<double>(d3));
  std::uint64_t n_max = N / d1;
  std::uint64_t count = 0;
  Frac128 x1{}, x2{};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    x1 += step1;
    x2 += step2;
    if (x1 < th1 && x2 < th2)
      ++count;
  }
  return count;
}

std::uint64_t fourier_cutoff_l(std::uint64_t N, double window) {
  double D4 = std::pow(window, 4.0) * std::pow(static_cast<double>(N), 0.8);  // D^4 = (window N^{1/5})^4
  return static_cast<std::uint64_t>(std::floor(D4 / window));
}

namespace {

// |sum_{n=1}^{M} e(n theta)| via sin(pi ||M theta||)/sin(pi ||theta||);
// exact summation when the phase is nearly resonant.
double geometric_abs(const Frac128& theta, std::uint64_t M) {
  if (M == 0)
    return 0.0;
  double dist = theta.dist_to_int();
  if (dist < 1e-9) {
    std::complex<double> acc{};
    Frac128 ph{};
    for (std::uint64_t n = 1; n <= M; ++n) {
      ph += theta;
      double ang = 2.0 * M_PI * ph.to_double();
      acc += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return std::abs(acc);
  }
  double num = std::sin(M_PI * theta.mul_u64(M).dist_to_int());
  return num / std::sin(M_PI * dist);
}

}  // namespace

double e_term(const FixedReal& alpha, const QuadraticIrrational& c, std::uint64_t N, double window,
              std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1)
    throw std::invalid_argument("e_term: moduli must be >= 1");
  std::uint64_t L = fourier_cutoff_l(N, window);
  std::uint64_t M = N / d1;
  const int fbits = alpha.frac_bits();
  Frac128 x1 = alpha.mul_nat(d1).div_nat(d2).frac128();
  Frac128 x2 = c.to_fixed(fbits).mul_exact(alpha).mul_nat(d1).div_nat(d3).frac128();
  double total = 0.0;
  Frac128 back_l = x1.mul_u64(L).complement();  // frac(-L * x1)
  for (std::int64_t m2 = -static_cast<std::int64_t>(L); m2 <= static_cast<std::int64_t>(L); ++m2) {
    Frac128 base =
        m2 >= 0 ? x2.mul_u64(static_cast<std::uint64_t>(m2))
                : x2.mul_u64(static_cast<std::uint64_t>(-m2)).complement();
    Frac128 theta = base + back_l;  // phase at m1 = -L
    for (std::int64_t m1 = -static_cast<std::int64_t>(L); m1 <= static_cast<std::int64_t>(L);
         ++m1) {
      if (!(m1 == 0 && m2 == 0))
        total += geometric_abs(theta, M);
      theta += x1;
    }
  }
  return total * window * window / static_cast<double>(d2 * d3);
}

double resonance_r(std::int64_t m2, std::uint64_t d2, std::uint64_t d3,
                   const QuadraticIrrational& c) {
  if (m2 == 0)
    throw std::invalid_argument("resonance_r: m2 must be nonzero");
  if (d2 < 1 || d3 < 1)
    throw std::invalid_argument("resonance_r: moduli must be >= 1");
  std::uint64_t k = d2 * static_cast<std::uint64_t>(m2 < 0 ? -m2 : m2);
  double dist = c.to_fixed(192).mul_nat(k).div_nat(d3).frac128().dist_to_int();
  return dist / static_cast<double>(d2);
}

namespace {

double min_cap_integrand(double alpha, double K, double ax) {
  double y = alpha * ax;
  double d = std::fabs(y - std::nearbyint(y));
  return d > 1.0 / K ? 1.0 / d : K;
}

// Adaptive Simpson refinement; splits until the cell contribution is below
// contrib_tol or the Simpson/midpoint estimates agree.
double adaptive_cell(double lo, double hi, double K, double ax, double contrib_tol, int depth) {
  double mid = 0.5 * (lo + hi);
  double f_lo = min_cap_integrand(lo, K, ax);
  double f_mid = min_cap_integrand(mid, K, ax);
  double f_hi = min_cap_integrand(hi, K, ax);
  double simpson = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
  if (depth >= 40)
    return simpson;
  double m1 = 0.5 * (lo + mid), m2 = 0.5 * (mid + hi);
  double s2 = (hi - lo) / 12.0 *
              (f_lo + 4.0 * min_cap_integrand(m1, K, ax) + 2.0 * f_mid +
               4.0 * min_cap_integrand(m2, K, ax) + f_hi);
  if (std::fabs(s2 - simpson) < 1e-10 * std::max(1.0, std::fabs(s2)) ||
      std::fabs(s2) < contrib_tol)
    return s2;
  return adaptive_cell(lo, mid, K, ax, contrib_tol / 2.0, depth + 1) +
         adaptive_cell(mid, hi, K, ax, contrib_tol / 2.0, depth + 1);
}

}  // namespace

BoundDiagnostic integral_min_check(double A, double B, double K, double x) {
  if (!(A > 0.0) || !(A < B))
    throw std::invalid_argument("integral_min_check: need 0 < A < B");
  if (!(K >= 2.0))
    throw std::invalid_argument("integral_min_check: need K >= 2");
  if (x == 0.0)
    throw std::invalid_argument("integral_min_check: need x != 0");
  double ax = std::fabs(x);  // ||alpha x|| = ||alpha |x||| by symmetry
  // split at the singular points alpha = m/ax
  std::vector<double> cuts{A};
  auto m_lo = static_cast<std::int64_t>(std::ceil(A * ax));
  auto m_hi = static_cast<std::int64_t>(std::floor(B * ax));
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    double s = static_cast<double>(m) / ax;
    if (s > cuts.back() && s < B)
      cuts.push_back(s);
  }
  cuts.push_back(B);
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    integral += adaptive_cell(cuts[i], cuts[i + 1], K, ax, 1e-8 * K, 0);
  BoundDiagnostic d;
  d.measured = integral;
  d.bound_formula_value = std::min(K, std::max(1.0, 1.0 / ax) * std::log(K));
  d.ratio = d.measured / d.bound_formula_value;
  return d;
}

std::vector<std::array<std::uint64_t, 3>> sieve_cells(std::uint64_t bound) {
  std::vector<std::array<std::uint64_t, 3>> cells;
  for (std::uint64_t d1 = 1; d1 <= bound; ++d1)
    for (std::uint64_t d2 = 1; d1 * d2 <= bound; ++d2)
      for (std::uint64_t d3 = 1; d1 * d2 * d3 <= bound; ++d3)
        cells.push_back({d1, d2, d3});
  return cells;
}

JnAverage j_n_average(const QuadraticIrrational& c, std::uint64_t N, double eps,
                      std::uint64_t alpha_samples, std::uint64_t seed, double A, double B,
                      int threads) {
  if (alpha_samples < 2)
    throw std::invalid_argument("j_n_average: need at least 2 samples");
  auto members = sequence_S(c, N);
  if (members.empty() || members.back() != N)
    throw std::invalid_argument("j_n_average: N is not a squared convergent denominator");
  double window = window_mu(N, eps);
  double D = std::pow(static_cast<double>(N), eps);
  auto cells = sieve_cells(static_cast<std::uint64_t>(std::floor(D)));

  SplitMix64 rng(derive_seed(seed, "j_n_average"));
  std::vector<FixedReal> alphas;
  alphas.reserve(alpha_samples);
  for (std::uint64_t i = 0; i < alpha_samples; ++i)
    alphas.push_back(FixedReal::from_double(A) +
                     FixedReal::from_double(B - A) * random_unit_fixed(rng));
  std::vector<double> cell_sums = parallel_map<double>(alpha_samples, threads, [&](std::size_t i) {
    double cell_sum = 0.0;
    for (const auto& [d1, d2, d3] : cells) {
      double weight = std::pow(static_cast<double>(d1 * d2 * d3), eps);
      cell_sum += weight * e_term(alphas[i], c, N, window, d1, d2, d3);
    }
    return cell_sum;
  });
  double sum = 0.0, sumsq = 0.0;
  for (double s : cell_sums) {
    sum += s;
    sumsq += s * s;
  }
  double n = static_cast<double>(alpha_samples);
  double mean = sum / n;
  double var = std::max(0.0, sumsq / n - mean * mean);
  double sd = std::sqrt(var / (n - 1.0));

  double logN = std::log(static_cast<double>(N));
  double scale = window * window * static_cast<double>(N) / (logN * logN * logN);
  JnAverage out;
  out.raw = (B - A) * mean;
  out.normalized = out.raw / scale;
  out.stderr_norm = (B - A) * sd / scale;
  out.cells = cells.size();
  out.samples = alpha_samples;
  return out;
}

}  // namespace pla
