#include "pla/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "pla/arith.hpp"
#include "pla/expsum.hpp"
#include "pla/parallel.hpp"
#include "pla/rng.hpp"

namespace pla {

double approx_threshold(std::uint64_t p, double eps) {
  return std::pow(static_cast<double>(p), eps - 0.2);
}

namespace {

// sign of (c * p * alpha - q) - tau, all exact.  alpha = mant/2^F, tau dyadic
// with the same F, q an integer.
int surd_cmp(const QuadraticIrrational& c, const BigInt& p_alpha_mant, int fbits,
             const BigInt& q, const BigInt& tau_mant) {
  BigInt rhs = (q << static_cast<unsigned>(fbits)) + tau_mant;
  return c.mul_int(p_alpha_mant).add_rational(-rhs, 1).sign();
}

}  // namespace

CountFNResult count_f_n(const FixedReal& alpha, const QuadraticIrrational& c, double eps,
                        std::uint64_t N, const PrimeTable* r_primes) {
  if (!(eps > 0.0))
    throw std::invalid_argument("count_f_n: eps must be > 0");
  if (N < 1)
    throw std::invalid_argument("count_f_n: N must be >= 1");
  if (alpha.mantissa() <= 0)
    throw std::invalid_argument("count_f_n: alpha must be > 0");

  CountFNResult out;
  out.c_above_one = c.compare_rational(1, 1) > 0;
  if (N <= 2)
    return out;  // no prime p < 2... p < N needs N >= 3 for p = 2

  const int fbits = alpha.frac_bits();
  PrimeTable p_table = sieve_primes(2, N - 1);
  PrimeTable local_r;
  const PrimeTable* rt = r_primes;
  if (rt == nullptr) {
    BigInt hi = (alpha.mul_nat(N)).ceil() + 2;
    local_r = sieve_primes(2, hi.convert_to<std::uint64_t>());
    rt = &local_r;
  }

  FixedReal c_alpha = c.to_fixed(fbits).mul_exact(alpha);  // >= 2*fbits fraction bits

  for (std::uint64_t p = 2; p < N; ++p) {
    if (!p_table.contains(p))
      continue;
    double tau = approx_threshold(p, eps);
    FixedReal tau_fixed = FixedReal::from_double(tau, fbits);

    // r side: alpha is exact, so these comparisons are exact as they stand.
    FixedReal p_alpha = alpha.mul_nat(p);
    FixedReal lo = p_alpha - tau_fixed;
    std::vector<std::uint64_t> r_hits;
    for (BigInt r = p_alpha.ceil() - 1; r >= 2; --r) {
      FixedReal rf = FixedReal::from_int(r, fbits);
      if (!(rf > lo))
        break;
      if (!(rf < p_alpha))
        continue;  // r == p*alpha exactly; the strict inequality excludes it
      auto r64 = r.convert_to<std::uint64_t>();
      if (rt->contains(r64))
        r_hits.push_back(r64);
    }
    if (r_hits.empty())
      continue;

    // q side: candidates from the 128-bit product, each certified on the surd.
    BigInt p_alpha_mant = alpha.mantissa() * p;
    BigInt tau_mant = tau_fixed.mantissa();
    FixedReal pca = c_alpha.mul_nat(p).with_bits(fbits);
    std::vector<std::int64_t> q_hits;
    for (BigInt q = pca.floor() + 1;; --q) {
      // exact: p c alpha - q >= tau means q (and everything below) is out
      if (surd_cmp(c, p_alpha_mant, fbits, q, tau_mant) >= 0)
        break;
      // exact: q < p c alpha ?
      if (surd_cmp(c, p_alpha_mant, fbits, q, BigInt(0)) > 0)
        q_hits.push_back(q.convert_to<std::int64_t>());
    }
    if (q_hits.empty())
      continue;

    out.count += r_hits.size() * q_hits.size();
    for (std::uint64_t r : r_hits)
      for (std::int64_t q : q_hits) {
        ApproxTriple t;
        t.p = p;
        t.r = r;
        t.q = q;
        t.slack1 = (p_alpha - FixedReal::from_int(r, fbits)).to_double();
        t.slack2 = (pca - FixedReal::from_int(q, fbits)).to_double();
        out.triples.push_back(t);
      }
  }
  return out;
}

double g_n(double A, double B, double eps, std::uint64_t N) {
  if (!(A > 0.0) || !(A < B))
    throw std::invalid_argument("g_n: need 0 < A < B");
  if (N < 3)
    throw std::invalid_argument("g_n: need N >= 3");
  double logN = std::log(static_cast<double>(N));
  return A * A / (4.0 * B) * std::pow(static_cast<double>(N), 0.6 + eps) / (logN * logN);
}

double measure_b_p(std::uint64_t p, double a, double b, double c, double eta) {
  if (!(a > 0.0) || !(a < b))
    throw std::invalid_argument("measure_b_p: need 0 < a < b");
  if (!(eta > 0.0) || !(eta < 1.0))
    throw std::invalid_argument("measure_b_p: need eta in (0,1)");
  double dp = static_cast<double>(p);
  double cp = c * dp;
  double total = 0.0;
  auto r_lo = static_cast<std::uint64_t>(std::floor(a * dp));
  auto r_hi = static_cast<std::uint64_t>(std::ceil(b * dp)) + 1;
  for (std::uint64_t r = r_lo > 2 ? r_lo : 2; r <= r_hi; ++r) {
    if (!is_prime_u64(r))
      continue;
    double lo1 = std::max(static_cast<double>(r) / dp, a);
    double hi1 = std::min((static_cast<double>(r) + eta) / dp, b);
    if (lo1 >= hi1)
      continue;
    auto q_lo = static_cast<std::int64_t>(std::floor(cp * lo1 - eta)) - 1;
    auto q_hi = static_cast<std::int64_t>(std::ceil(cp * hi1)) + 1;
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
      double lo2 = std::max(lo1, static_cast<double>(q) / cp);
      double hi2 = std::min(hi1, (static_cast<double>(q) + eta) / cp);
      if (lo2 < hi2)
        total += hi2 - lo2;
    }
  }
  return total;
}

BlockParams::BlockParams(std::uint64_t P_, double a_, double b_, double eps_, double c_value_)
    : P(P_), a(a_), b(b_), eps(eps_), c_value(c_value_) {
  if (P < 1 || !(a > 0.0) || !(a < b) || !(eps > 0.0) || !(c_value > 0.0))
    throw std::invalid_argument("BlockParams: need P >= 1, 0 < a < b, eps > 0, c > 0");
  mu = (a + b) / (2.0 * a);
  double muP = mu * static_cast<double>(P);
  eta = std::pow(muP, -0.2 + eps / 2.0);
  delta = c_value * eta / 2.0;
  nu = std::pow(muP, -1.2 + eps / 2.0) * std::min(0.5, 1.0 / c_value);
}

std::uint64_t window_count(const Frac128& frac_x, double delta) {
  if (!(delta >= 0.0))
    throw std::invalid_argument("window_count: delta must be >= 0");
  double di = std::floor(delta);
  double df = delta - di;
  auto base = static_cast<std::uint64_t>(di);
  if (df <= 0.0)
    return base;
  Frac128 dfrac = Frac128::from_double(df);
  Frac128 edge = dfrac.complement();  // 1 - df
  return base + ((frac_x < edge) ? 0u : 1u);
}

WeightedWindowSum count_t_p(const BlockParams& params, const QuadraticIrrational& c) {
  auto [lo, hi] = block_range(params.P, params.a, params.b, params.mu);
  WeightedWindowSum out;
  out.main_term =
      params.delta * (params.b - params.a * params.mu) * static_cast<double>(params.P);
  if (lo > hi)
    return out;
  Frac128 cf = c.to_fixed(128).frac128();
  for (const auto& [n, lam] : von_mangoldt_range(lo, hi))
    out.value += static_cast<double>(window_count(cf.mul_u64(n), params.delta)) * lam;
  return out;
}

PrimeWindowSum count_s_p(const BlockParams& params, const QuadraticIrrational& c) {
  auto [lo, hi] = block_range(params.P, params.a, params.b, params.mu);
  PrimeWindowSum out;
  double logP = std::log(static_cast<double>(std::max<std::uint64_t>(params.P, 2)));
  out.main_term =
      params.delta * (params.b - params.a * params.mu) * static_cast<double>(params.P) / logP;
  if (lo > hi)
    return out;
  Frac128 cf = c.to_fixed(128).frac128();
  PrimeTable primes = sieve_primes(std::max<std::uint64_t>(lo, 2), std::max<std::uint64_t>(hi, 2));
  for (std::uint64_t r = primes.lo(); r <= primes.hi(); ++r)
    if (primes.contains(r))
      out.value += window_count(cf.mul_u64(r), params.delta);
  return out;
}

PrimeRangeCount count_r_p(const BlockParams& params) {
  if (params.P < 2)
    throw std::invalid_argument("count_r_p: P must be >= 2");
  PrimeRangeCount out;
  double muP = params.mu * static_cast<double>(params.P);
  auto hi = static_cast<std::uint64_t>(std::ceil(muP)) - 1;  // largest integer < mu P
  if (hi >= params.P) {
    PrimeTable t = sieve_primes(params.P, hi);
    for (std::uint64_t p = params.P; p <= hi; ++p)
      if (t.contains(p) && static_cast<double>(p) < muP)
        ++out.value;
  }
  out.asymptote = (params.mu - 1.0) * static_cast<double>(params.P) /
                  std::log(static_cast<double>(params.P));
  return out;
}

std::uint64_t count_n_p(const BlockParams& params, const QuadraticIrrational& c) {
  return count_r_p(params).value * count_s_p(params, c).value;
}

IntegralFN integral_f_n(double a, double b, const QuadraticIrrational& c, double eps,
                        std::uint64_t N, std::uint64_t n_samples, std::uint64_t seed,
                        int threads) {
  if (!(a > 0.0) || !(a < b))
    throw std::invalid_argument("integral_f_n: need 0 < a < b");
  if (n_samples < 10)
    throw std::invalid_argument("integral_f_n: need n_samples >= 10");
  IntegralFN out;
  out.samples = n_samples;

  // exact route: the integral equals the summed interval measures
  double c_d = c.to_double();
  if (N >= 3) {
    PrimeTable p_table = sieve_primes(2, N - 1);
    for (std::uint64_t p = 2; p < N; ++p)
      if (p_table.contains(p))
        out.exact_sum += measure_b_p(p, a, b, c_d, approx_threshold(p, eps));
  }

  // Monte-Carlo route over alpha ~ U(a, b); the alphas come from a single
  // serial stream, only the counting fans out.
  PrimeTable r_primes;
  const PrimeTable* rt = nullptr;
  if (N >= 3) {
    auto hi = static_cast<std::uint64_t>(std::ceil(b * static_cast<double>(N))) + 2;
    r_primes = sieve_primes(2, hi);
    rt = &r_primes;
  }
  SplitMix64 rng(derive_seed(seed, "integral_f_n"));
  FixedReal width = FixedReal::from_double(b - a);
  FixedReal base = FixedReal::from_double(a);
  std::vector<FixedReal> alphas;
  alphas.reserve(n_samples);
  for (std::uint64_t i = 0; i < n_samples; ++i)
    alphas.push_back(base + width * random_unit_fixed(rng));
  std::vector<double> counts = parallel_map<double>(n_samples, threads, [&](std::size_t i) {
    return static_cast<double>(N >= 3 ? count_f_n(alphas[i], c, eps, N, rt).count : 0);
  });
  double sum = 0.0, sumsq = 0.0;
  for (double cnt : counts) {
    sum += cnt;
    sumsq += cnt * cnt;
  }
  double mean = sum / static_cast<double>(n_samples);
  double var = std::max(0.0, sumsq / static_cast<double>(n_samples) - mean * mean);
  double sd = std::sqrt(var / static_cast<double>(n_samples > 1 ? n_samples - 1 : 1));
  out.mc_estimate = (b - a) * mean;
  out.mc_stderr = (b - a) * sd;
  return out;
}

}  // namespace pla
