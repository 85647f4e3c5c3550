#include "pla/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "pla/counting.hpp"
#include "pla/parallel.hpp"
#include "pla/rng.hpp"
#include "pla/sha256.hpp"
#include "pla/sievecount.hpp"

namespace pla {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

std::vector<std::uint64_t> resolve_n_list(const ExperimentConfig& cfg,
                                          const QuadraticIrrational& c, bool require_s) {
  if (cfg.n_list.empty()) {
    std::uint64_t n_max = cfg.q_max * cfg.q_max;
    return sequence_S(c, std::max<std::uint64_t>(n_max, 1));
  }
  std::vector<std::uint64_t> out = cfg.n_list;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (require_s) {
    auto members = sequence_S(c, out.back());
    std::vector<std::string> bad;
    for (std::uint64_t n : out)
      if (!std::binary_search(members.begin(), members.end(), n))
        bad.push_back("n_list value " + std::to_string(n) +
                      " is not a squared convergent denominator of c");
    if (!bad.empty())
      throw ConfigError(bad);
  }
  return out;
}

ExperimentReport run_theorem3i_pipeline(const ExperimentConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  RealConstant constant = RealConstant::parse(cfg.c_text, cfg.precision_bits);
  const QuadraticIrrational& c = constant.surd();
  double c_d = c.to_double();
  int threads = resolve_threads(cfg.threads);

  ExperimentReport rep;
  rep.kind = "pipeline-3i";
  rep.config = cfg;
  rep.input_hash = sha256_hex(cfg.canonical_serialize());

  double mu = (cfg.a + cfg.b) / (2.0 * cfg.a);
  for (std::uint64_t N : resolve_n_list(cfg, c, /*require_s=*/false)) {
    LowerBoundRecord rec;
    rec.N = N;

    // geometric block ladder P = N / mu^(k+1)
    double p_real = static_cast<double>(N) / mu;
    while (p_real >= 2.0) {
      auto P = static_cast<std::uint64_t>(std::floor(p_real));
      BlockParams bp(P, cfg.a, cfg.b, cfg.eps, c_d);
      BlockRecord blk;
      blk.P = P;
      auto t = count_t_p(bp, c);
      blk.t_value = t.value;
      blk.t_main = t.main_term;
      auto s = count_s_p(bp, c);
      blk.s_count = s.value;
      blk.s_main = s.main_term;
      auto r = count_r_p(bp);
      blk.r_count = r.value;
      blk.r_asym = r.asymptote;
      blk.n_count = blk.r_count * blk.s_count;
      blk.nu = bp.nu;
      rec.lower_bound += bp.nu * static_cast<double>(blk.n_count);
      rec.blocks.push_back(blk);
      p_real /= mu;
    }

    IntegralFN integ =
        integral_f_n(cfg.a, cfg.b, c, cfg.eps, N, cfg.samples,
                     derive_seed(cfg.seed, "pipeline-3i/N=" + std::to_string(N)), threads);
    rec.mc_estimate = integ.mc_estimate;
    rec.mc_stderr = integ.mc_stderr;
    rec.exact_integral = integ.exact_sum;
    if (N >= 3) {
      rec.gn = (cfg.b - cfg.a) * g_n(cfg.A, cfg.B, cfg.eps, N);
      rec.ratio_mc = rec.mc_estimate / rec.gn;
      rec.ratio_exact = rec.exact_integral / rec.gn;
    }
    double diff = std::fabs(rec.mc_estimate - rec.exact_integral);
    rec.agree_sigmas = rec.mc_stderr > 0.0 ? diff / rec.mc_stderr : (diff == 0.0 ? 0.0 : 1e9);
    rep.lower.push_back(std::move(rec));
  }

  rep.wall_ms = ms_since(t0);
  rep.finalize_hash();
  return rep;
}

ExperimentReport run_theorem3ii_pipeline(const ExperimentConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  RealConstant constant = RealConstant::parse(cfg.c_text, cfg.precision_bits);
  const QuadraticIrrational& c = constant.surd();
  int threads = resolve_threads(cfg.threads);

  ExperimentReport rep;
  rep.kind = "pipeline-3ii";
  rep.config = cfg;
  rep.input_hash = sha256_hex(cfg.canonical_serialize());

  for (std::uint64_t N : resolve_n_list(cfg, c, /*require_s=*/true)) {
    if (N < 2)
      continue;  // the window N^(eps-1/5) needs N >= 2
    AverageRecord rec;
    rec.N = N;
    rec.window = window_mu(N, cfg.eps);

    JnAverage jn = j_n_average(c, N, cfg.eps, cfg.samples,
                               derive_seed(cfg.seed, "pipeline-3ii/N=" + std::to_string(N)),
                               cfg.A, cfg.B, threads);
    rec.cells = jn.cells;
    rec.jn_normalized = jn.normalized;
    rec.jn_stderr = jn.stderr_norm;

    // tail evidence: K needed so that F_N(alpha) <= K G_N + J_N(alpha)
    if (N >= 3) {
      rec.gn = g_n(cfg.A, cfg.B, cfg.eps, N);
      std::uint64_t tail = std::min<std::uint64_t>(cfg.samples, 25);
      rec.tail_samples = tail;
      double D = std::pow(static_cast<double>(N), cfg.eps);
      auto cells = sieve_cells(static_cast<std::uint64_t>(std::floor(D)));
      double d4 = std::pow(D, 4.0);
      SplitMix64 rng(derive_seed(cfg.seed, "pipeline-3ii/tail/N=" + std::to_string(N)));
      std::vector<FixedReal> alphas;
      for (std::uint64_t i = 0; i < tail; ++i)
        alphas.push_back(FixedReal::from_double(cfg.A) +
                         FixedReal::from_double(cfg.B - cfg.A) * random_unit_fixed(rng));
      std::vector<double> k_req = parallel_map<double>(tail, threads, [&](std::size_t i) {
        const FixedReal& alpha = alphas[i];
        double f_n = static_cast<double>(count_f_n(alpha, c, cfg.eps, N).count);
        double j_n = 0.0;
        for (const auto& [d1, d2, d3] : cells) {
          double weight = std::pow(static_cast<double>(d1 * d2 * d3), cfg.eps);
          double main_err = static_cast<double>(N) * rec.window * rec.window / d4;
          j_n += weight * (main_err + e_term(alpha, c, N, rec.window, d1, d2, d3));
        }
        return (f_n - j_n) / rec.gn;
      });
      rec.k_required = *std::max_element(k_req.begin(), k_req.end());
    }
    rep.average.push_back(std::move(rec));
  }

  rep.wall_ms = ms_since(t0);
  rep.finalize_hash();
  return rep;
}

}  // namespace pla
