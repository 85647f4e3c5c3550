// pla: prime-constrained line approximation experiments.
//
// Subcommands: count, integral, expsum, vaaler-check, vaughan-check,
// sieve-count, jn-average, pipeline-3i, pipeline-3ii, emit-plots.
//
// Exit codes: 0 success, 2 configuration error, 3 failed acceptance-style
// assertion inside a check subcommand.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include <pla/arith.hpp>
#include <pla/config.hpp>
#include <pla/continued_fraction.hpp>
#include <pla/counting.hpp>
#include <pla/expsum.hpp>
#include <pla/pipeline.hpp>
#include <pla/rng.hpp>
#include <pla/sievecount.hpp>
#include <pla/vaaler.hpp>
#include <pla/vaughan.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAssert = 3;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
};

pla::ExperimentConfig load_config(const CommonOpts& opts) {
  pla::ExperimentConfig cfg;
  if (!opts.config_path.empty())
    cfg = pla::ExperimentConfig::parse_file(opts.config_path);
  for (const std::string& kv : opts.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw pla::ConfigError({"--set expects key=value, got '" + kv + "'"});
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "flat key = value config file");
  cmd->add_option("--set", opts.overrides, "override one config key, e.g. --set seed=7")
      ->take_all();
}

int cmd_count(const pla::ExperimentConfig& cfg, const std::string& alpha_text,
              std::uint64_t N, const std::string& triple_path) {
  auto constant = pla::RealConstant::parse(cfg.c_text, cfg.precision_bits);
  pla::FixedReal alpha = pla::FixedReal::from_decimal(alpha_text, cfg.precision_bits);
  auto r = pla::count_f_n(alpha, constant.surd(), cfg.eps, N);
  if (!r.c_above_one)
    std::fprintf(stderr, "warning: c <= 1 is outside the theorem hypothesis; counting anyway\n");
  std::printf("count = %llu\n", static_cast<unsigned long long>(r.count));
  if (!triple_path.empty()) {
    std::ofstream f(triple_path, std::ios::trunc);
    f << "p,q,r,slack1,slack2\n";
    for (const auto& t : r.triples)
      f << t.p << "," << t.q << "," << t.r << "," << t.slack1 << "," << t.slack2 << "\n";
    std::printf("wrote %zu triples to %s\n", r.triples.size(), triple_path.c_str());
  }
  return kExitOk;
}

int cmd_integral(const pla::ExperimentConfig& cfg, std::uint64_t N) {
  auto constant = pla::RealConstant::parse(cfg.c_text, cfg.precision_bits);
  auto r = pla::integral_f_n(cfg.a, cfg.b, constant.surd(), cfg.eps, N, cfg.samples, cfg.seed,
                             cfg.threads);
  nlohmann::json j;
  j["estimate"] = r.mc_estimate;
  j["stderr"] = r.mc_stderr;
  j["exact"] = r.exact_sum;
  j["gn_ratio"] =
      N >= 3 ? r.mc_estimate / ((cfg.b - cfg.a) * pla::g_n(cfg.A, cfg.B, cfg.eps, N)) : 0.0;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_expsum(const pla::ExperimentConfig& cfg, std::vector<std::uint64_t> h_list,
               std::uint64_t P) {
  auto constant = pla::RealConstant::parse(cfg.c_text, cfg.precision_bits);
  const auto& c = constant.surd();
  double mu = (cfg.a + cfg.b) / (2.0 * cfg.a);
  if (h_list.empty())
    h_list.push_back(pla::choose_j(P));
  std::uint64_t U = pla::choose_u(P);
  std::printf("H,P,U,K,value,bound,ratio,elapsed_ms\n");
  for (std::uint64_t H : h_list) {
    auto direct = pla::zh_sum(H, c, P, cfg.a, cfg.b, mu);
    if (direct.empty_range)
      std::fprintf(stderr, "warning: empty summation range at H=%llu\n",
                   static_cast<unsigned long long>(H));
    // reference scale H * N^{4/5 + eps} with N the next squared denominator
    auto N = pla::sequence_S_ceiling(c, static_cast<std::uint64_t>(
                                            std::ceil(mu * static_cast<double>(P))));
    double bound =
        N ? static_cast<double>(H) *
                std::pow(static_cast<double>(*N), 0.8 + cfg.eps)
          : 0.0;
    // strongest dyadic block, for the record
    auto k_cap = static_cast<std::uint64_t>(
        std::floor(cfg.b * static_cast<double>(P) / static_cast<double>(U)));
    std::uint64_t best_k = U;
    double best_val = 0.0;
    for (const auto& [K, K2] : pla::dyadic_blocks(U, k_cap)) {
      static_cast<void>(K2);
      auto zk = pla::zhk_sum(H, K, c, P, cfg.a, cfg.b, mu, U);
      if (zk.magnitude > best_val) {
        best_val = zk.magnitude;
        best_k = K;
      }
    }
    std::printf("%llu,%llu,%llu,%llu,%.10g,%.10g,%.10g,%.3f\n",
                static_cast<unsigned long long>(H), static_cast<unsigned long long>(P),
                static_cast<unsigned long long>(U), static_cast<unsigned long long>(best_k),
                direct.magnitude, bound, bound > 0 ? direct.magnitude / bound : 0.0,
                direct.elapsed_ms);
  }
  return kExitOk;
}

int cmd_vaaler_check(int j_max) {
  pla::SplitMix64 rng(2024);
  for (int J : {1, 4, 16, j_max}) {
    pla::VaalerKernel k(J);
    for (int i = 0; i < 20000; ++i) {
      double x = rng.uniform01() * 16.0 - 8.0;
      double d = pla::delta_j(x, k);
      if (d < -1e-12 || std::fabs(pla::psi_star(x, k) - pla::psi(x)) > d + 1e-10) {
        std::printf("FAIL at x=%.17g, J=%d\n", x, J);
        return kExitAssert;
      }
    }
  }
  std::printf("majorant check passed\n");
  return kExitOk;
}

int cmd_vaughan_check() {
  for (std::uint64_t n = 21; n <= 5000; ++n) {
    if (std::fabs(pla::vaughan_lambda(n, 20, 20) - pla::von_mangoldt(n)) > 1e-9) {
      std::printf("FAIL: Lambda reconstruction at n=%llu\n", static_cast<unsigned long long>(n));
      return kExitAssert;
    }
  }
  auto tau = pla::divisor_count_table(100000);
  auto b = pla::vaughan_b_table(100000, 20);
  for (std::uint64_t k = 1; k <= 100000; ++k) {
    if (static_cast<std::uint64_t>(std::llabs(b[k])) > tau[k]) {
      std::printf("FAIL: |b(k)| > tau(k) at k=%llu\n", static_cast<unsigned long long>(k));
      return kExitAssert;
    }
  }
  std::printf("identity and divisor bound checks passed\n");
  return kExitOk;
}

int cmd_sieve_count(const pla::ExperimentConfig& cfg, const std::string& alpha_text,
                    std::uint64_t N, std::uint64_t dmax) {
  auto constant = pla::RealConstant::parse(cfg.c_text, cfg.precision_bits);
  const auto& c = constant.surd();
  pla::FixedReal alpha = pla::FixedReal::from_decimal(alpha_text, cfg.precision_bits);
  double window = pla::window_mu(N, cfg.eps);
  std::printf("d1,d2,d3,count,main_term,rel_err,E_value\n");
  for (const auto& [d1, d2, d3] : pla::sieve_cells(dmax)) {
    auto count = pla::count_sieve_s(alpha, c, N, window, d1, d2, d3);
    double main = static_cast<double>(N) * window * window / static_cast<double>(d1 * d2 * d3);
    double e = pla::e_term(alpha, c, N, window, d1, d2, d3);
    std::printf("%llu,%llu,%llu,%llu,%.10g,%.10g,%.10g\n", static_cast<unsigned long long>(d1),
                static_cast<unsigned long long>(d2), static_cast<unsigned long long>(d3),
                static_cast<unsigned long long>(count), main,
                (static_cast<double>(count) - main) / main, e);
  }
  return kExitOk;
}

int cmd_jn_average(const pla::ExperimentConfig& cfg) {
  auto constant = pla::RealConstant::parse(cfg.c_text, cfg.precision_bits);
  const auto& c = constant.surd();
  nlohmann::json arr = nlohmann::json::array();
  for (std::uint64_t N : pla::resolve_n_list(cfg, c, /*require_s=*/true)) {
    if (N < 2)
      continue;
    auto jn = pla::j_n_average(c, N, cfg.eps, cfg.samples,
                               pla::derive_seed(cfg.seed, "jn-average/N=" + std::to_string(N)),
                               cfg.A, cfg.B, cfg.threads);
    arr.push_back({{"N", N},
                   {"normalized_value", jn.normalized},
                   {"stderr", jn.stderr_norm},
                   {"cells", jn.cells}});
  }
  std::cout << arr.dump(2) << "\n";
  return kExitOk;
}

int run_pipeline(const pla::ExperimentConfig& cfg, bool second) {
  auto rep = second ? pla::run_theorem3ii_pipeline(cfg) : pla::run_theorem3i_pipeline(cfg);
  std::string path = cfg.output_dir + "/" + rep.kind + "-report.json";
  rep.write(path);
  std::printf("report: %s\n", path.c_str());
  std::printf("report_hash: %s\n", rep.report_hash.c_str());
  for (const auto& rec : rep.lower)
    std::printf("N=%llu integral=%.6g exact=%.6g gn_ratio=%.6g\n",
                static_cast<unsigned long long>(rec.N), rec.mc_estimate, rec.exact_integral,
                rec.ratio_mc);
  for (const auto& rec : rep.average)
    std::printf("N=%llu jn_normalized=%.6g stderr=%.6g k_required=%.6g\n",
                static_cast<unsigned long long>(rec.N), rec.jn_normalized, rec.jn_stderr,
                rec.k_required);
  return kExitOk;
}

int cmd_emit_plots(const std::string& report_path, const std::string& kind,
                   const std::string& out_dir) {
  std::ifstream f(report_path);
  if (!f)
    throw pla::ConfigError({"cannot open report '" + report_path + "'"});
  nlohmann::json j = nlohmann::json::parse(f);
  pla::ExperimentReport rep;
  rep.kind = j.value("kind", "");
  rep.version = j.value("version", "");
  rep.input_hash = j.value("input_hash", "");
  if (j.contains("per_N")) {
    for (const auto& e : j["per_N"]) {
      if (rep.kind == "pipeline-3i") {
        pla::LowerBoundRecord rec;
        rec.N = e.value("N", 0ull);
        rec.lower_bound = e.value("lower_bound", 0.0);
        rec.mc_estimate = e.value("mc_estimate", 0.0);
        rec.mc_stderr = e.value("mc_stderr", 0.0);
        rec.exact_integral = e.value("exact_integral", 0.0);
        rec.gn = e.value("gn", 0.0);
        rec.ratio_mc = e.value("ratio_mc", 0.0);
        rec.ratio_exact = e.value("ratio_exact", 0.0);
        if (e.contains("blocks"))
          for (const auto& be : e["blocks"]) {
            pla::BlockRecord b;
            b.P = be.value("P", 0ull);
            b.t_value = be.value("T", 0.0);
            b.t_main = be.value("T_main", 0.0);
            b.s_count = be.value("S", 0ull);
            b.s_main = be.value("S_main", 0.0);
            b.r_count = be.value("R", 0ull);
            b.r_asym = be.value("R_asym", 0.0);
            b.n_count = be.value("N_count", 0ull);
            b.nu = be.value("nu", 0.0);
            rec.blocks.push_back(b);
          }
        rep.lower.push_back(std::move(rec));
      } else {
        pla::AverageRecord rec;
        rec.N = e.value("N", 0ull);
        rec.window = e.value("window", 0.0);
        rec.cells = e.value("cells", 0ull);
        rec.jn_normalized = e.value("jn_normalized", 0.0);
        rec.jn_stderr = e.value("jn_stderr", 0.0);
        rec.gn = e.value("gn", 0.0);
        rec.k_required = e.value("k_required", 0.0);
        rep.average.push_back(std::move(rec));
      }
    }
  }
  for (const std::string& p : pla::emit_plotdata(rep, kind, out_dir))
    std::printf("wrote %s\n", p.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime-constrained line approximation experiments"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string alpha_text = "1.3";
  std::uint64_t N = 144;
  std::uint64_t P = 10000;
  std::uint64_t dmax = 8;
  std::vector<std::uint64_t> h_list;
  std::string triple_path, report_path, kind = "ratio-vs-N", out_dir = "out";
  int j_max = 128;

  auto* count = app.add_subcommand("count", "count solutions of the simultaneous inequalities");
  add_common(count, common);
  count->add_option("--alpha", alpha_text, "alpha as a decimal literal");
  count->add_option("--N", N, "count primes p < N");
  count->add_option("--emit-triples", triple_path, "write a CSV of p,q,r,slack1,slack2");

  auto* integral = app.add_subcommand("integral", "integrate the count over alpha, two routes");
  add_common(integral, common);
  integral->add_option("--N", N, "count primes p < N");

  auto* expsum = app.add_subcommand("expsum", "prime exponential sums, CSV per parameter point");
  add_common(expsum, common);
  expsum->add_option("--H", h_list, "dyadic start H (repeatable)")->take_all();
  expsum->add_option("--P", P, "block parameter P");

  auto* vaaler = app.add_subcommand("vaaler-check", "approximation majorant spot check");
  vaaler->add_option("--J", j_max, "largest kernel order");

  app.add_subcommand("vaughan-check", "identity reconstruction spot check");

  auto* sieve = app.add_subcommand("sieve-count", "per-cell constrained counts, CSV");
  add_common(sieve, common);
  sieve->add_option("--alpha", alpha_text, "alpha as a decimal literal");
  sieve->add_option("--N", N, "range length");
  sieve->add_option("--dmax", dmax, "cell bound d1*d2*d3 <= dmax");

  auto* jn = app.add_subcommand("jn-average", "averaged error terms along the sequence, JSON");
  add_common(jn, common);

  auto* p1 = app.add_subcommand("pipeline-3i", "lower-bound evidence pipeline");
  add_common(p1, common);
  auto* p2 = app.add_subcommand("pipeline-3ii", "error-term average pipeline");
  add_common(p2, common);

  auto* plots = app.add_subcommand("emit-plots", "CSV plot data from a report");
  plots->add_option("--report", report_path, "report JSON path")->required();
  plots->add_option("--kind", kind, "ratio-vs-N | ratio-vs-P | bound-diagnostics");
  plots->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed())
      return cmd_count(load_config(common), alpha_text, N, triple_path);
    if (integral->parsed())
      return cmd_integral(load_config(common), N);
    if (expsum->parsed())
      return cmd_expsum(load_config(common), h_list, P);
    if (vaaler->parsed())
      return cmd_vaaler_check(j_max);
    if (app.get_subcommand("vaughan-check")->parsed())
      return cmd_vaughan_check();
    if (sieve->parsed())
      return cmd_sieve_count(load_config(common), alpha_text, N, dmax);
    if (jn->parsed())
      return cmd_jn_average(load_config(common));
    if (p1->parsed())
      return run_pipeline(load_config(common), false);
    if (p2->parsed())
      return run_pipeline(load_config(common), true);
    if (plots->parsed())
      return cmd_emit_plots(report_path, kind, out_dir);
  } catch (const pla::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
