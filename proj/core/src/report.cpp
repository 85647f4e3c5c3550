#include "pla/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pla/sha256.hpp"

namespace pla {

using nlohmann::json;

namespace {

json config_json(const ExperimentConfig& c) {
  json j;
  j["c"] = c.c_text;
  j["A"] = c.A;
  j["B"] = c.B;
  j["a"] = c.a;
  j["b"] = c.b;
  j["eps"] = c.eps;
  if (!c.n_list.empty())
    j["n_list"] = c.n_list;
  else
    j["q_max"] = c.q_max;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["precision_bits"] = c.precision_bits;
  j["output_dir"] = c.output_dir;
  return j;
}

json content_tree(const ExperimentReport& r) {
  json j;
  j["kind"] = r.kind;
  j["version"] = r.version;
  j["config"] = config_json(r.config);
  j["input_hash"] = r.input_hash;
  if (!r.lower.empty()) {
    json arr = json::array();
    for (const auto& rec : r.lower) {
      json e;
      e["N"] = rec.N;
      json blocks = json::array();
      for (const auto& b : rec.blocks) {
        blocks.push_back({{"P", b.P},
                          {"T", b.t_value},
                          {"T_main", b.t_main},
                          {"S", b.s_count},
                          {"S_main", b.s_main},
                          {"R", b.r_count},
                          {"R_asym", b.r_asym},
                          {"N_count", b.n_count},
                          {"nu", b.nu}});
      }
      e["blocks"] = std::move(blocks);
      e["lower_bound"] = rec.lower_bound;
      e["mc_estimate"] = rec.mc_estimate;
      e["mc_stderr"] = rec.mc_stderr;
      e["exact_integral"] = rec.exact_integral;
      e["gn"] = rec.gn;
      e["ratio_mc"] = rec.ratio_mc;
      e["ratio_exact"] = rec.ratio_exact;
      e["agree_sigmas"] = rec.agree_sigmas;
      arr.push_back(std::move(e));
    }
    j["per_N"] = std::move(arr);
  }
  if (!r.average.empty()) {
    json arr = json::array();
    for (const auto& rec : r.average) {
      arr.push_back({{"N", rec.N},
                     {"window", rec.window},
                     {"cells", rec.cells},
                     {"jn_normalized", rec.jn_normalized},
                     {"jn_stderr", rec.jn_stderr},
                     {"gn", rec.gn},
                     {"k_required", rec.k_required},
                     {"tail_samples", rec.tail_samples}});
    }
    j["per_N"] = std::move(arr);
  }
  return j;
}

void write_schema(const std::string& csv_path, const std::vector<std::pair<std::string, std::string>>& columns) {
  json j;
  j["file"] = std::filesystem::path(csv_path).filename().string();
  json cols = json::array();
  for (const auto& [name, desc] : columns) cols.push_back({{"name", name}, {"description", desc}});
  j["columns"] = std::move(cols);
  std::ofstream f(csv_path + ".schema.json");
  f << j.dump(2) << "\n";
}

std::string csv_header(const std::vector<std::pair<std::string, std::string>>& columns) {
  std::string h;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i)
      h += ",";
    h += columns[i].first;
  }
  return h;
}

}  // namespace

std::string ExperimentReport::content_json() const { return content_tree(*this).dump(2); }

void ExperimentReport::finalize_hash() { report_hash = sha256_hex(content_json()); }

std::string ExperimentReport::full_json() const {
  json j = content_tree(*this);
  j["report_hash"] = report_hash;
  if (config.timing)
    j["timing"] = {{"wall_ms", wall_ms}};
  return j.dump(2);
}

void ExperimentReport::write(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::trunc);
  if (!f)
    throw std::runtime_error("ExperimentReport::write: cannot open " + path);
  f << full_json() << "\n";
}

std::vector<std::string> emit_plotdata(const ExperimentReport& report, const std::string& kind,
                                       const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };

  if (kind == "ratio-vs-N") {
    std::vector<std::pair<std::string, std::string>> cols = {
        {"N", "parameter N"},
        {"ratio_mc", "Monte-Carlo integral / (b-a) G_N"},
        {"ratio_exact", "interval-measure integral / (b-a) G_N"},
        {"jn_normalized", "averaged error term / (window^2 N / log^3 N)"},
    };
    std::string path = out_dir + "/ratio-vs-N.csv";
    std::ofstream f(path, std::ios::trunc);
    f << csv_header(cols) << "\n";
    for (const auto& r : report.lower)
      f << r.N << "," << fmt(r.ratio_mc) << "," << fmt(r.ratio_exact) << ",\n";
    for (const auto& r : report.average)
      f << r.N << ",,," << fmt(r.jn_normalized) << "\n";
    write_schema(path, cols);
    written.push_back(path);
    return written;
  }
  if (kind == "ratio-vs-P") {
    std::vector<std::pair<std::string, std::string>> cols = {
        {"N", "parameter N"},
        {"P", "block start"},
        {"t_ratio", "T(P) / main term"},
        {"s_ratio", "S(P) / main term"},
        {"r_ratio", "R(P) / asymptote"},
    };
    std::string path = out_dir + "/ratio-vs-P.csv";
    std::ofstream f(path, std::ios::trunc);
    f << csv_header(cols) << "\n";
    for (const auto& r : report.lower)
      for (const auto& b : r.blocks) {
        f << r.N << "," << b.P << "," << fmt(b.t_main > 0 ? b.t_value / b.t_main : 0.0) << ","
          << fmt(b.s_main > 0 ? static_cast<double>(b.s_count) / b.s_main : 0.0) << ","
          << fmt(b.r_asym > 0 ? static_cast<double>(b.r_count) / b.r_asym : 0.0) << "\n";
      }
    write_schema(path, cols);
    written.push_back(path);
    return written;
  }
  if (kind == "bound-diagnostics") {
    std::vector<std::pair<std::string, std::string>> cols = {
        {"context", "which comparison"},
        {"N", "parameter N"},
        {"measured", "measured value"},
        {"reference", "reference value"},
        {"ratio", "measured / reference"},
    };
    std::string path = out_dir + "/bound-diagnostics.csv";
    std::ofstream f(path, std::ios::trunc);
    f << csv_header(cols) << "\n";
    for (const auto& r : report.lower) {
      if (r.gn > 0.0)
        f << "integral-vs-gn," << r.N << "," << fmt(r.mc_estimate) << "," << fmt(r.gn) << ","
          << fmt(r.ratio_mc) << "\n";
      if (r.mc_estimate > 0.0)
        f << "lower-bound-vs-integral," << r.N << "," << fmt(r.lower_bound) << ","
          << fmt(r.mc_estimate) << "," << fmt(r.lower_bound / r.mc_estimate) << "\n";
    }
    for (const auto& r : report.average)
      f << "jn-vs-scale," << r.N << "," << fmt(r.jn_normalized) << ",1," << fmt(r.jn_normalized)
        << "\n";
    write_schema(path, cols);
    written.push_back(path);
    return written;
  }
  throw std::invalid_argument("emit_plotdata: unknown kind '" + kind +
                              "'; valid kinds: ratio-vs-N, ratio-vs-P, bound-diagnostics");
}

}  // namespace pla
