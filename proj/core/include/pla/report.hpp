// Structured experiment reports and CSV plot-data emission.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pla/config.hpp"

namespace pla {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct BlockRecord {
  std::uint64_t P = 0;
  double t_value = 0.0, t_main = 0.0;
  std::uint64_t s_count = 0;
  double s_main = 0.0;
  std::uint64_t r_count = 0;
  double r_asym = 0.0;
  std::uint64_t n_count = 0;
  double nu = 0.0;
};

// Per-N record of the lower-bound pipeline.
struct LowerBoundRecord {
  std::uint64_t N = 0;
  std::vector<BlockRecord> blocks;
  double lower_bound = 0.0;  // sum over blocks of nu * N(P)
  double mc_estimate = 0.0, mc_stderr = 0.0;
  double exact_integral = 0.0;
  double gn = 0.0;  // (b-a) * G_N(A,B); 0 when N < 3 (formula undefined)
  double ratio_mc = 0.0, ratio_exact = 0.0;
  double agree_sigmas = 0.0;
};

// Per-N record of the error-term averaging pipeline.
struct AverageRecord {
  std::uint64_t N = 0;
  double window = 0.0;
  std::uint64_t cells = 0;
  double jn_normalized = 0.0, jn_stderr = 0.0;
  double gn = 0.0;
  double k_required = 0.0;  // max over sampled alpha of (F_N - J_N)/G_N
  std::uint64_t tail_samples = 0;
};

struct ExperimentReport {
  std::string kind;  // "pipeline-3i" or "pipeline-3ii"
  std::string version = kLibraryVersion;
  ExperimentConfig config;
  std::string input_hash;  // sha256 of the serialized config
  std::vector<LowerBoundRecord> lower;
  std::vector<AverageRecord> average;
  double wall_ms = 0.0;     // excluded from the content hash
  std::string report_hash;  // sha256 of content_json()

  // Canonical deterministic serialization: everything except wall-clock.
  std::string content_json() const;
  // content plus a timing block when config.timing is on.
  std::string full_json() const;
  void finalize_hash();
  void write(const std::string& path) const;
};

// One CSV (plus a .schema.json sidecar naming the columns) per figure kind.
// Kinds: "ratio-vs-N", "ratio-vs-P", "bound-diagnostics".  Unknown kinds
// raise std::invalid_argument listing the valid ones.
std::vector<std::string> emit_plotdata(const ExperimentReport& report, const std::string& kind,
                                       const std::string& out_dir);

}  // namespace pla
