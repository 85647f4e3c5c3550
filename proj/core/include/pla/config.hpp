// Experiment configuration: a flat key = value text format plus overrides.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pla {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::vector<std::string>& violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct ExperimentConfig {
  std::string c_text = "sqrt2";  // slope constant, surd form or named
  double A = 1.0, B = 2.0;       // outer frame 0 < A <= a < b <= B
  double a = 1.2, b = 1.8;
  double eps = 0.1;                  // in (0, 1/5)
  std::vector<std::uint64_t> n_list;  // explicit N values; empty means use q_max
  std::uint64_t q_max = 144;          // N ranges over squared denominators <= q_max^2
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  int precision_bits = 128;  // >= 96
  std::string output_dir = "out";
  int threads = 0;      // 0 = hardware concurrency
  bool timing = true;   // include wall-clock in emitted reports

  // Returns the list of invariant violations (empty when valid).
  std::vector<std::string> violations() const;
  void validate() const;  // throws ConfigError listing every failed invariant

  void set(const std::string& key, const std::string& value);  // one override
  std::string serialize() const;
  // serialization of the semantic inputs only: threads and timing are
  // execution details and do not affect any computed value
  std::string canonical_serialize() const;

  static ExperimentConfig parse_string(const std::string& text);
  static ExperimentConfig parse_file(const std::string& path);
};

}  // namespace pla
