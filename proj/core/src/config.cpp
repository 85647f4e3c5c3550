#include "pla/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pla/continued_fraction.hpp"

namespace pla {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size())
      throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw ConfigError({"key '" + key + "': cannot parse real value '" + v + "'"});
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t r = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), r);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError({"key '" + key + "': cannot parse natural value '" + v + "'"});
  return r;
}

std::string format_double(double d) {
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& violations)
    : std::runtime_error("invalid configuration:\n  " + join(violations, "\n  ")),
      violations_(violations) {}

std::vector<std::string> ExperimentConfig::violations() const {
  std::vector<std::string> v;
  if (!(A > 0.0))
    v.push_back("A must be > 0");
  if (!(A <= a))
    v.push_back("need A <= a");
  if (!(a < b))
    v.push_back("need a < b");
  if (!(b <= B))
    v.push_back("need b <= B");
  if (!(eps > 0.0 && eps < 0.2))
    v.push_back("eps must lie in (0, 1/5)");
  if (precision_bits < 96)
    v.push_back("precision_bits must be >= 96");
  if (samples < 10)
    v.push_back("samples must be >= 10");
  if (n_list.empty() && q_max < 1)
    v.push_back("either n_list or q_max >= 1 is required");
  if (threads < 0)
    v.push_back("threads must be >= 0");
  try {
    RealConstant::parse(c_text, std::max(precision_bits, 96));
  } catch (const std::exception& e) {
    v.push_back(std::string("constant c: ") + e.what());
  }
  return v;
}

void ExperimentConfig::validate() const {
  auto v = violations();
  if (!v.empty())
    throw ConfigError(v);
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (key == "c")
    c_text = value;
  else if (key == "A")
    A = parse_double(key, value);
  else if (key == "B")
    B = parse_double(key, value);
  else if (key == "a")
    a = parse_double(key, value);
  else if (key == "b")
    b = parse_double(key, value);
  else if (key == "eps")
    eps = parse_double(key, value);
  else if (key == "q_max")
    q_max = parse_u64(key, value);
  else if (key == "n_list") {
    n_list.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty())
        n_list.push_back(parse_u64(key, item));
    }
  } else if (key == "samples")
    samples = parse_u64(key, value);
  else if (key == "seed")
    seed = parse_u64(key, value);
  else if (key == "precision_bits")
    precision_bits = static_cast<int>(parse_u64(key, value));
  else if (key == "output_dir")
    output_dir = value;
  else if (key == "threads")
    threads = static_cast<int>(parse_u64(key, value));
  else if (key == "timing")
    timing = (value == "on" || value == "true" || value == "1");
  else
    throw ConfigError({"unknown key '" + key + "'"});
}

std::string ExperimentConfig::canonical_serialize() const {
  std::ostringstream os;
  os << "c = " << c_text << "\n";
  os << "A = " << format_double(A) << "\n";
  os << "B = " << format_double(B) << "\n";
  os << "a = " << format_double(a) << "\n";
  os << "b = " << format_double(b) << "\n";
  os << "eps = " << format_double(eps) << "\n";
  if (!n_list.empty()) {
    os << "n_list = ";
    for (std::size_t i = 0; i < n_list.size(); ++i) os << (i ? "," : "") << n_list[i];
    os << "\n";
  } else {
    os << "q_max = " << q_max << "\n";
  }
  os << "samples = " << samples << "\n";
  os << "seed = " << seed << "\n";
  os << "precision_bits = " << precision_bits << "\n";
  os << "output_dir = " << output_dir << "\n";
  return os.str();
}

std::string ExperimentConfig::serialize() const {
  std::ostringstream os;
  os << canonical_serialize();
  os << "threads = " << threads << "\n";
  os << "timing = " << (timing ? "on" : "off") << "\n";
  return os.str();
}

ExperimentConfig ExperimentConfig::parse_string(const std::string& text) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError({"line " + std::to_string(lineno) + ": expected 'key = value'"});
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw ConfigError({"cannot open config file '" + path + "'"});
  std::ostringstream os;
  os << f.rdbuf();
  return parse_string(os.str());
}

}  // namespace pla
