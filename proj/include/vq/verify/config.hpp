#pragma once

/**
 * @file config.hpp
 * @brief Suite configuration: range and list parsing, key=value config
 * files, per-suite defaults and desk-scale bounds.
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vq/errors.hpp"
#include "vq/verify/report.hpp"

namespace vq::verify {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "combinatorics", "multiboson", "plasma", "characters",
                                              "realizations"};
  return names;
}

struct IntRange {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline long long parse_integer(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("invalid integer for " + what + ": '" + text + "'");
  return v;
}

inline double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size() || !std::isfinite(v)) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + what + ": '" + text + "'");
  }
}

/// "A..B" or a single integer "A".
inline IntRange parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = static_cast<int>(parse_integer(text, what));
  } else {
    r.lo = static_cast<int>(parse_integer(text.substr(0, dots), what));
    r.hi = static_cast<int>(parse_integer(text.substr(dots + 2), what));
  }
  if (r.lo > r.hi) throw ConfigError(what + " range is empty: '" + text + "'");
  return r;
}

inline std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item, what));
  if (out.empty()) throw ConfigError(what + " list is empty");
  return out;
}

/// key=value lines; '#' starts a comment. Keys are the long flag names.
inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

/// Raw user choices; unset fields fall back to per-suite defaults.
struct SuiteConfig {
  std::string suite;
  std::optional<IntRange> k;
  std::optional<IntRange> n;
  std::optional<std::vector<double>> beta;
  std::optional<int> order;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
  bool timing = false;
  std::string residuals_path;
  unsigned threads = 1;

  /// Applies one key=value setting (config file or flag).
  void set(const std::string& key, const std::string& value) {
    if (key == "k") {
      k = parse_range(value, "k");
    } else if (key == "n-range") {
      n = parse_range(value, "n-range");
    } else if (key == "beta") {
      beta = parse_real_list(value, "beta");
    } else if (key == "order") {
      order = static_cast<int>(parse_integer(value, "order"));
    } else if (key == "samples") {
      const long long s = parse_integer(value, "samples");
      if (s <= 0) throw ConfigError("samples must be positive");
      samples = static_cast<std::uint64_t>(s);
    } else if (key == "seed") {
      const long long s = parse_integer(value, "seed");
      if (s < 0) throw ConfigError("seed must be non-negative");
      seed = static_cast<std::uint64_t>(s);
    } else if (key == "tol") {
      tol = parse_real(value, "tol");
    } else if (key == "format") {
      format = value;
    } else if (key == "out") {
      out = value;
    } else {
      throw ConfigError("unknown configuration key '" + key + "'");
    }
  }
};

/// Fully resolved parameters for one suite.
struct SuiteParams {
  std::string suite;
  IntRange k{0, 0};
  IntRange n{0, 0};
  std::vector<double> beta;
  int order = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 42;
  double tol = 1e-8;

  /// Deterministic description for the report metadata (no paths, no thread count).
  [[nodiscard]] Json to_json() const {
    Json j = Json::object();
    j["k"] = std::to_string(k.lo) + ".." + std::to_string(k.hi);
    j["n_range"] = std::to_string(n.lo) + ".." + std::to_string(n.hi);
    j["beta"] = beta;
    j["order"] = order;
    j["samples"] = samples;
    j["tol"] = tol;
    return j;
  }
};

namespace detail {

inline void require_within(const IntRange& r, int lo, int hi, const std::string& what, const std::string& suite) {
  if (r.lo < lo || r.hi > hi)
    throw ConfigError(suite + ": " + what + " must lie within " + std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace detail

inline constexpr double kDefaultOperatorTolerance = 1e-8;
inline constexpr std::uint64_t kDefaultMcSamples = 1000000;

inline SuiteParams resolve(const SuiteConfig& c, const std::string& suite) {
  SuiteParams p;
  p.suite = suite;
  p.seed = c.seed;
  p.tol = c.tol.value_or(kDefaultOperatorTolerance);
  if (!(p.tol > 0.0) || p.tol >= 1.0) throw ConfigError("tol must lie in (0, 1)");
  p.beta = c.beta.value_or(std::vector<double>{1.0});
  p.order = c.order.value_or(60);
  p.samples = c.samples.value_or(kDefaultMcSamples);

  if (suite == "arith") {
    p.k = c.k.value_or(IntRange{1, 8});
    p.n = c.n.value_or(IntRange{1, 8});
    detail::require_within(p.n, 1, 8, "n-range (matrix size)", suite);
    detail::require_within(p.k, 1, 8, "k (series determinant size)", suite);
  } else if (suite == "combinatorics") {
    p.k = c.k.value_or(IntRange{2, 12});
    p.n = c.n.value_or(IntRange{2, 7});
    detail::require_within(p.k, 2, 16, "k", suite);
    detail::require_within(p.n, 1, 7, "n-range (point-set size)", suite);
  } else if (suite == "multiboson") {
    p.k = c.k.value_or(IntRange{2, 5});
    p.n = c.n.value_or(IntRange{0, 0});
    detail::require_within(p.k, 2, 8, "k", suite);
    for (double b : p.beta)
      if (std::abs(b) > 3.0) throw ConfigError("multiboson: |beta| must be <= 3");
  } else if (suite == "plasma") {
    p.k = c.k.value_or(IntRange{1, 3});  // plasma exponent m / kappa
    p.n = c.n.value_or(IntRange{1, 5});
    detail::require_within(p.n, 1, 5, "n-range (particles)", suite);
    detail::require_within(p.k, 1, 3, "k (plasma exponent)", suite);
    if (p.samples < 10000 || p.samples > 100000000) throw ConfigError("plasma: samples must lie in 1e4..1e8");
  } else if (suite == "characters") {
    p.k = c.k.value_or(IntRange{2, 4});
    p.n = c.n.value_or(IntRange{0, 0});
    detail::require_within(p.k, 2, 5, "k", suite);
    if (p.order < 1 || p.order + p.k.hi > 200) throw ConfigError("characters: order must lie in 1..200-k");
  } else if (suite == "realizations") {
    p.k = c.k.value_or(IntRange{1, 4});  // sVir index bound
    p.n = c.n.value_or(IntRange{12, 12});  // mode window
    detail::require_within(p.k, 1, 4, "k (sVir index)", suite);
    detail::require_within(p.n, 12, 24, "n-range (mode window)", suite);
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  if (c.format != "json" && c.format != "csv" && c.format != "md")
    throw ConfigError("format must be json, csv or md");
  return p;
}

}  // namespace vq::verify
