#pragma once

/**
 * @file report.hpp
 * @brief Verification records and their JSON / CSV / Markdown renderings.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace vq::verify {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, finding };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::finding: return "finding";
  }
  return "fail";
}

/// Where the expected value comes from.
enum class Provenance { stated, derived, convention };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::stated: return "stated";
    case Provenance::derived: return "derived";
    case Provenance::convention: return "convention";
  }
  return "derived";
}

struct CheckRecord {
  std::string name;
  Json params = Json::object();
  Status status = Status::pass;
  std::string expected;
  std::string actual;
  std::optional<double> residual;
  Provenance provenance = Provenance::derived;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::string version;
  std::vector<CheckRecord> checks;
  std::optional<double> wall_seconds;  // only emitted on request; breaks byte-identity

  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  }

  [[nodiscard]] std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
  }

  [[nodiscard]] bool any_failed() const { return count(Status::fail) > 0; }
};

namespace detail {

inline Json residual_json(const std::optional<double>& r) {
  if (!r) return nullptr;
  if (!std::isfinite(*r)) return std::to_string(*r);
  return *r;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string format_residual(const std::optional<double>& r) {
  if (!r) return "";
  std::ostringstream os;
  os.precision(6);
  os << *r;
  return os.str();
}

inline std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace detail

inline Json to_json(const Report& r) {
  Json meta = Json::object();
  meta["seed"] = r.seed;
  meta["config"] = r.config;
  meta["version"] = r.version;
  if (r.wall_seconds) meta["timing"] = {{"wall_seconds", *r.wall_seconds}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["params"] = c.params;
    j["status"] = to_string(c.status);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["residual"] = detail::residual_json(c.residual);
    j["provenance"] = to_string(c.provenance);
    checks.push_back(std::move(j));
  }
  Json out = Json::object();
  out["suite"] = r.suite;
  out["meta"] = std::move(meta);
  out["checks"] = std::move(checks);
  return out;
}

inline void write_json(std::ostream& os, const Report& r) { os << to_json(r).dump(2) << '\n'; }

inline void write_csv(std::ostream& os, const Report& r) {
  os << "suite,name,status,params,expected,actual,residual,provenance\n";
  for (const auto& c : r.checks) {
    os << detail::csv_field(r.suite) << ',' << detail::csv_field(c.name) << ',' << to_string(c.status) << ','
       << detail::csv_field(c.params.dump()) << ',' << detail::csv_field(c.expected) << ','
       << detail::csv_field(c.actual) << ',' << detail::format_residual(c.residual) << ','
       << to_string(c.provenance) << '\n';
  }
}

inline void write_markdown(std::ostream& os, const Report& r) {
  os << "# Verification report: " << r.suite << "\n\n";
  os << "seed " << r.seed << ", " << r.checks.size() << " checks: " << r.count(Status::pass) << " pass, "
     << r.count(Status::fail) << " fail, " << r.count(Status::finding) << " finding\n\n";
  os << "| name | status | expected | actual | residual |\n|---|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    os << "| " << detail::md_cell(c.name) << " | " << to_string(c.status) << " | " << detail::md_cell(c.expected)
       << " | " << detail::md_cell(c.actual) << " | " << detail::format_residual(c.residual) << " |\n";
  }
}

}  // namespace vq::verify
