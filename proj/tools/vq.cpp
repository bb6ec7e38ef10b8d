// vq: command-line runner for the verification suites.
//
// Exit codes: 0 all checks pass (findings allowed), 1 some check failed,
// 2 usage or configuration error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "vq/errors.hpp"
#include "vq/verify/config.hpp"
#include "vq/verify/report.hpp"
#include "vq/verify/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

unsigned worker_threads() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("VQ_THREADS")) {
    try {
      const long v = std::stol(cap);
      if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw vq::ConfigError(std::string("VQ_THREADS must be a positive integer, got '") + cap + "'");
    }
  }
  return n;
}

void emit(std::ostream& os, const vq::verify::Report& r, const std::string& format) {
  if (format == "json") vq::verify::write_json(os, r);
  else if (format == "csv") vq::verify::write_csv(os, r);
  else vq::verify::write_markdown(os, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for the q-series, multiboson, plasma and Virasoro modules"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "Run a named suite or all of them");
  std::string suite;
  std::string config_path;
  std::string residuals_path;
  bool timing = false;
  std::map<std::string, std::string> flags;
  verify->add_option("suite", suite, "arith|combinatorics|multiboson|plasma|characters|realizations|all")->required();
  verify->add_option("--config", config_path, "key=value file with the same keys as the flags");
  for (const char* key : {"k", "n-range", "beta", "order", "samples", "seed", "tol", "format", "out"}) {
    verify->add_option_function<std::string>(std::string("--") + key,
                                             [&flags, key](const std::string& v) { flags[key] = v; });
  }
  verify->add_flag("--timing", timing, "Add wall time to the report metadata");
  verify->add_option("--residuals", residuals_path, "Write the sVir residual tables as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  vq::verify::SuiteConfig config;
  try {
    config.suite = suite;
    if (suite != "all" && std::find(vq::verify::suite_names().begin(), vq::verify::suite_names().end(), suite) ==
                              vq::verify::suite_names().end())
      throw vq::ConfigError("unknown suite '" + suite + "'");
    if (!config_path.empty())
      for (const auto& [key, value] : vq::verify::parse_config_file(config_path)) config.set(key, value);
    for (const auto& [key, value] : flags) config.set(key, value);
    config.timing = timing;
    config.residuals_path = residuals_path;
    config.threads = worker_threads();
    // Validate every requested suite before running anything.
    if (suite == "all") {
      for (const auto& s : vq::verify::suite_names()) vq::verify::resolve(config, s);
    } else {
      vq::verify::resolve(config, suite);
    }
  } catch (const vq::ConfigError& e) {
    std::cerr << "vq: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  vq::verify::Report report = vq::verify::run_suite(config);
  if (config.timing)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (config.out.empty()) {
    emit(std::cout, report, config.format);
  } else {
    std::ofstream os(config.out);
    if (!os) {
      std::cerr << "vq: cannot open '" << config.out << "': " << std::strerror(errno) << '\n';
      return kExitUsage;
    }
    emit(os, report, config.format);
  }

  if (!config.residuals_path.empty()) {
    std::ofstream os(config.residuals_path);
    if (!os) {
      std::cerr << "vq: cannot open '" << config.residuals_path << "': " << std::strerror(errno) << '\n';
      return kExitUsage;
    }
    const int k_max = vq::verify::resolve(config, "realizations").k.hi;
    vq::verify::write_svir_residuals(os, k_max);
  }

  std::cerr << report.checks.size() << " checks: " << report.count(vq::verify::Status::pass) << " pass, "
            << report.count(vq::verify::Status::fail) << " fail, " << report.count(vq::verify::Status::finding)
            << " finding\n";
  return report.any_failed() ? kExitFail : kExitPass;
}
