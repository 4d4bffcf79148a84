#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsga/report.hpp"

namespace dsga {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Mode { Exact, Float };

struct RunConfig {
  std::string suite = "all";
  double ell = 1.0;
  double m = 1.0;
  uint64_t seed = 20240101;
  Mode mode = Mode::Exact;
  std::string out = ".";
  std::map<std::string, double> tolerances;

  // Throws ConfigError on an unknown suite, ell <= 0, m < 0 or an override naming no check.
  void validate() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Check names each suite must report, independent of what the runners emit.
const std::map<std::string, std::vector<std::string>>& manifest();

std::vector<Check> run_suite(const std::string& suite, const RunConfig& cfg);
Report run_suites(const RunConfig& cfg);

// Replaces the tolerance of a named check and recomputes its status.
void apply_tolerance(Check& c, double tol);

}  // namespace dsga
