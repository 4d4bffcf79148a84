#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace dsga {

enum class Status { Pass, Fail, Discrepancy };

const char* status_name(Status s);

// One verified identity. A Discrepancy is a literal statement that was found
// not to hold, where the exact form of the failure was itself verified.
struct Check {
  std::string name;
  std::string suite;
  std::string identity;
  std::string mode;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::Pass;
  std::string detail;
  nlohmann::json data;
};

Check make_check(std::string name, std::string identity, const char* mode, double residual, double tol,
                 std::string detail = {});

// Literal statement residual plus whether the predicted failure shape was confirmed.
Check make_discrepancy(std::string name, std::string identity, const char* mode, double literal_residual,
                       double tol, bool failure_explained, std::string detail);

struct Report {
  nlohmann::json config;
  std::vector<Check> checks;

  void add(Check c, const std::string& suite);
  void add_all(std::vector<Check> cs, const std::string& suite);
  bool ok() const;
  nlohmann::json to_json() const;
};

std::string render_markdown(const nlohmann::json& report);
std::string format_residual(double r);

}  // namespace dsga
