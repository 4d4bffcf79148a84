#include "dsga/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dsga {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Discrepancy: return "discrepancy";
  }
  return "fail";
}

Check make_check(std::string name, std::string identity, const char* mode, double residual, double tol,
                 std::string detail) {
  Check c;
  c.name = std::move(name);
  c.identity = std::move(identity);
  c.mode = mode;
  c.max_residual = residual;
  c.tolerance = tol;
  c.status = (residual <= tol) ? Status::Pass : Status::Fail;
  c.detail = std::move(detail);
  return c;
}

Check make_discrepancy(std::string name, std::string identity, const char* mode, double literal_residual,
                       double tol, bool failure_explained, std::string detail) {
  Check c = make_check(std::move(name), std::move(identity), mode, literal_residual, tol, std::move(detail));
  if (c.status == Status::Fail && failure_explained) c.status = Status::Discrepancy;
  return c;
}

void Report::add(Check c, const std::string& suite) {
  c.suite = suite;
  checks.push_back(std::move(c));
}

void Report::add_all(std::vector<Check> cs, const std::string& suite) {
  for (auto& c : cs) add(std::move(c), suite);
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

nlohmann::json Report::to_json() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
  nlohmann::json arr = nlohmann::json::array();
  int pass = 0, fail = 0, disc = 0;
  for (const Check* c : sorted) {
    nlohmann::json j;
    j["name"] = c->name;
    j["suite"] = c->suite;
    j["identity"] = c->identity;
    j["mode"] = c->mode;
    j["max_residual"] = c->max_residual;
    j["tolerance"] = c->tolerance;
    j["status"] = status_name(c->status);
    if (!c->detail.empty()) j["detail"] = c->detail;
    if (!c->data.is_null()) j["data"] = c->data;
    arr.push_back(std::move(j));
    (c->status == Status::Pass ? pass : c->status == Status::Fail ? fail : disc)++;
  }
  nlohmann::json out;
  out["schema"] = 1;
  out["config"] = config;
  out["checks"] = std::move(arr);
  out["summary"] = {{"pass", pass}, {"fail", fail}, {"discrepancy", disc}, {"ok", fail == 0}};
  return out;
}

std::string format_residual(double r) {
  char buf[32];
  if (r == 0.0) return "0";
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

namespace {
std::string cell(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '|') r += '\\';
    r += ch;
  }
  return r;
}
}  // namespace

std::string render_markdown(const nlohmann::json& report) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  const auto& s = report.at("summary");
  os << "pass " << s.at("pass").get<int>() << ", fail " << s.at("fail").get<int>() << ", discrepancy "
     << s.at("discrepancy").get<int>() << "\n\n";
  os << "Config: `" << report.at("config").dump() << "`\n\n";
  os << "| check | identity | mode | max residual | tolerance | status |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& c : report.at("checks")) {
    os << "| " << c.at("name").get<std::string>() << " | " << cell(c.at("identity").get<std::string>()) << " | "
       << c.at("mode").get<std::string>() << " | " << format_residual(c.at("max_residual").get<double>()) << " | "
       << format_residual(c.at("tolerance").get<double>()) << " | " << c.at("status").get<std::string>() << " |\n";
  }
  bool notes = false;
  for (const auto& c : report.at("checks")) {
    if (!c.contains("detail")) continue;
    if (!notes) os << "\n## Notes\n\n";
    notes = true;
    os << "- `" << c.at("name").get<std::string>() << "`: " << c.at("detail").get<std::string>() << "\n";
  }
  for (const auto& c : report.at("checks")) {
    if (!c.contains("data") || !c.at("data").contains("table")) continue;
    os << "\n## " << c.at("name").get<std::string>() << "\n\n";
    const auto& t = c.at("data").at("table");
    const auto& cols = c.at("data").at("columns");
    os << "|";
    for (const auto& h : cols) os << " " << h.get<std::string>() << " |";
    os << "\n|";
    for (size_t i = 0; i < cols.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : t) {
      os << "|";
      for (const auto& v : row) os << " " << (v.is_number() ? format_residual(v.get<double>()) : v.dump()) << " |";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace dsga
