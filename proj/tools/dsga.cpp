#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dsga/geometry.hpp"
#include "dsga/suites.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw dsga::ConfigError("--tol expects NAME=VALUE, got '" + s + "'");
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(s.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw dsga::ConfigError("--tol value is not a number in '" + s + "'");
    }
    if (used != s.size() - eq - 1) throw dsga::ConfigError("--tol value is not a number in '" + s + "'");
    out[s.substr(0, eq)] = v;
  }
  return out;
}

bool write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

int verify(dsga::RunConfig cfg, const std::vector<std::string>& tol_items) {
  try {
    cfg.tolerances = parse_overrides(tol_items);
    cfg.validate();
  } catch (const dsga::ConfigError& e) {
    std::cerr << "dsga verify: " << e.what() << "\n";
    return kExitUsage;
  }

  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) {
    std::cerr << "dsga verify: cannot create output directory '" << cfg.out << "': " << ec.message() << "\n";
    return kExitUsage;
  }

  dsga::Report report = dsga::run_suites(cfg);
  nlohmann::json j = report.to_json();
  const fs::path dir(cfg.out);
  if (!write_file(dir / "report.json", j.dump(2) + "\n") || !write_file(dir / "report.md", dsga::render_markdown(j))) {
    std::cerr << "dsga verify: cannot write reports under '" << cfg.out << "'\n";
    return kExitUsage;
  }

  for (const auto& c : j["checks"])
    if (c["status"] != "pass")
      std::cout << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << "  residual "
                << dsga::format_residual(c["max_residual"].get<double>()) << " (tol "
                << dsga::format_residual(c["tolerance"].get<double>()) << ")\n";
  const auto& s = j["summary"];
  std::cout << s["pass"] << " pass, " << s["fail"] << " fail, " << s["discrepancy"] << " discrepancy; reports in "
            << (dir / "report.json").string() << "\n";
  return report.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric-algebra verification harness for Dirac-Hestenes equations on de Sitter space"};
  app.require_subcommand(1);

  dsga::RunConfig cfg;
  if (const char* env = std::getenv("DSGA_OUT_DIR")) cfg.out = env;
  std::vector<std::string> tol_items;
  std::string mode = "exact";

  auto* v = app.add_subcommand("verify", "Run check suites and write report.json and report.md");
  std::vector<std::string> suites{"all"};
  for (const auto& s : dsga::suite_names()) suites.push_back(s);
  v->add_option("--suite", cfg.suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  v->add_option("--ell", cfg.ell, "de Sitter radius")->check(CLI::PositiveNumber)->capture_default_str();
  v->add_option("--m", cfg.m, "Mass parameter")->check(CLI::NonNegativeNumber)->capture_default_str();
  v->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  v->add_option("--mode", mode, "Arithmetic for the ga suite")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  v->add_option("--out", cfg.out, "Output directory (default $DSGA_OUT_DIR or .)")->capture_default_str();
  v->add_option("--tol", tol_items, "Tolerance override NAME=VALUE; repeatable");

  double ell = 1.0, extent = 3.0;
  int resolution = 50;
  bool lightlike = false;
  auto* c = app.add_subcommand("chart", "Write the chart region grid as CSV to stdout");
  c->add_option("--ell", ell, "de Sitter radius")->check(CLI::PositiveNumber)->capture_default_str();
  c->add_option("--extent", extent, "Half-width of the (t, x1) window")->check(CLI::PositiveNumber)->capture_default_str();
  c->add_option("--resolution", resolution, "Samples per axis")->check(CLI::Range(2, 100000))->capture_default_str();
  c->add_flag("--lightlike", lightlike, "Append null lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*v) {
    cfg.mode = mode == "float" ? dsga::Mode::Float : dsga::Mode::Exact;
    return verify(cfg, tol_items);
  }
  try {
    dsga::emit_chart_grid(std::cout, ell, extent, resolution, lightlike);
  } catch (const std::invalid_argument& e) {
    std::cerr << "dsga chart: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
