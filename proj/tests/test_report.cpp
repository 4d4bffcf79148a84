#include <set>

#include "doctest.h"
#include "dsga/suites.hpp"
#include "helpers.hpp"

using namespace dsga;

TEST_SUITE("report") {
  TEST_CASE("full run covers exactly the manifest") {
    RunConfig cfg;
    Report r = run_suites(cfg);
    std::set<std::string> got, want;
    for (const auto& c : r.checks) {
      CHECK_MESSAGE(got.insert(c.name).second, "duplicate check ", c.name);
      const auto& names = manifest().at(c.suite);
      CHECK_MESSAGE(std::find(names.begin(), names.end(), c.name) != names.end(), c.name, " not in ", c.suite);
    }
    for (const auto& [s, names] : manifest()) want.insert(names.begin(), names.end());
    CHECK(got == want);
    CHECK(r.ok());
  }

  TEST_CASE("same seed gives identical JSON") {
    RunConfig cfg;
    cfg.suite = "repr";
    CHECK(run_suites(cfg).to_json().dump() == run_suites(cfg).to_json().dump());
  }

  TEST_CASE("checks are sorted by name and schema is versioned") {
    RunConfig cfg;
    cfg.suite = "limit";
    auto j = run_suites(cfg).to_json();
    CHECK(j["schema"] == 1);
    std::string prev;
    for (const auto& c : j["checks"]) {
      CHECK(prev < c["name"].get<std::string>());
      prev = c["name"];
    }
    auto sweep = j["checks"][2];
    REQUIRE(sweep["name"] == "operators.limit.sweep");
    CHECK(sweep["data"]["table"].size() == 4);
  }

  TEST_CASE("markdown is derived from JSON") {
    RunConfig cfg;
    cfg.suite = "limit";
    auto j = run_suites(cfg).to_json();
    std::string md = render_markdown(j);
    for (const auto& c : j["checks"]) CHECK(md.find(c["name"].get<std::string>()) != std::string::npos);
    CHECK(md.find("| ell | lambda | D |") != std::string::npos);
  }

  TEST_CASE("tolerance overrides recompute status") {
    RunConfig cfg;
    cfg.suite = "ga";
    cfg.mode = Mode::Float;
    cfg.tolerances["ga.associativity"] = 0.0;
    cfg.tolerances["ga.examples"] = 0.5;
    auto r = run_suites(cfg);
    const Check& a = test::find(r.checks, "ga.associativity");
    CHECK(a.tolerance == 0.0);
    CHECK((a.max_residual > 0 ? a.status == Status::Fail : a.status == Status::Pass));
    CHECK(test::find(r.checks, "ga.examples").tolerance == 0.5);
  }

  TEST_CASE("discrepancies stay discrepancies under a tighter tolerance") {
    Check c = make_discrepancy("x", "x", "exact", 1.0, 0.0, true, "");
    apply_tolerance(c, 1e-3);
    CHECK(c.status == Status::Discrepancy);
    apply_tolerance(c, 2.0);
    CHECK(c.status == Status::Pass);
  }

  TEST_CASE("invalid configurations are rejected") {
    RunConfig cfg;
    cfg.suite = "nonsense";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.ell = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.m = -1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.tolerances["no.such.check"] = 1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }

  TEST_CASE("pipes in identities are escaped") {
    Report r;
    r.add(make_check("a", "x _| y", "exact", 0, 0), "ga");
    CHECK(render_markdown(r.to_json()).find("x _\\| y") != std::string::npos);
  }
}
