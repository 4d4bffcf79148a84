#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dsga/report.hpp"

namespace dsga::test {

// Every check passes except the named ones, which must come out as discrepancies.
inline void expect_clean(const std::vector<Check>& cs, const std::set<std::string>& discrepancies = {}) {
  REQUIRE_FALSE(cs.empty());
  for (const auto& c : cs) {
    INFO(c.name, ": residual ", c.max_residual, " tol ", c.tolerance, " ", c.detail);
    if (discrepancies.count(c.name)) CHECK(c.status == Status::Discrepancy);
    else CHECK(c.status == Status::Pass);
  }
}

inline const Check& find(const std::vector<Check>& cs, const std::string& name) {
  auto it = std::find_if(cs.begin(), cs.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != cs.end());
  return *it;
}

}  // namespace dsga::test
