#pragma once

#include <vector>

#include "dsga/report.hpp"

namespace dsga {

// Kernel identities over all registered signatures. exact selects rational
// coefficients; otherwise binary64 with relative tolerance 1e-10.
std::vector<Check> ga_checks(uint64_t seed, bool exact);

}  // namespace dsga
