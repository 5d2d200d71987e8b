#pragma once

// Named verification suites over seeded corpora.

#include <string>
#include <vector>

#include "multideal/report.hpp"

namespace multideal {

/// subadditivity, summation, skoda, symbolic, asymptotic, tau-vs-j, paper-example, all.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite. Instances are checked concurrently; results come back in index order.
/// Throws InvalidSpec for an unknown suite or a ring the suite cannot use.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace multideal
