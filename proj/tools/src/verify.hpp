// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lisscheb/lisscheb.hpp"

namespace lisscheb::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double measure = 0.0;
  double tolerance = 0.0;
};

enum class Suite { all, orthogonality, curve, quadrature, transform };

Suite parse_suite(const std::string& name);

/// Runs the invariant suites against the given weights (normally nodes.weights()).
std::vector<CheckResult> run_suites(const NodeSet& nodes, std::span<const double> weights, Suite suite);

}  // namespace lisscheb::cli
