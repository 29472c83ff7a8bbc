// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "lisscheb/sample.hpp"
#include "lisscheb/types.hpp"

namespace lisscheb {

/// sum_i w_i h(i)
[[nodiscard]] double integrate(const SampleVector& h);

struct ExactnessRow {
  SpectralIndex gamma;
  /// sum_i w_i T_gamma(z_i)
  double rule = 0.0;
  /// (1 / pi^d) integral of T_gamma w: 1 at gamma = 0, else 0
  double truth = 0.0;
  /// closed-form discrete integral (alias_integral)
  double alias = 0.0;
  /// gamma != 0 with a nonzero closed-form value
  bool is_alias = false;
  /// |rule - truth| < tol for exact frequencies, |rule - alias| < tol for alias frequencies
  bool pass = false;
};

/// One row per gamma in prod_j [0, box_j], lexicographic order.
[[nodiscard]] std::vector<ExactnessRow> exactness_table(const NodeSpec& spec,
                                                        std::span<const Index> box,
                                                        double tol = 1e-12);

}  // namespace lisscheb
