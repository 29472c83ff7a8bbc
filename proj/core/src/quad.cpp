// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/quad.hpp"

#include <cmath>
#include <string>

#include "lisscheb/errors.hpp"
#include "lisscheb/transform.hpp"

namespace lisscheb {

double integrate(const SampleVector& h) { return discrete_integral(h); }

std::vector<ExactnessRow> exactness_table(const NodeSpec& spec, std::span<const Index> box,
                                          double tol) {
  const std::size_t d = spec.dim();
  if (box.size() != d) {
    throw ValidationError("degree box has " + std::to_string(box.size()) + " entries, expected " +
                          std::to_string(d));
  }
  for (Index b : box) {
    if (b < 0) throw InvalidRange("degree box bounds must be non-negative");
  }
  const auto nodes = build_node_set(spec);

  std::vector<ExactnessRow> rows;
  std::vector<Index> g(d, 0);
  while (true) {
    ExactnessRow row;
    row.gamma = SpectralIndex(std::vector<Index>(g));
    const auto chi = chi_values(*nodes, g);
    double rule = 0.0;
    for (std::size_t k = 0; k < nodes->size(); ++k) rule += nodes->weight(k) * chi[k];
    bool zero = true;
    for (Index v : g) zero = zero && v == 0;
    row.rule = rule;
    row.truth = zero ? 1.0 : 0.0;
    row.alias = alias_integral(spec, g);
    row.is_alias = !zero && row.alias != 0.0;
    row.pass = std::abs(rule - (row.is_alias ? row.alias : row.truth)) < tol;
    rows.push_back(std::move(row));

    std::size_t j = d;
    while (j-- > 0) {
      if (++g[j] <= box[j]) break;
      g[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return rows;
}

}  // namespace lisscheb
