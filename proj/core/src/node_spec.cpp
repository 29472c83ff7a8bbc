// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/node_spec.hpp"

#include <string>

#include "lisscheb/errors.hpp"
#include "lisscheb/types.hpp"

namespace lisscheb {

std::string to_string(FaceSet m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t j = 0; j < 64; ++j) {
    if (!m.contains(j)) continue;
    if (!first) s += ',';
    s += std::to_string(j + 1);
    first = false;
  }
  return s + "}";
}

NodeSpec::NodeSpec(Variant v, DimensionVector n, std::vector<Index> kappa, std::size_t g)
    : variant_(v), n_(std::move(n)), kappa_(std::move(kappa)), g_(g) {
  extents_.reserve(n_.dim());
  for (std::size_t j = 0; j < n_.dim(); ++j) {
    extents_.push_back(is_shifted() ? 2 * n_[j] : n_[j]);
  }
}

NodeSpec NodeSpec::standard(DimensionVector n) {
  const std::size_t d = n.dim();
  return NodeSpec(Variant::standard, std::move(n), std::vector<Index>(d, 0), 0);
}

NodeSpec NodeSpec::standard(std::initializer_list<Index> n) {
  return standard(validate_pairwise_coprime(n));
}

NodeSpec NodeSpec::shifted(DimensionVector n, std::vector<Index> kappa,
                           std::optional<std::size_t> g) {
  if (kappa.size() != n.dim()) {
    throw ValidationError("kappa has " + std::to_string(kappa.size()) + " entries, expected " +
                          std::to_string(n.dim()));
  }
  const std::size_t even = n.even_position();
  std::size_t chosen = even < n.dim() ? even : 0;
  if (g) {
    if (*g >= n.dim()) {
      throw ValidationError("g index " + std::to_string(*g + 1) + " exceeds dimension " +
                            std::to_string(n.dim()));
    }
    if (even < n.dim() && even != *g) {
      throw ValidationError("g index " + std::to_string(*g + 1) + " invalid: entry " +
                            std::to_string(even + 1) + " is even and must be the g index");
    }
    chosen = *g;
  }
  return NodeSpec(Variant::shifted, std::move(n), std::move(kappa), chosen);
}

NodeSpec NodeSpec::shifted(std::initializer_list<Index> n, std::initializer_list<Index> kappa) {
  return shifted(validate_pairwise_coprime(n), std::vector<Index>(kappa));
}

std::string NodeSpec::describe() const {
  auto list = [](std::span<const Index> v) {
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(v[j]);
    }
    return s + ")";
  };
  if (!is_shifted()) return "standard n=" + list(n_.entries());
  return "shifted n=" + list(n_.entries()) + " kappa=" + list(kappa_);
}

}  // namespace lisscheb
