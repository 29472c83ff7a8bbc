// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lisscheb/errors.hpp"

namespace lisscheb {

std::optional<int> index_parity(const NodeSpec& spec, std::span<const Index> i) {
  if (i.size() != spec.dim()) return std::nullopt;
  int r = -1;
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (i[j] < 0 || i[j] > spec.extent(j)) return std::nullopt;
    const int rj = static_cast<int>(floor_mod(i[j] - spec.kappa()[j], 2));
    if (r < 0) {
      r = rj;
    } else if (r != rj) {
      return std::nullopt;
    }
  }
  return r;
}

FaceSet face_of(const NodeSpec& spec, std::span<const Index> i) {
  FaceSet m;
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (i[j] > 0 && i[j] < spec.extent(j)) m.insert(j);
  }
  return m;
}

double node_weight(const NodeSpec& spec, FaceSet face) {
  const double p = static_cast<double>(spec.n().product());
  const int denom_exp = spec.is_shifted() ? static_cast<int>(spec.dim()) + 1 : 1;
  return std::ldexp(1.0, face.size() - denom_exp) / p;
}

NodeSet::NodeSet(NodeSpec spec) : spec_(std::move(spec)) {
  const std::size_t d = spec_.dim();
  shape_.resize(d);
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    shape_[j] = spec_.extent(j) + 1;
    total = static_cast<std::size_t>(checked_mul(static_cast<Index>(total), shape_[j]));
  }
  lookup_.assign(total, -1);

  std::vector<Index> i(d, 0);
  for (std::size_t offset = 0; offset < total; ++offset) {
    if (auto r = index_parity(spec_, i)) {
      const FaceSet m = face_of(spec_, i);
      lookup_[offset] = static_cast<std::int64_t>(weights_.size());
      indices_.insert(indices_.end(), i.begin(), i.end());
      for (std::size_t j = 0; j < d; ++j) points_.push_back(cos_pi_ratio(i[j], spec_.extent(j)));
      weights_.push_back(node_weight(spec_, m));
      parity_.push_back(*r);
      faces_.push_back(m);
    }
    for (std::size_t j = d; j-- > 0;) {
      if (++i[j] < shape_[j]) break;
      i[j] = 0;
    }
  }
}

Node NodeSet::node(std::size_t k) const {
  return Node{index(k), point(k), weights_[k], parity_[k], faces_[k]};
}

std::size_t NodeSet::grid_offset(std::span<const Index> i) const {
  std::size_t offset = 0;
  for (std::size_t j = 0; j < shape_.size(); ++j) {
    offset = offset * static_cast<std::size_t>(shape_[j]) + static_cast<std::size_t>(i[j]);
  }
  return offset;
}

std::optional<std::size_t> NodeSet::find(std::span<const Index> i) const {
  if (i.size() != dim()) return std::nullopt;
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (i[j] < 0 || i[j] >= shape_[j]) return std::nullopt;
  }
  const std::int64_t pos = lookup_[grid_offset(i)];
  if (pos < 0) return std::nullopt;
  return static_cast<std::size_t>(pos);
}

std::size_t NodeSet::position(std::span<const Index> i) const {
  if (auto pos = find(i)) return *pos;
  throw IndexOutOfRange("index " + to_string(MultiIndex(i)) + " is not in the index set of " +
                        spec_.describe());
}

std::size_t NodeSet::count_parity(int r) const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), r));
}

std::shared_ptr<const NodeSet> build_node_set(const NodeSpec& spec) {
  return std::make_shared<const NodeSet>(spec);
}

namespace {

Index fold(Index value, Index half) {
  // value in [0, 2*half); returns the representative of +-value in [0, half]
  return value > half ? 2 * half - value : value;
}

}  // namespace

MultiIndex class_map_standard(const DimensionVector& n, Index l) {
  const Index p = n.product();
  if (l < 0 || l >= 2 * p) {
    throw IndexOutOfRange("class map parameter " + std::to_string(l) + " outside [0, " +
                          std::to_string(2 * p) + ")");
  }
  std::vector<Index> i(n.dim());
  for (std::size_t j = 0; j < n.dim(); ++j) i[j] = fold(floor_mod(l, 2 * n[j]), n[j]);
  return MultiIndex(std::move(i));
}

MultiIndex class_map_shifted(const NodeSpec& spec, Index l, std::span<const int> rho) {
  const DimensionVector& n = spec.n();
  const std::size_t d = n.dim();
  const Index p = n.product();
  if (l < 0 || l >= 4 * p) {
    throw IndexOutOfRange("class map parameter " + std::to_string(l) + " outside [0, " +
                          std::to_string(4 * p) + ")");
  }
  if (rho.size() + 1 != d) {
    throw IndexOutOfRange("class map needs " + std::to_string(d - 1) + " rho bits, got " +
                          std::to_string(rho.size()));
  }
  for (int bit : rho) {
    if (bit != 0 && bit != 1) throw IndexOutOfRange("rho entries must be 0 or 1");
  }
  const std::size_t g = spec.g_index();
  std::vector<Index> i(d);
  std::size_t k = 0;
  for (std::size_t j = 0; j < d; ++j) {
    Index a = l - spec.kappa()[j];
    if (j != g) a += 2 * static_cast<Index>(rho[k++]) * n[j];
    i[j] = fold(floor_mod(a, 4 * n[j]), 2 * n[j]);
  }
  return MultiIndex(std::move(i));
}

double chebyshev_t(Index k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (Index q = 1; q < k; ++q) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

bool variety_membership(const NodeSpec& spec, std::span<const double> x, double tol) {
  if (x.size() != spec.dim()) {
    throw ValidationError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(spec.dim()));
  }
  auto value = [&](std::size_t j) {
    const double xj = std::clamp(x[j], -1.0, 1.0);
    const double t = chebyshev_t(spec.extent(j), xj);
    return spec.kappa_parity(j) ? -t : t;
  };
  const double ref = value(0);
  for (std::size_t j = 1; j < x.size(); ++j) {
    if (std::abs(value(j) - ref) > tol) return false;
  }
  return true;
}

}  // namespace lisscheb
