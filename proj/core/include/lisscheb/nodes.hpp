// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lisscheb/node_spec.hpp"
#include "lisscheb/trig.hpp"
#include "lisscheb/types.hpp"

namespace lisscheb {

/// Read-only view of one node inside a NodeSet.
struct Node {
  std::span<const Index> index;
  std::span<const double> point;
  double weight;
  int parity;
  FaceSet face;

  [[nodiscard]] MultiIndex multi_index() const { return MultiIndex(index); }
};

/// The enumerated node set of a NodeSpec, in lexicographic index order.
///
/// Storage is flat (d values per node). Lookup by multi-index goes through a
/// dense position table over the grid J = prod_j {0, ..., m_j}.
class NodeSet {
 public:
  explicit NodeSet(NodeSpec spec);

  [[nodiscard]] const NodeSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t dim() const noexcept { return spec_.dim(); }
  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }

  [[nodiscard]] Node node(std::size_t k) const;
  [[nodiscard]] std::span<const Index> index(std::size_t k) const {
    return {indices_.data() + k * dim(), dim()};
  }
  [[nodiscard]] std::span<const double> point(std::size_t k) const {
    return {points_.data() + k * dim(), dim()};
  }
  [[nodiscard]] double weight(std::size_t k) const { return weights_[k]; }
  [[nodiscard]] int parity(std::size_t k) const { return parity_[k]; }
  [[nodiscard]] FaceSet face(std::size_t k) const { return faces_[k]; }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

  /// Position of index i, or nullopt when i is not in the index set.
  [[nodiscard]] std::optional<std::size_t> find(std::span<const Index> i) const;
  /// Position of index i; throws IndexOutOfRange when absent.
  [[nodiscard]] std::size_t position(std::span<const Index> i) const;
  [[nodiscard]] std::size_t position(const MultiIndex& i) const { return position(i.values()); }

  /// Number of nodes with parity r.
  [[nodiscard]] std::size_t count_parity(int r) const;

  /// Extents of the full grid J: m_j + 1 per dimension.
  [[nodiscard]] std::span<const Index> grid_shape() const noexcept { return shape_; }
  /// Row-major offset of index i in J (no membership check).
  [[nodiscard]] std::size_t grid_offset(std::span<const Index> i) const;

 private:
  NodeSpec spec_;
  std::vector<Index> shape_;
  std::vector<Index> indices_;
  std::vector<double> points_;
  std::vector<double> weights_;
  std::vector<int> parity_;
  std::vector<FaceSet> faces_;
  std::vector<std::int64_t> lookup_;
};

[[nodiscard]] std::shared_ptr<const NodeSet> build_node_set(const NodeSpec& spec);

/// Parity class r of a candidate index, or nullopt if i is not in the index set of spec.
[[nodiscard]] std::optional<int> index_parity(const NodeSpec& spec, std::span<const Index> i);

/// {j : 0 < i_j < m_j}
[[nodiscard]] FaceSet face_of(const NodeSpec& spec, std::span<const Index> i);

/// 2^#M / (2 P[n]) resp. 2^#M / (2^(d+1) P[n]).
[[nodiscard]] double node_weight(const NodeSpec& spec, FaceSet face);

/// Class map for the standard family: the unique i with i_j = +-l (mod 2 n_j), 0 <= i_j <= n_j.
/// Throws IndexOutOfRange unless 0 <= l < 2 P[n].
[[nodiscard]] MultiIndex class_map_standard(const DimensionVector& n, Index l);

/// Class map for the shifted family. rho holds one bit per dimension other than
/// spec.g_index(), in increasing dimension order. Throws IndexOutOfRange unless
/// 0 <= l < 4 P[n], rho has d - 1 entries and every entry is 0 or 1.
[[nodiscard]] MultiIndex class_map_shifted(const NodeSpec& spec, Index l,
                                           std::span<const int> rho);

/// Chebyshev polynomial T_k(x) by the three-term recurrence, valid for all real x.
[[nodiscard]] double chebyshev_t(Index k, double x);

/// Standard: max_i |T_{n_i}(x_i) - T_{n_1}(x_1)| <= tol.
/// Shifted: the same with (-1)^kappa_i T_{2 n_i}(x_i).
/// Coordinates are clamped to [-1, 1] before evaluation.
[[nodiscard]] bool variety_membership(const NodeSpec& spec, std::span<const double> x, double tol);

}  // namespace lisscheb
