// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lisscheb/node_spec.hpp"
#include "lisscheb/types.hpp"

namespace lisscheb {

/// Frequency index set Gamma of a NodeSpec in graded lexicographic order
/// (total degree first, then lexicographic), with the discrete norms
/// ||chi_gamma||^2 stored alongside.
class GammaSet {
 public:
  explicit GammaSet(NodeSpec spec);

  [[nodiscard]] const NodeSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t dim() const noexcept { return spec_.dim(); }
  [[nodiscard]] std::size_t size() const noexcept { return norm_sq_.size(); }

  [[nodiscard]] std::span<const Index> element(std::size_t k) const {
    return {elements_.data() + k * dim(), dim()};
  }
  [[nodiscard]] SpectralIndex spectral_index(std::size_t k) const {
    return SpectralIndex(element(k));
  }
  [[nodiscard]] double norm_sq(std::size_t k) const { return norm_sq_[k]; }
  [[nodiscard]] std::span<const double> norms_sq() const noexcept { return norm_sq_; }
  /// Position of (0, ..., 0, m_d).
  [[nodiscard]] std::size_t special_position() const noexcept { return special_; }
  [[nodiscard]] bool is_special(std::size_t k) const noexcept { return k == special_; }

  [[nodiscard]] std::optional<std::size_t> find(std::span<const Index> gamma) const;
  /// Throws NotInGammaSet when absent.
  [[nodiscard]] std::size_t position(std::span<const Index> gamma) const;
  [[nodiscard]] std::size_t position(const SpectralIndex& gamma) const {
    return position(gamma.values());
  }

 private:
  NodeSpec spec_;
  std::vector<Index> shape_;
  std::vector<Index> elements_;
  std::vector<double> norm_sq_;
  std::vector<std::int64_t> lookup_;
  std::size_t special_ = 0;
};

[[nodiscard]] std::shared_ptr<const GammaSet> build_gamma(const NodeSpec& spec);

/// Membership predicate for Gamma, evaluated in exact integer arithmetic.
[[nodiscard]] bool in_gamma(const NodeSpec& spec, std::span<const Index> gamma);

/// (0, ..., 0, m_d)
[[nodiscard]] bool is_special_element(const NodeSpec& spec, std::span<const Index> gamma);

/// e(gamma) = #{i : gamma_i > 0}
[[nodiscard]] int e_count(std::span<const Index> gamma);

/// f(gamma) = #{i : gamma_i = n_i} - 1 if that set is non-empty, else 0.
[[nodiscard]] int f_count(const DimensionVector& n, std::span<const Index> gamma);

/// ||chi_gamma||^2: 2^-e (standard), 2^(-e+f) (shifted), 1 for the special element.
/// Throws NotInGammaSet.
[[nodiscard]] double norm_sq(const NodeSpec& spec, std::span<const Index> gamma);
[[nodiscard]] double norm_sq(const NodeSpec& spec, const SpectralIndex& gamma);

/// Flips gamma_k to m_k - gamma_k at the largest k maximizing gamma_k / m_k.
[[nodiscard]] SpectralIndex involution(std::span<const Index> m, const SpectralIndex& gamma);

}  // namespace lisscheb
