// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lisscheb/errors.hpp"
#include "lisscheb/spectral.hpp"

namespace lisscheb {

/// sum_gamma c_gamma T_gamma over a GammaSet; coefficients are stored in Gamma order.
template <class T>
class BasicChebExpansion {
 public:
  using value_type = T;

  explicit BasicChebExpansion(std::shared_ptr<const GammaSet> gamma)
      : BasicChebExpansion(gamma, std::vector<T>(gamma ? gamma->size() : 0)) {}

  BasicChebExpansion(std::shared_ptr<const GammaSet> gamma, std::vector<T> coeffs)
      : gamma_(std::move(gamma)), coeffs_(std::move(coeffs)) {
    if (!gamma_) throw ValidationError("expansion needs a spectral index set");
    if (coeffs_.size() != gamma_->size()) {
      throw ValidationError("expansion has " + std::to_string(coeffs_.size()) +
                            " coefficients for " + std::to_string(gamma_->size()) +
                            " frequencies");
    }
  }

  [[nodiscard]] const GammaSet& gamma_set() const noexcept { return *gamma_; }
  [[nodiscard]] const std::shared_ptr<const GammaSet>& gamma_ptr() const noexcept { return gamma_; }
  [[nodiscard]] const NodeSpec& spec() const noexcept { return gamma_->spec(); }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::span<const T> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::span<T> coeffs() noexcept { return coeffs_; }
  [[nodiscard]] const T& operator[](std::size_t k) const { return coeffs_[k]; }
  T& operator[](std::size_t k) { return coeffs_[k]; }

  /// Coefficient of T_gamma; throws NotInGammaSet.
  [[nodiscard]] const T& coeff(const SpectralIndex& gamma) const {
    return coeffs_[gamma_->position(gamma)];
  }
  T& coeff(const SpectralIndex& gamma) { return coeffs_[gamma_->position(gamma)]; }

 private:
  std::shared_ptr<const GammaSet> gamma_;
  std::vector<T> coeffs_;
};

using ChebExpansion = BasicChebExpansion<double>;
using ComplexChebExpansion = BasicChebExpansion<std::complex<double>>;

}  // namespace lisscheb
