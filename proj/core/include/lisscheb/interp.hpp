// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "lisscheb/expansion.hpp"
#include "lisscheb/nodes.hpp"
#include "lisscheb/sample.hpp"
#include "lisscheb/spectral.hpp"

namespace lisscheb {

/// Largest tolerated |x_j| - 1 before DomainViolation.
inline constexpr double kDomainSlack = 1e-12;

/// T_gamma(x) = prod_j cos(gamma_j arccos x_j). Throws DomainViolation.
[[nodiscard]] double cheb_T_eval(std::span<const Index> gamma, std::span<const double> x);
[[nodiscard]] double cheb_T_eval(const SpectralIndex& gamma, std::span<const double> x);

/// sum_gamma c_gamma T_gamma(x), with T_k(x_j) tabulated once per dimension by the
/// three-term recurrence. Throws DomainViolation.
[[nodiscard]] double expansion_eval(const ChebExpansion& p, std::span<const double> x);
[[nodiscard]] std::complex<double> expansion_eval(const ComplexChebExpansion& p,
                                                  std::span<const double> x);

/// Same value through cheb_T_eval term by term.
[[nodiscard]] double expansion_eval_direct(const ChebExpansion& p, std::span<const double> x);

/// Evaluates p at many points (flat, d values per point), in parallel over points.
[[nodiscard]] std::vector<double> expansion_eval_many(const ChebExpansion& p,
                                                      std::span<const double> points);

enum class InterpMode { naive, fast };

/// The unique polynomial in the span of T_gamma, gamma in Gamma, with P(z_i) = h(i).
[[nodiscard]] ChebExpansion interpolate(const SampleVector& h, InterpMode mode = InterpMode::fast);
[[nodiscard]] ComplexChebExpansion interpolate(const ComplexSampleVector& h,
                                               InterpMode mode = InterpMode::fast);

/// K(., y) = sum_gamma T_gamma(y) T_gamma / ||T_gamma||^2 with ||T_gamma||^2 = 2^-e(gamma).
[[nodiscard]] ChebExpansion kernel_expansion(std::shared_ptr<const GammaSet> gamma,
                                             std::span<const double> y);
[[nodiscard]] double kernel_eval(const GammaSet& gamma, std::span<const double> x,
                                 std::span<const double> y);
[[nodiscard]] double kernel_eval(const NodeSpec& spec, std::span<const double> x,
                                 std::span<const double> y);

/// Fundamental polynomial L_i: w_i times the kernel at z_i (with the 2^-f factor in
/// the shifted family) minus the correction T_{m_d}(z_{i_d}) T_{m_d}(x_d).
/// Throws IndexOutOfRange when i is not in the index set.
[[nodiscard]] ChebExpansion fundamental(const NodeSpec& spec, const MultiIndex& i);
[[nodiscard]] ChebExpansion fundamental(std::shared_ptr<const GammaSet> gamma, const MultiIndex& i);

/// sum_gamma p_gamma conj(q_gamma) 2^-e(gamma). Throws SpecMismatch.
[[nodiscard]] double expansion_inner_product(const ChebExpansion& p, const ChebExpansion& q);
[[nodiscard]] std::complex<double> expansion_inner_product(const ComplexChebExpansion& p,
                                                           const ComplexChebExpansion& q);

}  // namespace lisscheb
