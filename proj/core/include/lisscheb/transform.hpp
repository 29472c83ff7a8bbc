// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "lisscheb/expansion.hpp"
#include "lisscheb/nodes.hpp"
#include "lisscheb/sample.hpp"
#include "lisscheb/spectral.hpp"

namespace lisscheb {

/// chi_gamma(i) = prod_j cos(gamma_j i_j pi / m_j). Throws IndexOutOfRange when i
/// is not in the index set of spec.
[[nodiscard]] double chi_eval(const NodeSpec& spec, const SpectralIndex& gamma, const MultiIndex& i);

/// chi_gamma evaluated at every node, in node order.
[[nodiscard]] std::vector<double> chi_values(const NodeSet& nodes, std::span<const Index> gamma);

/// sum_i w_i h(i)
[[nodiscard]] double discrete_integral(const SampleVector& h);
[[nodiscard]] std::complex<double> discrete_integral(const ComplexSampleVector& h);

/// Closed-form value of the discrete integral of chi_gamma: 0, 1 or -1.
[[nodiscard]] double alias_integral(const NodeSpec& spec, std::span<const Index> gamma);
[[nodiscard]] double alias_integral(const NodeSpec& spec, const SpectralIndex& gamma);

/// c_gamma = <h, chi_gamma>_w / ||chi_gamma||^2 by direct summation.
/// The spectral index set is built from h.spec() unless supplied.
[[nodiscard]] ChebExpansion coefficients_naive(const SampleVector& h,
                                               std::shared_ptr<const GammaSet> gamma = nullptr);
[[nodiscard]] ComplexChebExpansion coefficients_naive(
    const ComplexSampleVector& h, std::shared_ptr<const GammaSet> gamma = nullptr);

/// Same coefficients through the weighted grid embedding and one cosine
/// transform per dimension (dimension 1 first).
[[nodiscard]] ChebExpansion coefficients_fast(const SampleVector& h,
                                              std::shared_ptr<const GammaSet> gamma = nullptr);
[[nodiscard]] ComplexChebExpansion coefficients_fast(
    const ComplexSampleVector& h, std::shared_ptr<const GammaSet> gamma = nullptr);

/// Dense real array over J = prod_j {0, ..., m_j}, row-major (last index fastest).
struct GridTensor {
  std::vector<Index> shape;
  std::vector<double> data;

  [[nodiscard]] std::size_t offset(std::span<const Index> i) const;
};

/// w_i h(i) at the positions of the index set, zero elsewhere.
[[nodiscard]] GridTensor embed_weighted(const SampleVector& h);

enum class CosineBackend { fft, naive };

/// Applies the endpoint-inclusive cosine transform along every dimension in turn.
/// The fft backend processes independent lines in parallel; its result does not
/// depend on the worker count.
void apply_cosine_cascade(GridTensor& grid, CosineBackend backend = CosineBackend::fft);

}  // namespace lisscheb
