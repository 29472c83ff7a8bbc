// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/transform.hpp"

#include <memory>
#include <string>
#include <vector>

#include "lisscheb/cosine_transform.hpp"
#include "lisscheb/errors.hpp"
#include "lisscheb/parallel.hpp"
#include "lisscheb/trig.hpp"

namespace lisscheb {

namespace {

/// cos(k pi / m_j) for k in [0, 2 m_j), one table per dimension.
std::vector<std::vector<double>> cosine_tables(const NodeSpec& spec) {
  std::vector<std::vector<double>> tables(spec.dim());
  for (std::size_t j = 0; j < spec.dim(); ++j) {
    const Index m = spec.extent(j);
    tables[j].resize(static_cast<std::size_t>(2 * m));
    for (Index k = 0; k < 2 * m; ++k) tables[j][static_cast<std::size_t>(k)] = cos_pi_ratio(k, m);
  }
  return tables;
}

double chi_from_tables(const std::vector<std::vector<double>>& tables, std::span<const Index> gamma,
                       std::span<const Index> i) {
  double v = 1.0;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    const auto period = static_cast<Index>(tables[j].size());
    v *= tables[j][static_cast<std::size_t>(floor_mod(gamma[j] * i[j], period))];
  }
  return v;
}

std::shared_ptr<const GammaSet> resolve_gamma(const NodeSpec& spec,
                                              std::shared_ptr<const GammaSet> gamma) {
  if (!gamma) return build_gamma(spec);
  if (!(gamma->spec() == spec)) {
    throw SpecMismatch("spectral index set built for " + gamma->spec().describe() +
                       ", samples belong to " + spec.describe());
  }
  return gamma;
}

SampleVector real_part(const ComplexSampleVector& h) {
  std::vector<double> v(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) v[k] = h[k].real();
  return SampleVector(h.node_set(), std::move(v));
}

SampleVector imag_part(const ComplexSampleVector& h) {
  std::vector<double> v(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) v[k] = h[k].imag();
  return SampleVector(h.node_set(), std::move(v));
}

ComplexChebExpansion combine(const ChebExpansion& re, const ChebExpansion& im) {
  std::vector<std::complex<double>> c(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) c[k] = {re[k], im[k]};
  return ComplexChebExpansion(re.gamma_ptr(), std::move(c));
}

}  // namespace

double chi_eval(const NodeSpec& spec, const SpectralIndex& gamma, const MultiIndex& i) {
  if (!index_parity(spec, i.values())) {
    throw IndexOutOfRange("index " + to_string(i) + " is not in the index set of " +
                          spec.describe());
  }
  if (gamma.size() != spec.dim()) {
    throw ValidationError("frequency " + to_string(gamma) + " has the wrong dimension");
  }
  double v = 1.0;
  for (std::size_t j = 0; j < spec.dim(); ++j) v *= cos_pi_ratio(gamma[j] * i[j], spec.extent(j));
  return v;
}

std::vector<double> chi_values(const NodeSet& nodes, std::span<const Index> gamma) {
  const auto tables = cosine_tables(nodes.spec());
  std::vector<double> out(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) out[k] = chi_from_tables(tables, gamma, nodes.index(k));
  return out;
}

namespace {

template <class T>
T weighted_sum(const BasicSampleVector<T>& h) {
  T acc{};
  const NodeSet& nodes = h.nodes();
  for (std::size_t k = 0; k < h.size(); ++k) acc += nodes.weight(k) * h[k];
  return acc;
}

}  // namespace

double discrete_integral(const SampleVector& h) { return weighted_sum(h); }

std::complex<double> discrete_integral(const ComplexSampleVector& h) { return weighted_sum(h); }

double alias_integral(const NodeSpec& spec, std::span<const Index> gamma) {
  if (gamma.size() != spec.dim()) {
    throw ValidationError("frequency " + to_string(SpectralIndex(gamma)) +
                          " has the wrong dimension");
  }
  Index h_sum = 0;
  Index theta = 0;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (gamma[j] < 0) throw ValidationError("frequency entries must be non-negative");
    const Index period = spec.extent(j);
    if (gamma[j] % period != 0) return 0.0;
    const Index hj = gamma[j] / period;
    h_sum += hj;
    theta += hj * spec.kappa()[j];
  }
  if (h_sum % 2 != 0) return 0.0;
  return floor_mod(theta, 2) == 0 ? 1.0 : -1.0;
}

double alias_integral(const NodeSpec& spec, const SpectralIndex& gamma) {
  return alias_integral(spec, gamma.values());
}

ChebExpansion coefficients_naive(const SampleVector& h, std::shared_ptr<const GammaSet> gamma) {
  gamma = resolve_gamma(h.spec(), std::move(gamma));
  const NodeSet& nodes = h.nodes();
  const auto tables = cosine_tables(h.spec());
  std::vector<double> wh(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) wh[k] = nodes.weight(k) * h[k];
  std::vector<double> c(gamma->size());
  for (std::size_t g = 0; g < gamma->size(); ++g) {
    const auto gam = gamma->element(g);
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) acc += wh[k] * chi_from_tables(tables, gam, nodes.index(k));
    c[g] = acc / gamma->norm_sq(g);
  }
  return ChebExpansion(std::move(gamma), std::move(c));
}

ComplexChebExpansion coefficients_naive(const ComplexSampleVector& h,
                                        std::shared_ptr<const GammaSet> gamma) {
  gamma = resolve_gamma(h.spec(), std::move(gamma));
  return combine(coefficients_naive(real_part(h), gamma), coefficients_naive(imag_part(h), gamma));
}

std::size_t GridTensor::offset(std::span<const Index> i) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < shape.size(); ++j) {
    off = off * static_cast<std::size_t>(shape[j]) + static_cast<std::size_t>(i[j]);
  }
  return off;
}

GridTensor embed_weighted(const SampleVector& h) {
  const NodeSet& nodes = h.nodes();
  GridTensor grid;
  grid.shape.assign(nodes.grid_shape().begin(), nodes.grid_shape().end());
  std::size_t total = 1;
  for (Index s : grid.shape) total *= static_cast<std::size_t>(s);
  grid.data.assign(total, 0.0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    grid.data[nodes.grid_offset(nodes.index(k))] = nodes.weight(k) * h[k];
  }
  return grid;
}

void apply_cosine_cascade(GridTensor& grid, CosineBackend backend) {
  const std::size_t d = grid.shape.size();
  const std::size_t total = grid.data.size();
  for (std::size_t j = 0; j < d; ++j) {
    const auto len = static_cast<std::size_t>(grid.shape[j]);
    if (len < 2) continue;
    std::size_t stride = 1;
    for (std::size_t k = j + 1; k < d; ++k) stride *= static_cast<std::size_t>(grid.shape[k]);
    const std::size_t lines = total / len;
    std::unique_ptr<Dct1Plan> plan;
    if (backend == CosineBackend::fft) plan = std::make_unique<Dct1Plan>(len);

    // line q: outer block q / stride, inner position q % stride
    parallel_for(lines, [&](std::size_t begin, std::size_t end, std::size_t) {
      std::vector<double> line(len);
      std::vector<double> out(len);
      std::unique_ptr<Dct1Plan::Workspace> ws;
      if (plan) ws = std::make_unique<Dct1Plan::Workspace>(len);
      for (std::size_t q = begin; q < end; ++q) {
        const std::size_t base = (q / stride) * stride * len + (q % stride);
        for (std::size_t t = 0; t < len; ++t) line[t] = grid.data[base + t * stride];
        if (plan) {
          plan->execute(line, out, *ws);
        } else {
          dct1_naive(line, out);
        }
        for (std::size_t t = 0; t < len; ++t) grid.data[base + t * stride] = out[t];
      }
    });
  }
}

ChebExpansion coefficients_fast(const SampleVector& h, std::shared_ptr<const GammaSet> gamma) {
  gamma = resolve_gamma(h.spec(), std::move(gamma));
  GridTensor grid = embed_weighted(h);
  apply_cosine_cascade(grid, CosineBackend::fft);
  std::vector<double> c(gamma->size());
  for (std::size_t g = 0; g < gamma->size(); ++g) {
    c[g] = grid.data[grid.offset(gamma->element(g))] / gamma->norm_sq(g);
  }
  return ChebExpansion(std::move(gamma), std::move(c));
}

ComplexChebExpansion coefficients_fast(const ComplexSampleVector& h,
                                       std::shared_ptr<const GammaSet> gamma) {
  gamma = resolve_gamma(h.spec(), std::move(gamma));
  return combine(coefficients_fast(real_part(h), gamma), coefficients_fast(imag_part(h), gamma));
}

}  // namespace lisscheb
