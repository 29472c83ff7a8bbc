// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/interp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "lisscheb/errors.hpp"
#include "lisscheb/parallel.hpp"
#include "lisscheb/transform.hpp"
#include "lisscheb/trig.hpp"

namespace lisscheb {

namespace {

void check_domain(std::span<const double> x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(std::abs(x[j]) <= 1.0 + kDomainSlack)) {
      throw DomainViolation("coordinate " + std::to_string(j + 1) + " = " + std::to_string(x[j]) +
                            " lies outside [-1, 1]");
    }
  }
}

void check_dim(const NodeSpec& spec, std::span<const double> x) {
  if (x.size() != spec.dim()) {
    throw ValidationError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(spec.dim()));
  }
}

/// T_k(x_j) for k = 0..m_j, flattened with per-dimension offsets.
class ChebTable {
 public:
  ChebTable(const NodeSpec& spec, std::span<const double> x) {
    offsets_.resize(spec.dim());
    std::size_t total = 0;
    for (std::size_t j = 0; j < spec.dim(); ++j) {
      offsets_[j] = total;
      total += static_cast<std::size_t>(spec.extent(j)) + 1;
    }
    values_.resize(total);
    for (std::size_t j = 0; j < spec.dim(); ++j) {
      const double xj = std::clamp(x[j], -1.0, 1.0);
      double* t = values_.data() + offsets_[j];
      const Index m = spec.extent(j);
      t[0] = 1.0;
      if (m >= 1) t[1] = xj;
      for (Index k = 2; k <= m; ++k) t[k] = 2.0 * xj * t[k - 1] - t[k - 2];
    }
  }

  [[nodiscard]] double product(std::span<const Index> gamma) const {
    double v = 1.0;
    for (std::size_t j = 0; j < gamma.size(); ++j) v *= values_[offsets_[j] + static_cast<std::size_t>(gamma[j])];
    return v;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<double> values_;
};

template <class T>
T eval_with_table(const BasicChebExpansion<T>& p, std::span<const double> x) {
  check_dim(p.spec(), x);
  check_domain(x);
  const ChebTable table(p.spec(), x);
  const GammaSet& gamma = p.gamma_set();
  T acc{};
  for (std::size_t k = 0; k < gamma.size(); ++k) acc += p[k] * table.product(gamma.element(k));
  return acc;
}

template <class T>
BasicChebExpansion<T> interpolate_impl(const BasicSampleVector<T>& h, InterpMode mode) {
  return mode == InterpMode::fast ? coefficients_fast(h) : coefficients_naive(h);
}

template <class T>
T inner_product_impl(const BasicChebExpansion<T>& p, const BasicChebExpansion<T>& q) {
  if (!(p.spec() == q.spec())) {
    throw SpecMismatch("inner product of expansions over " + p.spec().describe() + " and " +
                       q.spec().describe());
  }
  const GammaSet& gamma = p.gamma_set();
  T acc{};
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const double scale = std::ldexp(1.0, -e_count(gamma.element(k)));
    if constexpr (std::is_same_v<T, double>) {
      acc += p[k] * q[k] * scale;
    } else {
      acc += p[k] * std::conj(q[k]) * scale;
    }
  }
  return acc;
}

}  // namespace

double cheb_T_eval(std::span<const Index> gamma, std::span<const double> x) {
  if (gamma.size() != x.size()) {
    throw ValidationError("frequency and point differ in dimension");
  }
  check_domain(x);
  double v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double xj = std::clamp(x[j], -1.0, 1.0);
    v *= std::cos(static_cast<double>(gamma[j]) * std::acos(xj));
  }
  return v;
}

double cheb_T_eval(const SpectralIndex& gamma, std::span<const double> x) {
  return cheb_T_eval(gamma.values(), x);
}

double expansion_eval(const ChebExpansion& p, std::span<const double> x) {
  return eval_with_table(p, x);
}

std::complex<double> expansion_eval(const ComplexChebExpansion& p, std::span<const double> x) {
  return eval_with_table(p, x);
}

double expansion_eval_direct(const ChebExpansion& p, std::span<const double> x) {
  check_dim(p.spec(), x);
  const GammaSet& gamma = p.gamma_set();
  double acc = 0.0;
  for (std::size_t k = 0; k < gamma.size(); ++k) acc += p[k] * cheb_T_eval(gamma.element(k), x);
  return acc;
}

std::vector<double> expansion_eval_many(const ChebExpansion& p, std::span<const double> points) {
  const std::size_t d = p.spec().dim();
  if (points.size() % d != 0) {
    throw ValidationError("point buffer length is not a multiple of the dimension");
  }
  const std::size_t count = points.size() / d;
  std::vector<double> out(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t q = begin; q < end; ++q) out[q] = expansion_eval(p, points.subspan(q * d, d));
  });
  return out;
}

ChebExpansion interpolate(const SampleVector& h, InterpMode mode) {
  return interpolate_impl(h, mode);
}

ComplexChebExpansion interpolate(const ComplexSampleVector& h, InterpMode mode) {
  return interpolate_impl(h, mode);
}

ChebExpansion kernel_expansion(std::shared_ptr<const GammaSet> gamma, std::span<const double> y) {
  check_dim(gamma->spec(), y);
  check_domain(y);
  const ChebTable table(gamma->spec(), y);
  std::vector<double> c(gamma->size());
  for (std::size_t k = 0; k < gamma->size(); ++k) {
    const auto g = gamma->element(k);
    c[k] = std::ldexp(table.product(g), e_count(g));
  }
  return ChebExpansion(std::move(gamma), std::move(c));
}

double kernel_eval(const GammaSet& gamma, std::span<const double> x, std::span<const double> y) {
  check_dim(gamma.spec(), x);
  check_dim(gamma.spec(), y);
  check_domain(x);
  check_domain(y);
  const ChebTable tx(gamma.spec(), x);
  const ChebTable ty(gamma.spec(), y);
  double acc = 0.0;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const auto g = gamma.element(k);
    acc += std::ldexp(tx.product(g) * ty.product(g), e_count(g));
  }
  return acc;
}

double kernel_eval(const NodeSpec& spec, std::span<const double> x, std::span<const double> y) {
  return kernel_eval(*build_gamma(spec), x, y);
}

ChebExpansion fundamental(std::shared_ptr<const GammaSet> gamma, const MultiIndex& i) {
  const NodeSpec& spec = gamma->spec();
  const auto parity = index_parity(spec, i.values());
  if (!parity) {
    throw IndexOutOfRange("index " + to_string(i) + " is not in the index set of " +
                          spec.describe());
  }
  const double w = node_weight(spec, face_of(spec, i.values()));
  const std::size_t d = spec.dim();
  std::vector<double> c(gamma->size());
  for (std::size_t k = 0; k < gamma->size(); ++k) {
    const auto g = gamma->element(k);
    double t_at_node = 1.0;
    for (std::size_t j = 0; j < d; ++j) t_at_node *= cos_pi_ratio(g[j] * i[j], spec.extent(j));
    int exponent = e_count(g);
    if (spec.is_shifted()) exponent -= f_count(spec.n(), g);
    double value = std::ldexp(t_at_node, exponent);
    if (gamma->is_special(k)) value -= cos_pi_ratio(spec.extent(d - 1) * i[d - 1], spec.extent(d - 1));
    c[k] = w * value;
  }
  return ChebExpansion(std::move(gamma), std::move(c));
}

ChebExpansion fundamental(const NodeSpec& spec, const MultiIndex& i) {
  return fundamental(build_gamma(spec), i);
}

double expansion_inner_product(const ChebExpansion& p, const ChebExpansion& q) {
  return inner_product_impl(p, q);
}

std::complex<double> expansion_inner_product(const ComplexChebExpansion& p,
                                             const ComplexChebExpansion& q) {
  return inner_product_impl(p, q);
}

}  // namespace lisscheb
