// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lisscheb/errors.hpp"

namespace lisscheb {

bool is_special_element(const NodeSpec& spec, std::span<const Index> gamma) {
  const std::size_t d = spec.dim();
  if (gamma.size() != d) return false;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    if (gamma[j] != 0) return false;
  }
  return gamma[d - 1] == spec.extent(d - 1);
}

bool in_gamma(const NodeSpec& spec, std::span<const Index> gamma) {
  const std::size_t d = spec.dim();
  if (gamma.size() != d) return false;
  if (is_special_element(spec, gamma)) return true;
  const DimensionVector& n = spec.n();
  for (std::size_t i = 0; i < d; ++i) {
    if (gamma[i] < 0 || gamma[i] >= spec.extent(i)) return false;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      // gamma_i / n_i + gamma_j / n_j against 1 (standard) or 2 (shifted)
      const Index lhs = gamma[i] * n[j] + gamma[j] * n[i];
      const Index bound = spec.epsilon() * n[i] * n[j];
      const bool strict = !spec.is_shifted() || spec.kappa_parity(i) != spec.kappa_parity(j);
      if (strict ? lhs >= bound : lhs > bound) return false;
    }
  }
  return true;
}

int e_count(std::span<const Index> gamma) {
  return static_cast<int>(std::count_if(gamma.begin(), gamma.end(), [](Index g) { return g > 0; }));
}

int f_count(const DimensionVector& n, std::span<const Index> gamma) {
  int hits = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == n[i]) ++hits;
  }
  return hits > 0 ? hits - 1 : 0;
}

namespace {

double norm_sq_unchecked(const NodeSpec& spec, std::span<const Index> gamma) {
  if (is_special_element(spec, gamma)) return 1.0;
  int exponent = -e_count(gamma);
  if (spec.is_shifted()) exponent += f_count(spec.n(), gamma);
  return std::ldexp(1.0, exponent);
}

}  // namespace

double norm_sq(const NodeSpec& spec, std::span<const Index> gamma) {
  if (!in_gamma(spec, gamma)) {
    throw NotInGammaSet("frequency " + to_string(SpectralIndex(gamma)) +
                        " is not in the spectral index set of " + spec.describe());
  }
  return norm_sq_unchecked(spec, gamma);
}

double norm_sq(const NodeSpec& spec, const SpectralIndex& gamma) {
  return norm_sq(spec, gamma.values());
}

GammaSet::GammaSet(NodeSpec spec) : spec_(std::move(spec)) {
  const std::size_t d = spec_.dim();
  shape_.resize(d);
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    shape_[j] = spec_.extent(j) + 1;
    total = static_cast<std::size_t>(checked_mul(static_cast<Index>(total), shape_[j]));
  }

  struct Entry {
    Index degree;
    std::size_t offset;
  };
  std::vector<Entry> found;
  std::vector<Index> g(d, 0);
  Index degree = 0;
  for (std::size_t offset = 0; offset < total; ++offset) {
    if (in_gamma(spec_, g)) found.push_back({degree, offset});
    for (std::size_t j = d; j-- > 0;) {
      ++g[j];
      ++degree;
      if (g[j] < shape_[j]) break;
      degree -= g[j];
      g[j] = 0;
    }
  }
  // offsets enumerate the box lexicographically, so a stable sort by degree gives graded lex
  std::stable_sort(found.begin(), found.end(),
                   [](const Entry& a, const Entry& b) { return a.degree < b.degree; });

  lookup_.assign(total, -1);
  elements_.reserve(found.size() * d);
  norm_sq_.reserve(found.size());
  for (const Entry& e : found) {
    std::size_t rest = e.offset;
    std::vector<Index> gamma(d);
    for (std::size_t j = d; j-- > 0;) {
      gamma[j] = static_cast<Index>(rest % static_cast<std::size_t>(shape_[j]));
      rest /= static_cast<std::size_t>(shape_[j]);
    }
    const std::size_t k = norm_sq_.size();
    lookup_[e.offset] = static_cast<std::int64_t>(k);
    if (is_special_element(spec_, gamma)) special_ = k;
    elements_.insert(elements_.end(), gamma.begin(), gamma.end());
    norm_sq_.push_back(norm_sq_unchecked(spec_, gamma));
  }
}

std::optional<std::size_t> GammaSet::find(std::span<const Index> gamma) const {
  if (gamma.size() != dim()) return std::nullopt;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (gamma[j] < 0 || gamma[j] >= shape_[j]) return std::nullopt;
    offset = offset * static_cast<std::size_t>(shape_[j]) + static_cast<std::size_t>(gamma[j]);
  }
  const std::int64_t pos = lookup_[offset];
  if (pos < 0) return std::nullopt;
  return static_cast<std::size_t>(pos);
}

std::size_t GammaSet::position(std::span<const Index> gamma) const {
  if (auto pos = find(gamma)) return *pos;
  throw NotInGammaSet("frequency " + to_string(SpectralIndex(gamma)) +
                      " is not in the spectral index set of " + spec_.describe());
}

std::shared_ptr<const GammaSet> build_gamma(const NodeSpec& spec) {
  return std::make_shared<const GammaSet>(spec);
}

SpectralIndex involution(std::span<const Index> m, const SpectralIndex& gamma) {
  if (m.size() != gamma.size() || m.empty()) {
    throw ValidationError("involution: extents and frequency differ in length");
  }
  // largest k with gamma_k / m_k maximal; compare ratios by cross multiplication
  std::size_t k = 0;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (gamma[i] * m[k] >= gamma[k] * m[i]) k = i;
  }
  SpectralIndex out = gamma;
  out[k] = m[k] - gamma[k];
  return out;
}

}  // namespace lisscheb
