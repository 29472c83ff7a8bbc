// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lisscheb/errors.hpp"
#include "lisscheb/nodes.hpp"

namespace lisscheb {

/// Data h(i) on the index set of a node set, stored in node order.
template <class T>
class BasicSampleVector {
 public:
  using value_type = T;

  BasicSampleVector(std::shared_ptr<const NodeSet> nodes, std::vector<T> values)
      : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (!nodes_) throw ValidationError("sample vector needs a node set");
    if (values_.size() != nodes_->size()) {
      throw ValidationError("sample vector has " + std::to_string(values_.size()) +
                            " values for " + std::to_string(nodes_->size()) + " nodes");
    }
  }

  /// Zero samples.
  explicit BasicSampleVector(std::shared_ptr<const NodeSet> nodes)
      : BasicSampleVector(nodes, std::vector<T>(nodes ? nodes->size() : 0)) {}

  /// h(i) = f(z_i)
  static BasicSampleVector from_function(std::shared_ptr<const NodeSet> nodes,
                                         const std::function<T(std::span<const double>)>& f) {
    std::vector<T> values(nodes->size());
    for (std::size_t k = 0; k < nodes->size(); ++k) values[k] = f(nodes->point(k));
    return BasicSampleVector(std::move(nodes), std::move(values));
  }

  [[nodiscard]] const NodeSet& nodes() const noexcept { return *nodes_; }
  [[nodiscard]] const std::shared_ptr<const NodeSet>& node_set() const noexcept { return nodes_; }
  [[nodiscard]] const NodeSpec& spec() const noexcept { return nodes_->spec(); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
  [[nodiscard]] std::span<T> values() noexcept { return values_; }
  [[nodiscard]] const T& operator[](std::size_t k) const { return values_[k]; }
  T& operator[](std::size_t k) { return values_[k]; }
  /// Value at multi-index i; throws IndexOutOfRange.
  [[nodiscard]] const T& at(const MultiIndex& i) const { return values_[nodes_->position(i)]; }
  T& at(const MultiIndex& i) { return values_[nodes_->position(i)]; }

 private:
  std::shared_ptr<const NodeSet> nodes_;
  std::vector<T> values_;
};

using SampleVector = BasicSampleVector<double>;
using ComplexSampleVector = BasicSampleVector<std::complex<double>>;

}  // namespace lisscheb
