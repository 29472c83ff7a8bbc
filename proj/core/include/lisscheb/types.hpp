// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lisscheb/congruence.hpp"

namespace lisscheb {

/// Fixed-length integer tuple. The tag keeps node indices and frequency
/// indices from being mixed up at compile time.
template <class Tag>
class IndexTuple {
 public:
  IndexTuple() = default;
  IndexTuple(std::initializer_list<Index> values) : values_(values) {}
  explicit IndexTuple(std::vector<Index> values) : values_(std::move(values)) {}
  explicit IndexTuple(std::span<const Index> values) : values_(values.begin(), values.end()) {}

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] Index operator[](std::size_t j) const { return values_[j]; }
  Index& operator[](std::size_t j) { return values_[j]; }
  [[nodiscard]] std::span<const Index> values() const noexcept { return values_; }
  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<Index> values_;
};

struct MultiIndexTag {};
struct SpectralIndexTag {};

/// Node index i (entries in [0, m_j]).
using MultiIndex = IndexTuple<MultiIndexTag>;
/// Frequency index gamma.
using SpectralIndex = IndexTuple<SpectralIndexTag>;

/// "(a,b,c)"
template <class Tag>
[[nodiscard]] std::string to_string(const IndexTuple<Tag>& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(t[j]);
  }
  return s + ")";
}

/// Subset of {0, ..., d-1}; bit j set means dimension j belongs to the set.
class FaceSet {
 public:
  constexpr FaceSet() = default;
  constexpr explicit FaceSet(std::uint64_t bits) : bits_(bits) {}

  [[nodiscard]] constexpr bool contains(std::size_t j) const noexcept { return (bits_ >> j) & 1U; }
  constexpr void insert(std::size_t j) noexcept { bits_ |= std::uint64_t{1} << j; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }

  friend constexpr bool operator==(FaceSet, FaceSet) = default;
  friend constexpr auto operator<=>(FaceSet, FaceSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,3}" using one-based dimension labels.
[[nodiscard]] std::string to_string(FaceSet m);

}  // namespace lisscheb
