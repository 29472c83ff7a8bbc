// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lisscheb {

using Index = std::int64_t;

/// Frequency vector n with pairwise relatively prime positive entries.
///
/// Carries the product P[n] = n_1 * ... * n_d and the coproducts
/// P_i[n] = P[n] / n_i. Instances can only be obtained through
/// validate_pairwise_coprime(), so every DimensionVector in the program
/// satisfies the coprimality invariant.
class DimensionVector {
 public:
  [[nodiscard]] std::size_t dim() const noexcept { return entries_.size(); }
  [[nodiscard]] Index operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::span<const Index> entries() const noexcept { return entries_; }
  [[nodiscard]] Index product() const noexcept { return product_; }
  [[nodiscard]] Index coproduct(std::size_t i) const { return coproducts_[i]; }

  /// Index of the unique even entry, or dim() when all entries are odd.
  [[nodiscard]] std::size_t even_position() const noexcept;

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

 private:
  friend DimensionVector validate_pairwise_coprime(std::span<const Index> entries);
  DimensionVector() = default;

  std::vector<Index> entries_;
  std::vector<Index> coproducts_;
  Index product_ = 1;
};

/// Throws EmptyDimension, ZeroEntry, CoprimalityViolation, or OverflowDimension
/// (when 2^(d+2) * P[n] is not representable in 64 bits).
[[nodiscard]] DimensionVector validate_pairwise_coprime(std::span<const Index> entries);
[[nodiscard]] DimensionVector validate_pairwise_coprime(std::initializer_list<Index> entries);

struct Congruence {
  Index residue = 0;
  Index modulus = 1;
};

/// Returns the unique l in [0, lcm of moduli) with l = a_i (mod k_i) for all i.
///
/// Solved by pairwise merging with the extended Euclidean algorithm. Every pair is
/// checked for compatibility (a_i = a_j mod gcd(k_i, k_j)) before merging; a
/// failing pair raises IncompatibleCongruences(i, j).
[[nodiscard]] Index crt_solve(std::span<const Congruence> congruences);
[[nodiscard]] Index crt_solve(std::initializer_list<Congruence> congruences);

/// Non-negative remainder of a modulo m (m > 0).
[[nodiscard]] constexpr Index floor_mod(Index a, Index m) noexcept {
  const Index r = a % m;
  return r < 0 ? r + m : r;
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Index extended_gcd(Index a, Index b, Index& x, Index& y) noexcept;

/// a * b, throwing OverflowDimension when the product does not fit in Index.
[[nodiscard]] Index checked_mul(Index a, Index b);

}  // namespace lisscheb
