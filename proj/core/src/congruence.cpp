// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/congruence.hpp"

#include <numeric>
#include <string>

#include "lisscheb/errors.hpp"

namespace lisscheb {

std::size_t DimensionVector::even_position() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] % 2 == 0) return i;
  }
  return entries_.size();
}

Index checked_mul(Index a, Index b) {
  Index out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowDimension("integer product " + std::to_string(a) + " * " + std::to_string(b) +
                            " overflows 64 bits");
  }
  return out;
}

DimensionVector validate_pairwise_coprime(std::span<const Index> entries) {
  if (entries.empty()) throw EmptyDimension();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] <= 0) throw ZeroEntry(i);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const Index g = std::gcd(entries[i], entries[j]);
      if (g > 1) throw CoprimalityViolation(i, j, g);
    }
  }
  if (entries.size() > 60) {
    throw OverflowDimension("dimension " + std::to_string(entries.size()) + " is too large");
  }

  DimensionVector n;
  n.entries_.assign(entries.begin(), entries.end());
  Index product = 1;
  for (Index e : entries) product = checked_mul(product, e);
  // Shifted node sets index l up to 4 P[n] and carry 2^(d-1) sign bits; keep
  // 2^(d+2) P[n] representable.
  (void)checked_mul(product, Index{1} << (entries.size() + 2));
  n.product_ = product;
  n.coproducts_.reserve(entries.size());
  for (Index e : entries) n.coproducts_.push_back(product / e);
  return n;
}

DimensionVector validate_pairwise_coprime(std::initializer_list<Index> entries) {
  return validate_pairwise_coprime(std::span<const Index>(entries.begin(), entries.size()));
}

Index extended_gcd(Index a, Index b, Index& x, Index& y) noexcept {
  Index old_r = a, r = b;
  Index old_s = 1, s = 0;
  Index old_t = 0, t = 1;
  while (r != 0) {
    const Index q = old_r / r;
    Index tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

namespace {

__extension__ using Wide = __int128;

Index mul_mod(Index a, Index b, Index m) {
  const Wide p = static_cast<Wide>(a) * static_cast<Wide>(b);
  auto r = static_cast<Index>(p % m);
  return r < 0 ? r + m : r;
}

}  // namespace

Index crt_solve(std::span<const Congruence> congruences) {
  if (congruences.empty()) throw InvalidRange("crt_solve needs at least one congruence");
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    if (congruences[i].modulus < 1) {
      throw InvalidRange("modulus of congruence " + std::to_string(i + 1) + " must be positive");
    }
  }
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      const Index g = std::gcd(congruences[i].modulus, congruences[j].modulus);
      if (floor_mod(congruences[i].residue - congruences[j].residue, g) != 0) {
        throw IncompatibleCongruences(i, j);
      }
    }
  }

  // Invariant: l solves the first k congruences and 0 <= l < modulus.
  Index modulus = congruences[0].modulus;
  Index l = floor_mod(congruences[0].residue, modulus);
  for (std::size_t k = 1; k < congruences.size(); ++k) {
    const Index k_mod = congruences[k].modulus;
    const Index a = floor_mod(congruences[k].residue, k_mod);
    Index p = 0, q = 0;
    const Index g = extended_gcd(modulus, k_mod, p, q);
    // Pairwise compatibility implies compatibility with the merged system.
    const Index step = k_mod / g;
    const Index diff = floor_mod(a - l, k_mod) / g;
    const Index t = mul_mod(diff, floor_mod(p, step), step);
    const Index merged = checked_mul(modulus, step);
    l = floor_mod(static_cast<Index>((static_cast<Wide>(modulus) * t + l) % merged), merged);
    modulus = merged;
  }
  return l;
}

Index crt_solve(std::initializer_list<Congruence> congruences) {
  return crt_solve(std::span<const Congruence>(congruences.begin(), congruences.size()));
}

}  // namespace lisscheb
