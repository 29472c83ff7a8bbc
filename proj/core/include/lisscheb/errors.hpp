// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lisscheb {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition check (bad dimensions, indices, ranges).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class EmptyDimension : public ValidationError {
 public:
  EmptyDimension() : ValidationError("dimension vector must not be empty") {}
};

class ZeroEntry : public ValidationError {
 public:
  explicit ZeroEntry(std::size_t position)
      : ValidationError("entry " + std::to_string(position + 1) +
                        " of the dimension vector must be positive"),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// gcd(n_i, n_j) > 1 for some pair. Positions are zero-based; the message is one-based.
class CoprimalityViolation : public ValidationError {
 public:
  CoprimalityViolation(std::size_t i, std::size_t j, std::int64_t gcd)
      : ValidationError("entries " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are not relatively prime: gcd = " + std::to_string(gcd)),
        i_(i),
        j_(j),
        gcd_(gcd) {}
  [[nodiscard]] std::size_t first() const noexcept { return i_; }
  [[nodiscard]] std::size_t second() const noexcept { return j_; }
  [[nodiscard]] std::int64_t gcd() const noexcept { return gcd_; }

 private:
  std::size_t i_;
  std::size_t j_;
  std::int64_t gcd_;
};

class OverflowDimension : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IncompatibleCongruences : public ValidationError {
 public:
  IncompatibleCongruences(std::size_t i, std::size_t j)
      : ValidationError("congruences " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are incompatible"),
        i_(i),
        j_(j) {}
  [[nodiscard]] std::size_t first() const noexcept { return i_; }
  [[nodiscard]] std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

class IndexOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInGammaSet : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DomainViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SpecMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace lisscheb
