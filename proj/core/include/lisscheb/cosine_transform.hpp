// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <span>

namespace lisscheb {

/// Cosine transform with both endpoints (DCT-I family), length m + 1:
///   out[g] = sum_{i=0}^{m} in[i] cos(g i pi / m),  g = 0..m.
/// No endpoint halving; for m = 0 the transform is the identity.

/// O(m^2) reference.
void dct1_naive(std::span<const double> in, std::span<double> out);

/// FFT-backed transform of a fixed length. A plan may be shared between threads;
/// execute() only touches caller-provided buffers and its own per-call scratch.
class Dct1Plan {
 public:
  explicit Dct1Plan(std::size_t length);
  ~Dct1Plan();
  Dct1Plan(const Dct1Plan&) = delete;
  Dct1Plan& operator=(const Dct1Plan&) = delete;

  [[nodiscard]] std::size_t length() const noexcept { return length_; }

  /// Scratch buffer suitable for execute(); one per thread.
  class Workspace {
   public:
    explicit Workspace(std::size_t length);
    ~Workspace();
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;
    [[nodiscard]] double* data() noexcept { return data_; }

   private:
    double* data_;
  };

  /// in and out may alias.
  void execute(std::span<const double> in, std::span<double> out, Workspace& ws) const;

 private:
  std::size_t length_;
  void* plan_ = nullptr;
};

}  // namespace lisscheb
