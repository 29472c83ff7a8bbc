// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/cosine_transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>
#include <vector>

#include "lisscheb/errors.hpp"
#include "lisscheb/trig.hpp"

namespace lisscheb {

namespace {

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void dct1_naive(std::span<const double> in, std::span<double> out) {
  if (in.size() != out.size() || in.empty()) {
    throw ValidationError("dct1_naive: input and output lengths must match and be positive");
  }
  const Index m = static_cast<Index>(in.size()) - 1;
  if (m == 0) {
    out[0] = in[0];
    return;
  }
  std::vector<double> table(static_cast<std::size_t>(2 * m));
  for (Index k = 0; k < 2 * m; ++k) table[static_cast<std::size_t>(k)] = cos_pi_ratio(k, m);
  std::vector<double> result(in.size(), 0.0);
  for (Index g = 0; g <= m; ++g) {
    double acc = 0.0;
    for (Index i = 0; i <= m; ++i) {
      acc += in[static_cast<std::size_t>(i)] * table[static_cast<std::size_t>((g * i) % (2 * m))];
    }
    result[static_cast<std::size_t>(g)] = acc;
  }
  std::copy(result.begin(), result.end(), out.begin());
}

Dct1Plan::Workspace::Workspace(std::size_t length)
    : data_(static_cast<double*>(fftw_malloc(sizeof(double) * std::max<std::size_t>(length, 1)))) {
  if (!data_) throw std::bad_alloc();
}

Dct1Plan::Workspace::~Workspace() { fftw_free(data_); }

Dct1Plan::Dct1Plan(std::size_t length) : length_(length) {
  if (length == 0) throw ValidationError("Dct1Plan: length must be positive");
  if (length < 2) return;
  Workspace probe(length);
  std::lock_guard lock(planner_mutex());
  plan_ = fftw_plan_r2r_1d(static_cast<int>(length), probe.data(), probe.data(), FFTW_REDFT00,
                           FFTW_ESTIMATE);
  if (!plan_) throw Error("Dct1Plan: FFTW planning failed");
}

Dct1Plan::~Dct1Plan() {
  if (plan_) {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  }
}

void Dct1Plan::execute(std::span<const double> in, std::span<double> out, Workspace& ws) const {
  if (in.size() != length_ || out.size() != length_) {
    throw ValidationError("Dct1Plan::execute: length mismatch");
  }
  if (length_ == 1) {
    out[0] = in[0];
    return;
  }
  // REDFT00 computes x_0 + (-1)^g x_m + 2 sum_{0<i<m} x_i cos(g i pi / m);
  // doubling the endpoints and halving the result yields the plain sum.
  double* buf = ws.data();
  std::copy(in.begin(), in.end(), buf);
  buf[0] *= 2.0;
  buf[length_ - 1] *= 2.0;
  fftw_execute_r2r(static_cast<fftw_plan>(plan_), buf, buf);
  for (std::size_t g = 0; g < length_; ++g) out[g] = 0.5 * buf[g];
}

}  // namespace lisscheb
