// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/curves.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lisscheb/errors.hpp"
#include "lisscheb/trig.hpp"

namespace lisscheb {

namespace {

void check_signs(std::span<const int> u) {
  for (int s : u) {
    if (s != 1 && s != -1) throw ValidationError("sign entries must be 1 or -1");
  }
}

}  // namespace

GeneralCurve::GeneralCurve(std::vector<Index> q, std::vector<double> alpha, std::vector<int> u)
    : q_(std::move(q)), alpha_(std::move(alpha)), u_(std::move(u)) {
  if (q_.empty()) throw EmptyDimension();
  if (alpha_.size() != q_.size() || u_.size() != q_.size()) {
    throw ValidationError("curve frequency, phase and sign vectors differ in length");
  }
  Index g = 0;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i] <= 0) throw ZeroEntry(i);
    g = std::gcd(g, q_[i]);
  }
  if (g != 1) throw ValidationError("curve frequencies must have gcd 1, got " + std::to_string(g));
  check_signs(u_);
}

std::vector<double> general_eval(const GeneralCurve& curve, double t) {
  std::vector<double> x(curve.dim());
  for (std::size_t i = 0; i < curve.dim(); ++i) {
    x[i] = curve.u()[i] * std::cos(static_cast<double>(curve.q()[i]) * t - curve.alpha()[i]);
  }
  return x;
}

LCCurve::LCCurve(DimensionVector n, int epsilon, std::vector<Index> kappa, std::vector<int> u)
    : n_(std::move(n)), epsilon_(epsilon), kappa_(std::move(kappa)), u_(std::move(u)) {
  if (epsilon_ != 1 && epsilon_ != 2) {
    throw ValidationError("epsilon must be 1 or 2, got " + std::to_string(epsilon_));
  }
  if (kappa_.size() != n_.dim() || u_.size() != n_.dim()) {
    throw ValidationError("kappa and u must have " + std::to_string(n_.dim()) + " entries");
  }
  check_signs(u_);
}

LCCurve::LCCurve(DimensionVector n, int epsilon, std::vector<Index> kappa)
    : LCCurve(n, epsilon, std::move(kappa), std::vector<int>(n.dim(), 1)) {}

std::vector<double> lc_eval(const LCCurve& curve, double t) {
  const DimensionVector& n = curve.n();
  std::vector<double> x(curve.dim());
  for (std::size_t i = 0; i < curve.dim(); ++i) {
    const double phase = static_cast<double>(curve.kappa()[i]) * kPi /
                         (static_cast<double>(curve.epsilon()) * static_cast<double>(n[i]));
    x[i] = curve.u()[i] * std::cos(static_cast<double>(n.coproduct(i)) * t - phase);
  }
  return x;
}

double grid_time(const LCCurve& curve, Index l) {
  return static_cast<double>(l) * kPi /
         (static_cast<double>(curve.epsilon()) * static_cast<double>(curve.n().product()));
}

std::vector<double> lc_eval_grid(const LCCurve& curve, Index l) {
  const DimensionVector& n = curve.n();
  std::vector<double> x(curve.dim());
  for (std::size_t i = 0; i < curve.dim(); ++i) {
    const double c = cos_pi_ratio(l - curve.kappa()[i], curve.epsilon() * n[i]);
    x[i] = curve.u()[i] < 0 ? -c : c;
  }
  return x;
}

bool is_degenerate(const LCCurve& curve) {
  if (curve.epsilon() == 1) return true;
  const Index p0 = floor_mod(curve.kappa()[0], 2);
  for (Index k : curve.kappa()) {
    if (floor_mod(k, 2) != p0) return false;
  }
  return true;
}

std::vector<Index> NormalForm::trig_kappa(const DimensionVector& n) const {
  std::vector<Index> out(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) out[i] = delta[i] * n[i];
  return out;
}

namespace {

/// Smallest r in [0, 2P) with r = target_i - kappa_i (mod 2 n_i) and the signs
/// u'_i = u_i (-1)^((r + kappa_i - target_i) / (2 n_i)).
std::pair<Index, std::vector<int>> shift_to(const LCCurve& curve, std::span<const Index> target) {
  const DimensionVector& n = curve.n();
  std::vector<Congruence> system(curve.dim());
  for (std::size_t i = 0; i < curve.dim(); ++i) {
    system[i] = {target[i] - curve.kappa()[i], 2 * n[i]};
  }
  const Index r = crt_solve(system);
  std::vector<int> u(curve.dim());
  for (std::size_t i = 0; i < curve.dim(); ++i) {
    const Index turns = (r + curve.kappa()[i] - target[i]) / (2 * n[i]);
    u[i] = floor_mod(turns, 2) == 0 ? curve.u()[i] : -curve.u()[i];
  }
  return {r, std::move(u)};
}

}  // namespace

NormalForm normalize(const LCCurve& curve) {
  if (curve.epsilon() != 2) throw ValidationError("normalize expects a curve with epsilon = 2");
  const DimensionVector& n = curve.n();
  const std::size_t d = curve.dim();
  NormalForm nf;

  nf.kappa_prime.resize(d);
  for (std::size_t i = 0; i < d; ++i) nf.kappa_prime[i] = floor_mod(curve.kappa()[i] - curve.kappa()[0], 2);
  auto [r, u] = shift_to(curve, nf.kappa_prime);
  nf.r_prime = r;
  nf.u_prime = std::move(u);

  nf.r_trig = std::numeric_limits<Index>::max();
  std::vector<Index> delta(d);
  std::vector<Index> target(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    bool compatible = true;
    for (std::size_t i = 0; i < d; ++i) {
      delta[i] = static_cast<Index>((mask >> i) & 1U);
      target[i] = delta[i] * n[i];
      if (floor_mod(target[i] - curve.kappa()[i], 2) != floor_mod(target[0] - curve.kappa()[0], 2)) {
        compatible = false;
      }
    }
    if (!compatible) continue;
    auto [rt, ut] = shift_to(curve, target);
    if (rt < nf.r_trig) {
      nf.r_trig = rt;
      nf.u_trig = std::move(ut);
      nf.delta = delta;
    }
  }
  nf.trig_tags.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    nf.trig_tags[i] = nf.delta[i] ? TrigTag::sin_tag : TrigTag::cos_tag;
  }
  return nf;
}

MultiplicityProfile multiplicity_profile(const DimensionVector& n, Index l) {
  const Index p = n.product();
  if (l < 0 || l >= 2 * p) {
    throw IndexOutOfRange("curve parameter index " + std::to_string(l) + " outside [0, " +
                          std::to_string(2 * p) + ")");
  }
  MultiplicityProfile out;
  for (std::size_t i = 0; i < n.dim(); ++i) {
    if (l % n[i] != 0) out.face.insert(i);
  }
  out.multiplicity = Index{1} << out.face.size();
  return out;
}

std::map<FaceSet, Index> self_intersection_counts(const DimensionVector& n) {
  std::map<FaceSet, Index> out;
  const std::size_t d = n.dim();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    const FaceSet m(mask);
    Index count = 2;
    for (std::size_t i = 0; i < d; ++i) {
      if (m.contains(i)) count = checked_mul(count, n[i] - 1);
    }
    // at most one n_i is even, so 2^(#M - 1) divides the product when #M >= 1
    out[m] = count >> m.size();
  }
  return out;
}

Index curve_point_total(const DimensionVector& n) {
  Index total = 0;
  for (const auto& [m, count] : self_intersection_counts(n)) total += count;
  return total;
}

std::vector<std::vector<double>> sample_curve(const LCCurve& curve, Index num_samples, double t0,
                                              double t1) {
  if (num_samples < 2) {
    throw InvalidRange("sample count must be at least 2, got " + std::to_string(num_samples));
  }
  if (!(t1 >= t0)) throw InvalidRange("sample range end lies before its start");
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(num_samples));
  const double step = (t1 - t0) / static_cast<double>(num_samples - 1);
  for (Index s = 0; s < num_samples; ++s) {
    const double t = s + 1 == num_samples ? t1 : t0 + step * static_cast<double>(s);
    out.push_back(lc_eval(curve, t));
  }
  return out;
}

}  // namespace lisscheb
