// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "lisscheb/congruence.hpp"
#include "lisscheb/types.hpp"

namespace lisscheb {

/// t -> (u_i cos(q_i t - alpha_i))_i with gcd(q) = 1 and u_i in {-1, 1}.
class GeneralCurve {
 public:
  /// Throws ValidationError on length mismatch, non-positive q, gcd(q) != 1 or u_i not +-1.
  GeneralCurve(std::vector<Index> q, std::vector<double> alpha, std::vector<int> u);

  [[nodiscard]] std::size_t dim() const noexcept { return q_.size(); }
  [[nodiscard]] std::span<const Index> q() const noexcept { return q_; }
  [[nodiscard]] std::span<const double> alpha() const noexcept { return alpha_; }
  [[nodiscard]] std::span<const int> u() const noexcept { return u_; }

 private:
  std::vector<Index> q_;
  std::vector<double> alpha_;
  std::vector<int> u_;
};

[[nodiscard]] std::vector<double> general_eval(const GeneralCurve& curve, double t);

/// t -> (u_i cos(P_i[n] t - kappa_i pi / (epsilon n_i)))_i, epsilon in {1, 2}.
class LCCurve {
 public:
  /// Throws ValidationError on bad epsilon, length mismatch or u_i not +-1.
  LCCurve(DimensionVector n, int epsilon, std::vector<Index> kappa, std::vector<int> u);
  /// u = (1, ..., 1)
  LCCurve(DimensionVector n, int epsilon, std::vector<Index> kappa);

  [[nodiscard]] const DimensionVector& n() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return n_.dim(); }
  [[nodiscard]] int epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] std::span<const Index> kappa() const noexcept { return kappa_; }
  [[nodiscard]] std::span<const int> u() const noexcept { return u_; }

 private:
  DimensionVector n_;
  int epsilon_;
  std::vector<Index> kappa_;
  std::vector<int> u_;
};

[[nodiscard]] std::vector<double> lc_eval(const LCCurve& curve, double t);

/// Parameter t_l = l pi / (epsilon P[n]).
[[nodiscard]] double grid_time(const LCCurve& curve, Index l);

/// lc_eval at t_l, computed from the exact angle (l - kappa_i) pi / (epsilon n_i).
/// Coordinates coincide bitwise with the corresponding node points.
[[nodiscard]] std::vector<double> lc_eval_grid(const LCCurve& curve, Index l);

/// epsilon = 2: all kappa_i of equal parity. epsilon = 1: always.
[[nodiscard]] bool is_degenerate(const LCCurve& curve);

enum class TrigTag { cos_tag, sin_tag };

/// Shifted representations of an epsilon = 2 curve. Both satisfy
///   curve(t - r pi / (2 P[n])) = LCCurve(n, 2, kappa', u')(t).
/// First form: kappa'_1 = 0 and kappa'_i in {0, 1}.
/// Second form: kappa'_i = delta_i n_i, i.e. component i is u'_i sin(P_i t) when
/// delta_i = 1 and u'_i cos(P_i t) otherwise.
/// Each shift is the smallest admissible value in [0, 2 P[n]).
struct NormalForm {
  std::vector<Index> kappa_prime;
  std::vector<int> u_prime;
  Index r_prime = 0;

  std::vector<Index> delta;
  std::vector<int> u_trig;
  Index r_trig = 0;
  std::vector<TrigTag> trig_tags;

  /// kappa'_i = delta_i n_i
  [[nodiscard]] std::vector<Index> trig_kappa(const DimensionVector& n) const;
};

/// Throws ValidationError unless curve.epsilon() == 2.
[[nodiscard]] NormalForm normalize(const LCCurve& curve);

struct MultiplicityProfile {
  FaceSet face;
  Index multiplicity = 1;
};

/// M = {i : l != 0 mod n_i}, multiplicity 2^#M. Throws IndexOutOfRange unless 0 <= l < 2 P[n].
[[nodiscard]] MultiplicityProfile multiplicity_profile(const DimensionVector& n, Index l);

/// Count 2^(1 - #M) prod_{i in M} (n_i - 1) for every face set M.
[[nodiscard]] std::map<FaceSet, Index> self_intersection_counts(const DimensionVector& n);

/// Sum over all face sets: 2^(1 - d) prod_i (n_i + 1).
[[nodiscard]] Index curve_point_total(const DimensionVector& n);

/// num_samples points at equispaced t in [t0, t1], both ends included.
/// Throws InvalidRange when num_samples < 2 or t1 < t0.
[[nodiscard]] std::vector<std::vector<double>> sample_curve(const LCCurve& curve, Index num_samples,
                                                            double t0, double t1);

}  // namespace lisscheb
