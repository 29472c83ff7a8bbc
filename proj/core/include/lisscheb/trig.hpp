// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lisscheb/congruence.hpp"

namespace lisscheb {

inline constexpr double kPi = 3.14159265358979323846;

/// cos(k * pi / m) for integer k and m > 0.
///
/// The angle is reduced exactly in units of pi/m to a canonical fraction in
/// [0, 1/2] before a single call to std::cos, so equal rational angles give
/// bit-identical results and cos_pi_ratio(m - k, m) == -cos_pi_ratio(k, m).
/// Returns exact 1, 0, -1 at the rational multiples 0, 1/2, 1.
[[nodiscard]] double cos_pi_ratio(Index k, Index m);

/// Chebyshev-Gauss-Lobatto point cos(i * pi / m). Throws IndexOutOfRange unless 0 <= i <= m.
[[nodiscard]] double cgl_point(Index m, Index i);

}  // namespace lisscheb
