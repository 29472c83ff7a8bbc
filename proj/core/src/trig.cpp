// SPDX-License-Identifier: Apache-2.0
#include "lisscheb/trig.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lisscheb/errors.hpp"

namespace lisscheb {

double cos_pi_ratio(Index k, Index m) {
  if (m <= 0) throw InvalidRange("cos_pi_ratio: denominator must be positive");
  Index r = floor_mod(k, 2 * m);
  if (r > m) r = 2 * m - r;
  // r / m in [0, 1]
  double sign = 1.0;
  if (2 * r > m) {
    r = m - r;
    sign = -1.0;
  }
  if (r == 0) return sign;
  if (2 * r == m) return 0.0;
  const Index g = std::gcd(r, m);
  const Index num = r / g;
  const Index den = m / g;
  constexpr long double pi = 3.141592653589793238462643383279502884L;
  const long double angle = pi * static_cast<long double>(num) / static_cast<long double>(den);
  return sign * static_cast<double>(std::cos(angle));
}

double cgl_point(Index m, Index i) {
  if (m <= 0) throw IndexOutOfRange("cgl_point: m must be positive, got " + std::to_string(m));
  if (i < 0 || i > m) {
    throw IndexOutOfRange("cgl_point: index " + std::to_string(i) + " outside [0, " +
                          std::to_string(m) + "]");
  }
  return cos_pi_ratio(i, m);
}

}  // namespace lisscheb
