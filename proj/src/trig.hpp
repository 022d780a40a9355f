#pragma once

#include <cmath>

namespace lowlying::detail {

struct SinCos {
  double sin;
  double cos;
};

// sin and cos of k*theta with the product split exactly into hi + lo, so the
// only rounding left is in the library sin/cos and one first-order
// correction. Keeps sin(k*theta) accurate relative to its size near multiples
// of pi, where the sine ratios below are most sensitive.
inline SinCos sincos_multiple(long k, double theta) {
  const double kd = static_cast<double>(k);
  const double hi = kd * theta;
  const double lo = std::fma(kd, theta, -hi);
  const double s = std::sin(hi);
  const double c = std::cos(hi);
  return {s + lo * c, c - lo * s};
}

// sin((m+1)t)/sin(t) given s = sin(t), c = cos(t) and the numerator value;
// switches to the even Taylor limit sign(c)^m (m+1)(1 - m(m+2)s^2/6) when
// |s| is below the singular threshold.
inline double sine_ratio(long m, const SinCos& base, double numerator) {
  constexpr double kSingular = 1e-8;
  if (std::fabs(base.sin) < kSingular) {
    const double sign = (base.cos < 0.0 && (m % 2 != 0)) ? -1.0 : 1.0;
    const double md = static_cast<double>(m);
    return sign * (md + 1.0) * (1.0 - md * (md + 2.0) * base.sin * base.sin / 6.0);
  }
  return numerator / base.sin;
}

} // namespace lowlying::detail
