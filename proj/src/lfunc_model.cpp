#include "lowlying/lfunc_model.hpp"

#include "lowlying/chebyshev.hpp"
#include "trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowlying {

namespace {

void check_angle(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("Satake angle must lie in [0, pi]");
  }
}

void check_kappa(long kappa) {
  if (kappa < 2 || kappa % 2 != 0) throw std::invalid_argument("weight kappa must be an even integer >= 2");
}

} // namespace

double lambda_power(double theta, long n) {
  check_angle(theta);
  if (n < 0) throw std::invalid_argument("lambda_power: n must be >= 0");
  const auto base = detail::sincos_multiple(1, theta);
  const auto top = detail::sincos_multiple(n + 1, theta);
  return detail::sine_ratio(n, base, top.sin);
}

double PowerSumRoutes::max_discrepancy() const {
  return std::max({std::fabs(direct - ratio), std::fabs(direct - chebyshev), std::fabs(ratio - chebyshev)});
}

PowerSumRoutes power_sum_routes(double theta, long n, long r) {
  check_angle(theta);
  if (n < 1 || r < 1) throw std::invalid_argument("power_sum: n and r must be >= 1");
  PowerSumRoutes out{};

  // The imaginary parts cancel pairwise (j <-> r - j).
  double direct = 0.0;
  for (long j = 0; j <= r; ++j) direct += detail::sincos_multiple(n * (2 * j - r), theta).cos;
  out.direct = direct;

  const auto base = detail::sincos_multiple(n, theta);
  const auto top = detail::sincos_multiple(n * (r + 1), theta);
  out.ratio = detail::sine_ratio(r, base, top.sin);

  out.chebyshev = chebyshev_value(r, 2.0 * base.cos);
  return out;
}

double power_sum_S(double theta, long n, long r) {
  return power_sum_routes(theta, n, r).direct;
}

double alpha_pair_power(double theta, long n) {
  check_angle(theta);
  if (n < 0) throw std::invalid_argument("alpha_pair_power: n must be >= 0");
  return 2.0 * detail::sincos_multiple(n, theta).cos;
}

double alpha_pair_power_chebyshev(double theta, long n) {
  check_angle(theta);
  if (n < 0) throw std::invalid_argument("alpha_pair_power: n must be >= 0");
  const double x = 2.0 * std::cos(theta);
  if (n == 0) return 2.0 * chebyshev_value(0, x);
  if (n == 1) return chebyshev_value(1, x);
  return chebyshev_value(n, x) - chebyshev_value(n - 2, x);
}

int mu_kappa_r(long r, long kappa) {
  const long twice = r * (kappa - 1);
  if (twice % 2 != 0) return 0;
  return (twice / 2) % 2 != 0 ? 1 : 0;
}

GammaShifts gamma_shifts(long r, long kappa) {
  check_kappa(kappa);
  if (r < 1) throw std::invalid_argument("gamma_shifts: r must be >= 1");
  GammaShifts out;
  const double k1 = static_cast<double>(kappa - 1);
  if (r % 2 != 0) {
    for (long a = 0; 2 * a <= r - 1; ++a) {
      const double base = static_cast<double>(2 * a + 1) * k1 / 2.0;
      out.shifts.push_back(base);
      out.shifts.push_back(1.0 + base);
    }
  } else {
    out.shifts.push_back(static_cast<double>(mu_kappa_r(r, kappa)));
    for (long a = 1; 2 * a <= r; ++a) {
      const double base = static_cast<double>(a) * k1;
      out.shifts.push_back(base);
      out.shifts.push_back(1.0 + base);
    }
  }
  return out;
}

int epsilon_kappa_r(long r, long kappa) {
  check_kappa(kappa);
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("epsilon_kappa_r: r must be odd and positive");
  const int i_kappa = (kappa / 2) % 2 == 0 ? 1 : -1;
  switch (r % 8) {
  case 1: return i_kappa;
  case 3: return -1;
  case 5: return -i_kappa;
  default: return 1;
  }
}

int root_number(long r, long kappa, int eps_f) {
  check_kappa(kappa);
  if (r < 1) throw std::invalid_argument("root_number: r must be >= 1");
  if (eps_f != 1 && eps_f != -1) throw std::invalid_argument("root_number: eps_f must be +1 or -1");
  if (r % 2 == 0) return 1;
  return eps_f * epsilon_kappa_r(r, kappa);
}

} // namespace lowlying
