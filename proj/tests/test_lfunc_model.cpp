#include "lowlying/chebyshev.hpp"
#include "lowlying/lfunc_model.hpp"
#include "lowlying/synthetic_form.hpp"
#include "lowlying/test_function.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace lowlying;

namespace {

constexpr double kPi = std::numbers::pi;

// S(e^{i theta}; n, r) as a literal complex geometric sum.
double complex_power_sum(double theta, long n, long r) {
  std::complex<double> s = 0.0;
  for (long j = 0; j <= r; ++j) s += std::polar(1.0, theta * static_cast<double>(n * (2 * j - r)));
  return s.real();
}

// integral Phi(x) e^{-2 pi i x u} dx = 2 integral_0^A Phi(x) cos(2 pi x u) dx
// plus the tail. With Phi(x) = nu sinc^2(pi nu x) the integrand is
// (1/(2 pi^2 nu x^2)) [cos(2 pi u x) - cos(2 pi (nu+u) x)/2 - cos(2 pi (nu-u) x)/2];
// the non-oscillating pieces have tail exactly coefficient/A, the others are
// O(1/A^2).
double fejer_fourier(const TestFunction& phi, double u) {
  const double nu = phi.nu();
  const double A = 2.0e4 / nu;
  const int panels = static_cast<int>(A * 4.0 * nu);
  const double body =
      2.0 * oracle::integrate([&](double x) { return phi.phi(x) * std::cos(2.0 * kPi * x * u); }, 0.0, A, panels);
  double flat = 0.0;
  if (u == 0.0) flat += 1.0;
  if (nu + u == 0.0) flat -= 0.5;
  if (nu - u == 0.0) flat -= 0.5;
  return body + 2.0 / (2.0 * kPi * kPi * nu) * flat / A;
}

} // namespace

TEST_CASE("lambda_power examples and limits") {
  CHECK(lambda_power(kPi / 2, 2) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(lambda_power(kPi / 3, 1) == doctest::Approx(1.0).epsilon(1e-14));
  for (long n = 0; n <= 12; ++n) {
    CHECK(lambda_power(0.0, n) == static_cast<double>(n + 1));
    CHECK(lambda_power(kPi, n) == (n % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(n + 1));
    CHECK(lambda_power(1e-12, n) == doctest::Approx(static_cast<double>(n + 1)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lambda_power(-0.1, 2), std::domain_error);
  CHECK_THROWS_AS(lambda_power(3.2, 2), std::domain_error);
}

TEST_CASE("lambda_power bound, parity and agreement with the exact X_n") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int s = 0; s < 2000; ++s) {
    const double t = angle(rng);
    for (long n = 0; n <= 20; ++n) {
      const double v = lambda_power(t, n);
      CHECK(std::fabs(v) <= static_cast<double>(n + 1) + 1e-12);
      const double flipped = lambda_power(kPi - t, n);
      CHECK(std::fabs(flipped - (n % 2 == 0 ? v : -v)) < 1e-10);
    }
    const double x = 2.0 * std::cos(t);
    CHECK(std::fabs(lambda_power(t, 9) - static_cast<double>(cheb_poly(9).evaluate(x))) < 1e-10);
  }
}

TEST_CASE("lambda_power near the Taylor switch stays continuous") {
  for (double t : {1e-9, 5e-9, 1.01e-8, 2e-8, 1e-7}) {
    for (long n : {1L, 5L, 20L}) {
      const long double tl = t;
      const long double exact = std::sin((n + 1) * tl) / std::sin(tl);
      CHECK(std::fabs(lambda_power(t, n) - static_cast<double>(exact)) < 1e-10);
      const long double near_pi = std::numbers::pi_v<long double> - tl;
      CHECK(std::fabs(lambda_power(kPi - t, n) - static_cast<double>(std::sin((n + 1) * near_pi) / std::sin(near_pi))) <
            1e-8);
    }
  }
}

TEST_CASE("power_sum_S examples") {
  for (long n = 1; n <= 5; ++n) {
    for (long r = 1; r <= 5; ++r) CHECK(power_sum_S(0.0, n, r) == doctest::Approx(static_cast<double>(r + 1)));
  }
  for (double t : {0.1, 1.0, 2.5}) CHECK(power_sum_S(t, 1, 1) == doctest::Approx(2.0 * std::cos(t)).epsilon(1e-14));
  // n theta a multiple of pi: the ratio route takes the +-(r+1) limit.
  const PowerSumRoutes at_pi = power_sum_routes(kPi / 2, 2, 3);
  CHECK(at_pi.ratio == doctest::Approx(-4.0));
  CHECK(at_pi.max_discrepancy() < 1e-10);
}

TEST_CASE("power_sum_S three routes agree with each other and with the complex sum") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::uniform_int_distribution<long> small(1, 10);
  double worst = 0.0, worst_oracle = 0.0;
  for (int s = 0; s < 10000; ++s) {
    const double t = angle(rng);
    const long n = small(rng), r = small(rng);
    const PowerSumRoutes routes = power_sum_routes(t, n, r);
    worst = std::max(worst, routes.max_discrepancy());
    worst_oracle = std::max(worst_oracle, std::fabs(routes.direct - complex_power_sum(t, n, r)));
  }
  CHECK(worst < 1e-10);
  CHECK(worst_oracle < 1e-10);
}

TEST_CASE("alpha_pair_power against its Chebyshev form") {
  CHECK(alpha_pair_power(0.4, 0) == 2.0);
  CHECK(alpha_pair_power(kPi / 3, 1) == doctest::Approx(1.0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int s = 0; s < 500; ++s) {
    const double t = angle(rng);
    const double x = 2.0 * std::cos(t);
    for (long n = 0; n <= 12; ++n) CHECK(std::fabs(alpha_pair_power(t, n) - alpha_pair_power_chebyshev(t, n)) < 1e-12);
    const double x7 = static_cast<double>(cheb_poly(7).evaluate(x) - cheb_poly(5).evaluate(x));
    CHECK(std::fabs(alpha_pair_power(t, 7) - x7) < 1e-12);
  }
}

TEST_CASE("gamma_shifts") {
  CHECK(gamma_shifts(1, 12).shifts == std::vector<double>{5.5, 6.5});
  CHECK(gamma_shifts(2, 12).shifts == std::vector<double>{1.0, 11.0, 12.0});
  CHECK(mu_kappa_r(2, 12) == 1);
  CHECK(mu_kappa_r(4, 12) == 0);  // 4*11/2 = 22
  CHECK(mu_kappa_r(2, 2) == 1);
  CHECK(mu_kappa_r(1, 12) == 0);  // 11/2 is not an integer
  CHECK(gamma_shifts(4, 12).shifts == std::vector<double>{0.0, 11.0, 12.0, 22.0, 23.0});
  CHECK(gamma_shifts(3, 4).shifts == std::vector<double>{1.5, 2.5, 4.5, 5.5});
  for (long r = 1; r <= 12; ++r) {
    for (long kappa : {2L, 4L, 12L, 16L}) {
      const GammaShifts g = gamma_shifts(r, kappa);
      CHECK(g.shifts.size() == static_cast<std::size_t>(r + 1));
      for (double m : g.shifts) CHECK(m >= 0.0);
    }
  }
  CHECK_THROWS_AS(gamma_shifts(1, 11), std::invalid_argument);
  CHECK_THROWS_AS(gamma_shifts(0, 12), std::invalid_argument);
}

TEST_CASE("root_number table") {
  CHECK(root_number(2, 12, -1) == 1);
  CHECK(root_number(3, 12, 1) == -1);
  CHECK(root_number(3, 2, 1) == -1);
  CHECK(root_number(1, 12, -1) == -1);
  CHECK(epsilon_kappa_r(1, 12) == 1);
  CHECK(epsilon_kappa_r(1, 2) == -1);   // i^2
  CHECK(epsilon_kappa_r(5, 2) == 1);    // -i^2
  CHECK(epsilon_kappa_r(5, 12) == -1);  // -i^12
  CHECK(epsilon_kappa_r(7, 6) == 1);
  CHECK(epsilon_kappa_r(9, 6) == -1);   // r = 1 mod 8, i^6
  CHECK(epsilon_kappa_r(11, 4) == -1);
  for (long r = 1; r <= 16; ++r) {
    for (long kappa = 2; kappa <= 20; kappa += 2) {
      for (int e : {-1, 1}) {
        const int w = root_number(r, kappa, e);
        CHECK(w * w == 1);
        if (r % 2 == 0) CHECK(w == 1);
      }
    }
  }
  CHECK_THROWS_AS(root_number(1, 12, 0), std::invalid_argument);
}

TEST_CASE("Fejer test function values") {
  const TestFunction f = fejer_test_function(0.5);
  CHECK(f.kind() == TestFunctionKind::fejer);
  CHECK(f.phi_hat(0.0) == 1.0);
  CHECK(f.phi_hat(0.5) == 0.0);
  CHECK(f.phi_hat(0.7) == 0.0);
  CHECK(f.phi_hat(0.25) == 0.5);
  CHECK(f.phi(0.0) == 0.5);
  CHECK(f.phi(2.0) == doctest::Approx(0.0).epsilon(1e-15));  // sin(pi) zero
  CHECK(f.nu_exact() == Rational(1, 2));
  for (double u : {0.1, 0.3, 0.49}) CHECK(f.phi_hat(-u) == f.phi_hat(u));
  for (double x : {0.1, 1.7, 40.0}) CHECK(f.phi(-x) == f.phi(x));
  CHECK_THROWS_AS(fejer_test_function(0.0), std::invalid_argument);
  CHECK_THROWS_AS(fejer_test_function(-1.0), std::invalid_argument);
}

TEST_CASE("Fejer Fourier consistency") {
  for (double nu : {0.5, 1.0, 1.4}) {
    const TestFunction f = fejer_test_function(nu);
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0, 1.5}) {
      const double u = frac * nu;
      CHECK(std::fabs(fejer_fourier(f, u) - f.phi_hat(u)) < 1e-6);
    }
  }
}

TEST_CASE("sampled test function") {
  // A triangle sampled at its knots reproduces the Fejer pair.
  const TestFunction tri = TestFunction::sampled(Rational(1, 2), {1.0, 0.5, 0.0});
  const TestFunction fej = TestFunction::fejer(Rational(1, 2));
  CHECK(tri.kind() == TestFunctionKind::sampled);
  for (double u : {0.0, 0.05, 0.2, 0.25, 0.4, 0.5, 0.6}) CHECK(tri.phi_hat(u) == doctest::Approx(fej.phi_hat(u)));
  for (double x : {0.0, 1e-9, 0.3, 1.0, 2.5, 17.0}) {
    CHECK(std::fabs(tri.phi(x) - fej.phi(x)) < 1e-13);
  }

  // A non-triangular profile against a direct quadrature of its transform.
  const TestFunction bump = TestFunction::sampled(Rational(3, 4), {1.0, 0.9, 0.4, 0.1, 0.0});
  for (double x : {0.0, 0.4, 1.3, 5.0}) {
    const double numeric =
        2.0 * oracle::integrate([&](double u) { return bump.phi_hat(u) * std::cos(2.0 * kPi * x * u); }, 0.0, 0.75, 4);
    CHECK(std::fabs(bump.phi(x) - numeric) < 1e-12);
  }
  CHECK(bump.phi_hat(0.8) == 0.0);
  CHECK(bump.phi_hat(-0.3) == bump.phi_hat(0.3));
  CHECK_THROWS_AS(TestFunction::sampled(Rational(1), {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(TestFunction::sampled(Rational(0), {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("SyntheticForm angles") {
  const SyntheticForm f(12, 11, 1);
  const SyntheticForm g(12, 11, 1);
  const SyntheticForm h(12, 11, 1, 99);
  int differ = 0;
  for (std::uint64_t p : {2, 3, 5, 7, 13, 17, 19, 23, 101, 7919}) {
    const double t = f.angle(p);
    CHECK(t >= 0.0);
    CHECK(t <= kPi);
    CHECK(t == g.angle(p));
    CHECK(std::fabs(f.hecke_eigenvalue(p)) <= 2.0);
    CHECK(f.reflect().angle(p) == kPi - t);
    if (h.angle(p) != t) ++differ;
  }
  CHECK(differ > 0);
  CHECK_THROWS_AS(f.angle(11), std::domain_error);
  CHECK_THROWS_AS(SyntheticForm(11, 11, 1), std::invalid_argument);
  CHECK_THROWS_AS(SyntheticForm(12, 12, 1), std::invalid_argument);
  CHECK_THROWS_AS(SyntheticForm(12, 11, 0), std::invalid_argument);
}

TEST_CASE("SyntheticForm angle distributions") {
  // Sato-Tate mean of cos(2 theta) is -1/2; uniform mean is 0. Mean of
  // lambda(p)^2 is 1 under Sato-Tate.
  const SyntheticForm st(12, 11, 1, 3, AngleDistribution::sato_tate);
  const SyntheticForm un(12, 11, 1, 3, AngleDistribution::uniform);
  double st_c2 = 0.0, un_c2 = 0.0, st_l2 = 0.0;
  int n = 0;
  for (std::uint64_t p = 12; n < 20000; ++p) {
    st_c2 += std::cos(2.0 * st.angle(p));
    un_c2 += std::cos(2.0 * un.angle(p));
    st_l2 += st.hecke_eigenvalue(p) * st.hecke_eigenvalue(p);
    ++n;
  }
  CHECK(std::fabs(st_c2 / n + 0.5) < 0.02);
  CHECK(std::fabs(un_c2 / n) < 0.02);
  CHECK(std::fabs(st_l2 / n - 1.0) < 0.03);
}

TEST_CASE("SyntheticForm JSON round trip") {
  const SyntheticForm f(16, 10007, -1, 12345, AngleDistribution::uniform);
  const nlohmann::json j = f;
  CHECK(j.at("kappa") == 16);
  CHECK(j.at("q") == 10007);
  CHECK(j.at("eps_f") == -1);
  CHECK(j.at("seed") == 12345);
  CHECK(j.at("distribution") == "uniform");
  const SyntheticForm back = synthetic_form_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == f);
  CHECK(back.angle(2) == f.angle(2));

  const SyntheticForm r = f.reflect();
  const SyntheticForm r_back = synthetic_form_from_json(nlohmann::json(r));
  CHECK(r_back == r);
  CHECK(r_back.angle(3) == r.angle(3));

  nlohmann::json bad = j;
  bad["distribution"] = "gaussian";
  CHECK_THROWS_AS(synthetic_form_from_json(bad), std::invalid_argument);
  bad = j;
  bad["q"] = 10;
  CHECK_THROWS_AS(synthetic_form_from_json(bad), std::invalid_argument);
  CHECK(parse_angle_distribution("sato-tate") == AngleDistribution::sato_tate);
  CHECK(to_string(AngleDistribution::sato_tate) == "sato-tate");
}
