#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "monocst/errors.hpp"
#include "monocst/specfun.hpp"

using namespace monocst;

namespace {

// C_n^l(x) = sum_k (-1)^k Gamma(n-k+l) / (Gamma(l) k! (n-2k)!) (2x)^{n-2k}, in
// long double; `spread` receives the sum of |terms| for cancellation-aware tolerances.
double gegenbauer_sum(int n, double l, double x, double* spread = nullptr) {
  long double s = 0.0L, a = 0.0L;
  for (int k = 0; 2 * k <= n; ++k) {
    const long double logc = std::lgamma(static_cast<long double>(n - k + l)) - std::lgamma(static_cast<long double>(l)) -
                             std::lgamma(k + 1.0L) - std::lgamma(n - 2.0L * k + 1.0L);
    const long double term = std::exp(logc) * std::pow(2.0L * x, n - 2 * k);
    s += (k % 2 ? -term : term);
    a += std::abs(term);
  }
  if (spread) *spread = static_cast<double>(a);
  return static_cast<double>(s);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST_CASE("Gegenbauer recurrence against the explicit sum") {
  for (double nu : {0.5, 1.0, 1.5, 2.5, 5.5})
    for (int n = 0; n <= 14; ++n)
      for (double x : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
        double spread = 0.0;
        const double ref = gegenbauer_sum(n, nu, x, &spread);
        CHECK(std::abs(gegenbauer(n, nu, x) - ref) <= 1e-13 * std::max(1.0, spread));
      }
}

TEST_CASE("C^{1/2} is Legendre") {
  for (int n = 0; n <= 20; ++n)
    for (double x : {-0.7, 0.2, 0.95}) CHECK(gegenbauer(n, 0.5, x) == doctest::Approx(std::legendre(n, x)).epsilon(1e-12));
}

TEST_CASE("homogeneous Gegenbauer form") {
  for (int j = 0; j <= 10; ++j) {
    const double t = 0.7, s = 1.9, nu = 1.5;
    CHECK(gegenbauer_homogeneous(j, nu, t, s * s) ==
          doctest::Approx(std::pow(s, j) * gegenbauer(j, nu, t / s)).epsilon(1e-12));
  }
  // s = 0 leaves the leading term 2^j (nu)_j / j! t^j
  const double lead = std::exp(std::lgamma(4 + 1.5) - std::lgamma(1.5) - std::lgamma(5.0)) * 16.0;
  CHECK(gegenbauer_homogeneous(4, 1.5, 1.2, 0.0) == doctest::Approx(lead * std::pow(1.2, 4)).epsilon(1e-12));
}

TEST_CASE("modified Bessel against libstdc++ and elementary forms") {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.5, 6.0})
    for (double z : {1e-3, 0.1, 1.0, 4.0, 12.0, 40.0}) CHECK(rel(bessel_i(nu, z), std::cyl_bessel_i(nu, z)) < 1e-12);
  for (double z : {0.2, 1.0, 3.0}) {
    const double pre = std::sqrt(2.0 / (std::numbers::pi * z));
    CHECK(rel(bessel_i(0.5, z), pre * std::sinh(z)) < 1e-13);
    CHECK(rel(bessel_i(1.5, z), pre * (std::cosh(z) - std::sinh(z) / z)) < 1e-12);
  }
  CHECK(bessel_i(0.0, 0.0) == 1.0);
  CHECK(bessel_i(2.0, 0.0) == 0.0);
  CHECK_THROWS_AS(bessel_i(1.0, 701.0), RangeError);
  CHECK_THROWS_AS(bessel_i(-1.0, 1.0), DomainError);
}

TEST_CASE("sphere moments against the double-factorial ratio") {
  // E[t_1^{2j}] = (2j-1)!! / (m (m+2) ... (m+2j-2))
  for (int m = 2; m <= 9; ++m)
    for (int j = 0; j <= 6; ++j) {
      double ref = 1.0;
      for (int i = 0; i < j; ++i) ref *= (2.0 * i + 1.0) / (m + 2.0 * i);
      CHECK(rel(sphere_moment(m, 2 * j), ref) < 1e-13);
    }
  CHECK_THROWS_AS(sphere_moment(3, 3), DomainError);
}

TEST_CASE("sphere moments against Monte Carlo") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int m : {2, 3, 5}) {
    const int n = 400000;
    double s2 = 0.0, s4 = 0.0;
    for (int i = 0; i < n; ++i) {
      double norm2 = 0.0, first = 0.0;
      for (int k = 0; k < m; ++k) {
        const double v = g(rng);
        norm2 += v * v;
        if (k == 0) first = v;
      }
      const double t2 = first * first / norm2;
      s2 += t2;
      s4 += t2 * t2;
    }
    CHECK(std::abs(s2 / n - sphere_moment(m, 2)) < 3e-3);
    CHECK(std::abs(s4 / n - sphere_moment(m, 4)) < 3e-3);
  }
}

TEST_CASE("sphere areas and sine powers") {
  CHECK(sphere_area(1) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi).epsilon(1e-14));
  CHECK(sine_power_integral(0) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(sine_power_integral(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sine_power_integral(2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(sine_power_integral(3) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("cross-ladder: lambda_k mu0^k C_k(1) = 1") {
  for (int m = 2; m <= 8; ++m) {
    const auto t = ck_coefficients(m, 12);
    const double nu = 0.5 * (m - 1);
    for (int k = 0; k <= 12; ++k) {
      CHECK(rel(t->lambda[k] * t->mu0[k] * gegenbauer(k, nu, 1.0), 1.0) < 1e-12);
      CHECK(rel(t->xi[k], t->mu0[k] * gegenbauer(k, nu, 1.0)) < 1e-14);
    }
    CHECK(t->lambda[1] == doctest::Approx(1.0 / m).epsilon(1e-15));
    CHECK(t->cnorm[2] == doctest::Approx(1.0 / m).epsilon(1e-15));
  }
}

TEST_CASE("mu0 definition from Gegenbauer values at zero") {
  for (int m : {2, 3, 6}) {
    const double nu = 0.5 * (m - 1);
    const auto t = ck_coefficients(m, 9);
    for (int j = 0; 2 * j + 1 <= 9; ++j) {
      const double sign = j % 2 ? -1.0 : 1.0;
      CHECK(rel(t->mu0[2 * j], sign / gegenbauer_sum(2 * j, nu, 0.0)) < 1e-12);
      CHECK(rel(t->mu0[2 * j + 1], sign * (m + 2.0 * j) / (m - 1.0) / gegenbauer_sum(2 * j, nu + 1.0, 0.0)) < 1e-12);
    }
  }
  CHECK(ck_coefficients(3, 4) == ck_coefficients(3, 4));
  CHECK_THROWS_AS(ck_coefficients(1, 4), DomainError);
}
