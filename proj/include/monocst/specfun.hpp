#pragma once

#include <memory>
#include <vector>

namespace monocst {

// C_j^nu(y) by the three-term recurrence; nu > 0.
double gegenbauer(int j, double nu, double y);

// Homogeneous Gegenbauer form s^j C_j^nu(t / s) evaluated without dividing by s:
// j H_j = 2 t (j + nu - 1) H_{j-1} - (j + 2 nu - 2) s^2 H_{j-2}.
double gegenbauer_homogeneous(int j, double nu, double t, double s_squared);

// Modified Bessel function of the first kind for nu >= 0, z >= 0 (power series).
// Throws RangeError for z > 700.
double bessel_i(double nu, double z);

// Normalized sphere moment int_{S^{m-1}} <omega, t>^{2j} dt over the
// probability measure, i.e. Gamma(j+1/2) Gamma(m/2) / (Gamma(1/2) Gamma(j+m/2)).
double sphere_moment(int m, int two_j);

// Area of the unit sphere S^d in R^{d+1}: 2 pi^{(d+1)/2} / Gamma((d+1)/2).
double sphere_area(int d);

// int_0^pi sin^k(theta) d theta.
double sine_power_integral(int k);

// Coefficient ladders for the Cauchy-Kowalewski polynomials X_0^{(j)}.
struct CoefficientTable {
  int m = 0;
  int max_degree = 0;
  std::vector<double> mu0;     // mu_0^j
  std::vector<double> lambda;  // dual Radon scaling on slice powers (x0 + x)^j
  std::vector<double> xi;      // X_0^{(j)}(x0, 0) = xi_j x0^j
  std::vector<double> cnorm;   // cnorm[k] = normalized moment of degree k (odd entries 0)
};

// Builds (and caches) the table for (m, max_degree). m >= 2.
std::shared_ptr<const CoefficientTable> ck_coefficients(int m, int max_degree);

}  // namespace monocst
