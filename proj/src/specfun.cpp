#include "monocst/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "monocst/errors.hpp"

namespace monocst {

double gegenbauer(int j, double nu, double y) {
  if (j < 0) throw DomainError("gegenbauer degree must be nonnegative");
  return gegenbauer_homogeneous(j, nu, y, 1.0);
}

double gegenbauer_homogeneous(int j, double nu, double t, double s_squared) {
  if (j < 0) return 0.0;
  double prev = 1.0;
  if (j == 0) return prev;
  double cur = 2.0 * nu * t;
  for (int k = 2; k <= j; ++k) {
    const double next = (2.0 * t * (k + nu - 1.0) * cur - (k + 2.0 * nu - 2.0) * s_squared * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_i(double nu, double z) {
  if (nu < 0.0) throw DomainError("bessel_i order must be nonnegative");
  if (z < 0.0) throw DomainError("bessel_i argument must be nonnegative");
  if (z > 700.0) throw RangeError("bessel_i argument above 700 overflows");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double half = 0.5 * z;
  // Leading term in log space keeps (z/2)^nu / Gamma(nu+1) finite for large nu.
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  double sum = term;
  const double q = half * half;
  for (int k = 1; k < 100000; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double sphere_moment(int m, int two_j) {
  if (m < 2) throw DomainError("sphere_moment needs m >= 2");
  if (two_j < 0 || two_j % 2 != 0) throw DomainError("sphere_moment needs an even nonnegative degree");
  const int j = two_j / 2;
  double value = 1.0;
  for (int i = 0; i < j; ++i) value *= (2.0 * i + 1.0) / (2.0 * i + m);
  return value;
}

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area needs d >= 1");
  const double half = 0.5 * (d + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double sine_power_integral(int k) {
  if (k < 0) throw DomainError("sine_power_integral needs k >= 0");
  return std::sqrt(std::numbers::pi) * std::exp(std::lgamma(0.5 * (k + 1)) - std::lgamma(0.5 * k + 1.0));
}

namespace {

CoefficientTable build_table(int m, int max_degree) {
  CoefficientTable t;
  t.m = m;
  t.max_degree = max_degree;
  t.mu0.resize(max_degree + 1);
  t.lambda.resize(max_degree + 1);
  t.xi.resize(max_degree + 1);
  t.cnorm.assign(max_degree + 3, 0.0);

  const double nu = 0.5 * (m - 1);
  for (int k = 0; k <= max_degree; ++k) {
    const int j = k / 2;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      t.mu0[k] = sign / gegenbauer(k, nu, 0.0);
    } else {
      t.mu0[k] = sign * (m + 2.0 * j) / (m - 1.0) / gegenbauer(2 * j, nu + 1.0, 0.0);
    }
    if (!std::isfinite(t.mu0[k])) {
      throw RangeError("mu0 overflow at degree " + std::to_string(k));
    }
    t.xi[k] = t.mu0[k] * gegenbauer(k, nu, 1.0);
  }

  t.lambda[0] = 1.0;
  for (int k = 1; k <= max_degree; ++k) {
    if (k % 2 == 1) {
      t.lambda[k] = t.lambda[k - 1] * static_cast<double>(k) / (k - 1.0 + m);
    } else {
      t.lambda[k] = t.lambda[k - 1];
    }
  }

  for (int k = 0; k < static_cast<int>(t.cnorm.size()); k += 2) t.cnorm[k] = sphere_moment(m, k);
  return t;
}

}  // namespace

std::shared_ptr<const CoefficientTable> ck_coefficients(int m, int max_degree) {
  if (m < 2) throw DomainError("ck_coefficients needs m >= 2");
  if (max_degree < 0) throw DomainError("ck_coefficients needs max_degree >= 0");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const CoefficientTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, max_degree}];
  if (!slot) slot = std::make_shared<const CoefficientTable>(build_table(m, max_degree));
  return slot;
}

}  // namespace monocst
