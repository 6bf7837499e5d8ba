#include "monocst/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "monocst/errors.hpp"

namespace monocst {

void validate(const QuadratureSpec& q) {
  if (q.p_truncation < 0.0) throw DomainError("p_truncation must be positive (or 0 for auto)");
  if (q.n_points < 16) throw DomainError("n_points must be at least 16");
  if (!(q.tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (q.plane_nodes < 16) throw DomainError("plane_nodes must be at least 16");
  if (q.mc_samples < 0) throw DomainError("mc_samples must be nonnegative");
  if (q.radial_cutoff < 0.0) throw DomainError("radial_cutoff must be nonnegative");
}

namespace {

Rule build_legendre(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

// Orthonormal Hermite recurrence keeps values bounded for large n.
void hermite_normalized(int n, double x, double& pn, double& pn1) {
  double p0 = std::pow(std::numbers::pi, -0.25);
  double p1 = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double p2 = p1;
    p1 = p0;
    p0 = x * std::sqrt(2.0 / k) * p1 - std::sqrt((k - 1.0) / k) * p2;
  }
  pn = p0;
  pn1 = p1;
}

Rule build_hermite(int n) {
  // Golub-Welsch eigenvalues as starting points, then Newton on the
  // orthonormal recurrence; weights from the derivative.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw QuadratureError("Gauss-Hermite eigenvalue solve failed");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = solver.eigenvalues()[i];
    double pn = 0.0, pn1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 8; ++iter) {
      hermite_normalized(n, z, pn, pn1);
      dp = std::sqrt(2.0 * n) * pn1;
      const double dz = pn / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    hermite_normalized(n, z, pn, pn1);
    dp = std::sqrt(2.0 * n) * pn1;
    rule.nodes[i] = z;
    rule.weights[i] = 2.0 / (dp * dp);
  }
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[j] + rule.weights[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

template <class Builder>
const Rule& cached(std::map<int, Rule>& cache, std::mutex& mutex, int n, Builder build) {
  if (n < 1) throw DomainError("quadrature rule needs at least one node");
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, Rule> cache;
  return cached(cache, mutex, n, build_legendre);
}

const Rule& gauss_hermite(int n) {
  static std::mutex mutex;
  static std::map<int, Rule> cache;
  return cached(cache, mutex, n, build_hermite);
}

Rule gauss_legendre(int n, double a, double b) {
  const Rule& base = gauss_legendre(n);
  Rule out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = mid + half * base.nodes[i];
    out.weights[i] = half * base.weights[i];
  }
  return out;
}

Rule gauss_hermite_unweighted(int n, double center, double scale) {
  const Rule& base = gauss_hermite(n);
  Rule out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double y = base.nodes[i];
    out.nodes[i] = center + scale * y;
    // w e^{y^2} in log space; tiny weights times e^{y^2} stay finite.
    out.weights[i] = scale * std::exp(std::log(base.weights[i]) + y * y);
  }
  return out;
}

}  // namespace monocst
