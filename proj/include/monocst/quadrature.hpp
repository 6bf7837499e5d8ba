#pragma once

#include <cstdint>
#include <vector>

namespace monocst {

/// Node counts, truncation radii and tolerances for every numeric integral.
struct QuadratureSpec {
  double p_truncation = 0.0;  // momentum half-width; 0 selects max(8, |r| + 8)
  int n_points = 400;         // 1D rules (momentum, polar angle)
  double tolerance = 1e-10;
  std::int64_t mc_samples = 1'000'000;
  std::uint64_t seed = 20240607;
  int plane_nodes = 200;        // per axis of the (x0, r) rules for d nu_m
  double radial_cutoff = 0.0;   // r_max of the d nu_m rule; 0 derives it from the signals
  bool check_convergence = false;  // repeat 1D rules with 2n nodes and compare
};

// Throws DomainError when invariants fail (p_truncation >= 0, n_points >= 16,
// tolerance > 0, plane_nodes >= 16, mc_samples >= 0).
void validate(const QuadratureSpec& q);

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1]; cached per n.
const Rule& gauss_legendre(int n);
// Gauss-Hermite for weight exp(-x^2); cached per n.
const Rule& gauss_hermite(int n);

// Gauss-Legendre mapped to [a, b].
Rule gauss_legendre(int n, double a, double b);

// Gauss-Hermite for int f(x) dx over R through x = center + scale * y, with the
// weight exp(-y^2) folded back into the returned weights.
Rule gauss_hermite_unweighted(int n, double center, double scale);

}  // namespace monocst
