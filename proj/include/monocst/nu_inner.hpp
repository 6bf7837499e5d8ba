#pragma once

#include <span>
#include <vector>

#include "monocst/quadrature.hpp"
#include "monocst/signal.hpp"
#include "monocst/slice.hpp"

namespace monocst {

// Integration window for the (x0, r) plane: x0 = center + scale * y with
// Gauss-Hermite in y, r in [0, r_max] with Gauss-Legendre.
struct PlaneWindow {
  double x0_center = 0.0;
  double x0_scale = 2.0;
  double r_max = 8.0;
};

// Window covering U_s images of the given signals: x0 scale sqrt(2 S_max) over
// the heat-evolved widths, r_max wide enough that the exp(-r^2) weighted
// integrand decays below e^{-40}. q.radial_cutoff > 0 overrides r_max.
PlaneWindow window_for(std::span<const CliffordSignal> signals, const QuadratureSpec& q);
// Same window from already heat-evolved packets (widths above 1).
PlaneWindow window_for_evolved(std::span<const CliffordSignal> evolved, const QuadratureSpec& q);

/// Slice function sampled on the reduced d nu_m rule.
///
/// d nu_m = (2/sqrt(pi)) Vol(S^{m-1})^{-1} e^{-|x|^2} |x|^{1-m} dx0 dx reduces,
/// after the angular average, to (2/sqrt(pi)) e^{-r^2} dr dx0 against
/// sum_A [alpha_A conj(alpha'_A) + beta_A conj(beta'_A)].
class NuSample {
 public:
  NuSample(const SliceFunction& field, const PlaneWindow& window, int nodes);

  const std::vector<BladeMask>& blades() const { return blades_; }
  friend cplx nu_inner(const NuSample& a, const NuSample& b);

 private:
  std::vector<BladeMask> blades_;
  std::vector<double> weights_;
  std::vector<std::vector<cplx>> alpha_;  // per blade, node-major
  std::vector<std::vector<cplx>> beta_;
};

cplx nu_inner(const NuSample& a, const NuSample& b);

// <F, G> under d nu_m via the reduced rule.
cplx nu_m_inner(const SliceFunction& f, const SliceFunction& g, const QuadratureSpec& q,
                const PlaneWindow& window);
// <U_s f, U_s g> under d nu_m, window derived from f and g.
cplx nu_m_inner(const CliffordSignal& f, const CliffordSignal& g, const QuadratureSpec& q);

// Importance-sampled Monte Carlo over R^{m+1} with the raw measure: x0 from a
// Gaussian matched to the window, |x| from a half-normal of variance tau^2,
// direction uniform on S^{m-1} and paired with its antipode; integrand
// <F(x), G(x)>_{C_m} evaluated on the assembled multivectors. (x0, |x|) come
// from jittered strata, so standard_error is an upper estimate.
// Deterministic given q.seed.
struct MonteCarloEstimate {
  cplx value;
  double standard_error = 0.0;
};
MonteCarloEstimate nu_m_inner_monte_carlo(const SliceFunction& f, const SliceFunction& g, const QuadratureSpec& q,
                                          const PlaneWindow& window, double tau);

// Half-normal scale for the Monte Carlo radius that keeps the estimator's
// variance finite for U_s images of the given signals.
double monte_carlo_radius_scale(std::span<const CliffordSignal> signals);

}  // namespace monocst
