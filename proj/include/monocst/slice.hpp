#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "monocst/clifford.hpp"
#include "monocst/quadrature.hpp"
#include "monocst/signal.hpp"

namespace monocst {

// F = alpha + omega beta on one blade; omega-independent.
struct SliceValue {
  cplx alpha;
  cplx beta;
};

// Paired per-blade value B + omega C (slice or axial form).
// Builds sum_A (first_A + omega second_A) e_A with omega on the left and e_A on
// the right. omega is not read when r == 0.
Multivector assemble_paired(int m, std::span<const BladeMask> blades, std::span<const cplx> first,
                            std::span<const cplx> second, const AxialPoint& pt);

/// Slice function on R^{m+1} given through its per-blade (alpha, beta) at
/// (x0, r), r >= 0.
struct SliceFunction {
  using Evaluator = std::function<void(double x0, double r, std::span<SliceValue> out)>;

  int m = kMinGenerators;
  std::vector<BladeMask> blades;
  Evaluator eval;

  std::vector<SliceValue> values(double x0, double r) const;
  Multivector at(const AxialPoint& pt) const;
  Multivector at(const Paravector& p) const { return at(AxialPoint::from_paravector(p)); }
};

// Slice monogenic extension through the reflection identity
// h(x0 + r omega) = (h(x0+ir) + h(x0-ir))/2 + omega (h(x0+ir) - h(x0-ir))/(2i).
template <AxisFunction H>
SliceFunction slice_extension(H h) {
  SliceFunction out;
  out.m = h.m();
  out.blades = h.blades();
  auto shared = std::make_shared<const H>(std::move(h));
  auto blades = out.blades;
  out.eval = [shared, blades](double x0, double r, std::span<SliceValue> dst) {
    for (std::size_t i = 0; i < blades.size(); ++i) {
      const cplx plus = shared->component_value(blades[i], cplx{x0, r});
      const cplx minus = shared->component_value(blades[i], cplx{x0, -r});
      dst[i].alpha = 0.5 * (plus + minus);
      dst[i].beta = (plus - minus) / cplx{0.0, 2.0};
    }
  };
  return out;
}

template <AxisFunction H>
Multivector slice_extend(const H& h, const AxialPoint& pt) {
  return slice_extension(h).at(pt);
}

// U_s = M_s o e^{Delta_0 / 2}, closed form.
SliceFunction u_s_field(const CliffordSignal& f);
Multivector u_s(const CliffordSignal& f, const AxialPoint& pt);

// U_s by Gauss-Legendre quadrature of the momentum representation
//   (2 pi)^{-1/2} int e^{-p^2/2} e^{ipx0} (cosh(pr) + i omega sinh(pr)) f~(p) dp.
// The rule is fixed for radii up to r_max; evaluating further out, or a tail
// estimate above q.tolerance relative to the peak integrand, throws
// QuadratureError.
SliceFunction u_s_quadrature_field(const CliffordSignal& f, const QuadratureSpec& q, double r_max);
Multivector u_s_quadrature(const CliffordSignal& f, const AxialPoint& pt, const QuadratureSpec& q);

// e^{ip x0} (cosh(pr) + i omega sinh(pr)).
SliceValue slice_plane_wave_value(double p, double x0, double r);
Multivector slice_plane_wave(int m, double p, const AxialPoint& pt);
SliceFunction slice_plane_wave_field(int m, double p);

// Uniform (u, v) grid on the plane H_omega.
struct PlaneGrid {
  double u0 = 0.0;
  double v0 = 0.5;
  std::size_t nu = 3;
  std::size_t nv = 3;
};

using PointEvaluator = std::function<Multivector(const Paravector&)>;

// max over interior nodes of |(d/du + omega d/dv) F| with central differences
// of step h. Requires v > 0 on all grid nodes and at least 3 nodes per axis.
double slice_cr_residual(const PointEvaluator& field, std::span<const double> omega, const PlaneGrid& grid,
                         double h);

// max_pt |U_s(creation f)(pt) - (x0 + x) U_s(f)(pt)| / max(|lhs|, |rhs|).
double intertwine_slice_check(const CliffordSignal& f, std::span<const AxialPoint> pts);

}  // namespace monocst
