#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monocst/clifford.hpp"
#include "monocst/quadrature.hpp"
#include "monocst/signal.hpp"
#include "monocst/slice.hpp"
#include "monocst/specfun.hpp"

namespace monocst {

// F = B + (x / |x|) C on one blade.
struct AxialValue {
  cplx B;
  cplx C;
};

/// Axial function given through its per-blade (B, C) at (x0, r), r >= 0.
struct AxialFunction {
  using Evaluator = std::function<void(double x0, double r, std::span<AxialValue> out)>;

  int m = kMinGenerators;
  std::vector<BladeMask> blades;
  Evaluator eval;

  std::vector<AxialValue> values(double x0, double r) const;
  Multivector at(const AxialPoint& pt) const;
  Multivector at(const Paravector& p) const { return at(AxialPoint::from_paravector(p)); }
};

// ---------------------------------------------------------------------------
// Dual Radon transform

// (R F)(x0, x) = int_{S^{m-1}} F(x0, <x, t> t) dt over the probability measure,
// reduced to the polar angle against omega:
//   B = int_0^pi alpha(x0, r|cos|) w_m,  C = int_0^pi beta(x0, r|cos|) |cos| w_m,
// with w_m = sin^{m-2} / int_0^pi sin^{m-2}, the polar density on S^{m-1}. With q.check_convergence the rule
// is repeated with 2n nodes and a disagreement above q.tolerance throws
// QuadratureError.
std::vector<AxialValue> dual_radon_values(const SliceFunction& field, double x0, double r,
                                          const QuadratureSpec& q);
Multivector dual_radon(const SliceFunction& field, const AxialPoint& pt, const QuadratureSpec& q);
AxialFunction dual_radon_field(SliceFunction field, const QuadratureSpec& q);

// Monte Carlo over S^{m-1} evaluating the assembled multivector at
// (x0, <x, t> t); q.mc_samples directions from q.seed.
Multivector dual_radon_monte_carlo(const SliceFunction& field, const Paravector& p, const QuadratureSpec& q);

// ---------------------------------------------------------------------------
// Axial extension and transform

// M_a = R o M_s.
template <AxisFunction H>
AxialFunction m_a_field(H h, const QuadratureSpec& q) {
  return dual_radon_field(slice_extension(std::move(h)), q);
}

template <AxisFunction H>
Multivector m_a(const H& h, const AxialPoint& pt, const QuadratureSpec& q) {
  return dual_radon(slice_extension(h), pt, q);
}

// Second route: int h_A(x0 + i <x, t>) (1 - i t) dt e_A, same polar reduction.
template <AxisFunction H>
Multivector m_a_axialtoo(const H& h, const AxialPoint& pt, const QuadratureSpec& q);

// U_a = M_a o e^{Delta_0 / 2}.
AxialFunction u_a_field(const CliffordSignal& f, const QuadratureSpec& q);
Multivector u_a(const CliffordSignal& f, const AxialPoint& pt, const QuadratureSpec& q);

// U_a as a superposition of axial plane waves,
// (2 pi)^{-1/2} int e^{-p^2/2} f~(p) M_a(e^{ip.})(x0, x) dp.
Multivector u_a_momentum(const CliffordSignal& f, const AxialPoint& pt, const QuadratureSpec& q);

// ---------------------------------------------------------------------------
// Plane waves

// Normalized-moment series for M_a(e^{ipx0}).
AxialValue axial_plane_wave_value(double p, double x0, double r, int m);
Multivector axial_plane_wave(int m, double p, const AxialPoint& pt);
AxialFunction axial_plane_wave_field(int m, double p);

enum class BesselBase {
  Real,         // (2 / (p|x|))^{m/2-1}
  ImaginaryTwo  // (2i / (p|x|))^{m/2-1}, literal transcription for comparison
};

// Gamma(m/2) base^{m/2-1} (I_{m/2-1}(p r) + i I_{m/2}(p r) x/|x|) e^{ipx0}; p >= 0.
// Below p r = 1e-6 the leading series terms are used.
AxialValue axial_plane_wave_bessel(double p, double x0, double r, int m, BesselBase base = BesselBase::Real);

// ---------------------------------------------------------------------------
// Cauchy-Kowalewski polynomials

// X_0^{(j)}(x0, x) = mu_0^j [ |x|^j C_j^{(m-1)/2}(x0/|x|)
//                   + (m-1)/(m+j-1) |x|^{j-1} C_{j-1}^{(m+1)/2}(x0/|x|) x ]
// evaluated in homogeneous form (no division by |x|).
Multivector ck_polynomial(int j, const Paravector& p, const CoefficientTable& table);
AxialValue ck_polynomial_value(int j, double x0, double r, const CoefficientTable& table);
AxialFunction ck_polynomial_field(int j, std::shared_ptr<const CoefficientTable> table);

// ---------------------------------------------------------------------------
// H_a members and the inverse dual Radon transform

/// Element of H_a, optionally carrying its axis restriction in closed form.
class HaElement {
 public:
  using Axis = std::variant<std::monostate, CliffordSignal, PolySignal>;

  // U_a f; the axis restriction e^{Delta/2} f is kept as packets.
  static HaElement from_signal(const CliffordSignal& f, const QuadratureSpec& q);
  // Axial extension of known axis data.
  static HaElement from_axis(CliffordSignal axis, const QuadratureSpec& q);
  static HaElement from_axis(PolySignal axis, const QuadratureSpec& q);
  // Evaluator only; cannot be inverted.
  static HaElement from_evaluator(AxialFunction field);

  const Axis& axis() const { return axis_; }
  const AxialFunction& field() const { return field_; }
  Multivector at(const AxialPoint& pt) const { return field_.at(pt); }

 private:
  Axis axis_;
  AxialFunction field_;
};

// R^{-1} on H_a = M_s o (restriction to R). Throws UnsupportedInput without
// closed-form axis data.
SliceFunction radon_inverse_on_Ha(const HaElement& element);

// <F, G>_{H_a} = int R^{-1}F conj(R^{-1}G) d nu_m (blade-diagonal Hermitian
// pairing). Requires packet axis data on both arguments.
cplx ha_inner(const HaElement& f, const HaElement& g, const QuadratureSpec& q);

// ---------------------------------------------------------------------------
// Axial series and the creation operator

struct AxialSeries {
  int m = kMinGenerators;
  std::vector<cplx> coeffs;  // f_i in sum_i X_0^{(i)} f_i
};

// f_i = a_i / xi_i for the axis Taylor coefficients a_i.
AxialSeries axial_series_from_axis(std::span<const cplx> taylor, const CoefficientTable& table);
// sum_i X_0^{(i)}(p) f_i (scalar-blade multivector).
Multivector evaluate_series(const AxialSeries& series, const Paravector& p, const CoefficientTable& table);
AxialValue evaluate_series_value(const AxialSeries& series, double x0, double r, const CoefficientTable& table);

// x0 + i p0 in the axial representation:
// out_{2i+1} += (2i+1)/(2i+m) f_{2i}, out_{2i+2} += f_{2i+1}.
AxialSeries axial_creation(const AxialSeries& series);

// ---------------------------------------------------------------------------
// Vekua residual

struct AxialGrid {
  double x0_start = 0.0;
  double r_start = 0.5;
  std::size_t nx = 3;
  std::size_t nr = 3;
};

// max over interior nodes and blades of the two central-difference residuals
//   d_x0 B - d_r C - (m-1)/r C  and  d_x0 C + d_r B.
// Requires r_start > 0 and at least 3 nodes per axis.
double vekua_residual(const AxialFunction& field, const AxialGrid& grid, double h);

// ---------------------------------------------------------------------------

namespace detail {
struct PolarRule {
  std::vector<double> weights;  // normalized sin^{m-2} weights
  std::vector<double> cosines;
};
const PolarRule& polar_rule(int m, int n);
}  // namespace detail

template <AxisFunction H>
Multivector m_a_axialtoo(const H& h, const AxialPoint& pt, const QuadratureSpec& q) {
  const auto& rule = detail::polar_rule(h.m(), q.n_points);
  const auto blades = h.blades();
  std::vector<cplx> first(blades.size()), second(blades.size());
  for (std::size_t b = 0; b < blades.size(); ++b) {
    cplx sum_b{}, sum_c{};
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
      const cplx v = h.component_value(blades[b], cplx{pt.x0, pt.r * rule.cosines[i]});
      sum_b += rule.weights[i] * v;
      sum_c += rule.weights[i] * rule.cosines[i] * v;
    }
    first[b] = sum_b;
    second[b] = cplx{0.0, -1.0} * sum_c;
  }
  return assemble_paired(h.m(), blades, first, second, pt);
}

}  // namespace monocst
