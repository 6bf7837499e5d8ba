#include "monocst/slice.hpp"

#include <cmath>
#include <numbers>

#include "monocst/errors.hpp"
#include "monocst/kernels.hpp"

namespace monocst {

Multivector assemble_paired(int m, std::span<const BladeMask> blades, std::span<const cplx> first,
                            std::span<const cplx> second, const AxialPoint& pt) {
  Multivector out(m);
  for (std::size_t i = 0; i < blades.size(); ++i) out[blades[i]] += first[i];
  if (pt.r == 0.0) return out;
  if (pt.m() != m) throw DimensionError("axial point dimension does not match the algebra");
  for (std::size_t i = 0; i < blades.size(); ++i) {
    if (second[i] == cplx{}) continue;
    for (int j = 0; j < m; ++j) {
      const double wj = pt.omega[j];
      if (wj == 0.0) continue;
      const BladeMask gen = BladeMask{1} << j;
      out[gen ^ blades[i]] += static_cast<double>(blade_product_sign(gen, blades[i])) * wj * second[i];
    }
  }
  return out;
}

std::vector<SliceValue> SliceFunction::values(double x0, double r) const {
  std::vector<SliceValue> out(blades.size());
  if (!blades.empty()) eval(x0, r, out);
  return out;
}

Multivector SliceFunction::at(const AxialPoint& pt) const {
  const auto vals = values(pt.x0, pt.r);
  std::vector<cplx> a(vals.size()), b(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    a[i] = vals[i].alpha;
    b[i] = vals[i].beta;
  }
  return assemble_paired(m, blades, a, b, pt);
}

SliceFunction u_s_field(const CliffordSignal& f) { return slice_extension(heat_evolve(f)); }

Multivector u_s(const CliffordSignal& f, const AxialPoint& pt) { return u_s_field(f).at(pt); }

namespace {

struct MomentumRule {
  std::vector<double> nodes;
  // Per blade: w_i e^{-p_i^2/2} f~_A(p_i) / sqrt(2 pi), contiguous per blade.
  std::vector<cplx> weighted;
  // Per blade: |integrand| at +-P without the cosh factor.
  std::vector<double> tail;
  std::vector<double> peak_scale;  // per node, per blade: |f~ e^{-p^2/2}|
  double truncation = 0.0;
  double r_max = 0.0;
  double tolerance = 0.0;
};

}  // namespace

SliceFunction u_s_quadrature_field(const CliffordSignal& f, const QuadratureSpec& q, double r_max) {
  validate(q);
  auto rule = std::make_shared<MomentumRule>();
  rule->r_max = r_max;
  rule->tolerance = q.tolerance;
  rule->truncation = q.p_truncation > 0.0 ? q.p_truncation : std::max(8.0, std::abs(r_max) + 8.0);
  const CliffordSignal spectrum = fourier(f);
  const std::vector<BladeMask> blades = f.blades();
  const Rule gl = gauss_legendre(q.n_points, -rule->truncation, rule->truncation);
  const std::size_t n = gl.nodes.size();
  rule->nodes = gl.nodes;
  rule->weighted.resize(n * blades.size());
  rule->peak_scale.resize(n * blades.size());
  rule->tail.resize(blades.size());
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t b = 0; b < blades.size(); ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      const double p = gl.nodes[i];
      const cplx g = spectrum.component_value(blades[b], p) * std::exp(-0.5 * p * p) * norm;
      rule->weighted[b * n + i] = gl.weights[i] * g;
      rule->peak_scale[b * n + i] = std::abs(g);
    }
    const double big_p = rule->truncation;
    rule->tail[b] = std::max(std::abs(spectrum.component_value(blades[b], big_p)),
                             std::abs(spectrum.component_value(blades[b], -big_p))) *
                    std::exp(-0.5 * big_p * big_p) * norm;
  }

  SliceFunction out;
  out.m = f.m();
  out.blades = blades;
  out.eval = [rule, n](double x0, double r, std::span<SliceValue> dst) {
    if (r > rule->r_max * (1.0 + 1e-12)) {
      throw QuadratureError("momentum rule built for r <= " + std::to_string(rule->r_max) +
                            ", evaluated at r = " + std::to_string(r));
    }
    std::vector<double> ch(n), sh(n);
    std::vector<cplx> phase(n), vals(n);
    double ch_edge = std::cosh(rule->truncation * r);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = rule->nodes[i];
      ch[i] = std::cosh(p * r);
      sh[i] = std::sinh(p * r);
      phase[i] = std::exp(cplx{0.0, p * x0});
    }
    for (std::size_t b = 0; b < dst.size(); ++b) {
      double peak = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        vals[i] = rule->weighted[b * n + i] * phase[i];
        peak = std::max(peak, rule->peak_scale[b * n + i] * ch[i]);
      }
      if (rule->tail[b] * ch_edge > rule->tolerance * peak && peak > 0.0) {
        throw QuadratureError("momentum truncation tail above tolerance; raise p_truncation");
      }
      dst[b].alpha = kernels::weighted_sum(ch, vals);
      dst[b].beta = cplx{0.0, 1.0} * kernels::weighted_sum(sh, vals);
    }
  };
  return out;
}

Multivector u_s_quadrature(const CliffordSignal& f, const AxialPoint& pt, const QuadratureSpec& q) {
  return u_s_quadrature_field(f, q, pt.r).at(pt);
}

SliceValue slice_plane_wave_value(double p, double x0, double r) {
  const cplx phase = std::exp(cplx{0.0, p * x0});
  return {std::cosh(p * r) * phase, cplx{0.0, std::sinh(p * r)} * phase};
}

Multivector slice_plane_wave(int m, double p, const AxialPoint& pt) {
  return slice_plane_wave_field(m, p).at(pt);
}

SliceFunction slice_plane_wave_field(int m, double p) {
  SliceFunction out;
  out.m = m;
  out.blades = {0};
  out.eval = [p](double x0, double r, std::span<SliceValue> dst) { dst[0] = slice_plane_wave_value(p, x0, r); };
  return out;
}

double slice_cr_residual(const PointEvaluator& field, std::span<const double> omega, const PlaneGrid& grid,
                         double h) {
  if (grid.nu < 3 || grid.nv < 3) throw DomainError("slice_cr_residual needs at least 3 nodes per axis");
  if (!(h > 0.0)) throw DomainError("slice_cr_residual needs a positive step");
  if (grid.v0 <= 0.0) throw DomainError("slice_cr_residual grid must stay in v > 0");
  const int m = static_cast<int>(omega.size());
  const Multivector w = Multivector::vector(m, omega);
  auto point = [&](double u, double v) {
    Paravector p;
    p.x0 = u;
    p.xvec.resize(m);
    for (int j = 0; j < m; ++j) p.xvec[j] = v * omega[j];
    return p;
  };
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.nu; ++i) {
    for (std::size_t k = 1; k + 1 < grid.nv; ++k) {
      const double u = grid.u0 + h * static_cast<double>(i);
      const double v = grid.v0 + h * static_cast<double>(k);
      Multivector du = field(point(u + h, v)) - field(point(u - h, v));
      Multivector dv = field(point(u, v + h)) - field(point(u, v - h));
      Multivector res = du + mv_product(w, dv);
      res *= cplx{0.5 / h};
      worst = std::max(worst, res.norm());
    }
  }
  return worst;
}

double intertwine_slice_check(const CliffordSignal& f, std::span<const AxialPoint> pts) {
  const SliceFunction lhs_field = u_s_field(apply_creation(f));
  const SliceFunction base = u_s_field(f);
  double worst = 0.0;
  for (const auto& pt : pts) {
    const Multivector lhs = lhs_field.at(pt);
    const Multivector rhs = mv_product(pt.to_paravector().embed(), base.at(pt));
    const double scale = std::max(lhs.norm(), rhs.norm());
    if (scale == 0.0) continue;
    worst = std::max(worst, (lhs - rhs).norm() / scale);
  }
  return worst;
}

}  // namespace monocst
