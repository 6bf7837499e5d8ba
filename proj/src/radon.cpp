#include "monocst/radon.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include "monocst/errors.hpp"
#include "monocst/kernels.hpp"
#include "monocst/nu_inner.hpp"

namespace monocst {

std::vector<AxialValue> AxialFunction::values(double x0, double r) const {
  std::vector<AxialValue> out(blades.size());
  if (!blades.empty()) eval(x0, r, out);
  return out;
}

Multivector AxialFunction::at(const AxialPoint& pt) const {
  const auto vals = values(pt.x0, pt.r);
  std::vector<cplx> b(vals.size()), c(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    b[i] = vals[i].B;
    c[i] = vals[i].C;
  }
  return assemble_paired(m, blades, b, c, pt);
}

namespace detail {

const PolarRule& polar_rule(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PolarRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({m, n});
  if (it != cache.end()) return it->second;
  const Rule gl = gauss_legendre(n, 0.0, std::numbers::pi);
  PolarRule rule;
  // Polar angle density of the uniform measure on S^{m-1}.
  const double norm = 1.0 / sine_power_integral(m - 2);
  rule.weights.resize(gl.nodes.size());
  rule.cosines.resize(gl.nodes.size());
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    rule.weights[i] = gl.weights[i] * std::pow(std::sin(gl.nodes[i]), m - 2) * norm;
    rule.cosines[i] = std::cos(gl.nodes[i]);
  }
  return cache.emplace(std::make_pair(m, n), std::move(rule)).first->second;
}

}  // namespace detail

namespace {

std::vector<AxialValue> polar_average(const SliceFunction& field, double x0, double r, int n) {
  const auto& rule = detail::polar_rule(field.m, n);
  const std::size_t nb = field.blades.size();
  const std::size_t nn = rule.weights.size();
  std::vector<double> cw(nn);
  for (std::size_t i = 0; i < nn; ++i) cw[i] = rule.weights[i] * std::abs(rule.cosines[i]);
  std::vector<std::vector<cplx>> alpha(nb, std::vector<cplx>(nn)), beta(nb, std::vector<cplx>(nn));
  std::vector<SliceValue> vals(nb);
  for (std::size_t i = 0; i < nn; ++i) {
    field.eval(x0, r * std::abs(rule.cosines[i]), vals);
    for (std::size_t b = 0; b < nb; ++b) {
      alpha[b][i] = vals[b].alpha;
      beta[b][i] = vals[b].beta;
    }
  }
  std::vector<AxialValue> out(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    out[b].B = kernels::weighted_sum(rule.weights, alpha[b]);
    out[b].C = r == 0.0 ? cplx{} : kernels::weighted_sum(cw, beta[b]);
  }
  return out;
}

}  // namespace

std::vector<AxialValue> dual_radon_values(const SliceFunction& field, double x0, double r,
                                          const QuadratureSpec& q) {
  validate(q);
  if (r < 0.0) throw DomainError("dual_radon needs r >= 0");
  if (field.blades.empty()) return {};
  auto out = polar_average(field, x0, r, q.n_points);
  if (q.check_convergence) {
    const auto fine = polar_average(field, x0, r, 2 * q.n_points);
    double diff = 0.0, scale = 1.0;
    for (std::size_t b = 0; b < out.size(); ++b) {
      diff = std::max({diff, std::abs(out[b].B - fine[b].B), std::abs(out[b].C - fine[b].C)});
      scale = std::max({scale, std::abs(fine[b].B), std::abs(fine[b].C)});
    }
    if (diff > q.tolerance * scale) {
      throw QuadratureError("polar rule not converged: n and 2n nodes differ by " + std::to_string(diff));
    }
    out = fine;
  }
  return out;
}

Multivector dual_radon(const SliceFunction& field, const AxialPoint& pt, const QuadratureSpec& q) {
  const auto vals = dual_radon_values(field, pt.x0, pt.r, q);
  std::vector<cplx> b(vals.size()), c(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    b[i] = vals[i].B;
    c[i] = vals[i].C;
  }
  return assemble_paired(field.m, field.blades, b, c, pt);
}

AxialFunction dual_radon_field(SliceFunction field, const QuadratureSpec& q) {
  validate(q);
  AxialFunction out;
  out.m = field.m;
  out.blades = field.blades;
  auto shared = std::make_shared<const SliceFunction>(std::move(field));
  out.eval = [shared, q](double x0, double r, std::span<AxialValue> dst) {
    const auto vals = dual_radon_values(*shared, x0, r, q);
    std::copy(vals.begin(), vals.end(), dst.begin());
  };
  return out;
}

Multivector dual_radon_monte_carlo(const SliceFunction& field, const Paravector& p, const QuadratureSpec& q) {
  const int m = field.m;
  if (static_cast<int>(p.xvec.size()) != m) throw DimensionError("paravector dimension does not match the field");
  if (q.mc_samples < 1) throw DomainError("Monte Carlo needs at least one sample");
  std::mt19937_64 rng(q.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Multivector acc(m);
  std::vector<double> t(m);
  Paravector y;
  y.x0 = p.x0;
  y.xvec.resize(m);
  for (std::int64_t s = 0; s < q.mc_samples; ++s) {
    double norm2 = 0.0;
    for (int j = 0; j < m; ++j) {
      t[j] = gauss(rng);
      norm2 += t[j] * t[j];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double proj = 0.0;
    for (int j = 0; j < m; ++j) {
      t[j] *= inv;
      proj += p.xvec[j] * t[j];
    }
    for (int j = 0; j < m; ++j) y.xvec[j] = proj * t[j];
    acc += field.at(y);
  }
  acc *= cplx{1.0 / static_cast<double>(q.mc_samples)};
  return acc;
}

AxialFunction u_a_field(const CliffordSignal& f, const QuadratureSpec& q) { return m_a_field(heat_evolve(f), q); }

Multivector u_a(const CliffordSignal& f, const AxialPoint& pt, const QuadratureSpec& q) {
  return m_a(heat_evolve(f), pt, q);
}

Multivector u_a_momentum(const CliffordSignal& f, const AxialPoint& pt, const QuadratureSpec& q) {
  validate(q);
  const int m = f.m();
  const double big_p = q.p_truncation > 0.0 ? q.p_truncation : std::max(8.0, pt.r + 8.0);
  const Rule gl = gauss_legendre(q.n_points, -big_p, big_p);
  const CliffordSignal spectrum = fourier(f);
  const auto blades = f.blades();
  const std::size_t n = gl.nodes.size();
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::vector<cplx> wave_b(n), wave_c(n);
  std::vector<double> damp(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = gl.nodes[i];
    const AxialValue v = axial_plane_wave_value(p, pt.x0, pt.r, m);
    wave_b[i] = v.B;
    wave_c[i] = v.C;
    damp[i] = gl.weights[i] * std::exp(-0.5 * p * p) * norm;
  }
  const double edge = std::exp(-0.5 * big_p * big_p) * std::cosh(big_p * pt.r) * norm;
  std::vector<cplx> first(blades.size()), second(blades.size());
  std::vector<cplx> tb(n), tc(n);
  for (std::size_t b = 0; b < blades.size(); ++b) {
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx s = spectrum.component_value(blades[b], gl.nodes[i]);
      tb[i] = s * wave_b[i];
      tc[i] = s * wave_c[i];
      peak = std::max(peak, std::abs(tb[i]) * damp[i] / gl.weights[i]);
    }
    const double tail = edge * std::max(std::abs(spectrum.component_value(blades[b], big_p)),
                                        std::abs(spectrum.component_value(blades[b], -big_p)));
    if (peak > 0.0 && tail > q.tolerance * peak) {
      throw QuadratureError("momentum truncation tail above tolerance; raise p_truncation");
    }
    first[b] = kernels::weighted_sum(damp, tb);
    second[b] = kernels::weighted_sum(damp, tc);
  }
  return assemble_paired(m, blades, first, second, pt);
}

AxialValue axial_plane_wave_value(double p, double x0, double r, int m) {
  if (m < kMinGenerators || m > kMaxGenerators) throw DimensionError("m out of range");
  if (r < 0.0) throw DomainError("axial plane wave needs r >= 0");
  const cplx phase = std::exp(cplx{0.0, p * x0});
  const double z = p * r;
  if (z == 0.0) return {phase, cplx{}};
  const double z2 = z * z;
  const double dm = m;
  double t = 1.0, sum_b = 1.0;
  for (int j = 0; j < 100000; ++j) {
    const double denom = (2.0 * j + dm) * (2.0 * j + 2.0);
    t *= z2 / denom;
    sum_b += t;
    if (t < 1e-17 * sum_b && z2 < denom) break;
  }
  double u = 1.0 / dm, sum_c = u;
  for (int j = 0; j < 100000; ++j) {
    const double denom = (2.0 * j + 2.0 + dm) * (2.0 * j + 2.0);
    u *= z2 / denom;
    sum_c += u;
    if (u < 1e-17 * sum_c && z2 < denom) break;
  }
  return {phase * sum_b, cplx{0.0, z * sum_c} * phase};
}

Multivector axial_plane_wave(int m, double p, const AxialPoint& pt) { return axial_plane_wave_field(m, p).at(pt); }

AxialFunction axial_plane_wave_field(int m, double p) {
  AxialFunction out;
  out.m = m;
  out.blades = {0};
  out.eval = [p, m](double x0, double r, std::span<AxialValue> dst) { dst[0] = axial_plane_wave_value(p, x0, r, m); };
  return out;
}

AxialValue axial_plane_wave_bessel(double p, double x0, double r, int m, BesselBase base) {
  if (r < 0.0) throw DomainError("axial plane wave needs r >= 0");
  const cplx phase = std::exp(cplx{0.0, p * x0});
  const double z = std::abs(p) * r;
  const double sign = p < 0.0 ? -1.0 : 1.0;
  const double dm = m;
  const double order = 0.5 * dm - 1.0;
  cplx factor{1.0};
  if (base == BesselBase::ImaginaryTwo) factor = std::exp(cplx{0.0, 0.5 * std::numbers::pi * order});
  if (z < 1e-6) {
    // Gamma(m/2) (2/z)^{m/2-1} I_{m/2-1}(z) = 1 + z^2/(2m) + ..., same for I_{m/2} with z/m.
    const double b = 1.0 + z * z / (2.0 * dm);
    const double c = z / dm * (1.0 + z * z / (2.0 * (dm + 2.0)));
    return {factor * b * phase, factor * cplx{0.0, sign * c} * phase};
  }
  const double g = std::exp(std::lgamma(0.5 * dm) + order * std::log(2.0 / z));
  return {factor * (g * bessel_i(order, z)) * phase, factor * cplx{0.0, sign * g * bessel_i(order + 1.0, z)} * phase};
}

AxialValue ck_polynomial_value(int j, double x0, double r, const CoefficientTable& table) {
  if (j < 0 || j > table.max_degree) throw DomainError("ck_polynomial degree outside the coefficient table");
  const double dm = table.m;
  const double nu = 0.5 * (dm - 1.0);
  const double s2 = x0 * x0 + r * r;
  const double mu = table.mu0[j];
  AxialValue v;
  v.B = mu * gegenbauer_homogeneous(j, nu, x0, s2);
  if (j > 0) v.C = mu * (dm - 1.0) / (dm + j - 1.0) * gegenbauer_homogeneous(j - 1, nu + 1.0, x0, s2) * r;
  return v;
}

Multivector ck_polynomial(int j, const Paravector& p, const CoefficientTable& table) {
  if (static_cast<int>(p.xvec.size()) != table.m) throw DimensionError("paravector dimension does not match the table");
  if (j < 0 || j > table.max_degree) throw DomainError("ck_polynomial degree outside the coefficient table");
  const double dm = table.m;
  const double nu = 0.5 * (dm - 1.0);
  double s2 = p.x0 * p.x0;
  for (double v : p.xvec) s2 += v * v;
  Multivector out(table.m);
  out[0] = table.mu0[j] * gegenbauer_homogeneous(j, nu, p.x0, s2);
  if (j > 0) {
    const double k = table.mu0[j] * (dm - 1.0) / (dm + j - 1.0) * gegenbauer_homogeneous(j - 1, nu + 1.0, p.x0, s2);
    for (int i = 0; i < table.m; ++i) out[BladeMask{1} << i] = k * p.xvec[i];
  }
  return out;
}

AxialFunction ck_polynomial_field(int j, std::shared_ptr<const CoefficientTable> table) {
  if (j < 0 || j > table->max_degree) throw DomainError("ck_polynomial degree outside the coefficient table");
  AxialFunction out;
  out.m = table->m;
  out.blades = {0};
  out.eval = [j, table](double x0, double r, std::span<AxialValue> dst) {
    dst[0] = ck_polynomial_value(j, x0, r, *table);
  };
  return out;
}

HaElement HaElement::from_signal(const CliffordSignal& f, const QuadratureSpec& q) {
  return from_axis(heat_evolve(f), q);
}

HaElement HaElement::from_axis(CliffordSignal axis, const QuadratureSpec& q) {
  HaElement e;
  e.field_ = m_a_field(axis, q);
  e.axis_ = std::move(axis);
  return e;
}

HaElement HaElement::from_axis(PolySignal axis, const QuadratureSpec& q) {
  HaElement e;
  e.field_ = m_a_field(axis, q);
  e.axis_ = std::move(axis);
  return e;
}

HaElement HaElement::from_evaluator(AxialFunction field) {
  HaElement e;
  e.field_ = std::move(field);
  return e;
}

SliceFunction radon_inverse_on_Ha(const HaElement& element) {
  return std::visit(
      [](const auto& axis) -> SliceFunction {
        using T = std::decay_t<decltype(axis)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          throw UnsupportedInput("inverse dual Radon transform needs closed-form axis data");
        } else {
          return slice_extension(axis);
        }
      },
      element.axis());
}

cplx ha_inner(const HaElement& f, const HaElement& g, const QuadratureSpec& q) {
  const auto* fa = std::get_if<CliffordSignal>(&f.axis());
  const auto* ga = std::get_if<CliffordSignal>(&g.axis());
  if (fa == nullptr || ga == nullptr) {
    throw UnsupportedInput("H_a inner product needs wave packet axis data on both arguments");
  }
  if (fa->m() != ga->m()) throw DimensionError("ha_inner over different algebras");
  const CliffordSignal both[] = {*fa, *ga};
  return nu_m_inner(radon_inverse_on_Ha(f), radon_inverse_on_Ha(g), q, window_for_evolved(both, q));
}

AxialSeries axial_series_from_axis(std::span<const cplx> taylor, const CoefficientTable& table) {
  if (static_cast<int>(taylor.size()) > table.max_degree + 1) {
    throw DomainError("axis polynomial degree exceeds the coefficient table");
  }
  AxialSeries s;
  s.m = table.m;
  s.coeffs.resize(taylor.size());
  for (std::size_t i = 0; i < taylor.size(); ++i) s.coeffs[i] = taylor[i] / table.xi[i];
  return s;
}

AxialValue evaluate_series_value(const AxialSeries& series, double x0, double r, const CoefficientTable& table) {
  if (static_cast<int>(series.coeffs.size()) > table.max_degree + 1) {
    throw DomainError("series longer than the coefficient table");
  }
  AxialValue acc{};
  for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
    if (series.coeffs[i] == cplx{}) continue;
    const AxialValue x = ck_polynomial_value(static_cast<int>(i), x0, r, table);
    acc.B += x.B * series.coeffs[i];
    acc.C += x.C * series.coeffs[i];
  }
  return acc;
}

Multivector evaluate_series(const AxialSeries& series, const Paravector& p, const CoefficientTable& table) {
  if (static_cast<int>(series.coeffs.size()) > table.max_degree + 1) {
    throw DomainError("series longer than the coefficient table");
  }
  Multivector acc(table.m);
  for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
    if (series.coeffs[i] == cplx{}) continue;
    acc += ck_polynomial(static_cast<int>(i), p, table) * series.coeffs[i];
  }
  return acc;
}

AxialSeries axial_creation(const AxialSeries& series) {
  AxialSeries out;
  out.m = series.m;
  out.coeffs.assign(series.coeffs.size() + 1, cplx{});
  const double dm = series.m;
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
    if (k % 2 == 0) {
      const double i2 = static_cast<double>(k);
      out.coeffs[k + 1] += (i2 + 1.0) / (i2 + dm) * series.coeffs[k];
    } else {
      out.coeffs[k + 1] += series.coeffs[k];
    }
  }
  return out;
}

double vekua_residual(const AxialFunction& field, const AxialGrid& grid, double h) {
  if (grid.nx < 3 || grid.nr < 3) throw DomainError("vekua_residual needs at least 3 nodes per axis");
  if (!(h > 0.0)) throw DomainError("vekua_residual needs a positive step");
  if (grid.r_start <= 0.0) throw DomainError("vekua_residual grid must stay in r > 0");
  const double dm = field.m;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.nx; ++i) {
    for (std::size_t k = 1; k + 1 < grid.nr; ++k) {
      const double x0 = grid.x0_start + h * static_cast<double>(i);
      const double r = grid.r_start + h * static_cast<double>(k);
      const auto c = field.values(x0, r);
      const auto xp = field.values(x0 + h, r);
      const auto xm = field.values(x0 - h, r);
      const auto rp = field.values(x0, r + h);
      const auto rm = field.values(x0, r - h);
      for (std::size_t b = 0; b < c.size(); ++b) {
        const cplx dbx = (xp[b].B - xm[b].B) / (2.0 * h);
        const cplx dcx = (xp[b].C - xm[b].C) / (2.0 * h);
        const cplx dbr = (rp[b].B - rm[b].B) / (2.0 * h);
        const cplx dcr = (rp[b].C - rm[b].C) / (2.0 * h);
        worst = std::max(worst, std::abs(dbx - dcr - (dm - 1.0) / r * c[b].C));
        worst = std::max(worst, std::abs(dcx + dbr));
      }
    }
  }
  return worst;
}

}  // namespace monocst
