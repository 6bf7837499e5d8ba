#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "monocst/errors.hpp"
#include "monocst/nu_inner.hpp"
#include "monocst/slice.hpp"
#include "monocst/verify.hpp"

using namespace monocst;

namespace {

AxialPoint point(std::mt19937_64& rng, int m, double rmax = 1.5) {
  std::uniform_real_distribution<double> u(-1.5, 1.5), r(0.0, rmax);
  return {u(rng), r(rng), random_unit_vector(rng, m)};
}

// x^k by repeated Clifford products of the embedded paravector.
Multivector paravector_power(const Paravector& p, int k) {
  Multivector out = Multivector::scalar(p.m(), 1.0);
  const Multivector x = p.embed();
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

struct PlaneWaveAxis {
  int dim;
  double p;
  int m() const { return dim; }
  std::vector<BladeMask> blades() const { return {0}; }
  cplx component_value(BladeMask, cplx z) const { return std::exp(cplx{0.0, p} * z); }
};

}  // namespace

TEST_CASE("slice extension of polynomials is the Clifford polynomial in x0 + x") {
  std::mt19937_64 rng(1);
  for (int m : {2, 3, 4}) {
    PolySignal h(m);
    h.set(0, {{0.5, 0.0}, {1.0, -0.3}, {0.0, 0.7}, {-0.2, 0.1}});
    h.set(0b101 & ((1u << m) - 1), {{0.0, 1.0}, {2.0, 0.0}, {0.4, 0.4}});
    const auto field = slice_extension(h);
    for (int trial = 0; trial < 10; ++trial) {
      const auto pt = point(rng, m);
      const Paravector x = pt.to_paravector();
      Multivector expect(m);
      for (const auto& [blade, coeffs] : h.components())
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          expect += paravector_power(x, static_cast<int>(k)) * Multivector::blade(m, blade, coeffs[k]);
      CHECK((field.at(pt) - expect).max_abs() < 1e-13);
    }
  }
}

TEST_CASE("slice plane wave is exp(i p (x0 + x))") {
  std::mt19937_64 rng(2);
  for (int m : {2, 3, 5})
    for (double p : {-1.5, 0.0, 0.8, 2.0}) {
      const auto pt = point(rng, m);
      const Multivector arg = pt.to_paravector().embed() * cplx{0.0, p};
      const Multivector expect = mv_exp_series(arg);
      CHECK((slice_plane_wave(m, p, pt) - expect).max_abs() < 1e-12);
      CHECK((slice_extend(PlaneWaveAxis{m, p}, pt) - expect).max_abs() < 1e-12);
    }
  // p = 0 is the constant one
  const auto v = slice_plane_wave_value(0.0, 0.3, 1.2);
  CHECK(v.alpha == cplx{1.0});
  CHECK(v.beta == cplx{0.0});
  const auto w = slice_plane_wave_value(1.0, 0.0, 1.0);
  CHECK(std::abs(w.alpha - std::cosh(1.0)) < 1e-15);
  CHECK(std::abs(w.beta - cplx{0.0, std::sinh(1.0)}) < 1e-15);
}

TEST_CASE("paired assembly: omega on the left, blade on the right") {
  const int m = 3;
  AxialPoint pt{0.0, 2.0, {0.0, 1.0, 0.0}};
  const BladeMask blades[] = {0b001};
  const cplx first[] = {1.0}, second[] = {3.0};
  const auto f = assemble_paired(m, blades, first, second, pt);
  // e1 + 3 e2 e1 = e1 - 3 e12
  CHECK(f[0b001] == cplx{1.0});
  CHECK(f[0b011] == cplx{-3.0});
  CHECK(f.max_abs() == 3.0);
}

TEST_CASE("U_s restricts to the heat-evolved signal") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_packet_signal(rng, 3, 2);
    const auto h = heat_evolve(f);
    const auto field = u_s_field(f);
    const double x0 = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    const auto vals = field.values(x0, 0.0);
    for (std::size_t b = 0; b < field.blades.size(); ++b) {
      CHECK(std::abs(vals[b].alpha - h.component_value(field.blades[b], x0)) < 1e-12);
      CHECK(std::abs(vals[b].beta) < 1e-15);
    }
  }
}

TEST_CASE("closed-form U_s agrees with the momentum quadrature") {
  std::mt19937_64 rng(4);
  QuadratureSpec q;
  for (const auto& f : default_corpus(3)) {
    const auto exact = u_s_field(f);
    const auto quad = u_s_quadrature_field(f, q, 2.0);
    for (int i = 0; i < 10; ++i) {
      const auto pt = point(rng, 3, 2.0);
      const auto a = exact.at(pt), b = quad.at(pt);
      CHECK((a - b).max_abs() <= 1e-10 * std::max(1.0, a.max_abs()));
    }
    AxialPoint far{0.0, 3.0, {1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(quad.at(far), QuadratureError);
  }
}

TEST_CASE("slice Cauchy-Riemann residual converges at second order") {
  const auto f = default_corpus(2)[4];
  const auto field = u_s_field(f);
  PointEvaluator eval = [&](const Paravector& p) { return field.at(p); };
  const std::vector<double> omega = {0.6, 0.8};
  const PlaneGrid grid{0.2, 0.5, 4, 4};
  const double r1 = slice_cr_residual(eval, omega, grid, 2e-3);
  const double r2 = slice_cr_residual(eval, omega, grid, 1e-3);
  CHECK(std::log2(r1 / r2) >= 1.9);
  // right-multiplied omega is not slice monogenic for non-scalar blades
  PointEvaluator wrong = [&](const Paravector& p) {
    const auto pt = AxialPoint::from_paravector(p);
    const auto vals = field.values(pt.x0, pt.r);
    Multivector out(2);
    const auto w = Multivector::vector(2, pt.omega);
    for (std::size_t b = 0; b < field.blades.size(); ++b) {
      const auto eb = Multivector::blade(2, field.blades[b]);
      out += eb * cplx{vals[b].alpha} + eb * w * cplx{vals[b].beta};
    }
    return out;
  };
  CHECK(slice_cr_residual(wrong, omega, grid, 1e-3) > 1e-2);
  CHECK_THROWS_AS(slice_cr_residual(eval, omega, PlaneGrid{0.0, 0.0, 3, 3}, 1e-3), DomainError);
}

TEST_CASE("creation operator becomes left multiplication by x0 + x") {
  std::mt19937_64 rng(5);
  for (int m : {2, 3}) {
    std::vector<AxialPoint> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(point(rng, m));
    for (const auto& f : default_corpus(m)) CHECK(intertwine_slice_check(f, pts) < 1e-8);
  }
}

TEST_CASE("U_s is isometric into the d nu_m space") {
  QuadratureSpec q;
  for (int m : {2, 4}) {
    const auto corpus = default_corpus(m);
    for (std::size_t i = 0; i < corpus.size(); i += 2) {
      const auto nu = nu_m_inner(corpus[i], corpus[i], q);
      const double l2 = l2_inner(corpus[i], corpus[i]).real();
      CHECK(std::abs(nu - l2) <= 1e-6 * std::max(1.0, l2));
    }
  }
  // the radial cutoff override is honoured
  q.radial_cutoff = 0.5;
  const auto f = default_corpus(2)[0];
  CHECK(std::abs(nu_m_inner(f, f, q) - 1.0) > 1e-3);
}
