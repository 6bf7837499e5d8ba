#include "monocst/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <optional>

#include "monocst/errors.hpp"
#include "monocst/kernels.hpp"
#include "monocst/nu_inner.hpp"
#include "monocst/parallel.hpp"
#include "monocst/radon.hpp"
#include "monocst/slice.hpp"
#include "monocst/specfun.hpp"

namespace monocst {

double CheckResult::error() const {
  switch (metric) {
    case Metric::Absolute:
      return abs_err;
    case Metric::Relative:
      return rel_err;
    case Metric::Order: {
      const double shortfall = claimed.real() - computed.real();
      return std::isnan(shortfall) ? shortfall : std::max(0.0, shortfall);
    }
  }
  return abs_err;
}

namespace {

void settle(CheckResult& c) {
  const double err = c.error();
  const bool within = err <= c.tol;
  c.pass = c.expect_mismatch ? (!std::isnan(err) && !within) : within;
}

}  // namespace

CheckResult make_check(std::string suite, std::string id, cplx claimed, cplx computed, double tol, Metric metric,
                       bool expect_mismatch) {
  CheckResult c;
  c.suite = std::move(suite);
  c.id = std::move(id);
  c.claimed = claimed;
  c.computed = computed;
  c.abs_err = std::abs(computed - claimed);
  c.rel_err = std::abs(claimed) > 0.0 ? c.abs_err / std::abs(claimed) : c.abs_err;
  c.tol = tol;
  c.metric = metric;
  c.expect_mismatch = expect_mismatch;
  settle(c);
  return c;
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string label(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string label(const char* format, ...) {
  char buf[160];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

class SuiteRun {
 public:
  SuiteRun(std::string name, const VerifyConfig& config) : config_(config), start_(Clock::now()), last_(start_) {
    report_.suite = std::move(name);
  }

  void add(const std::string& id, cplx claimed, cplx computed, double tol, Metric metric = Metric::Absolute,
           bool expect_mismatch = false) {
    CheckResult c = make_check(report_.suite, id, claimed, computed, tol, metric, expect_mismatch);
    if (config_.tolerance && metric != Metric::Order) {
      c.tol = *config_.tolerance;
      settle(c);
    }
    const auto now = Clock::now();
    if (config_.timings) c.seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    report_.checks.push_back(std::move(c));
  }

  // Restarts the per-check clock (work shared by several checks).
  void mark() { last_ = Clock::now(); }

  std::mt19937_64 rng(std::uint64_t salt) const {
    return std::mt19937_64(config_.q.seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1)));
  }

  std::vector<int> ms(std::vector<int> fallback) const { return config_.ms.empty() ? fallback : config_.ms; }

  std::vector<CliffordSignal> corpus(int m) const { return config_.corpus ? config_.corpus(m) : default_corpus(m); }

  const QuadratureSpec& q() const { return config_.q; }

  VerificationReport finish() {
    if (config_.timings) report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const VerifyConfig& config_;
  VerificationReport report_;
  Clock::time_point start_;
  Clock::time_point last_;
};

WavePacket packet(std::vector<cplx> poly, double center = 0.0, double width = 1.0, double momentum = 0.0) {
  WavePacket p;
  p.poly = std::move(poly);
  p.center = center;
  p.width = width;
  p.momentum = momentum;
  return p;
}

constexpr BladeMask kE1 = 1, kE2 = 2, kE12 = 3;

double floor_scale(cplx v) { return std::max(1.0, std::abs(v)); }
double floor_scale(const Multivector& v) { return std::max(1.0, v.norm()); }

AxialPoint random_point(std::mt19937_64& rng, int m, double x0_half, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> ux(-x0_half, x0_half), ur(r_lo, r_hi);
  AxialPoint pt;
  pt.x0 = ux(rng);
  pt.r = ur(rng);
  pt.omega = random_unit_vector(rng, m);
  return pt;
}

std::vector<AxialPoint> random_points(std::mt19937_64& rng, int m, std::size_t n, double x0_half, double r_lo,
                                      double r_hi) {
  std::vector<AxialPoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, m, x0_half, r_lo, r_hi));
  return pts;
}

// Largest |a_i - b_i| / max(1, |b_i|) over the points, evaluated in parallel.
template <class A, class B>
double max_deviation(const std::vector<AxialPoint>& pts, A&& a, B&& b) {
  std::vector<double> dev(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Multivector lhs = a(pts[i]);
    const Multivector rhs = b(pts[i]);
    dev[i] = (lhs - rhs).norm() / floor_scale(rhs);
  });
  double worst = 0.0;
  for (double d : dev) worst = std::max(worst, d);
  return worst;
}

template <class A, class B>
double max_abs_deviation(const std::vector<AxialPoint>& pts, A&& a, B&& b) {
  std::vector<double> dev(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { dev[i] = (a(pts[i]) - b(pts[i])).norm(); });
  double worst = 0.0;
  for (double d : dev) worst = std::max(worst, d);
  return worst;
}

double observed_order(const std::vector<double>& residuals) {
  double order = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
    order = std::min(order, std::log2(residuals[i] / residuals[i + 1]));
  }
  return order;
}

const std::vector<double> kSteps = {4e-3, 2e-3, 1e-3};

}  // namespace

std::vector<double> random_unit_vector(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(m);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& x : v) {
      x = g(rng);
      n2 += x * x;
    }
  } while (n2 < 1e-8);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& x : v) x *= inv;
  return v;
}

CliffordSignal random_packet_signal(std::mt19937_64& rng, int m, int max_degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), width(0.7, 1.4), mom(-1.5, 1.5);
  std::uniform_int_distribution<int> deg(0, max_degree), blade(0, 3), count(1, 2);
  CliffordSignal f(m);
  const int n = count(rng);
  for (int c = 0; c < n; ++c) {
    std::vector<cplx> poly(deg(rng) + 1);
    for (auto& x : poly) x = cplx{u(rng), u(rng)};
    const BladeMask b = static_cast<BladeMask>(blade(rng));
    const double center = u(rng);
    const double w = width(rng);
    f.add(b, packet(std::move(poly), center, w, mom(rng)));
  }
  return f;
}

std::vector<CliffordSignal> default_corpus(int m) {
  std::vector<CliffordSignal> out;
  const double n0 = std::pow(std::numbers::pi, -0.25);
  CliffordSignal f1(m);
  f1.add(0, packet({n0}));
  CliffordSignal f2(m);
  f2.add(kE1, packet({0.0, 1.0}));
  CliffordSignal f3(m);
  f3.add(kE12, packet({0.8}, 0.5, 0.8, 1.5));
  CliffordSignal f4(m);
  f4.add(0, packet({1.0}, 0.0, 1.3));
  f4.add(kE2, packet({0.0, 0.0, cplx{0.5, 0.3}}, -0.4));
  CliffordSignal f5(m);
  f5.add(kE1, packet({cplx{0.6, -0.2}}, 1.0, 1.0, -1.0));
  f5.add(kE12, packet({1.0, cplx{0.0, 0.5}}, 0.0, 0.7));
  const CliffordSignal f6 = apply_creation(f3);
  out = {f1, f2, f3, f4, f5, f6};
  return out;
}

double cosh_gaussian_integral(double p, const QuadratureSpec& q) {
  validate(q);
  if (std::abs(p) > 20.0) throw DomainError("cosh-Gaussian integral limited to |p| <= 20");
  const Rule rule = gauss_legendre(q.n_points, 0.0, std::abs(p) + 10.0);
  std::vector<double> f(rule.nodes.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double u = rule.nodes[i];
    f[i] = std::cosh(2.0 * u * p) * std::exp(-u * u);
  }
  return kernels::dot(rule.weights, f);
}

double cosh_gaussian_identity(double p, const QuadratureSpec& q) {
  const double exact = 0.5 * std::sqrt(std::numbers::pi) * std::exp(p * p);
  return std::abs(cosh_gaussian_integral(p, q) - exact) / exact;
}

cplx classical_cst_value(const CliffordSignal& f, BladeMask blade, cplx z, const QuadratureSpec& q) {
  validate(q);
  const auto& comps = f.components();
  const auto it = comps.find(blade);
  if (it == comps.end()) return {};
  double lo = z.real(), hi = z.real(), spread = 1.0;
  for (const auto& p : it->second) {
    lo = std::min(lo, p.center);
    hi = std::max(hi, p.center);
    spread = std::max(spread, p.width + std::sqrt(static_cast<double>(p.poly.size())));
  }
  const double pad = 12.0 * spread + std::abs(z.imag());
  const Rule rule = gauss_legendre(q.n_points, lo - pad, hi + pad);
  std::vector<cplx> vals(rule.nodes.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double x = rule.nodes[i];
    const cplx d = z - x;
    cplx fx{};
    for (const auto& p : it->second) fx += p.value(x);
    vals[i] = std::exp(-0.5 * d * d) * fx;
  }
  return kernels::weighted_sum(rule.weights, vals) / std::sqrt(2.0 * std::numbers::pi);
}

double slice_plane_norm(const CliffordSignal& f, const QuadratureSpec& q) {
  validate(q);
  if (f.empty()) return 0.0;
  const CliffordSignal one[] = {f};
  const PlaneWindow w = window_for(one, q);
  const SliceFunction field = u_s_field(f);
  const Rule ru = gauss_hermite_unweighted(q.plane_nodes, w.x0_center, w.x0_scale);
  const Rule rv = gauss_legendre(2 * q.plane_nodes, -w.r_max, w.r_max);
  std::vector<double> row(ru.nodes.size());
  parallel_for(ru.nodes.size(), [&](std::size_t i) {
    std::vector<double> vals(rv.nodes.size());
    for (std::size_t k = 0; k < rv.nodes.size(); ++k) {
      const double v = rv.nodes[k];
      const auto sv = field.values(ru.nodes[i], std::abs(v));
      double acc = 0.0;
      for (const auto& s : sv) {
        const cplx ib = cplx{0.0, 1.0} * s.beta;
        acc += std::norm(v >= 0.0 ? s.alpha + ib : s.alpha - ib);
      }
      vals[k] = acc * std::exp(-v * v);
    }
    row[i] = kernels::dot(rv.weights, vals);
  });
  return kernels::dot(ru.weights, row);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"unitarity",   "cosh_gaussian", "classical",
                                                 "commutativity", "restriction", "planewave",
                                                 "monogenicity", "intertwining", "ladder"};
  return names;
}

VerificationReport unitarity_suite(const VerifyConfig& config) {
  SuiteRun run("unitarity", config);
  const QuadratureSpec& q = run.q();
  for (int m : run.ms({2, 3, 5})) {
    const auto corpus = run.corpus(m);
    const std::size_t n = corpus.size();
    if (n == 0) continue;
    const PlaneWindow window = window_for(corpus, q);
    std::vector<std::optional<NuSample>> samples(n);
    parallel_for(n, [&](std::size_t i) { samples[i].emplace(u_s_field(corpus[i]), window, q.plane_nodes); });
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) norms[i] = l2_norm(corpus[i]);
    run.mark();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const cplx l2 = l2_inner(corpus[i], corpus[j]);
        const cplx nu = nu_inner(*samples[i], *samples[j]);
        run.add(label("m%d/gram/%zu-%zu", m, i + 1, j + 1), l2, nu, 1e-6 * std::max(1.0, norms[i] * norms[j]));
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      const HaElement a = HaElement::from_signal(corpus[i], q);
      const HaElement b = HaElement::from_signal(corpus[j], q);
      run.add(label("m%d/ha/%zu-%zu", m, i + 1, i + 1), l2_inner(corpus[i], corpus[i]), ha_inner(a, a, q),
              1e-6 * std::max(1.0, norms[i] * norms[i]));
      run.add(label("m%d/ha/%zu-%zu", m, i + 1, j + 1), l2_inner(corpus[i], corpus[j]), ha_inner(a, b, q),
              1e-6 * std::max(1.0, norms[i] * norms[j]));
    }

    if (n >= 2) {
      const std::size_t i = 0, j = n >= 4 ? 3 : 1;
      cplx polar{};
      cplx unit{1.0};
      for (int k = 0; k < 4; ++k) {
        CliffordSignal g = corpus[i] + unit * corpus[j];
        const NuSample s(u_s_field(g), window, q.plane_nodes);
        polar += unit * nu_inner(s, s);
        unit *= cplx{0.0, 1.0};
      }
      run.add(label("m%d/polarization/%zu-%zu", m, i + 1, j + 1), nu_inner(*samples[i], *samples[j]), 0.25 * polar,
              1e-6 * std::max(1.0, norms[i] * norms[j]));
    }

    if ((m == 2 || m == 3) && q.mc_samples > 1 && n >= 5) {
      // Raw-measure Monte Carlo against the reduced rule.
      const std::size_t i = 3, j = 4, k = 2;
      const CliffordSignal pair[] = {corpus[i], corpus[j], corpus[k]};
      const double tau = monte_carlo_radius_scale(pair);
      for (auto [a, b] : {std::pair{i, i}, std::pair{i, j}, std::pair{k, j}}) {
        const auto mc = nu_m_inner_monte_carlo(u_s_field(corpus[a]), u_s_field(corpus[b]), q, window, tau);
        run.add(label("m%d/monte-carlo/%zu-%zu", m, a + 1, b + 1), nu_inner(*samples[a], *samples[b]), mc.value,
                1e-3 * std::max(1.0, norms[a] * norms[b]));
      }
    }
  }
  return run.finish();
}

VerificationReport cosh_gaussian_suite(const VerifyConfig& config) {
  SuiteRun run("cosh_gaussian", config);
  for (double p : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    const double exact = 0.5 * std::sqrt(std::numbers::pi) * std::exp(p * p);
    run.add(label("p=%g", p), exact, cosh_gaussian_integral(p, run.q()), 1e-10, Metric::Relative);
  }
  return run.finish();
}

VerificationReport classical_cst_suite(const VerifyConfig& config) {
  SuiteRun run("classical", config);
  const QuadratureSpec& q = run.q();
  const int m = run.ms({2}).front();
  auto rng = run.rng(2);
  const double n0 = std::pow(std::numbers::pi, -0.25);
  std::vector<CliffordSignal> signals(5, CliffordSignal(m));
  signals[0].add(0, packet({n0}));
  signals[1].add(0, packet({0.0, 1.0}));
  signals[2].add(0, packet({cplx{0.7, 0.2}}, 0.5, 0.8, 1.5));
  signals[3].add(0, packet({1.0, 0.0, cplx{0.0, 0.4}}, -0.3, 0.7));
  signals[4].add(0, packet({0.6}, -1.0, 1.2, -0.8));
  signals[4].add(0, packet({cplx{0.0, 0.5}, 0.3}, 0.8, 0.9, 0.4));

  const std::vector<double> omega = random_unit_vector(rng, m);
  std::uniform_real_distribution<double> uu(-2.0, 2.0), uv(-1.5, 1.5);
  std::vector<cplx> zs(10);
  for (auto& z : zs) z = cplx{uu(rng), uv(rng)};

  for (std::size_t s = 0; s < signals.size(); ++s) {
    const SliceFunction field = u_s_field(signals[s]);
    double worst = 0.0;
    for (const cplx z : zs) {
      AxialPoint pt{z.real(), std::abs(z.imag()), omega};
      const Multivector F = field.at(pt);
      cplx beta{};
      for (int j = 0; j < m; ++j) beta += omega[j] * F[BladeMask{1} << j];
      const cplx alpha = F[0];
      const cplx ib = cplx{0.0, 1.0} * beta;
      const cplx slice = z.imag() >= 0.0 ? alpha + ib : alpha - ib;
      const cplx direct = classical_cst_value(signals[s], 0, z, q);
      worst = std::max(worst, std::abs(slice - direct) / floor_scale(direct));
    }
    run.add(label("f%zu/pointwise", s + 1), 0.0, worst, 1e-9);
  }

  std::vector<double> ratio(signals.size());
  parallel_for(signals.size(), [&](std::size_t s) {
    const double nn = l2_norm(signals[s]);
    ratio[s] = slice_plane_norm(signals[s], q) / (nn * nn);
  });
  run.mark();
  run.add("f1/norm-ratio", std::sqrt(std::numbers::pi), ratio[0], 1e-6, Metric::Relative);
  for (std::size_t s = 1; s < signals.size(); ++s) {
    run.add(label("f%zu/norm-ratio", s + 1), ratio[0], ratio[s], 1e-6, Metric::Relative);
  }
  const CliffordSignal zero(m);
  run.add("zero", 0.0, classical_cst_value(zero, 0, cplx{0.3, 0.4}, q) + u_s_field(zero).at(AxialPoint{0.3, 0.4, omega}).norm(),
          1e-300);
  return run.finish();
}

VerificationReport commutativity_suite(const VerifyConfig& config) {
  SuiteRun run("commutativity", config);
  const QuadratureSpec& q = run.q();
  auto rng = run.rng(3);
  constexpr double kRadius = 2.0;
  for (int m : run.ms({2, 3, 4})) {
    const auto pts = random_points(rng, m, 20, 1.5, 0.0, kRadius);
    const auto corpus = run.corpus(m);
    for (std::size_t s = 0; s < corpus.size(); ++s) {
      const CliffordSignal& f = corpus[s];
      const AxialFunction ua = u_a_field(f, q);
      const CliffordSignal axis = heat_evolve(f);
      const SliceFunction us_quad = u_s_quadrature_field(f, q, kRadius);
      auto base = [&](const AxialPoint& pt) { return ua.at(pt); };
      run.mark();
      run.add(label("m%d/f%zu/momentum", m, s + 1), 0.0,
              max_abs_deviation(pts, base, [&](const AxialPoint& pt) { return u_a_momentum(f, pt, q); }), 1e-8);
      run.add(label("m%d/f%zu/radon-of-quadrature", m, s + 1), 0.0,
              max_abs_deviation(pts, base, [&](const AxialPoint& pt) { return dual_radon(us_quad, pt, q); }), 1e-8);
      run.add(label("m%d/f%zu/axialtoo", m, s + 1), 0.0,
              max_abs_deviation(pts, base, [&](const AxialPoint& pt) { return m_a_axialtoo(axis, pt, q); }), 1e-8);
    }
  }
  return run.finish();
}

VerificationReport restriction_suite(const VerifyConfig& config) {
  SuiteRun run("restriction", config);
  const QuadratureSpec& q = run.q();
  auto rng = run.rng(4);
  const auto ms = run.ms({2, 3, 4});
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  double slice = 0.0, us = 0.0, axial = 0.0, axialtoo = 0.0;
  for (int s = 0; s < 50; ++s) {
    const int m = ms[static_cast<std::size_t>(s) % ms.size()];
    const CliffordSignal h = random_packet_signal(rng, m, 3);
    const AxialPoint pt{ux(rng), 0.0, random_unit_vector(rng, m)};
    const Multivector exact = h.evaluate(pt.x0);
    slice = std::max(slice, (slice_extend(h, pt) - exact).norm() / floor_scale(exact));
    axial = std::max(axial, (m_a(h, pt, q) - exact).norm() / floor_scale(exact));
    axialtoo = std::max(axialtoo, (m_a_axialtoo(h, pt, q) - exact).norm() / floor_scale(exact));
    const Multivector heated = heat_evolve(h).evaluate(pt.x0);
    us = std::max(us, (u_s(h, pt) - heated).norm() / floor_scale(heated));
  }
  run.add("slice", 0.0, slice, 1e-12);
  run.add("slice-cst", 0.0, us, 1e-12);
  run.add("axial", 0.0, axial, 1e-9);
  run.add("axialtoo", 0.0, axialtoo, 1e-9);
  return run.finish();
}

VerificationReport planewave_suite(const VerifyConfig& config) {
  SuiteRun run("planewave", config);
  const QuadratureSpec& q = run.q();
  auto rng = run.rng(5);
  const std::vector<double> ps = {-1.3, 0.7, 2.0};
  for (int m : run.ms({2, 3, 4})) {
    const auto pts = random_points(rng, m, 5, 1.0, 0.05, 2.0);
    double series = 0.0, sphere = 0.0, bessel = 0.0, axis = 0.0, elementary = 0.0, elementary_bessel = 0.0;
    double imaginary = std::numeric_limits<double>::infinity();
    for (double p : ps) {
      const SliceFunction slice = slice_plane_wave_field(m, p);
      for (const auto& pt : pts) {
        const Multivector closed = slice.at(pt);
        Multivector arg = pt.to_paravector().embed();
        arg[0] = 0.0;
        arg *= cplx{0.0, p};
        const Multivector expanded = mv_exp_series(arg) * std::exp(cplx{0.0, p * pt.x0});
        series = std::max(series, (closed - expanded).norm() / floor_scale(expanded));

        const Multivector wave = axial_plane_wave(m, p, pt);
        sphere = std::max(sphere, (dual_radon(slice, pt, q) - wave).norm() / floor_scale(wave));

        const AxialValue sv = axial_plane_wave_value(p, pt.x0, pt.r, m);
        const AxialValue bv = axial_plane_wave_bessel(p, pt.x0, pt.r, m, BesselBase::Real);
        const double scale = std::max({1.0, std::abs(sv.B), std::abs(sv.C)});
        bessel = std::max(bessel, std::max(std::abs(sv.B - bv.B), std::abs(sv.C - bv.C)) / scale);
        const AxialValue iv = axial_plane_wave_bessel(p, pt.x0, pt.r, m, BesselBase::ImaginaryTwo);
        imaginary = std::min(imaginary, std::max(std::abs(sv.B - iv.B), std::abs(sv.C - iv.C)) / scale);

        if (m == 3) {
          const double z = p * pt.r;
          const cplx phase = std::exp(cplx{0.0, p * pt.x0});
          const cplx b = std::sinh(z) / z * phase;
          const cplx c = cplx{0.0, (std::cosh(z) - std::sinh(z) / z) / z} * phase;
          elementary = std::max(elementary, std::max(std::abs(sv.B - b), std::abs(sv.C - c)) / scale);
          elementary_bessel = std::max(elementary_bessel, std::max(std::abs(bv.B - b), std::abs(bv.C - c)) / scale);
        }
      }
      AxialPoint on_axis{0.4, 0.0, pts.front().omega};
      const cplx phase = std::exp(cplx{0.0, p * 0.4});
      axis = std::max(axis, (axial_plane_wave(m, p, on_axis) - Multivector::scalar(m, phase)).norm());
    }
    run.add(label("m%d/slice-series", m), 0.0, series, 1e-12);
    run.add(label("m%d/axial-sphere", m), 0.0, sphere, 1e-9);
    run.add(label("m%d/axial-bessel", m), 0.0, bessel, 1e-12);
    run.add(label("m%d/axial-axis", m), 0.0, axis, 1e-12);
    if (m == 3) {
      run.add("m3/series-elementary", 0.0, elementary, 1e-12);
      run.add("m3/bessel-elementary", 0.0, elementary_bessel, 1e-12);
    }
    // The (2i/(p|x|)) base differs from the series by i^{m/2-1}, a unit factor
    // only at m = 2.
    if (m != 2) run.add(label("m%d/axial-bessel-2i-base", m), 0.0, imaginary, 1e-6, Metric::Absolute, true);
  }
  return run.finish();
}

VerificationReport monogenicity_suite(const VerifyConfig& config) {
  SuiteRun run("monogenicity", config);
  const QuadratureSpec& q = run.q();
  auto rng = run.rng(6);
  for (int m : run.ms({2, 3})) {
    const auto corpus = run.corpus(m);
    std::vector<std::size_t> picks;
    for (std::size_t s : {std::size_t{0}, std::size_t{4}}) {
      if (s < corpus.size()) picks.push_back(s);
    }
    Paravector center;
    center.x0 = 0.3;
    center.xvec.resize(m);
    const std::vector<double> dir = random_unit_vector(rng, m);
    for (int j = 0; j < m; ++j) center.xvec[j] = 0.7 * dir[j];

    auto dirac_order = [&](const PointEvaluator& field) {
      std::vector<double> res;
      for (double h : kSteps) {
        Paravector origin = center;
        origin.x0 -= h;
        for (auto& x : origin.xvec) x -= h;
        const FieldGrid grid = sample_field(m, origin, 3, h, field);
        res.push_back(dirac_apply_fd(grid).values.front().norm());
      }
      return observed_order(res);
    };
    auto vekua_order = [&](const AxialFunction& field) {
      std::vector<double> res;
      for (double h : kSteps) res.push_back(vekua_residual(field, AxialGrid{0.3 - h, 0.7 - h, 3, 3}, h));
      return observed_order(res);
    };
    const std::vector<double> omega = random_unit_vector(rng, m);
    auto slice_order = [&](const PointEvaluator& field) {
      std::vector<double> res;
      for (double h : kSteps) res.push_back(slice_cr_residual(field, omega, PlaneGrid{0.3 - h, 0.7 - h, 3, 3}, h));
      return observed_order(res);
    };

    for (std::size_t s : picks) {
      const AxialFunction ua = u_a_field(corpus[s], q);
      const SliceFunction us = u_s_field(corpus[s]);
      run.mark();
      run.add(label("m%d/f%zu/dirac-ua", m, s + 1), 2.0,
              dirac_order([&](const Paravector& p) { return ua.at(p); }), 0.1, Metric::Order);
      run.add(label("m%d/f%zu/vekua-ua", m, s + 1), 2.0, vekua_order(ua), 0.1, Metric::Order);
      run.add(label("m%d/f%zu/slice-cr-us", m, s + 1), 2.0,
              slice_order([&](const Paravector& p) { return us.at(p); }), 0.1, Metric::Order);
    }
    run.add(label("m%d/vekua-planewave", m), 2.0, vekua_order(axial_plane_wave_field(m, 1.0)), 0.1, Metric::Order);

    run.add(label("m%d/control/dirac-x0", m), 2.0,
            dirac_order([m](const Paravector& p) { return Multivector::scalar(m, p.x0); }), 0.1, Metric::Order, true);
    AxialFunction radial;
    radial.m = m;
    radial.blades = {0};
    radial.eval = [](double, double r, std::span<AxialValue> dst) { dst[0] = AxialValue{r, 0.0}; };
    run.add(label("m%d/control/vekua-r", m), 2.0, vekua_order(radial), 0.1, Metric::Order, true);
    run.add(label("m%d/control/slice-anti", m), 2.0, slice_order([](const Paravector& p) {
              Multivector v = p.embed();
              v *= cplx{-1.0};
              v[0] = p.x0;
              return v;
            }),
            0.1, Metric::Order, true);
  }
  return run.finish();
}

VerificationReport intertwining_suite(const VerifyConfig& config) {
  SuiteRun run("intertwining", config);
  const QuadratureSpec& q = run.q();
  auto rng = run.rng(7);
  constexpr int kTaylor = 60;
  for (int m : run.ms({2, 3})) {
    const auto corpus = run.corpus(m);
    const auto pts = random_points(rng, m, 20, 1.5, 0.0, 2.0);
    for (std::size_t s : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{4}}) {
      if (s >= corpus.size()) continue;
      run.mark();
      run.add(label("m%d/f%zu/slice", m, s + 1), 0.0, intertwine_slice_check(corpus[s], pts), 1e-8);
    }

    const auto table = ck_coefficients(m, kTaylor + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto near = random_points(rng, m, 10, 0.8, 0.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<cplx> a(5);
      for (auto& c : a) c = cplx{u(rng), u(rng)};
      std::vector<cplx> xa(a.size() + 1, cplx{});
      for (std::size_t i = 0; i < a.size(); ++i) xa[i + 1] = a[i];
      const AxialSeries raised = axial_creation(axial_series_from_axis(a, *table));
      const AxialSeries direct = axial_series_from_axis(xa, *table);
      double coeff = 0.0;
      for (std::size_t i = 0; i < direct.coeffs.size(); ++i) {
        coeff = std::max(coeff, std::abs(raised.coeffs[i] - direct.coeffs[i]) / floor_scale(direct.coeffs[i]));
      }
      run.add(label("m%d/poly%d/coefficients", m, trial + 1), 0.0, coeff, 1e-12);
      PolySignal target(m);
      target.set(0, xa);
      run.add(label("m%d/poly%d/pointwise", m, trial + 1), 0.0,
              max_deviation(
                  near, [&](const AxialPoint& pt) { return evaluate_series(raised, pt.to_paravector(), *table); },
                  [&](const AxialPoint& pt) { return m_a(target, pt, q); }),
              1e-7);
    }

    // Degree-4 polynomial times a Gaussian, through its Taylor series on the axis.
    std::vector<cplx> poly(5);
    for (auto& c : poly) c = cplx{u(rng), u(rng)};
    CliffordSignal f(m);
    f.add(0, packet(poly, 0.2, 1.1, 0.4));
    const CliffordSignal heated = heat_evolve(f);
    const auto taylor = taylor_coefficients(heated, 0, kTaylor);
    const AxialSeries raised = axial_creation(axial_series_from_axis(taylor, *table));
    const CliffordSignal created = apply_creation(f);
    run.mark();
    run.add(label("m%d/packet/pointwise", m), 0.0,
            max_deviation(
                near, [&](const AxialPoint& pt) { return evaluate_series(raised, pt.to_paravector(), *table); },
                [&](const AxialPoint& pt) { return u_a(created, pt, q); }),
            1e-7);
  }
  return run.finish();
}

VerificationReport ladder_suite(const VerifyConfig& config) {
  SuiteRun run("ladder", config);
  const QuadratureSpec& q = run.q();
  auto rng = run.rng(8);
  constexpr int kMaxK = 8;
  for (int m : run.ms({2, 3, 4, 5, 6})) {
    const auto table = ck_coefficients(m, kMaxK);
    const double nu = 0.5 * (m - 1.0);
    const auto pts = random_points(rng, m, 3, 1.0, 0.2, 1.5);
    for (int k = 0; k <= kMaxK; ++k) {
      const double cross = 1.0 / (table->mu0[k] * gegenbauer(k, nu, 1.0));
      run.add(label("m%d/k%d/cross-ladder", m, k), table->lambda[k], cross, 1e-9, Metric::Relative);

      PolySignal power(m);
      std::vector<cplx> c(k + 1, cplx{});
      c[k] = 1.0;
      power.set(0, c);
      const SliceFunction slice = slice_extension(power);
      double ratio_err = 0.0, resid = 0.0;
      cplx worst_ratio = table->lambda[k];
      for (const auto& pt : pts) {
        const Multivector R = dual_radon(slice, pt, q);
        const Multivector X = ck_polynomial(k, pt.to_paravector(), *table);
        const cplx ratio = hermitian_inner(R, X) / hermitian_inner(X, X);
        const double e = std::abs(ratio - table->lambda[k]) / table->lambda[k];
        if (e >= ratio_err) {
          ratio_err = e;
          worst_ratio = ratio;
        }
        const Multivector scaled = X * cplx{table->lambda[k]};
        resid = std::max(resid, (R - scaled).norm() / scaled.norm());
      }
      run.add(label("m%d/k%d/radon-ratio", m, k), table->lambda[k], worst_ratio, 1e-9, Metric::Relative);
      run.add(label("m%d/k%d/radon-residual", m, k), 0.0, resid, 1e-9);
    }
  }
  return run.finish();
}

VerificationReport run_suite(const std::string& name, const VerifyConfig& config) {
  if (name == "unitarity") return unitarity_suite(config);
  if (name == "cosh_gaussian") return cosh_gaussian_suite(config);
  if (name == "classical") return classical_cst_suite(config);
  if (name == "commutativity") return commutativity_suite(config);
  if (name == "restriction") return restriction_suite(config);
  if (name == "planewave") return planewave_suite(config);
  if (name == "monogenicity") return monogenicity_suite(config);
  if (name == "intertwining") return intertwining_suite(config);
  if (name == "ladder") return ladder_suite(config);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace monocst
