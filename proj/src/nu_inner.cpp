#include "monocst/nu_inner.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "monocst/errors.hpp"
#include "monocst/kernels.hpp"

namespace monocst {

namespace {

std::vector<WavePacket> all_packets(std::span<const CliffordSignal> signals) {
  std::vector<WavePacket> out;
  for (const auto& f : signals) {
    for (const auto& [blade, packets] : f.components()) out.insert(out.end(), packets.begin(), packets.end());
  }
  return out;
}

}  // namespace

PlaneWindow window_for_evolved(std::span<const CliffordSignal> evolved, const QuadratureSpec& q) {
  PlaneWindow w;
  const auto packets = all_packets(evolved);
  if (packets.empty()) {
    if (q.radial_cutoff > 0.0) w.r_max = q.radial_cutoff;
    return w;
  }
  double lo = packets.front().center, hi = lo, s_max = 0.0, r_need = 8.0;
  for (const auto& p : packets) {
    const double big = p.width * p.width;
    // |g(x0 + ir)|^2 e^{-r^2} ~ exp(-(1 - 1/S) r^2 - 2 b r) along r.
    const double decay = 1.0 - 1.0 / big;
    if (!(decay > 0.0)) throw DomainError("evolved packet width must exceed 1 for the d nu_m integral");
    lo = std::min(lo, p.center);
    hi = std::max(hi, p.center);
    s_max = std::max(s_max, big);
    const double degree = static_cast<double>(p.poly.size());
    r_need = std::max(r_need, std::abs(p.momentum) / decay + std::sqrt(40.0 / decay) + std::sqrt(degree));
  }
  w.x0_center = 0.5 * (lo + hi);
  w.x0_scale = std::sqrt(2.0 * s_max) + 0.25 * (hi - lo);
  w.r_max = q.radial_cutoff > 0.0 ? q.radial_cutoff : r_need;
  return w;
}

PlaneWindow window_for(std::span<const CliffordSignal> signals, const QuadratureSpec& q) {
  std::vector<CliffordSignal> evolved;
  evolved.reserve(signals.size());
  for (const auto& f : signals) evolved.push_back(heat_evolve(f));
  return window_for_evolved(evolved, q);
}

NuSample::NuSample(const SliceFunction& field, const PlaneWindow& window, int nodes) : blades_(field.blades) {
  const Rule rx = gauss_hermite_unweighted(nodes, window.x0_center, window.x0_scale);
  const Rule rr = gauss_legendre(nodes, 0.0, window.r_max);
  const std::size_t n = static_cast<std::size_t>(nodes);
  const double prefactor = 2.0 / std::sqrt(std::numbers::pi);
  weights_.resize(n * n);
  alpha_.assign(blades_.size(), std::vector<cplx>(n * n));
  beta_.assign(blades_.size(), std::vector<cplx>(n * n));
  std::vector<SliceValue> vals(blades_.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double r = rr.nodes[k];
      const std::size_t idx = i * n + k;
      weights_[idx] = prefactor * rx.weights[i] * rr.weights[k] * std::exp(-r * r);
      if (!blades_.empty()) field.eval(rx.nodes[i], r, vals);
      for (std::size_t b = 0; b < blades_.size(); ++b) {
        alpha_[b][idx] = vals[b].alpha;
        beta_[b][idx] = vals[b].beta;
      }
    }
  }
}

cplx nu_inner(const NuSample& a, const NuSample& b) {
  if (a.weights_.size() != b.weights_.size()) throw DomainError("nu samples built on different rules");
  cplx acc{};
  for (std::size_t i = 0; i < a.blades_.size(); ++i) {
    for (std::size_t j = 0; j < b.blades_.size(); ++j) {
      if (a.blades_[i] != b.blades_[j]) continue;
      acc += kernels::weighted_inner(a.weights_, a.alpha_[i], b.alpha_[j]);
      acc += kernels::weighted_inner(a.weights_, a.beta_[i], b.beta_[j]);
    }
  }
  return acc;
}

cplx nu_m_inner(const SliceFunction& f, const SliceFunction& g, const QuadratureSpec& q,
                const PlaneWindow& window) {
  validate(q);
  if (f.m != g.m) throw DimensionError("nu_m_inner over different algebras");
  const NuSample a(f, window, q.plane_nodes);
  const NuSample b(g, window, q.plane_nodes);
  return nu_inner(a, b);
}

cplx nu_m_inner(const CliffordSignal& f, const CliffordSignal& g, const QuadratureSpec& q) {
  const CliffordSignal both[] = {f, g};
  return nu_m_inner(u_s_field(f), u_s_field(g), q, window_for(both, q));
}

double monte_carlo_radius_scale(std::span<const CliffordSignal> signals) {
  double tau2 = 1.0;
  for (const auto& p : all_packets(signals)) {
    const double s2 = p.width * p.width;
    tau2 = std::max(tau2, (s2 + 1.0) / s2);
  }
  return std::sqrt(0.5 * tau2);
}

MonteCarloEstimate nu_m_inner_monte_carlo(const SliceFunction& f, const SliceFunction& g, const QuadratureSpec& q,
                                          const PlaneWindow& window, double tau) {
  if (f.m != g.m) throw DimensionError("nu_m_inner over different algebras");
  const int m = f.m;
  std::mt19937_64 rng(q.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double sigma_x = 0.5 * window.x0_scale;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  // Raw density factor of d nu_m after d^m x = r^{m-1} dr d omega; the r^{m-1}
  // and Vol(S^{m-1}) cancel against the sampling density of x.
  const std::int64_t n = q.mc_samples;
  if (n <= 1) throw DomainError("Monte Carlo needs at least two samples");
  double sum_re = 0.0, sum_im = 0.0, sum_sq = 0.0;
  std::vector<double> dir(m);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  // Jittered strata on the unit square, mapped to (x0, r) by Box-Muller.
  const auto side = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  for (std::int64_t s = 0; s < n; ++s) {
    double u1 = unif(rng), u2 = unif(rng);
    if (s < side * side) {
      u1 = (static_cast<double>(s / side) + u1) / static_cast<double>(side);
      u2 = (static_cast<double>(s % side) + u2) / static_cast<double>(side);
    }
    const double rad = std::sqrt(-2.0 * std::log1p(-u1));
    const double x0 = window.x0_center + sigma_x * rad * std::cos(2.0 * std::numbers::pi * u2);
    const double r = std::abs(tau * rad * std::sin(2.0 * std::numbers::pi * u2));
    double norm2 = 0.0;
    for (int j = 0; j < m; ++j) {
      dir[j] = gauss(rng);
      norm2 += dir[j] * dir[j];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    Paravector p;
    p.x0 = x0;
    p.xvec.resize(m);
    for (int j = 0; j < m; ++j) p.xvec[j] = r * dir[j] * inv;
    // Antithetic direction: odd-in-omega cross terms cancel in pairs.
    cplx value = hermitian_inner(f.at(p), g.at(p));
    for (auto& c : p.xvec) c = -c;
    value = 0.5 * (value + hermitian_inner(f.at(p), g.at(p)));
    const double dx = (x0 - window.x0_center) / sigma_x;
    const double px = std::exp(-0.5 * dx * dx) / (sigma_x * std::sqrt(2.0 * std::numbers::pi));
    const double pr = 2.0 * std::exp(-0.5 * r * r / (tau * tau)) / (tau * std::sqrt(2.0 * std::numbers::pi));
    const double weight = (2.0 / sqrt_pi) * std::exp(-r * r) / (px * pr);
    const cplx term = value * weight;
    sum_re += term.real();
    sum_im += term.imag();
    sum_sq += std::norm(term);
  }
  const double dn = static_cast<double>(n);
  const cplx mean{sum_re / dn, sum_im / dn};
  const double var = std::max(0.0, sum_sq / dn - std::norm(mean));
  return {mean, std::sqrt(var / (dn - 1.0))};
}

}  // namespace monocst
