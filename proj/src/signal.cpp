#include "monocst/signal.hpp"

#include <cmath>
#include <numbers>

#include "monocst/errors.hpp"

namespace monocst {

namespace {

using Poly = std::vector<cplx>;

cplx horner(const Poly& p, cplx z) {
  cplx acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly times_x(const Poly& p) {
  Poly out(p.size() + 1, cplx{});
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k];
  return out;
}

void accumulate(Poly& dst, const Poly& src, cplx factor = 1.0) {
  if (dst.size() < src.size()) dst.resize(src.size(), cplx{});
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] += factor * src[k];
}

// Q -> Q' + Q * (c0 + c1 x): the polynomial part of d/dx [Q e^{E}] when
// E'(x) = c0 + c1 x.
Poly derive_with_exponent(const Poly& q, cplx c0, double c1) {
  Poly out(q.size() + 1, cplx{});
  for (std::size_t k = 1; k < q.size(); ++k) out[k - 1] += static_cast<double>(k) * q[k];
  for (std::size_t k = 0; k < q.size(); ++k) {
    out[k] += c0 * q[k];
    out[k + 1] += c1 * q[k];
  }
  return out;
}

// E'(x) = -(x - a)/s^2 + i b as (c0, c1).
std::pair<cplx, double> exponent_slope(const WavePacket& p) {
  const double inv = 1.0 / (p.width * p.width);
  return {cplx{p.center * inv, p.momentum}, -inv};
}

void check_width(const WavePacket& p) {
  if (!(p.width > 0.0) || !std::isfinite(p.width)) throw DomainError("wave packet width must be positive");
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == cplx{}) p.pop_back();
}

}  // namespace

cplx WavePacket::exponent(cplx z) const {
  const cplx d = z - center;
  return -d * d / (2.0 * width * width) + cplx{0.0, momentum} * z;
}

cplx WavePacket::value(cplx z) const {
  if (poly.empty()) return {};
  return horner(poly, z) * std::exp(exponent(z));
}

CliffordSignal::CliffordSignal(int m) : m_(m) {
  if (m < kMinGenerators || m > kMaxGenerators) throw DimensionError("generator count must be in [2, 12]");
}

void CliffordSignal::add(BladeMask blade, WavePacket packet) {
  if (blade >= (BladeMask{1} << m_)) throw DomainError("blade outside the algebra");
  check_width(packet);
  components_[blade].push_back(std::move(packet));
}

std::vector<BladeMask> CliffordSignal::blades() const {
  std::vector<BladeMask> out;
  for (const auto& [blade, packets] : components_) out.push_back(blade);
  return out;
}

cplx CliffordSignal::component_value(BladeMask blade, cplx z) const {
  auto it = components_.find(blade);
  if (it == components_.end()) return {};
  cplx acc{};
  for (const auto& p : it->second) acc += p.value(z);
  return acc;
}

Multivector CliffordSignal::evaluate(cplx z) const {
  Multivector out(m_);
  for (const auto& [blade, packets] : components_) {
    for (const auto& p : packets) out[blade] += p.value(z);
  }
  return out;
}

CliffordSignal& CliffordSignal::operator+=(const CliffordSignal& other) {
  if (other.m_ != m_) throw DimensionError("adding signals over different algebras");
  for (const auto& [blade, packets] : other.components_) {
    auto& dst = components_[blade];
    dst.insert(dst.end(), packets.begin(), packets.end());
  }
  return *this;
}

CliffordSignal& CliffordSignal::operator*=(cplx factor) {
  for (auto& [blade, packets] : components_) {
    for (auto& p : packets) {
      for (auto& c : p.poly) c *= factor;
    }
  }
  return *this;
}

std::vector<BladeMask> PolySignal::blades() const {
  std::vector<BladeMask> out;
  for (const auto& [blade, coeffs] : components_) out.push_back(blade);
  return out;
}

cplx PolySignal::component_value(BladeMask blade, cplx z) const {
  auto it = components_.find(blade);
  return it == components_.end() ? cplx{} : horner(it->second, z);
}

cplx PolySignal::component_derivative(BladeMask blade, int k, cplx z) const {
  auto it = components_.find(blade);
  if (it == components_.end()) return {};
  Poly p = it->second;
  for (int d = 0; d < k; ++d) {
    if (p.size() <= 1) return {};
    Poly q(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) q[i - 1] = static_cast<double>(i) * p[i];
    p = std::move(q);
  }
  return horner(p, z);
}

WavePacket fourier(const WavePacket& packet) {
  check_width(packet);
  const double s = packet.width, a = packet.center, b = packet.momentum;
  WavePacket out;
  out.width = 1.0 / s;
  out.center = b;
  out.momentum = -a;
  // FT[x^k g] = (i d/dp)^k FT[g]; Horner in the operator D = i (d/dp + E'(p)).
  const auto [c0, c1] = exponent_slope(out);
  Poly acc;
  for (auto it = packet.poly.rbegin(); it != packet.poly.rend(); ++it) {
    Poly next = derive_with_exponent(acc, c0, c1);
    for (auto& c : next) c *= cplx{0.0, 1.0};
    if (next.empty()) next.push_back(cplx{});
    next[0] += *it;
    acc = std::move(next);
  }
  const cplx k = s * std::exp(cplx{0.0, a * b});
  for (auto& c : acc) c *= k;
  trim(acc);
  out.poly = std::move(acc);
  return out;
}

CliffordSignal fourier(const CliffordSignal& f) {
  CliffordSignal out(f.m());
  for (const auto& [blade, packets] : f.components()) {
    for (const auto& p : packets) out.add(blade, fourier(p));
  }
  return out;
}

WavePacket heat_evolve(const WavePacket& packet, double time) {
  check_width(packet);
  if (time < 0.0) throw DomainError("heat_evolve needs a nonnegative time");
  const double s2 = packet.width * packet.width;
  const double big = s2 + time;
  const double a = packet.center, b = packet.momentum;
  WavePacket out;
  out.width = std::sqrt(big);
  out.center = a;
  out.momentum = b * s2 / big;
  // Gaussian with complex center a + i b s^2 convolved with rho_t.
  const cplx k = std::sqrt(s2 / big) *
                 std::exp(cplx{-b * b * s2 * time / (2.0 * big), a * b * time / big});
  // e^{t Delta/2} x e^{-t Delta/2} = x + t d/dx, applied by Horner.
  const auto [c0, c1] = exponent_slope(out);
  Poly acc;
  for (auto it = packet.poly.rbegin(); it != packet.poly.rend(); ++it) {
    Poly next = times_x(acc);
    accumulate(next, derive_with_exponent(acc, c0, c1), time);
    if (next.empty()) next.push_back(cplx{});
    next[0] += *it;
    acc = std::move(next);
  }
  for (auto& c : acc) c *= k;
  trim(acc);
  out.poly = std::move(acc);
  return out;
}

CliffordSignal heat_evolve(const CliffordSignal& f, double time) {
  CliffordSignal out(f.m());
  for (const auto& [blade, packets] : f.components()) {
    for (const auto& p : packets) out.add(blade, heat_evolve(p, time));
  }
  return out;
}

cplx l2_inner(const WavePacket& f, const WavePacket& g) {
  if (f.poly.empty() || g.poly.empty()) return {};
  const double i1 = 1.0 / (f.width * f.width), i2 = 1.0 / (g.width * g.width);
  const double quad = 0.5 * (i1 + i2);
  const cplx lin{f.center * i1 + g.center * i2, f.momentum - g.momentum};
  const double cst = -0.5 * (f.center * f.center * i1 + g.center * g.center * i2);

  Poly product(f.poly.size() + g.poly.size() - 1, cplx{});
  for (std::size_t i = 0; i < f.poly.size(); ++i) {
    for (std::size_t j = 0; j < g.poly.size(); ++j) product[i + j] += f.poly[i] * std::conj(g.poly[j]);
  }
  // M_n = int x^n e^{-A x^2 + B x} dx, with (n) M_{n-1} from integration by parts.
  std::vector<cplx> moments(product.size());
  moments[0] = std::sqrt(std::numbers::pi / quad) * std::exp(lin * lin / (4.0 * quad) + cst);
  if (moments.size() > 1) moments[1] = lin / (2.0 * quad) * moments[0];
  for (std::size_t n = 2; n < moments.size(); ++n) {
    moments[n] = (lin * moments[n - 1] + static_cast<double>(n - 1) * moments[n - 2]) / (2.0 * quad);
  }
  cplx acc{};
  for (std::size_t n = 0; n < product.size(); ++n) acc += product[n] * moments[n];
  return acc;
}

cplx l2_inner(const CliffordSignal& f, const CliffordSignal& g) {
  if (f.m() != g.m()) throw DimensionError("l2_inner over different algebras");
  cplx acc{};
  for (const auto& [blade, fp] : f.components()) {
    auto it = g.components().find(blade);
    if (it == g.components().end()) continue;
    for (const auto& p : fp) {
      for (const auto& q : it->second) acc += l2_inner(p, q);
    }
  }
  return acc;
}

double l2_norm(const CliffordSignal& f) { return std::sqrt(std::max(0.0, l2_inner(f, f).real())); }

WavePacket multiply_x(const WavePacket& packet) {
  WavePacket out = packet;
  out.poly = times_x(packet.poly);
  return out;
}

WavePacket derivative(const WavePacket& packet) {
  WavePacket out = packet;
  const auto [c0, c1] = exponent_slope(packet);
  out.poly = derive_with_exponent(packet.poly, c0, c1);
  trim(out.poly);
  return out;
}

namespace {

template <class Op>
CliffordSignal map_packets(const CliffordSignal& f, Op op) {
  CliffordSignal out(f.m());
  for (const auto& [blade, packets] : f.components()) {
    for (const auto& p : packets) out.add(blade, op(p));
  }
  return out;
}

}  // namespace

CliffordSignal apply_position(const CliffordSignal& f) { return map_packets(f, multiply_x); }

CliffordSignal apply_derivative(const CliffordSignal& f) {
  return map_packets(f, [](const WavePacket& p) { return derivative(p); });
}

CliffordSignal apply_momentum(const CliffordSignal& f) {
  return map_packets(f, [](const WavePacket& p) {
    WavePacket d = derivative(p);
    for (auto& c : d.poly) c *= cplx{0.0, 1.0};
    return d;
  });
}

CliffordSignal apply_creation(const CliffordSignal& f) {
  return map_packets(f, [](const WavePacket& p) {
    WavePacket out = p;
    out.poly = times_x(p.poly);
    accumulate(out.poly, derivative(p).poly, -1.0);
    trim(out.poly);
    return out;
  });
}

std::vector<cplx> taylor_coefficients(const CliffordSignal& f, BladeMask blade, int n) {
  if (n < 0) throw DomainError("taylor order must be nonnegative");
  std::vector<cplx> out(n + 1, cplx{});
  auto it = f.components().find(blade);
  if (it == f.components().end()) return out;
  for (const auto& p : it->second) {
    const double inv = 1.0 / (p.width * p.width);
    const cplx q1{p.center * inv, p.momentum};
    const double q2 = -0.5 * inv;
    // e^{q(z)} coefficients from E' = q' E.
    std::vector<cplx> e(n + 1, cplx{});
    e[0] = std::exp(-0.5 * p.center * p.center * inv);
    for (int k = 0; k < n; ++k) {
      cplx next = q1 * e[k];
      if (k >= 1) next += 2.0 * q2 * e[k - 1];
      e[k + 1] = next / static_cast<double>(k + 1);
    }
    for (std::size_t i = 0; i < p.poly.size(); ++i) {
      for (int k = 0; k + static_cast<int>(i) <= n; ++k) out[i + k] += p.poly[i] * e[k];
    }
  }
  return out;
}

}  // namespace monocst
