#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "monocst/clifford.hpp"

namespace monocst {

/// x -> (sum_k c_k x^k) exp(-(x - a)^2 / (2 s^2)) exp(i b x).
///
/// Entire in x, so evaluating at complex arguments is the analytic
/// continuation. Any constant amplitude lives in the polynomial.
struct WavePacket {
  std::vector<cplx> poly;
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;

  cplx value(cplx z) const;
  // Exponent q(z) = -(z - a)^2 / (2 s^2) + i b z.
  cplx exponent(cplx z) const;
};

/// Element of L^2(R) (x) C_m as per-blade sums of wave packets.
class CliffordSignal {
 public:
  CliffordSignal() = default;
  explicit CliffordSignal(int m);

  int m() const { return m_; }
  const std::map<BladeMask, std::vector<WavePacket>>& components() const { return components_; }

  void add(BladeMask blade, WavePacket packet);
  std::vector<BladeMask> blades() const;
  bool empty() const { return components_.empty(); }

  // f_A(z); zero for blades without packets.
  cplx component_value(BladeMask blade, cplx z) const;
  Multivector evaluate(cplx z) const;

  CliffordSignal& operator+=(const CliffordSignal& other);
  CliffordSignal& operator*=(cplx factor);
  friend CliffordSignal operator+(CliffordSignal a, const CliffordSignal& b) { return a += b; }
  friend CliffordSignal operator*(cplx s, CliffordSignal a) { return a *= s; }

 private:
  int m_ = kMinGenerators;
  std::map<BladeMask, std::vector<WavePacket>> components_;
};

/// Clifford-valued polynomial on the axis, sum_A (sum_k c_{A,k} x^k) e_A.
class PolySignal {
 public:
  explicit PolySignal(int m) : m_(m) {}
  int m() const { return m_; }
  void set(BladeMask blade, std::vector<cplx> coeffs) { components_[blade] = std::move(coeffs); }
  const std::map<BladeMask, std::vector<cplx>>& components() const { return components_; }
  std::vector<BladeMask> blades() const;
  cplx component_value(BladeMask blade, cplx z) const;
  // Derivative of order k at z.
  cplx component_derivative(BladeMask blade, int k, cplx z) const;

 private:
  int m_;
  std::map<BladeMask, std::vector<cplx>> components_;
};

// Entire Clifford-valued function of one complex variable, evaluated per blade.
template <class T>
concept AxisFunction = requires(const T& h, BladeMask b, cplx z) {
  { h.m() } -> std::convertible_to<int>;
  { h.blades() } -> std::convertible_to<std::vector<BladeMask>>;
  { h.component_value(b, z) } -> std::convertible_to<cplx>;
};

// Fourier transform with f~(p) = (2 pi)^{-1/2} int e^{-ipx} f(x) dx, in closed form.
CliffordSignal fourier(const CliffordSignal& f);
WavePacket fourier(const WavePacket& packet);

// Heat flow e^{t Delta / 2} (t = 1 is the coherent state smoothing).
CliffordSignal heat_evolve(const CliffordSignal& f, double time = 1.0);
WavePacket heat_evolve(const WavePacket& packet, double time = 1.0);

// sum_A int f_A(x) conj(g_A(x)) dx via Gaussian moments.
cplx l2_inner(const CliffordSignal& f, const CliffordSignal& g);
cplx l2_inner(const WavePacket& f, const WavePacket& g);
double l2_norm(const CliffordSignal& f);

// x f
CliffordSignal apply_position(const CliffordSignal& f);
// i d/dx f
CliffordSignal apply_momentum(const CliffordSignal& f);
// x f - d/dx f
CliffordSignal apply_creation(const CliffordSignal& f);
// d/dx f
CliffordSignal apply_derivative(const CliffordSignal& f);
WavePacket derivative(const WavePacket& packet);
WavePacket multiply_x(const WavePacket& packet);

// Taylor coefficients a_0..a_n of f_A at 0.
std::vector<cplx> taylor_coefficients(const CliffordSignal& f, BladeMask blade, int n);

// JSON signal description:
// {"m": int, "components": [{"blade": [ints], "packets":
//   [{"poly": [[re, im], ...], "center": a, "width": s, "momentum": b}]}]}
// Unknown keys, blade indices outside 1..m, repeated indices and width <= 0 are
// rejected with SchemaError.
CliffordSignal signal_from_json(const std::string& text);
CliffordSignal load_signal(const std::string& path);
std::string signal_to_json(const CliffordSignal& f);

BladeMask blade_from_indices(const std::vector<int>& indices, int m);

}  // namespace monocst
