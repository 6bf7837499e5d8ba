#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monocst {

using cplx = std::complex<double>;

// Blade e_A encoded as the bitmask of A; bit j-1 set <=> e_j in A.
using BladeMask = std::uint32_t;

inline constexpr int kMinGenerators = 2;
inline constexpr int kMaxGenerators = 12;

inline int grade_of(BladeMask blade) { return __builtin_popcount(blade); }

// Sign of e_A e_B = sign * e_{A xor B} for the signature e_j^2 = -1.
int blade_product_sign(BladeMask a, BladeMask b);

// "1", "e1", "e12", ... (indices joined by '_' once m >= 10).
std::string blade_label(BladeMask blade, int m);

/// Dense element of the complex Clifford algebra C_m with 2^m coefficients.
///
/// Coefficients are stored in ascending bitmask order; the imaginary unit
/// commutes with every generator.
class Multivector {
 public:
  explicit Multivector(int m);

  static Multivector scalar(int m, cplx value);
  static Multivector generator(int m, int j);  // e_j, 1-based
  static Multivector blade(int m, BladeMask mask, cplx value = 1.0);
  static Multivector vector(int m, std::span<const double> components);

  int m() const { return m_; }
  std::size_t size() const { return coeffs_.size(); }

  cplx operator[](BladeMask blade) const { return coeffs_[blade]; }
  cplx& operator[](BladeMask blade) { return coeffs_[blade]; }

  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  cplx scalar_part() const { return coeffs_[0]; }

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(cplx factor);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
  friend Multivector operator*(cplx s, Multivector a) { return a *= s; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  // sqrt(<a, a>).
  double norm() const;
  double max_abs() const;

 private:
  int m_;
  std::vector<cplx> coeffs_;
};

// Geometric product; throws DimensionError when generator counts differ.
Multivector mv_product(const Multivector& a, const Multivector& b);

// Keeps only grade-k blades; throws DomainError unless 0 <= k <= m.
Multivector grade_project(const Multivector& a, int k);

inline cplx scalar_part(const Multivector& a) { return a.scalar_part(); }

// sum_A a_A conj(b_A).
cplx hermitian_inner(const Multivector& a, const Multivector& b);

// Truncated exponential series sum_k a^k / k!; terms stop once they fall below
// 1e-17 of the running norm.
Multivector mv_exp_series(const Multivector& a, int max_terms = 200);

struct Paravector {
  double x0 = 0.0;
  std::vector<double> xvec;

  int m() const { return static_cast<int>(xvec.size()); }
  double vector_norm() const;
  // sqrt(x0^2 + |xvec|^2)
  double norm() const;
  Multivector embed() const;
};

// Polar form of a paravector: xvec = r * omega. omega is never read when r == 0.
struct AxialPoint {
  double x0 = 0.0;
  double r = 0.0;
  std::vector<double> omega;

  int m() const { return static_cast<int>(omega.size()); }
  Paravector to_paravector() const;
  static AxialPoint from_paravector(const Paravector& p);
};

// Throws DomainError if |omega| deviates from 1 by more than 1e-12 or r < 0.
void validate(const AxialPoint& pt);

// Uniform grid on R^{m+1}; axis 0 is x0, axes 1..m are x_1..x_m. Row-major with
// the last axis fastest.
struct FieldGrid {
  int m = 0;
  std::vector<double> origin;       // m + 1 entries
  std::vector<std::size_t> extent;  // m + 1 entries
  double h = 0.0;
  std::vector<Multivector> values;

  std::size_t node_count() const;
  std::size_t flat_index(std::span<const std::size_t> idx) const;
  Paravector node(std::span<const std::size_t> idx) const;
};

template <class Field>
FieldGrid sample_field(int m, const Paravector& origin, std::size_t points_per_axis, double h,
                       Field&& field) {
  FieldGrid grid;
  grid.m = m;
  grid.h = h;
  grid.origin.push_back(origin.x0);
  grid.origin.insert(grid.origin.end(), origin.xvec.begin(), origin.xvec.end());
  grid.extent.assign(m + 1, points_per_axis);
  const std::size_t n = grid.node_count();
  grid.values.reserve(n);
  std::vector<std::size_t> idx(m + 1, 0);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t rest = flat;
    for (int axis = m; axis >= 0; --axis) {
      idx[axis] = rest % points_per_axis;
      rest /= points_per_axis;
    }
    grid.values.push_back(field(grid.node(idx)));
  }
  return grid;
}

// Central-difference (d/dx0 + sum_j e_j d/dx_j) F at interior nodes. The result
// grid has extent - 2 along every axis. Throws DomainError for fewer than three
// points along any axis.
FieldGrid dirac_apply_fd(const FieldGrid& field);

}  // namespace monocst
