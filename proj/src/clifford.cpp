#include "monocst/clifford.hpp"

#include <cmath>

#include "monocst/errors.hpp"

namespace monocst {

namespace {

void check_generators(int m) {
  if (m < kMinGenerators || m > kMaxGenerators) {
    throw DimensionError("generator count must be in [2, 12], got " + std::to_string(m));
  }
}

void check_same(const Multivector& a, const Multivector& b, const char* op) {
  if (a.m() != b.m()) {
    throw DimensionError(std::string(op) + ": mismatched generator counts " +
                         std::to_string(a.m()) + " vs " + std::to_string(b.m()));
  }
}

}  // namespace

int blade_product_sign(BladeMask a, BladeMask b) {
  // Moving each generator of b leftwards past the generators of a with a larger
  // index costs one transposition each.
  int swaps = 0;
  BladeMask rest = a >> 1;
  while (rest != 0) {
    swaps += __builtin_popcount(rest & b);
    rest >>= 1;
  }
  // Each shared generator squares to -1.
  swaps += __builtin_popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

std::string blade_label(BladeMask blade, int m) {
  if (blade == 0) return "1";
  std::string out = "e";
  bool first = true;
  for (int j = 1; j <= m; ++j) {
    if (blade & (BladeMask{1} << (j - 1))) {
      if (!first && m >= 10) out += '_';
      out += std::to_string(j);
      first = false;
    }
  }
  return out;
}

Multivector::Multivector(int m) : m_(m) {
  check_generators(m);
  coeffs_.assign(std::size_t{1} << m, cplx{0.0, 0.0});
}

Multivector Multivector::scalar(int m, cplx value) {
  Multivector out(m);
  out.coeffs_[0] = value;
  return out;
}

Multivector Multivector::generator(int m, int j) {
  if (j < 1 || j > m) throw DomainError("generator index out of range");
  return blade(m, BladeMask{1} << (j - 1));
}

Multivector Multivector::blade(int m, BladeMask mask, cplx value) {
  Multivector out(m);
  if (mask >= out.size()) throw DomainError("blade mask out of range");
  out.coeffs_[mask] = value;
  return out;
}

Multivector Multivector::vector(int m, std::span<const double> components) {
  if (static_cast<int>(components.size()) != m) {
    throw DimensionError("vector length does not match generator count");
  }
  Multivector out(m);
  for (int j = 0; j < m; ++j) out.coeffs_[BladeMask{1} << j] = components[j];
  return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  check_same(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  check_same(*this, other, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) { return mv_product(a, b); }

double Multivector::norm() const { return std::sqrt(hermitian_inner(*this, *this).real()); }

double Multivector::max_abs() const {
  double best = 0.0;
  for (const auto& c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

Multivector mv_product(const Multivector& a, const Multivector& b) {
  check_same(a, b, "mv_product");
  Multivector out(a.m());
  const auto n = static_cast<BladeMask>(a.size());
  for (BladeMask i = 0; i < n; ++i) {
    const cplx ai = a[i];
    if (ai == cplx{}) continue;
    for (BladeMask j = 0; j < n; ++j) {
      const cplx bj = b[j];
      if (bj == cplx{}) continue;
      const cplx term = ai * bj;
      if (blade_product_sign(i, j) > 0) {
        out[i ^ j] += term;
      } else {
        out[i ^ j] -= term;
      }
    }
  }
  return out;
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.m()) {
    throw DomainError("grade " + std::to_string(k) + " outside [0, " + std::to_string(a.m()) + "]");
  }
  Multivector out(a.m());
  for (BladeMask i = 0; i < a.size(); ++i) {
    if (grade_of(i) == k) out[i] = a[i];
  }
  return out;
}

cplx hermitian_inner(const Multivector& a, const Multivector& b) {
  check_same(a, b, "hermitian_inner");
  cplx acc{};
  for (BladeMask i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

Multivector mv_exp_series(const Multivector& a, int max_terms) {
  Multivector sum = Multivector::scalar(a.m(), 1.0);
  Multivector term = sum;
  for (int k = 1; k < max_terms; ++k) {
    term = mv_product(term, a) * cplx{1.0 / k};
    sum += term;
    if (term.norm() < 1e-17 * sum.norm()) break;
  }
  return sum;
}

double Paravector::vector_norm() const {
  double s = 0.0;
  for (double v : xvec) s += v * v;
  return std::sqrt(s);
}

double Paravector::norm() const {
  const double v = vector_norm();
  return std::hypot(x0, v);
}

Multivector Paravector::embed() const {
  Multivector out = Multivector::vector(m(), xvec);
  out[0] = x0;
  return out;
}

Paravector AxialPoint::to_paravector() const {
  Paravector p;
  p.x0 = x0;
  p.xvec.assign(omega.size(), 0.0);
  if (r != 0.0) {
    for (std::size_t j = 0; j < omega.size(); ++j) p.xvec[j] = r * omega[j];
  }
  return p;
}

AxialPoint AxialPoint::from_paravector(const Paravector& p) {
  AxialPoint pt;
  pt.x0 = p.x0;
  pt.r = p.vector_norm();
  pt.omega.assign(p.xvec.size(), 0.0);
  if (pt.r > 0.0) {
    for (std::size_t j = 0; j < p.xvec.size(); ++j) pt.omega[j] = p.xvec[j] / pt.r;
  } else if (!pt.omega.empty()) {
    pt.omega[0] = 1.0;
  }
  return pt;
}

void validate(const AxialPoint& pt) {
  if (pt.r < 0.0) throw DomainError("axial point with negative radius");
  if (pt.r == 0.0) return;
  double s = 0.0;
  for (double w : pt.omega) s += w * w;
  if (std::abs(std::sqrt(s) - 1.0) > 1e-12) throw DomainError("axial direction is not a unit vector");
}

std::size_t FieldGrid::node_count() const {
  std::size_t n = 1;
  for (auto e : extent) n *= e;
  return n;
}

std::size_t FieldGrid::flat_index(std::span<const std::size_t> idx) const {
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < extent.size(); ++axis) flat = flat * extent[axis] + idx[axis];
  return flat;
}

Paravector FieldGrid::node(std::span<const std::size_t> idx) const {
  Paravector p;
  p.x0 = origin[0] + h * static_cast<double>(idx[0]);
  p.xvec.resize(m);
  for (int j = 0; j < m; ++j) p.xvec[j] = origin[j + 1] + h * static_cast<double>(idx[j + 1]);
  return p;
}

FieldGrid dirac_apply_fd(const FieldGrid& field) {
  const int m = field.m;
  if (static_cast<int>(field.extent.size()) != m + 1) throw DimensionError("grid rank mismatch");
  for (auto e : field.extent) {
    if (e < 3) throw DomainError("dirac_apply_fd needs at least 3 points per axis");
  }
  if (field.values.size() != field.node_count()) throw DomainError("grid value count mismatch");

  FieldGrid out;
  out.m = m;
  out.h = field.h;
  out.origin.resize(m + 1);
  out.extent.resize(m + 1);
  for (int axis = 0; axis <= m; ++axis) {
    out.origin[axis] = field.origin[axis] + field.h;
    out.extent[axis] = field.extent[axis] - 2;
  }
  const std::size_t n = out.node_count();
  out.values.reserve(n);

  std::vector<Multivector> gens;
  for (int j = 1; j <= m; ++j) gens.push_back(Multivector::generator(m, j));

  const double inv2h = 0.5 / field.h;
  std::vector<std::size_t> idx(m + 1), probe(m + 1);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t rest = flat;
    for (int axis = m; axis >= 0; --axis) {
      idx[axis] = rest % out.extent[axis] + 1;
      rest /= out.extent[axis];
    }
    Multivector acc(m);
    for (int axis = 0; axis <= m; ++axis) {
      probe = idx;
      probe[axis] = idx[axis] + 1;
      Multivector diff = field.values[field.flat_index(probe)];
      probe[axis] = idx[axis] - 1;
      diff -= field.values[field.flat_index(probe)];
      diff *= cplx{inv2h};
      if (axis == 0) {
        acc += diff;
      } else {
        acc += mv_product(gens[axis - 1], diff);
      }
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

}  // namespace monocst
