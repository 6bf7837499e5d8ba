#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "monocst/clifford.hpp"
#include "monocst/errors.hpp"

using namespace monocst;

namespace {

// Sign of e_A e_B by writing out the index word and bubble-sorting it;
// adjacent equal indices contract to e_j^2 = -1.
int sign_by_sorting(BladeMask a, BladeMask b) {
  std::vector<int> word;
  for (int j = 0; j < 32; ++j)
    if (a >> j & 1u) word.push_back(j);
  for (int j = 0; j < 32; ++j)
    if (b >> j & 1u) word.push_back(j);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return sign;
}

Multivector random_mv(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> g;
  Multivector a(m);
  for (auto& c : a.coeffs()) c = {g(rng), g(rng)};
  return a;
}

double dist(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("blade signs agree with explicit reordering") {
  for (BladeMask a = 0; a < 64; ++a)
    for (BladeMask b = 0; b < 64; ++b) CHECK(blade_product_sign(a, b) == sign_by_sorting(a, b));
}

TEST_CASE("generators anticommute and square to -1") {
  const int m = 5;
  for (int i = 1; i <= m; ++i) {
    const auto ei = Multivector::generator(m, i);
    CHECK(dist(ei * ei, Multivector::scalar(m, -1.0)) == 0.0);
    for (int j = i + 1; j <= m; ++j) {
      const auto ej = Multivector::generator(m, j);
      CHECK(dist(ei * ej + ej * ei, Multivector(m)) == 0.0);
    }
  }
}

TEST_CASE("product is associative and distributive") {
  std::mt19937_64 rng(7);
  for (int m : {2, 3, 4, 6}) {
    const auto a = random_mv(rng, m), b = random_mv(rng, m), c = random_mv(rng, m);
    CHECK(dist((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(dist(a * (b + c), a * b + a * c) < 1e-12);
  }
}

TEST_CASE("paravector times conjugate is the squared norm") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int m : {2, 3, 7}) {
    Paravector p;
    p.x0 = g(rng);
    for (int j = 0; j < m; ++j) p.xvec.push_back(g(rng));
    Paravector conj = p;
    for (auto& x : conj.xvec) x = -x;
    const auto prod = p.embed() * conj.embed();
    CHECK(dist(prod, Multivector::scalar(m, p.norm() * p.norm())) < 1e-12);
    // x-bar squared is -|x|^2
    Paravector v = p;
    v.x0 = 0.0;
    CHECK(dist(v.embed() * v.embed(), Multivector::scalar(m, -v.vector_norm() * v.vector_norm())) < 1e-12);
  }
}

TEST_CASE("exp of a unit vector times theta is cos + omega sin") {
  const int m = 4;
  const double theta = 1.3;
  const std::vector<double> w = {0.5, -0.5, 0.5, 0.5};
  const auto omega = Multivector::vector(m, w);
  const auto e = mv_exp_series(omega * cplx{theta});
  const auto expect = Multivector::scalar(m, std::cos(theta)) + omega * cplx{std::sin(theta)};
  CHECK(dist(e, expect) < 1e-14);
}

TEST_CASE("grade projection and Hermitian inner product") {
  std::mt19937_64 rng(11);
  const int m = 4;
  const auto a = random_mv(rng, m);
  Multivector sum(m);
  for (int k = 0; k <= m; ++k) sum += grade_project(a, k);
  CHECK(dist(sum, a) == 0.0);
  CHECK_THROWS_AS(grade_project(a, m + 1), DomainError);
  CHECK(std::abs(hermitian_inner(a, a) - cplx{a.norm() * a.norm()}) < 1e-12);
}

TEST_CASE("dimension mismatch throws") {
  CHECK_THROWS_AS(mv_product(Multivector(2), Multivector(3)), DimensionError);
  CHECK_THROWS_AS(Multivector(1), DimensionError);
  CHECK_THROWS_AS(Multivector(13), DimensionError);
}

TEST_CASE("blade labels") {
  CHECK(blade_label(0, 3) == "1");
  CHECK(blade_label(0b101, 3) == "e13");
  CHECK(blade_label(0b1000000001, 10) == "e1_10");
}

TEST_CASE("axial point validation") {
  AxialPoint pt{0.0, 1.0, {1.0, 1.0}};
  CHECK_THROWS_AS(validate(pt), DomainError);
  pt.omega = {1.0, 0.0};
  pt.r = -1.0;
  CHECK_THROWS_AS(validate(pt), DomainError);
}

TEST_CASE("finite-difference Dirac kills monogenic linear fields and has order two") {
  // Fueter variable x1 - x0 e1.
  const int m = 2;
  auto fueter = [m](const Paravector& p) {
    Multivector out = Multivector::scalar(m, p.xvec[0]);
    out -= Multivector::generator(m, 1) * cplx{p.x0};
    return out;
  };
  Paravector origin{0.1, {0.2, -0.3}};
  const auto grid = sample_field(m, origin, 5, 0.05, fueter);
  const auto res = dirac_apply_fd(grid);
  double worst = 0.0;
  for (const auto& v : res.values) worst = std::max(worst, v.max_abs());
  CHECK(worst < 1e-12);

  // Non-monogenic cubic: Dirac of x0^3 is 3 x0^2; FD error scales as h^2.
  auto cubic = [m](const Paravector& p) { return Multivector::scalar(m, p.x0 * p.x0 * p.x0); };
  double err[2];
  const double hs[2] = {2e-2, 1e-2};
  for (int i = 0; i < 2; ++i) {
    const auto r = dirac_apply_fd(sample_field(m, origin, 3, hs[i], cubic));
    const double x0 = origin.x0 + hs[i];
    err[i] = std::abs(r.values[0].scalar_part() - cplx{3.0 * x0 * x0});
  }
  CHECK(std::log2(err[0] / err[1]) == doctest::Approx(2.0).epsilon(0.02));
  CHECK_THROWS_AS(dirac_apply_fd(sample_field(m, origin, 2, 0.1, cubic)), DomainError);
}
