#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "monocst/kernels.hpp"

using namespace monocst;
using kernels::cplx;

namespace {

struct Data {
  std::vector<double> w, x;
  std::vector<cplx> a, b;
};

Data make(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    d.w.push_back(std::abs(g(rng)));
    d.x.push_back(g(rng) * std::exp(3.0 * g(rng)));
    d.a.emplace_back(g(rng), g(rng));
    d.b.emplace_back(g(rng), g(rng));
  }
  return d;
}

// long double reference sums
long double ref_dot(const Data& d) {
  long double s = 0;
  for (std::size_t i = 0; i < d.w.size(); ++i) s += static_cast<long double>(d.w[i]) * d.x[i];
  return s;
}

double scale_dot(const Data& d) {
  double s = 0;
  for (std::size_t i = 0; i < d.w.size(); ++i) s += std::abs(d.w[i] * d.x[i]);
  return s;
}

}  // namespace

TEST_CASE("scalar kernels match long double sums") {
  const auto& t = kernels::scalar_table();
  for (std::size_t n : {0u, 1u, 3u, 7u, 64u, 1001u}) {
    const auto d = make(n, n + 1);
    CHECK(std::abs(t.dot(d.w.data(), d.x.data(), n) - static_cast<double>(ref_dot(d))) <= 1e-15 * scale_dot(d) + 1e-300);
    std::complex<long double> s{}, inner{};
    for (std::size_t i = 0; i < n; ++i) {
      s += std::complex<long double>(d.w[i]) * std::complex<long double>(d.a[i]);
      inner += std::complex<long double>(d.w[i]) * std::complex<long double>(d.a[i]) *
               std::conj(std::complex<long double>(d.b[i]));
    }
    const cplx ws = t.weighted_sum(d.w.data(), d.a.data(), n);
    const cplx wi = t.weighted_inner(d.w.data(), d.a.data(), d.b.data(), n);
    CHECK(std::abs(ws - cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()))) < 1e-12);
    CHECK(std::abs(wi - cplx(static_cast<double>(inner.real()), static_cast<double>(inner.imag()))) < 1e-12);
  }
}

TEST_CASE("AVX2 kernels agree with scalar kernels") {
  const auto* avx = kernels::avx2_table();
  if (!avx || !__builtin_cpu_supports("avx2")) {
    MESSAGE("AVX2 variant unavailable; equivalence not exercised");
    return;
  }
  const auto& sc = kernels::scalar_table();
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 255u, 4099u}) {
    const auto d = make(n, 100 + n);
    const double tol = 4e-16 * scale_dot(d) + 1e-300;
    CHECK(std::abs(avx->dot(d.w.data(), d.x.data(), n) - sc.dot(d.w.data(), d.x.data(), n)) <= tol);
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) abs_sum += d.w[i] * std::abs(d.a[i]) * (1.0 + std::abs(d.b[i]));
    const double ctol = 4e-16 * abs_sum + 1e-300;
    CHECK(std::abs(avx->weighted_sum(d.w.data(), d.a.data(), n) - sc.weighted_sum(d.w.data(), d.a.data(), n)) <= ctol);
    CHECK(std::abs(avx->weighted_inner(d.w.data(), d.a.data(), d.b.data(), n) -
                   sc.weighted_inner(d.w.data(), d.a.data(), d.b.data(), n)) <= ctol);
  }
}

TEST_CASE("dispatch is stable and reproducible") {
  const auto& a = kernels::active();
  CHECK(&a == &kernels::active());
  const auto d = make(513, 9);
  const double first = kernels::dot(d.w, d.x);
  CHECK(first == kernels::dot(d.w, d.x));
  CHECK(!kernels::isa_name(a.isa).empty());
}
