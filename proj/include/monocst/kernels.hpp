#pragma once

#include <complex>
#include <span>
#include <string_view>

// Reduction kernels behind every quadrature sum. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant chosen at first use. All variants
// use compensated (Kahan) accumulation, so for a fixed variant the result is
// bit-reproducible; variants agree to a few ulps of the absolute sum.
namespace monocst::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* w, const double* x, std::size_t n);
  cplx (*weighted_sum)(const double* w, const cplx* v, std::size_t n);
  // sum_i w_i a_i conj(b_i)
  cplx (*weighted_inner)(const double* w, const cplx* a, const cplx* b, std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the binary was built without the variant.
const KernelTable* avx2_table();

// Selected once: AVX2 when the CPU supports it, unless MONOCST_SIMD=scalar.
const KernelTable& active();
std::string_view isa_name(Isa isa);

inline double dot(std::span<const double> w, std::span<const double> x) {
  return active().dot(w.data(), x.data(), w.size());
}
inline cplx weighted_sum(std::span<const double> w, std::span<const cplx> v) {
  return active().weighted_sum(w.data(), v.data(), w.size());
}
inline cplx weighted_inner(std::span<const double> w, std::span<const cplx> a,
                           std::span<const cplx> b) {
  return active().weighted_inner(w.data(), a.data(), b.data(), w.size());
}

}  // namespace monocst::kernels
