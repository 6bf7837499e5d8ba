#pragma once

#include "monocst/kernels.hpp"

namespace monocst::kernels::detail {

double dot_scalar(const double* w, const double* x, std::size_t n);
cplx weighted_sum_scalar(const double* w, const cplx* v, std::size_t n);
cplx weighted_inner_scalar(const double* w, const cplx* a, const cplx* b, std::size_t n);

#if defined(MONOCST_HAVE_AVX2)
double dot_avx2(const double* w, const double* x, std::size_t n);
cplx weighted_sum_avx2(const double* w, const cplx* v, std::size_t n);
cplx weighted_inner_avx2(const double* w, const cplx* a, const cplx* b, std::size_t n);
#endif

// Kahan step on a scalar accumulator.
struct Compensated {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace monocst::kernels::detail
