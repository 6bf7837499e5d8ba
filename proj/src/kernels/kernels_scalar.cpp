#include "kernels_impl.hpp"

namespace monocst::kernels::detail {

double dot_scalar(const double* w, const double* x, std::size_t n) {
  Compensated acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(w[i] * x[i]);
  return acc.sum;
}

cplx weighted_sum_scalar(const double* w, const cplx* v, std::size_t n) {
  Compensated re, im;
  for (std::size_t i = 0; i < n; ++i) {
    re.add(w[i] * v[i].real());
    im.add(w[i] * v[i].imag());
  }
  return {re.sum, im.sum};
}

cplx weighted_inner_scalar(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  Compensated re, im;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re.add(w[i] * (ar * br + ai * bi));
    im.add(w[i] * (ai * br - ar * bi));
  }
  return {re.sum, im.sum};
}

}  // namespace monocst::kernels::detail
