#include <immintrin.h>

#include "kernels_impl.hpp"

namespace monocst::kernels::detail {

namespace {

// Lane-wise Kahan accumulator.
struct CompensatedVec {
  __m256d sum = _mm256_setzero_pd();
  __m256d carry = _mm256_setzero_pd();
  void add(__m256d x) {
    const __m256d y = _mm256_sub_pd(x, carry);
    const __m256d t = _mm256_add_pd(sum, y);
    carry = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
    sum = t;
  }
  // Lanes folded in fixed order through a scalar compensated sum.
  void fold(Compensated& even, Compensated& odd) const {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, carry);
    for (int lane = 0; lane < 4; ++lane) {
      Compensated& dst = (lane % 2 == 0) ? even : odd;
      dst.add(s[lane]);
      dst.add(-c[lane]);
    }
  }
};

// [w0, w0, w1, w1]
inline __m256d duplicate_pairs(const double* w) {
  const __m128d pair = _mm_loadu_pd(w);
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(pair), 0b01010000);
}

}  // namespace

double dot_avx2(const double* w, const double* x, std::size_t n) {
  CompensatedVec acc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc.add(_mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)));
  }
  Compensated even, odd;
  acc.fold(even, odd);
  Compensated total;
  total.add(even.sum);
  total.add(odd.sum);
  total.add(-(even.carry + odd.carry));
  for (; i < n; ++i) total.add(w[i] * x[i]);
  return total.sum;
}

cplx weighted_sum_avx2(const double* w, const cplx* v, std::size_t n) {
  const auto* vd = reinterpret_cast<const double*>(v);
  CompensatedVec acc;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc.add(_mm256_mul_pd(duplicate_pairs(w + i), _mm256_loadu_pd(vd + 2 * i)));
  }
  Compensated re, im;
  acc.fold(re, im);
  for (; i < n; ++i) {
    re.add(w[i] * v[i].real());
    im.add(w[i] * v[i].imag());
  }
  return {re.sum - re.carry, im.sum - im.carry};
}

cplx weighted_inner_avx2(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  // direct = [ar br, ai bi, ...], swapped = [ar bi, ai br, ...]
  CompensatedVec direct, swapped;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d wv = duplicate_pairs(w + i);
    const __m256d av = _mm256_loadu_pd(ad + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bd + 2 * i);
    const __m256d bsw = _mm256_permute_pd(bv, 0b0101);
    direct.add(_mm256_mul_pd(wv, _mm256_mul_pd(av, bv)));
    swapped.add(_mm256_mul_pd(wv, _mm256_mul_pd(av, bsw)));
  }
  Compensated d_even, d_odd, s_even, s_odd;
  direct.fold(d_even, d_odd);
  swapped.fold(s_even, s_odd);
  Compensated re, im;
  re.add(d_even.sum);
  re.add(d_odd.sum);
  re.add(-(d_even.carry + d_odd.carry));
  im.add(s_odd.sum);
  im.add(-s_even.sum);
  im.add(-(s_odd.carry - s_even.carry));
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re.add(w[i] * (ar * br + ai * bi));
    im.add(w[i] * (ai * br - ar * bi));
  }
  return {re.sum, im.sum};
}

}  // namespace monocst::kernels::detail
