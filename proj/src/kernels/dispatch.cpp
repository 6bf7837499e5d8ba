#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace monocst::kernels {

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, detail::dot_scalar, detail::weighted_sum_scalar,
                                 detail::weighted_inner_scalar};
  return table;
}

const KernelTable* avx2_table() {
#if defined(MONOCST_HAVE_AVX2)
  static const KernelTable table{Isa::Avx2, detail::dot_avx2, detail::weighted_sum_avx2,
                                 detail::weighted_inner_avx2};
  return &table;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  const char* forced = std::getenv("MONOCST_SIMD");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_table();
#if defined(MONOCST_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return *avx2_table();
#endif
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace monocst::kernels
