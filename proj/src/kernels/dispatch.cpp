#include "q2sat/kernels.hpp"

namespace q2sat::kernels {
namespace {

constexpr KernelTable kScalar{Backend::Scalar, &scalar::apply_pair, &scalar::pair_density};
#if defined(Q2SAT_HAVE_AVX2)
constexpr KernelTable kAvx2{Backend::Avx2, &avx2::apply_pair, &avx2::pair_density};
#endif

bool cpu_has_avx2() {
#if defined(Q2SAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

const KernelTable& table(Backend b) {
#if defined(Q2SAT_HAVE_AVX2)
  if (b == Backend::Avx2 && backend_available(Backend::Avx2)) return kAvx2;
#endif
  (void)b;
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& chosen =
      backend_available(Backend::Avx2) ? table(Backend::Avx2) : table(Backend::Scalar);
  return chosen;
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace q2sat::kernels
