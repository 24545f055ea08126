#include "hqs/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hqs::kernels {

bool avx2_available() {
#if defined(HQS_HAVE_AVX2_TU) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& ops() {
  static const Ops* chosen = [] {
    const char* force = std::getenv("HQS_KERNEL");
    if (force != nullptr) {
      if (std::strcmp(force, "scalar") == 0) return &scalar_ops();
      if (std::strcmp(force, "avx2") == 0 && avx2_available())
        return &avx2_ops();
    }
    return avx2_available() ? &avx2_ops() : &scalar_ops();
  }();
  return *chosen;
}

}  // namespace hqs::kernels
