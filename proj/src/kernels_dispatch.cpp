#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "mothernet/kernels.hpp"

namespace mothernet::kernels {

#if MOTHERNET_WITH_AVX2
const KernelSet& avx2_kernel_table();
#endif

const KernelSet* avx2_kernels() {
#if MOTHERNET_WITH_AVX2
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (supported) return &avx2_kernel_table();
#endif
  return nullptr;
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* pinned = std::getenv("MOTHERNET_SIMD");
    if (pinned != nullptr && std::strcmp(pinned, "scalar") == 0) return &scalar_kernels();
    if (pinned != nullptr && std::strcmp(pinned, "avx2") == 0) {
      if (avx2_kernels() == nullptr) throw std::runtime_error("MOTHERNET_SIMD=avx2 but AVX2 is unavailable");
      return avx2_kernels();
    }
    return avx2_kernels() != nullptr ? avx2_kernels() : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace mothernet::kernels
