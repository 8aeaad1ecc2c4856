#include "annni/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace annni::kernels {

#ifdef ANNNI_HAVE_AVX2
const Ops* avx2_impl();
#endif

const Ops* avx2() {
#ifdef ANNNI_HAVE_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_impl();
#endif
  return nullptr;
}

const Ops& active() {
  static const Ops* selected = [] {
    if (const char* env = std::getenv("ANNNI_KERNELS")) {
      if (std::strcmp(env, "scalar") == 0) return &scalar();
      if (std::strcmp(env, "avx2") == 0 && avx2() != nullptr) return avx2();
    }
    if (const Ops* simd = avx2()) return simd;
    return &scalar();
  }();
  return *selected;
}

}  // namespace annni::kernels
