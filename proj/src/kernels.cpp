// SPDX-License-Identifier: Apache-2.0
#include "gfconj/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gfconj::kernels {

void axpy_scalar(std::uint16_t* dst, const std::uint16_t* src, std::size_t n,
                 std::uint16_t s, const Field& f) {
  if (s == 0) return;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = f.add_code(dst[i], f.mul_code(s, src[i]));
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Variant eligible_variant(const Field& f) {
#if defined(__x86_64__) || defined(__i386__)
  if (f.p() == 2 && f.q() <= 256) return Variant::Avx2Binary;
  if (f.k() == 1 && f.p() < 256) return Variant::Avx2Prime;
#else
  (void)f;
#endif
  return Variant::Scalar;
}

Variant select_variant(const Field& f) {
  const char* env = std::getenv("GFCONJ_KERNEL");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Variant::Scalar;
  if (!cpu_has_avx2()) return Variant::Scalar;
  return eligible_variant(f);
}

AxpyFn resolve(Variant v) {
  switch (v) {
#if defined(__x86_64__) || defined(__i386__)
    case Variant::Avx2Prime:
      return &axpy_avx2_prime;
    case Variant::Avx2Binary:
      return &axpy_avx2_binary;
#endif
    default:
      return &axpy_scalar;
  }
}

const char* name(Variant v) {
  switch (v) {
    case Variant::Avx2Prime:
      return "avx2-prime";
    case Variant::Avx2Binary:
      return "avx2-binary";
    default:
      return "scalar";
  }
}

}  // namespace gfconj::kernels
