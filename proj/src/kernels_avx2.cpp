// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "gfconj/kernels.hpp"

namespace gfconj::kernels {

namespace {
constexpr std::size_t kLanes = 16;
}

// Products s*src < p^2 < 2^16 fit a u16 lane. Barrett with m = floor(2^16/p)
// leaves r in [0, 2p), and min(r, r - p) finishes the reduction because the
// wrapped difference is larger than r whenever r < p.
void axpy_avx2_prime(std::uint16_t* dst, const std::uint16_t* src,
                     std::size_t n, std::uint16_t s, const Field& f) {
  if (s == 0) return;
  const std::uint16_t p = std::uint16_t(f.p());
  const std::uint16_t m = std::uint16_t(65536u / p);
  const __m256i vp = _mm256_set1_epi16(std::int16_t(p));
  const __m256i vm = _mm256_set1_epi16(std::int16_t(m));
  const __m256i vs = _mm256_set1_epi16(std::int16_t(s));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i prod = _mm256_mullo_epi16(x, vs);
    __m256i qt = _mm256_mulhi_epu16(prod, vm);
    __m256i r = _mm256_sub_epi16(prod, _mm256_mullo_epi16(qt, vp));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, vp));
    __m256i sum = _mm256_add_epi16(d, r);
    sum = _mm256_min_epu16(sum, _mm256_sub_epi16(sum, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), sum);
  }
  for (; i < n; ++i)
    dst[i] = f.add_code(dst[i], f.mul_code(s, src[i]));
}

// Multiplication by s is F_2-linear on codes, so s*v = lo[v & 15] ^ hi[v >> 4]
// with two 16-entry byte tables. Codes are below 256, so the high byte of each
// lane indexes entry 0, which is 0 in both tables.
void axpy_avx2_binary(std::uint16_t* dst, const std::uint16_t* src,
                      std::size_t n, std::uint16_t s, const Field& f) {
  if (s == 0) return;
  alignas(16) std::uint8_t lo[16];
  alignas(16) std::uint8_t hi[16];
  for (unsigned j = 0; j < 16; ++j) {
    lo[j] = j < f.q() ? std::uint8_t(f.mul_code(s, std::uint16_t(j))) : 0;
    hi[j] = (j << 4) < f.q() ? std::uint8_t(f.mul_code(s, std::uint16_t(j << 4)))
                             : 0;
  }
  const __m256i tlo = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(lo)));
  const __m256i thi = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(hi)));
  const __m256i nib = _mm256_set1_epi8(0x0f);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i l = _mm256_shuffle_epi8(tlo, _mm256_and_si256(x, nib));
    __m256i h = _mm256_shuffle_epi8(
        thi, _mm256_and_si256(_mm256_srli_epi16(x, 4), nib));
    d = _mm256_xor_si256(d, _mm256_xor_si256(l, h));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  for (; i < n; ++i)
    dst[i] = f.add_code(dst[i], f.mul_code(s, src[i]));
}

}  // namespace gfconj::kernels
