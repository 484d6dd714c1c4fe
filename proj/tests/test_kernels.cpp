// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gfconj/kernels.hpp"

using namespace gfconj;

namespace {

void compare_variant(const Field& f, kernels::Variant v) {
  std::mt19937 rng(1234 + f.q());
  std::uniform_int_distribution<std::uint32_t> code(0, f.q() - 1);
  auto fn = kernels::resolve(v);
  for (std::size_t n : {0u, 1u, 7u, 15u, 16u, 17u, 31u, 32u, 33u, 100u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint16_t> src(n), dst(n);
      for (auto& x : src) x = std::uint16_t(code(rng));
      for (auto& x : dst) x = std::uint16_t(code(rng));
      const std::uint16_t s = std::uint16_t(code(rng));
      auto ref = dst;
      kernels::axpy_scalar(ref.data(), src.data(), n, s, f);
      fn(dst.data(), src.data(), n, s, f);
      CHECK(dst == ref);
    }
  }
}

}  // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::cpu_has_avx2()) {
    MESSAGE("CPU lacks AVX2; only the scalar path is exercised");
    return;
  }
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u, 251u})
    compare_variant(Field::get(p), kernels::Variant::Avx2Prime);
  for (std::uint32_t k : {1u, 2u, 3u, 4u, 8u})
    compare_variant(Field::get(2, k), kernels::Variant::Avx2Binary);
}

TEST_CASE("exhaustive scalar products for the binary kernel") {
  if (!kernels::cpu_has_avx2()) return;
  const Field& f = Field::get(2, 8);
  std::vector<std::uint16_t> src(256), dst(256, 0), ref(256, 0);
  for (unsigned i = 0; i < 256; ++i) src[i] = std::uint16_t(i);
  for (unsigned s = 0; s < 256; ++s) {
    std::fill(dst.begin(), dst.end(), 0);
    std::fill(ref.begin(), ref.end(), 0);
    kernels::axpy_avx2_binary(dst.data(), src.data(), 256, std::uint16_t(s), f);
    kernels::axpy_scalar(ref.data(), src.data(), 256, std::uint16_t(s), f);
    CHECK(dst == ref);
  }
}

TEST_CASE("selection") {
  CHECK(kernels::eligible_variant(Field::get(3, 2)) == kernels::Variant::Scalar);
  CHECK(kernels::eligible_variant(Field::get(257)) == kernels::Variant::Scalar);
  CHECK(kernels::eligible_variant(Field::get(2, 9)) == kernels::Variant::Scalar);
  CHECK(kernels::eligible_variant(Field::get(2, 2)) == kernels::Variant::Avx2Binary);
  CHECK(kernels::eligible_variant(Field::get(5)) == kernels::Variant::Avx2Prime);
}
