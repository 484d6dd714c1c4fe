// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

#include "gfconj/gf.hpp"

// Row kernels for dst[i] += s * src[i] over F_q codes. The scalar version is
// the reference; the AVX2 ones cover prime fields with p < 256 and binary
// fields with q <= 256, and are picked at field construction when the CPU
// supports them. Setting GFCONJ_KERNEL=scalar forces the reference path.
namespace gfconj::kernels {

enum class Variant { Scalar, Avx2Prime, Avx2Binary };

void axpy_scalar(std::uint16_t* dst, const std::uint16_t* src, std::size_t n,
                 std::uint16_t s, const Field& f);
void axpy_avx2_prime(std::uint16_t* dst, const std::uint16_t* src,
                     std::size_t n, std::uint16_t s, const Field& f);
void axpy_avx2_binary(std::uint16_t* dst, const std::uint16_t* src,
                      std::size_t n, std::uint16_t s, const Field& f);

bool cpu_has_avx2();
// Best variant the field qualifies for, ignoring the CPU and environment.
Variant eligible_variant(const Field& f);
Variant select_variant(const Field& f);
AxpyFn resolve(Variant v);
const char* name(Variant v);

}  // namespace gfconj::kernels
