// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Batched small-width kernels for the branching iteration and the digest.
//
// Each kernel exists as a scalar reference and, on x86-64, an AVX2 variant
// that runs four 64-bit lanes with a branch-free step:
//
//   odd  = x & 1
//   x'   = (x >> 1) + ((0 - odd) & (x + 1))      // x/2  or  (3x+1)/2
//   path = (path << 1) | odd
//
// Kernels only apply when every iterate of every x < 2^n stays below 2^64;
// see fits_u64(). Inputs must be non-zero. The variants are bit-identical.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace owflab::kernels {

enum class Backend : std::uint8_t { kScalar, kAvx2 };

std::string_view backend_name(Backend b);
/// Compiled in and supported by the running CPU.
bool backend_available(Backend b);
/// Best available backend. OWFLAB_KERNEL=scalar forces the reference path.
Backend active_backend();

/// True iff r <= 64 and r steps from any x < 2^n cannot leave 64 bits.
bool fits_u64(std::size_t n, std::size_t r);

/// XOR of the r-bit chunks of v (1 <= r <= 64).
std::uint64_t fold_u64(std::uint64_t v, unsigned r);

void trajectory_batch(Backend b, std::span<const std::uint64_t> xs, unsigned r,
                      std::span<std::uint64_t> finals, std::span<std::uint64_t> paths);
void digest_batch(Backend b, std::span<const std::uint64_t> xs, unsigned r,
                  std::span<std::uint64_t> digests);

inline void trajectory_batch(std::span<const std::uint64_t> xs, unsigned r,
                             std::span<std::uint64_t> finals, std::span<std::uint64_t> paths) {
  trajectory_batch(active_backend(), xs, r, finals, paths);
}
inline void digest_batch(std::span<const std::uint64_t> xs, unsigned r,
                         std::span<std::uint64_t> digests) {
  digest_batch(active_backend(), xs, r, digests);
}

namespace scalar {
void trajectory_batch(std::span<const std::uint64_t> xs, unsigned r,
                      std::span<std::uint64_t> finals, std::span<std::uint64_t> paths);
void digest_batch(std::span<const std::uint64_t> xs, unsigned r, std::span<std::uint64_t> digests);
}  // namespace scalar

#if defined(OWFLAB_HAVE_AVX2)
namespace avx2 {
void trajectory_batch(std::span<const std::uint64_t> xs, unsigned r,
                      std::span<std::uint64_t> finals, std::span<std::uint64_t> paths);
void digest_batch(std::span<const std::uint64_t> xs, unsigned r, std::span<std::uint64_t> digests);
}  // namespace avx2
#endif

}  // namespace owflab::kernels
