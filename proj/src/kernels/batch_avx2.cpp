// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2; only called after a runtime CPU check.

#include <immintrin.h>

#include "owflab/kernels.hpp"

namespace owflab::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline void run_lanes(__m256i& x, __m256i& path, unsigned r) {
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i zero = _mm256_setzero_si256();
  for (unsigned i = 0; i < r; ++i) {
    const __m256i odd = _mm256_and_si256(x, one);
    const __m256i mask = _mm256_sub_epi64(zero, odd);
    const __m256i half = _mm256_srli_epi64(x, 1);
    const __m256i up = _mm256_and_si256(mask, _mm256_add_epi64(x, one));
    x = _mm256_add_epi64(half, up);
    path = _mm256_or_si256(_mm256_slli_epi64(path, 1), odd);
  }
}

inline __m256i fold_lanes(__m256i v, unsigned r) {
  const __m256i mask = r >= 64 ? _mm256_set1_epi64x(-1)
                               : _mm256_set1_epi64x(static_cast<long long>((std::uint64_t{1} << r) - 1));
  const __m128i count = _mm_cvtsi32_si128(static_cast<int>(r));
  const unsigned chunks = (64 + r - 1) / r;
  __m256i acc = _mm256_setzero_si256();
  for (unsigned c = 0; c < chunks; ++c) {
    acc = _mm256_xor_si256(acc, _mm256_and_si256(v, mask));
    v = _mm256_srl_epi64(v, count);
  }
  return acc;
}

}  // namespace

void trajectory_batch(std::span<const std::uint64_t> xs, unsigned r,
                      std::span<std::uint64_t> finals, std::span<std::uint64_t> paths) {
  std::size_t i = 0;
  for (; i + kLanes <= xs.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + i));
    __m256i path = _mm256_setzero_si256();
    run_lanes(x, path, r);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(finals.data() + i), x);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(paths.data() + i), path);
  }
  if (i < xs.size()) {
    scalar::trajectory_batch(xs.subspan(i), r, finals.subspan(i), paths.subspan(i));
  }
}

void digest_batch(std::span<const std::uint64_t> xs, unsigned r, std::span<std::uint64_t> digests) {
  std::size_t i = 0;
  for (; i + kLanes <= xs.size(); i += kLanes) {
    const __m256i input = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + i));
    __m256i x = input;
    __m256i path = _mm256_setzero_si256();
    run_lanes(x, path, r);
    const __m256i digest =
        _mm256_xor_si256(_mm256_xor_si256(fold_lanes(input, r), fold_lanes(x, r)), path);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(digests.data() + i), digest);
  }
  if (i < xs.size()) scalar::digest_batch(xs.subspan(i), r, digests.subspan(i));
}

}  // namespace owflab::kernels::avx2
