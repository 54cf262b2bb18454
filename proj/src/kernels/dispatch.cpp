// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "owflab/errors.hpp"
#include "owflab/kernels.hpp"

namespace owflab::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(OWFLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* forced = std::getenv("OWFLAB_KERNEL")) {
    if (std::string_view(forced) == "scalar") return Backend::kScalar;
  }
  return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
}

void check_spans(std::size_t xs, std::size_t out, unsigned r) {
  if (out < xs) throw DomainError("kernel output span shorter than input span");
  if (r == 0 || r > 64) throw DomainError("kernel iteration count must be in [1, 64]");
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::kScalar || cpu_has_avx2(); }

Backend active_backend() {
  static const Backend backend = detect();
  return backend;
}

bool fits_u64(std::size_t n, std::size_t r) {
  if (n == 0 || n > 64 || r == 0 || r > 64) return false;
  // Largest reachable value after each step, starting from 2^n - 1.
  using u128 = unsigned __int128;
  u128 bound = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const u128 limit = ~std::uint64_t{0};
  for (std::size_t i = 0; i < r; ++i) {
    bound = (3 * bound + 1) / 2;
    if (bound > limit) return false;
  }
  return true;
}

void trajectory_batch(Backend b, std::span<const std::uint64_t> xs, unsigned r,
                      std::span<std::uint64_t> finals, std::span<std::uint64_t> paths) {
  check_spans(xs.size(), std::min(finals.size(), paths.size()), r);
#if defined(OWFLAB_HAVE_AVX2)
  if (b == Backend::kAvx2 && backend_available(b)) {
    avx2::trajectory_batch(xs, r, finals, paths);
    return;
  }
#endif
  scalar::trajectory_batch(xs, r, finals, paths);
}

void digest_batch(Backend b, std::span<const std::uint64_t> xs, unsigned r,
                  std::span<std::uint64_t> digests) {
  check_spans(xs.size(), digests.size(), r);
#if defined(OWFLAB_HAVE_AVX2)
  if (b == Backend::kAvx2 && backend_available(b)) {
    avx2::digest_batch(xs, r, digests);
    return;
  }
#endif
  scalar::digest_batch(xs, r, digests);
}

}  // namespace owflab::kernels
