// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/kernels.hpp"

namespace owflab::kernels {

std::uint64_t fold_u64(std::uint64_t v, unsigned r) {
  if (r >= 64) return v;
  const std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  std::uint64_t acc = 0;
  for (; v != 0; v >>= r) acc ^= v & mask;
  return acc;
}

namespace scalar {

namespace {

inline void run_one(std::uint64_t x, unsigned r, std::uint64_t& final_out, std::uint64_t& path_out) {
  std::uint64_t path = 0;
  for (unsigned i = 0; i < r; ++i) {
    const std::uint64_t odd = x & 1u;
    x = (x >> 1) + ((0 - odd) & (x + 1));
    path = (path << 1) | odd;
  }
  final_out = x;
  path_out = path;
}

}  // namespace

void trajectory_batch(std::span<const std::uint64_t> xs, unsigned r,
                      std::span<std::uint64_t> finals, std::span<std::uint64_t> paths) {
  for (std::size_t i = 0; i < xs.size(); ++i) run_one(xs[i], r, finals[i], paths[i]);
}

void digest_batch(std::span<const std::uint64_t> xs, unsigned r, std::span<std::uint64_t> digests) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::uint64_t final_value = 0;
    std::uint64_t path = 0;
    run_one(xs[i], r, final_value, path);
    digests[i] = fold_u64(xs[i], r) ^ fold_u64(final_value, r) ^ path;
  }
}

}  // namespace scalar
}  // namespace owflab::kernels
