// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "owflab/composition.hpp"
#include "owflab/natural.hpp"
#include "owflab/owf.hpp"

namespace owflab::analysis {

inline constexpr std::string_view kSchemaVersion = "owf-lab/1";

/// Identifier of the sampling procedure stored in every seeded report.
///
/// Engine: std::mt19937_64 seeded with the 64-bit seed. A k-bit value takes
/// ceil(k/64) consecutive outputs, least significant limb first, with the
/// top limb masked. A bounded index in [0, m) rejects raw outputs below
/// (2^64 mod m) and returns the output mod m.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/limbs-lsw-first/reject-mod";

/// Caps that guard against accidental exponential or huge runs.
struct Budget {
  std::uint64_t max_evaluations = std::uint64_t{1} << 24;
  std::size_t max_search_r = 16;

  /// Defaults, with OWFLAB_BUDGET (a decimal count) overriding max_evaluations.
  static Budget from_env();
};

struct ScanOptions {
  unsigned jobs = 1;
  Budget budget{};
  // Called from worker threads, serialized, with (done, total) evaluations.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform over [0, 2^bits).
  Natural bits(std::size_t bits);
  /// Uniform over [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct PreimageReport {
  Natural target;
  owf::OwfParams params;
  Natural lo;
  Natural hi;
  std::vector<Natural> preimages;  // ascending
  std::uint64_t evaluations = 0;
};

struct CensusReport {
  owf::OwfParams params;
  Natural lo;
  Natural hi;
  std::map<Natural, std::uint64_t> histogram;  // digest -> preimage count
  std::uint64_t evaluations = 0;
};

enum class AvalancheMode : std::uint8_t {
  kSingleBit,
  // Flips nothing; every sample must report zero changed bits.
  kControl,
};

struct AvalancheReport {
  owf::OwfParams params;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  AvalancheMode mode = AvalancheMode::kSingleBit;
  double mean_flip_ratio = 0.0;
  // Index i counts flips of digest bit i (bit 0 = least significant).
  std::vector<std::uint64_t> per_bit_flip_counts;
};

struct CostRow {
  std::size_t r = 0;
  std::uint64_t branching_ops = 0;  // step() calls per evaluation
  double search_tries_mean = 0.0;
  Natural path_count;  // 2^r
};

struct CostOptions {
  // Random x per r; nullopt enumerates every residue x in [1, 2^r].
  std::optional<std::uint64_t> samples_per_r;
  std::uint64_t seed = 1;
  composition::Order order = composition::Order::kLexicographic;
  Budget budget{};
};

struct CostProfile {
  std::vector<CostRow> rows;
  std::optional<std::uint64_t> samples_per_r;
  std::uint64_t seed = 0;
  composition::Order order = composition::Order::kLexicographic;
};

/// Every x in [lo, hi] whose digest equals `target`. Refuses ranges over
/// the evaluation budget before doing any work.
PreimageReport preimage_search(const owf::OwfOutput& target, const owf::OwfParams& params,
                               const Natural& lo, const Natural& hi, const ScanOptions& options = {});

/// Digest histogram over [lo, hi]; counts sum to the range size.
CensusReport collision_census(const owf::OwfParams& params, const Natural& lo, const Natural& hi,
                              const ScanOptions& options = {});

AvalancheReport avalanche(const owf::OwfParams& params, std::uint64_t samples, std::uint64_t seed,
                          AvalancheMode mode = AvalancheMode::kSingleBit);

CostProfile cost_profile(const std::vector<std::size_t>& r_values, const CostOptions& options = {});

}  // namespace owflab::analysis
