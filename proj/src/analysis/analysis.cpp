// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "owflab/errors.hpp"
#include "owflab/kernels.hpp"
#include "owflab/trajectory.hpp"

namespace owflab::analysis {

namespace {

constexpr std::uint64_t kBlock = 4096;

struct ScanPlan {
  owf::OwfParams params;
  Natural lo;
  std::uint64_t count = 0;
  bool use_kernel = false;
};

ScanPlan plan_scan(const owf::OwfParams& params, const Natural& lo, const Natural& hi,
                   const Budget& budget) {
  params.validate();
  if (lo > hi) {
    throw DomainError("scan range is empty or inverted: lo = " + lo.to_text() + " > hi = " +
                      hi.to_text());
  }
  owf::check_input(lo, params);
  owf::check_input(hi, params);

  const Natural span = hi - lo + Natural(1);
  const std::uint64_t required =
      span.fits_u64() ? span.low_u64() : std::numeric_limits<std::uint64_t>::max();
  if (!span.fits_u64() || required > budget.max_evaluations) {
    throw BudgetError("scan needs " + span.to_text() + " evaluations, budget is " +
                          std::to_string(budget.max_evaluations) +
                          " (raise with --budget or OWFLAB_BUDGET)",
                      required);
  }
  return ScanPlan{params, lo, required, kernels::fits_u64(params.n, params.r)};
}

// Calls f(offset, digest) for each x = lo + offset with offset in
// [begin, begin + len).
template <class F>
void for_each_digest(const ScanPlan& plan, std::uint64_t begin, std::uint64_t len, F&& f) {
  if (plan.use_kernel) {
    std::vector<std::uint64_t> xs(len);
    std::vector<std::uint64_t> digests(len);
    const std::uint64_t base = plan.lo.low_u64() + begin;
    for (std::uint64_t j = 0; j < len; ++j) xs[j] = base + j;
    kernels::digest_batch(xs, static_cast<unsigned>(plan.params.r), digests);
    for (std::uint64_t j = 0; j < len; ++j) f(begin + j, Natural(digests[j]));
    return;
  }
  Natural x = plan.lo + Natural(begin);
  for (std::uint64_t j = 0; j < len; ++j) {
    f(begin + j, owf::evaluate(x, plan.params).digest);
    x += Natural(1);
  }
}

// Runs process(block_index, begin, len, state) over fixed-size blocks on
// `jobs` threads. Per-block states come back in block order, so the merged
// result does not depend on scheduling.
template <class State, class Process>
std::vector<State> run_blocks(std::uint64_t count, const ScanOptions& options, Process process) {
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<State> states(blocks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
        const std::uint64_t begin = b * kBlock;
        const std::uint64_t len = std::min(kBlock, count - begin);
        process(begin, len, states[b]);
        const std::uint64_t now = done.fetch_add(len) + len;
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(now, count);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(blocks);
    }
  };

  const unsigned jobs =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.jobs, 1, std::max<std::uint64_t>(blocks, 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("OWFLAB_BUDGET")) {
    Natural v = Natural::from_text(env, 10);
    if (!v.fits_u64()) throw DomainError("OWFLAB_BUDGET does not fit in 64 bits");
    b.max_evaluations = v.low_u64();
  }
  return b;
}

Natural Sampler::bits(std::size_t bits) {
  std::vector<Natural::Limb> limbs((bits + 63) / 64);
  for (auto& l : limbs) l = engine_();
  if (bits % 64 != 0) limbs.back() &= (Natural::Limb{1} << (bits % 64)) - 1;
  return Natural::from_limbs(std::move(limbs));
}

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("sampling bound must be >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t w = engine_();
    if (w >= threshold) return w % bound;
  }
}

PreimageReport preimage_search(const owf::OwfOutput& target, const owf::OwfParams& params,
                               const Natural& lo, const Natural& hi, const ScanOptions& options) {
  if (target.width != params.r) {
    throw WidthError("target digest width " + std::to_string(target.width) +
                     " does not match r = " + std::to_string(params.r));
  }
  if (target.digest.bit_length() > params.r) {
    throw DomainError("target digest does not fit in r = " + std::to_string(params.r) + " bits");
  }
  const ScanPlan plan = plan_scan(params, lo, hi, options.budget);

  auto blocks = run_blocks<std::vector<std::uint64_t>>(
      plan.count, options,
      [&](std::uint64_t begin, std::uint64_t len, std::vector<std::uint64_t>& hits) {
        for_each_digest(plan, begin, len, [&](std::uint64_t offset, const Natural& digest) {
          if (digest == target.digest) hits.push_back(offset);
        });
      });

  PreimageReport report{target.digest, params, lo, hi, {}, plan.count};
  for (const auto& hits : blocks) {
    for (std::uint64_t offset : hits) report.preimages.push_back(lo + Natural(offset));
  }
  return report;
}

CensusReport collision_census(const owf::OwfParams& params, const Natural& lo, const Natural& hi,
                              const ScanOptions& options) {
  const ScanPlan plan = plan_scan(params, lo, hi, options.budget);

  auto blocks = run_blocks<std::map<Natural, std::uint64_t>>(
      plan.count, options,
      [&](std::uint64_t begin, std::uint64_t len, std::map<Natural, std::uint64_t>& counts) {
        for_each_digest(plan, begin, len,
                        [&](std::uint64_t, const Natural& digest) { ++counts[digest]; });
      });

  CensusReport report{params, lo, hi, {}, plan.count};
  for (const auto& counts : blocks) {
    for (const auto& [digest, n] : counts) report.histogram[digest] += n;
  }
  return report;
}

AvalancheReport avalanche(const owf::OwfParams& params, std::uint64_t samples, std::uint64_t seed,
                          AvalancheMode mode) {
  params.validate();
  if (samples == 0) throw DomainError("avalanche needs samples >= 1");
  if (mode == AvalancheMode::kSingleBit && params.n < 2) {
    throw DomainError("single-bit avalanche needs n >= 2 so a flipped input stays in the domain");
  }

  auto in_domain = [&](const Natural& v) {
    return !v.is_zero() && (!params.strict_width || v.bit_length() == params.n);
  };

  Sampler sampler(seed);
  AvalancheReport report;
  report.params = params;
  report.samples = samples;
  report.seed = seed;
  report.mode = mode;
  report.per_bit_flip_counts.assign(params.r, 0);

  std::uint64_t total_flips = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Natural x;
    do {
      x = sampler.bits(params.n);
    } while (!in_domain(x));

    Natural flipped = x;
    if (mode == AvalancheMode::kSingleBit) {
      do {
        flipped = x;
        flipped.flip_bit(sampler.below(params.n));
      } while (!in_domain(flipped));
    }

    const Natural diff =
        owf::evaluate(x, params).digest ^ owf::evaluate(flipped, params).digest;
    total_flips += diff.popcount();
    for (std::size_t i = 0; i < params.r; ++i) {
      if (diff.test_bit(i)) ++report.per_bit_flip_counts[i];
    }
  }
  report.mean_flip_ratio =
      static_cast<double>(total_flips) / (static_cast<double>(samples) * static_cast<double>(params.r));
  return report;
}

CostProfile cost_profile(const std::vector<std::size_t>& r_values, const CostOptions& options) {
  if (r_values.empty()) throw DomainError("cost profile needs at least one r value");
  for (std::size_t r : r_values) {
    if (r == 0) throw DomainError("iteration count r must be >= 1");
    if (r > options.budget.max_search_r) {
      throw BudgetError("exhaustive search at r = " + std::to_string(r) + " exceeds the cap r <= " +
                            std::to_string(options.budget.max_search_r),
                        r);
    }
  }
  if (options.samples_per_r && *options.samples_per_r == 0) {
    throw DomainError("samples per r must be >= 1 (omit it for full residue enumeration)");
  }

  CostProfile profile;
  profile.samples_per_r = options.samples_per_r;
  profile.seed = options.seed;
  profile.order = options.order;

  Sampler sampler(options.seed);
  for (std::size_t r : r_values) {
    const std::uint64_t evaluations =
        options.samples_per_r ? *options.samples_per_r : (std::uint64_t{1} << r);
    std::uint64_t ops = 0;
    std::uint64_t tries = 0;
    for (std::uint64_t i = 0; i < evaluations; ++i) {
      const Natural x = options.samples_per_r ? sampler.bits(r) + Natural(1) : Natural(i + 1);
      ops += trajectory::run(x, r).operations;
      tries += composition::search(x, r, options.order).tries;
    }
    profile.rows.push_back(CostRow{
        r, ops / evaluations,
        static_cast<double>(tries) / static_cast<double>(evaluations), Natural::pow2(r)});
  }
  return profile;
}

}  // namespace owflab::analysis
