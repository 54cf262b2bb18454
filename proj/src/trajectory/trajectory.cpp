// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/trajectory.hpp"

#include "owflab/errors.hpp"

namespace owflab {

std::string PathRecord::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

Natural path_to_natural(const PathRecord& path) {
  Natural out;
  const std::size_t r = path.length();
  for (std::size_t i = 0; i < r; ++i) {
    if (path[i]) out.flip_bit(r - 1 - i);
  }
  return out;
}

namespace trajectory {

StepResult step(const Natural& x) {
  if (x.is_zero()) throw DomainError("collatz step is undefined for x = 0");
  if (x.is_even()) return {x >> 1, Branch::F};
  Natural next = x;
  next.mul_small(3);
  next += Natural(1);
  next >>= 1;
  return {std::move(next), Branch::G};
}

TrajectoryResult run(const Natural& x, std::size_t r, RunOptions options) {
  if (x.is_zero()) throw DomainError("trajectory input must be >= 1, got 0");
  if (r == 0) throw DomainError("iteration count r must be >= 1");

  TrajectoryResult result;
  if (options.record_steps) {
    result.steps.emplace();
    result.steps->reserve(r);
  }
  Natural current = x;
  for (std::size_t i = 0; i < r; ++i) {
    StepResult s = step(current);
    ++result.operations;
    result.path.push_back(s.branch);
    if (result.steps) result.steps->push_back({current, s.branch, s.value});
    current = std::move(s.value);
  }
  result.final = std::move(current);
  return result;
}

}  // namespace trajectory
}  // namespace owflab
