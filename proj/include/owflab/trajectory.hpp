// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "owflab/natural.hpp"

namespace owflab {

/// Which half of the modified Collatz map fired: F is x/2, G is (3x+1)/2.
enum class Branch : std::uint8_t { F = 0, G = 1 };

inline char branch_letter(Branch b) { return b == Branch::F ? 'F' : 'G'; }

/// Ordered branch decisions; bit i is true iff iteration i took G.
class PathRecord {
 public:
  PathRecord() = default;
  explicit PathRecord(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t length() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void push_back(Branch b) { bits_.push_back(b == Branch::G); }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  /// Bits as a '0'/'1' string, first decision leftmost.
  std::string to_string() const;

  friend bool operator==(const PathRecord&, const PathRecord&) = default;

 private:
  std::vector<bool> bits_;
};

/// MSB-first: the first decision is the most significant of length() bits.
Natural path_to_natural(const PathRecord& path);

namespace trajectory {

struct StepRecord {
  Natural input;
  Branch branch;
  Natural output;
};

struct StepResult {
  Natural value;
  Branch branch;
};

struct RunOptions {
  bool record_steps = false;
};

struct TrajectoryResult {
  Natural final;
  PathRecord path;
  std::optional<std::vector<StepRecord>> steps;
  // Number of step() applications performed.
  std::uint64_t operations = 0;
};

/// One modified-Collatz step. Throws DomainError for x = 0.
StepResult step(const Natural& x);

/// Applies step() exactly r times, never stopping early at 1.
TrajectoryResult run(const Natural& x, std::size_t r, RunOptions options = {});

}  // namespace trajectory
}  // namespace owflab
