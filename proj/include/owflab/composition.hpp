// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "owflab/dyadic.hpp"
#include "owflab/errors.hpp"
#include "owflab/natural.hpp"
#include "owflab/trajectory.hpp"

namespace owflab::composition {

/// A word over {F, G}. steps()[0] is applied FIRST.
///
/// Note the reading order: "FG" means f, then g, so FG(3) = g(f(3)) = 11/4.
/// This is the reverse of the usual right-to-left reading of f∘g.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<Branch> steps) : steps_(std::move(steps)) {}

  /// Decodes an r-bit index: F = 0, G = 1, steps[0] is the MSB.
  static Composition from_index(std::uint64_t index, std::size_t r);
  /// Parses a word such as "FGG" (case-insensitive).
  static Composition from_string(std::string_view word);
  static Composition from_path(const PathRecord& path);

  std::size_t length() const noexcept { return steps_.size(); }
  const std::vector<Branch>& steps() const noexcept { return steps_; }
  std::uint64_t index() const;
  std::string to_string() const;
  PathRecord to_path() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<Branch> steps_;
};

enum class Order : std::uint8_t {
  kLexicographic,
  // Ascending over the first half, then the second half descending, as in the
  // printed tables: r=2 gives FF, FG, GG, GF.
  kPaperTable,
};

std::string_view order_name(Order order);
Order order_from_name(std::string_view name);

/// Composition index of the `position`-th (0-based) entry of an order.
std::uint64_t enumeration_index(std::uint64_t position, std::size_t r, Order order);

/// Exact dyadic value of applying c to x, leftmost step first.
Dyadic apply(const Composition& c, const Natural& x);

/// Largest r for which enumerate/search will index compositions.
inline constexpr std::size_t kMaxIndexableR = 63;

/// Lazily yields all 2^r compositions exactly once, in the given order.
inline auto enumerate(std::size_t r, Order order) {
  if (r == 0 || r > kMaxIndexableR) {
    throw DomainError("enumerate needs 1 <= r <= " + std::to_string(kMaxIndexableR));
  }
  return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << r) |
         std::views::transform([r, order](std::uint64_t pos) {
           return Composition::from_index(enumeration_index(pos, r, order), r);
         });
}

struct SearchReport {
  Composition found;
  Natural result;
  // 1-based position of `found` in the enumeration.
  std::uint64_t tries = 0;
  Order order = Order::kLexicographic;
};

/// Tries compositions in enumeration order until one yields a whole number.
SearchReport search(const Natural& x, std::size_t r, Order order = Order::kLexicographic);

inline constexpr std::size_t kOracleMaxR = 20;

/// Every composition of length r (r <= kOracleMaxR) whose value at x is a
/// whole number, by full enumeration. Does not inspect parity.
std::vector<Composition> integral_compositions(const Natural& x, std::size_t r);

/// apply(c, x) == (multiplier * x + offset) / 2^shift for every x.
struct AffineForm {
  Natural multiplier;  // 3^(number of G steps)
  Natural offset;
  std::size_t shift = 0;
};

AffineForm affine_form(const Composition& c);

}  // namespace owflab::composition
