// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>

#include "owflab/natural.hpp"

namespace owflab {

/// Exact non-negative rational numerator / 2^exponent.
///
/// Always reduced: the numerator is odd, or the exponent is zero.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Natural integer)  // NOLINT(google-explicit-constructor)
      : numerator_(std::move(integer)) {}

  /// Builds numerator / 2^exponent and reduces it.
  static Dyadic from_parts(Natural numerator, std::size_t exponent);

  const Natural& numerator() const noexcept { return numerator_; }
  std::size_t denominator_exponent() const noexcept { return exponent_; }
  bool is_integer() const noexcept { return exponent_ == 0; }

  /// In-place v / 2 and (3v + 1) / 2.
  Dyadic& halve();
  Dyadic& triple_plus_one_half();

  /// "p/2^k", or just "p" for integers.
  std::string to_text(int base = 10) const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;

 private:
  void reduce();

  Natural numerator_;
  std::size_t exponent_ = 0;
};

/// v / 2
Dyadic dyadic_halve(Dyadic v);
/// (3v + 1) / 2
Dyadic dyadic_3x1_half(Dyadic v);

std::ostream& operator<<(std::ostream& os, const Dyadic& v);

}  // namespace owflab
