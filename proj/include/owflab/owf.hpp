// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "owflab/natural.hpp"
#include "owflab/trajectory.hpp"

namespace owflab::owf {

/// Input width n and iteration count r (= digest width).
struct OwfParams {
  std::size_t n = 0;
  std::size_t r = 0;
  // Require bit_length(x) == n exactly instead of merely x < 2^n.
  bool strict_width = false;

  /// The canonical 512-bit input / 256-iteration profile.
  static OwfParams paper512() { return OwfParams{512, 256, false}; }
  /// Resolves a named profile ("paper512"); throws ParseError otherwise.
  static OwfParams profile(std::string_view name);

  /// Throws DomainError unless n >= 1 and r >= 1.
  void validate() const;

  friend bool operator==(const OwfParams&, const OwfParams&) = default;
};

struct OwfOutput {
  Natural digest;  // < 2^width
  std::size_t width = 0;

  /// Lowercase hex, zero-padded to ceil(width / 4) digits.
  std::string to_hex() const;

  friend bool operator==(const OwfOutput&, const OwfOutput&) = default;
};

struct OwfTrace {
  Natural input;
  Natural final;
  PathRecord path;
  Natural folded_input;
  Natural folded_final;
  Natural digest;
};

/// XOR of the consecutive `width`-bit chunks of v, least significant first.
/// For v = hi * 2^w + lo with lo, hi < 2^w this is hi ^ lo.
Natural fold(const Natural& v, std::size_t width);

/// Throws DomainError unless x lies in the input domain of `params`.
void check_input(const Natural& x, const OwfParams& params);

OwfOutput evaluate(const Natural& x, const OwfParams& params);
OwfTrace trace(const Natural& x, const OwfParams& params);

/// Forward recomputation check. Throws WidthError when y.width != params.r.
bool verify(const Natural& x, const OwfOutput& y, const OwfParams& params);

/// Renders a digest of the given width as zero-padded lowercase hex.
std::string digest_hex(const Natural& digest, std::size_t width);

}  // namespace owflab::owf
