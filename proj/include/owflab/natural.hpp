// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace owflab {

/// Arbitrary-precision unsigned integer.
///
/// Stored as little-endian 64-bit limbs with no high zero limbs, so two
/// Naturals are equal iff their limb vectors are equal. Zero has no limbs.
/// Values up to 256 bits live inline.
class Natural {
 public:
  using Limb = std::uint64_t;
  static constexpr unsigned kLimbBits = 64;

  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  /// Parses an unsigned digit string in base 10 or 16 (no prefix, no sign).
  /// Throws ParseError naming the first bad position.
  static Natural from_text(std::string_view text, int base = 10);
  static Natural from_limbs(std::vector<Limb> limbs);
  static Natural pow2(std::size_t k);

  /// Decimal, or lowercase hex without prefix. Zero renders as "0".
  std::string to_text(int base = 10) const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1u); }
  bool is_even() const noexcept { return !is_odd(); }

  std::size_t bit_length() const noexcept;
  std::size_t popcount() const noexcept;
  /// Number of trailing zero bits; 0 for zero.
  std::size_t trailing_zeros() const noexcept;
  bool test_bit(std::size_t i) const noexcept;
  void flip_bit(std::size_t i);

  /// Bits [lo, lo + width) as a Natural.
  Natural extract_bits(std::size_t lo, std::size_t width) const;

  bool fits_u64() const noexcept { return limbs_.size() <= 1; }
  /// Low 64 bits.
  std::uint64_t low_u64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }

  std::span<const Limb> limbs() const noexcept { return {limbs_.data(), limbs_.size()}; }

  Natural& operator+=(const Natural& rhs);
  /// Throws DomainError if rhs > *this.
  Natural& operator-=(const Natural& rhs);
  Natural& operator^=(const Natural& rhs);
  Natural& operator<<=(std::size_t k);
  Natural& operator>>=(std::size_t k);
  Natural& mul_small(Limb m);
  Natural& add_pow2(std::size_t k);
  /// Divides in place by `d` (non-zero), returning the remainder.
  Limb divmod_small(Limb d);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator^(Natural a, const Natural& b) { return a ^= b; }
  friend Natural operator<<(Natural a, std::size_t k) { return a <<= k; }
  friend Natural operator>>(Natural a, std::size_t k) { return a >>= k; }

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept;

 private:
  void trim() noexcept;

  boost::container::small_vector<Limb, 4> limbs_;
};

std::ostream& operator<<(std::ostream& os, const Natural& v);

}  // namespace owflab
