// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/dyadic.hpp"

#include <algorithm>
#include <ostream>

namespace owflab {

Dyadic Dyadic::from_parts(Natural numerator, std::size_t exponent) {
  Dyadic d;
  d.numerator_ = std::move(numerator);
  d.exponent_ = exponent;
  d.reduce();
  return d;
}

void Dyadic::reduce() {
  if (numerator_.is_zero()) {
    exponent_ = 0;
    return;
  }
  std::size_t shift = std::min(numerator_.trailing_zeros(), exponent_);
  numerator_ >>= shift;
  exponent_ -= shift;
}

std::string Dyadic::to_text(int base) const {
  std::string out = numerator_.to_text(base);
  if (exponent_ != 0) out += "/2^" + std::to_string(exponent_);
  return out;
}

Dyadic& Dyadic::halve() {
  // An odd numerator stays odd; only an integer can lose a factor of two.
  if (exponent_ == 0 && numerator_.is_even()) {
    numerator_ >>= 1;
  } else {
    ++exponent_;
  }
  return *this;
}

Dyadic& Dyadic::triple_plus_one_half() {
  // (3p/2^k + 1) / 2 = (3p + 2^k) / 2^(k+1)
  numerator_.mul_small(3);
  numerator_.add_pow2(exponent_);
  ++exponent_;
  reduce();
  return *this;
}

Dyadic dyadic_halve(Dyadic v) { return std::move(v.halve()); }

Dyadic dyadic_3x1_half(Dyadic v) { return std::move(v.triple_plus_one_half()); }

std::ostream& operator<<(std::ostream& os, const Dyadic& v) { return os << v.to_text(); }

}  // namespace owflab
