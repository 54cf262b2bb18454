// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/natural.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <utility>

#include "owflab/errors.hpp"

namespace owflab {

namespace {

using u128 = unsigned __int128;

// Largest powers of the base that fit in a limb, used for chunked
// conversion.
constexpr Natural::Limb kDecChunk = 10000000000000000000ull;  // 10^19
constexpr int kDecChunkDigits = 19;

int digit_value(char c, int base) {
  int v = -1;
  if (c >= '0' && c <= '9') {
    v = c - '0';
  } else if (c >= 'a' && c <= 'f') {
    v = c - 'a' + 10;
  } else if (c >= 'A' && c <= 'F') {
    v = c - 'A' + 10;
  }
  return v < base ? v : -1;
}

}  // namespace

Natural::Natural(std::uint64_t v) {
  if (v != 0) limbs_.push_back(v);
}

Natural Natural::from_limbs(std::vector<Limb> limbs) {
  Natural n;
  n.limbs_.assign(limbs.begin(), limbs.end());
  n.trim();
  return n;
}

Natural Natural::pow2(std::size_t k) {
  Natural n;
  n.limbs_.assign(k / kLimbBits + 1, 0);
  n.limbs_.back() = Limb{1} << (k % kLimbBits);
  return n;
}

Natural Natural::from_text(std::string_view text, int base) {
  if (base != 10 && base != 16) {
    throw ParseError("unsupported base " + std::to_string(base), 0);
  }
  if (text.empty()) {
    throw ParseError("empty digit string", 0);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (digit_value(text[i], base) < 0) {
      throw ParseError("invalid base-" + std::to_string(base) + " digit '" +
                           std::string(1, text[i]) + "' at position " + std::to_string(i),
                       i);
    }
  }

  Natural out;
  if (base == 16) {
    // Consume 16 hex digits per limb from the least significant end.
    std::size_t end = text.size();
    while (end > 0) {
      std::size_t begin = end >= 16 ? end - 16 : 0;
      Limb limb = 0;
      for (std::size_t i = begin; i < end; ++i) {
        limb = (limb << 4) | static_cast<Limb>(digit_value(text[i], 16));
      }
      out.limbs_.push_back(limb);
      end = begin;
    }
    out.trim();
    return out;
  }

  std::size_t head = text.size() % kDecChunkDigits;
  if (head == 0) head = kDecChunkDigits;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = pos == 0 ? head : kDecChunkDigits;
    Limb chunk = 0;
    Limb scale = 1;
    for (std::size_t i = pos; i < pos + len; ++i) {
      chunk = chunk * 10 + static_cast<Limb>(text[i] - '0');
      scale *= 10;
    }
    out.mul_small(scale);
    out += Natural(chunk);
    pos += len;
  }
  return out;
}

std::string Natural::to_text(int base) const {
  if (is_zero()) return "0";
  std::string out;
  if (base == 16) {
    static constexpr char kHex[] = "0123456789abcdef";
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      Limb limb = limbs_[i];
      bool top = i + 1 == limbs_.size();
      for (int d = 0; d < 16 && (!top || limb != 0); ++d) {
        out.push_back(kHex[limb & 0xf]);
        limb >>= 4;
      }
    }
  } else {
    Natural rest = *this;
    while (!rest.is_zero()) {
      Limb chunk = rest.divmod_small(kDecChunk);
      for (int d = 0; d < kDecChunkDigits && (!rest.is_zero() || chunk != 0); ++d) {
        out.push_back(static_cast<char>('0' + chunk % 10));
        chunk /= 10;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t Natural::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * kLimbBits + std::bit_width(limbs_.back());
}

std::size_t Natural::popcount() const noexcept {
  std::size_t total = 0;
  for (Limb l : limbs_) total += static_cast<std::size_t>(std::popcount(l));
  return total;
}

std::size_t Natural::trailing_zeros() const noexcept {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) return i * kLimbBits + std::countr_zero(limbs_[i]);
  }
  return 0;
}

bool Natural::test_bit(std::size_t i) const noexcept {
  std::size_t limb = i / kLimbBits;
  return limb < limbs_.size() && ((limbs_[limb] >> (i % kLimbBits)) & 1u);
}

void Natural::flip_bit(std::size_t i) {
  std::size_t limb = i / kLimbBits;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] ^= Limb{1} << (i % kLimbBits);
  trim();
}

Natural Natural::extract_bits(std::size_t lo, std::size_t width) const {
  if (width == 0 || lo >= bit_length()) return Natural{};
  Natural out = *this >> lo;
  std::size_t keep = width / kLimbBits + (width % kLimbBits != 0);
  if (out.limbs_.size() > keep) out.limbs_.resize(keep);
  if (width % kLimbBits != 0 && out.limbs_.size() == keep) {
    out.limbs_.back() &= (Limb{1} << (width % kLimbBits)) - 1;
  }
  out.trim();
  return out;
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  Limb carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    Limb b = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
    if (b == 0 && carry == 0 && i >= rhs.limbs_.size()) break;
    u128 s = static_cast<u128>(limbs_[i]) + b + carry;
    limbs_[i] = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw DomainError("natural subtraction would go negative");
  Limb borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    Limb b = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
    if (b == 0 && borrow == 0 && i >= rhs.limbs_.size()) break;
    Limb cur = limbs_[i];
    Limb diff = cur - b - borrow;
    borrow = (cur < b || (cur == b && borrow != 0)) ? 1 : 0;
    limbs_[i] = diff;
  }
  trim();
  return *this;
}

Natural& Natural::operator^=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < rhs.limbs_.size(); ++i) limbs_[i] ^= rhs.limbs_[i];
  trim();
  return *this;
}

Natural& Natural::operator<<=(std::size_t k) {
  if (is_zero() || k == 0) return *this;
  std::size_t whole = k / kLimbBits;
  unsigned part = static_cast<unsigned>(k % kLimbBits);
  if (part != 0) {
    Limb carry = 0;
    for (Limb& l : limbs_) {
      Limb next = l >> (kLimbBits - part);
      l = (l << part) | carry;
      carry = next;
    }
    if (carry != 0) limbs_.push_back(carry);
  }
  limbs_.insert(limbs_.begin(), whole, 0);
  return *this;
}

Natural& Natural::operator>>=(std::size_t k) {
  std::size_t whole = k / kLimbBits;
  if (whole >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
  unsigned part = static_cast<unsigned>(k % kLimbBits);
  if (part != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      Limb hi = i + 1 < limbs_.size() ? limbs_[i + 1] << (kLimbBits - part) : 0;
      limbs_[i] = (limbs_[i] >> part) | hi;
    }
  }
  trim();
  return *this;
}

Natural& Natural::mul_small(Limb m) {
  if (m == 0) {
    limbs_.clear();
    return *this;
  }
  Limb carry = 0;
  for (Limb& l : limbs_) {
    u128 p = static_cast<u128>(l) * m + carry;
    l = static_cast<Limb>(p);
    carry = static_cast<Limb>(p >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

Natural& Natural::add_pow2(std::size_t k) {
  std::size_t i = k / kLimbBits;
  if (limbs_.size() <= i) limbs_.resize(i + 1, 0);
  Limb add = Limb{1} << (k % kLimbBits);
  for (; i < limbs_.size() && add != 0; ++i) {
    limbs_[i] += add;
    add = limbs_[i] < add ? 1 : 0;
  }
  if (add != 0) limbs_.push_back(add);
  return *this;
}

Natural::Limb Natural::divmod_small(Limb d) {
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<Limb>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<Limb>(rem);
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

void Natural::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const Natural& v) {
  return os << v.to_text(10);
}

}  // namespace owflab
