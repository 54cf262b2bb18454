// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/natural.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracle.hpp"
#include "owflab/errors.hpp"

namespace owflab {
namespace {

using testing::BigInt;
using testing::from_big;
using testing::random_big;
using testing::to_big;

TEST(NaturalText, ParsesDecimalDigits) {
  EXPECT_EQ(Natural::from_text("9"), Natural(9));
  EXPECT_EQ(Natural::from_text("0"), Natural(0));
  EXPECT_TRUE(Natural::from_text("0000").is_zero());
}

TEST(NaturalText, ParsesHexAgainstIndependentConversion) {
  const Natural v = Natural::from_text("2e", 16);
  EXPECT_EQ(v, Natural(46));
  EXPECT_EQ(v.low_u64(), std::stoull("2e", nullptr, 16));
  EXPECT_EQ(to_big(v), BigInt("0x2e"));
  EXPECT_EQ(Natural::from_text("2E", 16), v);
}

TEST(NaturalText, RejectsBadDigitWithPosition) {
  try {
    Natural::from_text("12x4");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos);
  }
  EXPECT_THROW(Natural::from_text(""), ParseError);
  EXPECT_THROW(Natural::from_text("ab", 10), ParseError);
  EXPECT_THROW(Natural::from_text("0x1f", 16), ParseError);
  EXPECT_THROW(Natural::from_text("-1"), ParseError);
  EXPECT_THROW(Natural::from_text("1", 8), ParseError);
}

TEST(NaturalText, LongValuesMatchOracle) {
  const std::string dec = "123456789012345678901234567890123456789012345678901234567890";
  EXPECT_EQ(to_big(Natural::from_text(dec)), BigInt(dec));
  EXPECT_EQ(Natural::from_text(dec).to_text(), dec);
  const std::string hex = "fedcba98765432100123456789abcdef0f1e2d3c4b5a6978";
  EXPECT_EQ(to_big(Natural::from_text(hex, 16)), BigInt("0x" + hex));
  EXPECT_EQ(Natural::from_text(hex, 16).to_text(16), hex);
}

TEST(NaturalXor, MatchesPerBitOracle) {
  const Natural got = Natural(9) ^ Natural(13);
  EXPECT_EQ(got, Natural(4));
  for (unsigned i = 0; i < 4; ++i) {
    EXPECT_EQ(got.test_bit(i), ((9u >> i) & 1u) != ((13u >> i) & 1u)) << "bit " << i;
  }
  const Natural a = Natural::from_text("98765432109876543210987654321");
  EXPECT_EQ(a ^ Natural(0), a);
  EXPECT_TRUE((a ^ a).is_zero());
}

TEST(NaturalBits, BitLengthDefinition) {
  EXPECT_EQ(Natural(0).bit_length(), 0u);
  EXPECT_EQ(Natural(1).bit_length(), 1u);
  EXPECT_EQ(Natural::pow2(64).bit_length(), 65u);
  EXPECT_EQ(Natural(0).trailing_zeros(), 0u);
  EXPECT_EQ(Natural::pow2(130).trailing_zeros(), 130u);
}

TEST(NaturalBits, ExtractBits) {
  const Natural v = Natural::from_text("b5", 16);
  EXPECT_EQ(v.extract_bits(0, 4), Natural(0x5));
  EXPECT_EQ(v.extract_bits(4, 4), Natural(0xb));
  EXPECT_EQ(v.extract_bits(8, 4), Natural(0));
  EXPECT_EQ(v.extract_bits(2, 0), Natural(0));
}

TEST(NaturalArith, SubtractionUnderflowThrows) {
  EXPECT_THROW(Natural(3) - Natural(4), DomainError);
  EXPECT_EQ(Natural::pow2(128) - Natural(1), from_big((BigInt(1) << 128) - 1));
}

// Randomized agreement with boost::multiprecision over many widths.
TEST(NaturalProperty, AgreesWithBigIntOracle) {
  std::mt19937_64 rng(20261015);
  for (int iter = 0; iter < 3000; ++iter) {
    const unsigned wa = 1 + static_cast<unsigned>(rng() % 700);
    const unsigned wb = 1 + static_cast<unsigned>(rng() % 700);
    const BigInt ba = random_big(rng, wa);
    const BigInt bb = random_big(rng, wb);
    const Natural a = from_big(ba);
    const Natural b = from_big(bb);
    const std::size_t k = rng() % 200;
    const std::uint64_t m = rng();

    ASSERT_EQ(to_big(a + b), ba + bb);
    ASSERT_EQ(to_big(a ^ b), ba ^ bb);
    ASSERT_EQ(to_big(a << k), ba << k);
    ASSERT_EQ(to_big(a >> k), ba >> k);
    ASSERT_EQ(a < b, ba < bb);
    ASSERT_EQ(a == b, ba == bb);
    if (ba >= bb) ASSERT_EQ(to_big(a - b), ba - bb);

    Natural prod = a;
    prod.mul_small(m);
    ASSERT_EQ(to_big(prod), ba * m);

    Natural quot = a;
    const std::uint64_t d = (m | 1u);
    const std::uint64_t rem = quot.divmod_small(d);
    ASSERT_EQ(to_big(quot), ba / d);
    ASSERT_EQ(BigInt(rem), ba % d);

    Natural plus_pow = a;
    plus_pow.add_pow2(k);
    ASSERT_EQ(to_big(plus_pow), ba + (BigInt(1) << k));

    ASSERT_EQ(a.bit_length(), ba == 0 ? 0u : boost::multiprecision::msb(ba) + 1);
    ASSERT_EQ(to_big(a.extract_bits(k, 1 + m % 150)), (ba >> k) & ((BigInt(1) << (1 + m % 150)) - 1));

    ASSERT_EQ(a.to_text(10), ba.str());
    ASSERT_EQ(Natural::from_text(a.to_text(10)), a);
    ASSERT_EQ(Natural::from_text(a.to_text(16), 16), a);
  }
}

TEST(NaturalProperty, XorIsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 1000; ++iter) {
    const Natural a = from_big(random_big(rng, 1 + rng() % 600));
    const Natural b = from_big(random_big(rng, 1 + rng() % 600));
    ASSERT_EQ((a ^ b) ^ b, a);
  }
}

TEST(NaturalProperty, DoublingAddsOneBit) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    Natural v = from_big(random_big(rng, 1 + rng() % 600));
    if (v.is_zero()) continue;
    ASSERT_EQ((v << 1).bit_length(), v.bit_length() + 1);
    const std::size_t len = v.bit_length();
    ASSERT_LE(Natural::pow2(len - 1), v);
    ASSERT_LT(v, Natural::pow2(len));
  }
}

}  // namespace
}  // namespace owflab
