// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/composition.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "owflab/errors.hpp"

namespace owflab::composition {
namespace {

using owflab::testing::BigInt;
using owflab::testing::BigRational;

std::vector<std::string> words(std::size_t r, Order order) {
  std::vector<std::string> out;
  for (const Composition& c : enumerate(r, order)) out.push_back(c.to_string());
  return out;
}

// Brute force over every word of length r with boost rationals; returns the
// integral words in lexicographic order.
std::vector<std::string> brute_force_integral(std::uint64_t x, std::size_t r) {
  std::vector<std::string> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << r); ++idx) {
    BigRational v{BigInt(x)};
    std::string w;
    for (std::size_t i = 0; i < r; ++i) {
      const bool g = (idx >> (r - 1 - i)) & 1u;
      v = g ? BigRational((3 * v + 1) / 2) : BigRational(v / 2);
      w.push_back(g ? 'G' : 'F');
    }
    if (boost::multiprecision::denominator(v) == 1) out.push_back(w);
  }
  return out;
}

TEST(Apply, WorkedRationalValues) {
  EXPECT_EQ(apply(Composition::from_string("FF"), Natural(3)), Dyadic::from_parts(Natural(3), 2));
  EXPECT_EQ(apply(Composition::from_string("FG"), Natural(3)), Dyadic::from_parts(Natural(11), 2));
  EXPECT_EQ(apply(Composition::from_string("GG"), Natural(3)), Dyadic(Natural(8)));
  EXPECT_THROW(apply(Composition::from_string("GG"), Natural(0)), DomainError);
}

TEST(CompositionWord, IndexEncodingIsMsbFirst) {
  EXPECT_EQ(Composition::from_string("GF").index(), 2u);
  EXPECT_EQ(Composition::from_index(2, 2).to_string(), "GF");
  EXPECT_EQ(Composition::from_index(5, 4).to_string(), "FGFG");
  EXPECT_THROW(Composition::from_string("FXG"), ParseError);
}

TEST(Enumerate, PrintedTableOrders) {
  EXPECT_EQ(words(2, Order::kPaperTable), (std::vector<std::string>{"FF", "FG", "GG", "GF"}));
  EXPECT_EQ(words(1, Order::kLexicographic), (std::vector<std::string>{"F", "G"}));
  EXPECT_EQ(words(3, Order::kPaperTable),
            (std::vector<std::string>{"FFF", "FFG", "FGF", "FGG", "GGG", "GGF", "GFG", "GFF"}));
  EXPECT_EQ(words(2, Order::kLexicographic), (std::vector<std::string>{"FF", "FG", "GF", "GG"}));
}

TEST(Enumerate, EveryCompositionExactlyOnce) {
  for (Order order : {Order::kLexicographic, Order::kPaperTable}) {
    for (std::size_t r = 1; r <= 12; ++r) {
      std::set<std::uint64_t> seen;
      std::uint64_t count = 0;
      for (const Composition& c : enumerate(r, order)) {
        ASSERT_EQ(c.length(), r);
        seen.insert(c.index());
        ++count;
      }
      ASSERT_EQ(count, std::uint64_t{1} << r);
      ASSERT_EQ(seen.size(), count);
    }
  }
  EXPECT_THROW(enumerate(0, Order::kLexicographic), DomainError);
}

TEST(Search, StopsAtThirdPrintedRow) {
  const auto s = search(Natural(3), 2, Order::kPaperTable);
  EXPECT_EQ(s.found.to_string(), "GG");
  EXPECT_EQ(s.result, Natural(8));
  EXPECT_EQ(s.tries, 3u);
  EXPECT_EQ(s.order, Order::kPaperTable);
}

TEST(Search, SmallInputsAgainstBruteForce) {
  auto s = search(Natural(1), 2, Order::kLexicographic);
  EXPECT_EQ(s.found.to_string(), "GF");
  EXPECT_EQ(s.result, Natural(1));
  EXPECT_EQ(brute_force_integral(1, 2), (std::vector<std::string>{"GF"}));

  s = search(Natural(2), 2, Order::kLexicographic);
  EXPECT_EQ(s.found.to_string(), "FG");
  EXPECT_EQ(s.result, Natural(2));
  EXPECT_EQ(brute_force_integral(2, 2), (std::vector<std::string>{"FG"}));
}

TEST(Search, ReportedTriesMatchEnumerationPosition) {
  for (std::uint64_t x = 1; x <= 64; ++x) {
    for (Order order : {Order::kLexicographic, Order::kPaperTable}) {
      const auto s = search(Natural(x), 6, order);
      std::uint64_t pos = 0;
      for (const Composition& c : enumerate(6, order)) {
        ++pos;
        if (c == s.found) break;
      }
      ASSERT_EQ(pos, s.tries);
      ASSERT_EQ(apply(s.found, Natural(x)), Dyadic(s.result));
    }
  }
}

TEST(IntegralCompositions, SmallCases) {
  auto words_of = [](const std::vector<Composition>& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(c.to_string());
    return out;
  };
  EXPECT_EQ(words_of(integral_compositions(Natural(3), 2)), (std::vector<std::string>{"GG"}));
  EXPECT_EQ(words_of(integral_compositions(Natural(4), 2)), (std::vector<std::string>{"FF"}));
  EXPECT_EQ(words_of(integral_compositions(Natural(1), 1)), (std::vector<std::string>{"G"}));
  EXPECT_EQ(brute_force_integral(3, 2), (std::vector<std::string>{"GG"}));
  EXPECT_EQ(brute_force_integral(4, 2), (std::vector<std::string>{"FF"}));
}

TEST(IntegralCompositions, RefusesAboveOracleBound) {
  try {
    integral_compositions(Natural(5), 21);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("r <= 20"), std::string::npos);
  }
}

TEST(IntegralCompositions, AgreesWithRationalBruteForce) {
  for (std::uint64_t x = 1; x <= 40; ++x) {
    for (std::size_t r = 1; r <= 8; ++r) {
      std::vector<std::string> got;
      for (const auto& c : integral_compositions(Natural(x), r)) got.push_back(c.to_string());
      ASSERT_EQ(got, brute_force_integral(x, r)) << "x=" << x << " r=" << r;
    }
  }
}

// Uniqueness of the integral composition and equality with the branching
// path. The acceptance suite covers the full [1, 4096] x [1, 10] grid.
TEST(Bijection, UniqueIntegralCompositionIsThePath) {
  for (std::uint64_t x = 1; x <= 512; ++x) {
    for (std::size_t r = 1; r <= 10; ++r) {
      const auto found = integral_compositions(Natural(x), r);
      ASSERT_EQ(found.size(), 1u) << "x=" << x << " r=" << r;
      ASSERT_EQ(found[0].to_path(), trajectory::run(Natural(x), r).path);
    }
  }
}

TEST(Bijection, ResiduesMapOntoAllCompositions) {
  for (std::size_t r = 1; r <= 10; ++r) {
    std::set<std::uint64_t> indices;
    for (std::uint64_t x = 1; x <= (std::uint64_t{1} << r); ++x) {
      const auto found = integral_compositions(Natural(x), r);
      ASSERT_EQ(found.size(), 1u);
      indices.insert(found[0].index());
    }
    ASSERT_EQ(indices.size(), std::uint64_t{1} << r);
  }
}

TEST(Consistency, SearchResultEqualsBranchingFinal) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    const Natural x(1 + rng() % 1000000);
    const std::size_t r = 1 + rng() % 10;
    const Order order = (rng() & 1u) ? Order::kPaperTable : Order::kLexicographic;
    ASSERT_EQ(search(x, r, order).result, trajectory::run(x, r).final);
  }
}

TEST(Cost, MeanTriesIsHalfTheTable) {
  std::mt19937_64 rng(8);
  const std::size_t r = 8;
  const int samples = 10000;
  std::uint64_t total = 0;
  for (int i = 0; i < samples; ++i) {
    total += search(Natural(1 + rng() % 1000000), r, Order::kLexicographic).tries;
  }
  const double mean = static_cast<double>(total) / samples;
  const double expected = ((1u << r) + 1) / 2.0;
  EXPECT_NEAR(mean, expected, 0.05 * expected);
}

// final * 2^r == 3^a * x + c, where (3^a, c) come from symbolic replay.
TEST(AffineForm, ReconstructsTheBranchingFinal) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Natural x = testing::from_big(testing::random_big(rng, 1 + rng() % 300)) + Natural(1);
    const std::size_t r = 1 + rng() % 80;
    const auto run = trajectory::run(x, r);
    const auto form = affine_form(Composition::from_path(run.path));
    BigInt three_a = 1;
    for (std::size_t k = 0; k < run.path.length(); ++k) {
      if (run.path[k]) three_a *= 3;
    }
    ASSERT_EQ(testing::to_big(form.multiplier), three_a);
    ASSERT_EQ(form.shift, r);
    ASSERT_EQ(testing::to_big(run.final) << r,
              three_a * testing::to_big(x) + testing::to_big(form.offset));
  }
}

}  // namespace
}  // namespace owflab::composition
