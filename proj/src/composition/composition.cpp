// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/composition.hpp"

#include "owflab/errors.hpp"

namespace owflab::composition {

namespace {

void check_search_r(std::size_t r) {
  if (r == 0) throw DomainError("iteration count r must be >= 1");
  if (r > kMaxIndexableR) {
    throw DomainError("r = " + std::to_string(r) + " exceeds the indexable limit of " +
                      std::to_string(kMaxIndexableR));
  }
}

void check_input(const Natural& x) {
  if (x.is_zero()) throw DomainError("composition input must be >= 1, got 0");
}

// Depth-first walk over the full composition tree. Every leaf is visited;
// prefixes are shared but never pruned.
void collect_integral(const Dyadic& value, std::size_t depth, std::size_t r,
                      std::vector<Branch>& prefix, std::vector<Composition>& out) {
  if (depth == r) {
    if (value.is_integer()) out.emplace_back(prefix);
    return;
  }
  prefix.push_back(Branch::F);
  collect_integral(dyadic_halve(value), depth + 1, r, prefix, out);
  prefix.back() = Branch::G;
  collect_integral(dyadic_3x1_half(value), depth + 1, r, prefix, out);
  prefix.pop_back();
}

}  // namespace

Composition Composition::from_index(std::uint64_t index, std::size_t r) {
  std::vector<Branch> steps(r, Branch::F);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t bit = r - 1 - i;
    if (bit < 64 && ((index >> bit) & 1u)) steps[i] = Branch::G;
  }
  return Composition(std::move(steps));
}

Composition Composition::from_string(std::string_view word) {
  std::vector<Branch> steps;
  steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'F':
      case 'f':
        steps.push_back(Branch::F);
        break;
      case 'G':
      case 'g':
        steps.push_back(Branch::G);
        break;
      default:
        throw ParseError("composition letter must be F or G at position " + std::to_string(i), i);
    }
  }
  return Composition(std::move(steps));
}

Composition Composition::from_path(const PathRecord& path) {
  std::vector<Branch> steps;
  steps.reserve(path.length());
  for (bool b : path.bits()) steps.push_back(b ? Branch::G : Branch::F);
  return Composition(std::move(steps));
}

std::uint64_t Composition::index() const {
  if (steps_.size() > 64) throw DomainError("composition longer than 64 steps has no u64 index");
  std::uint64_t idx = 0;
  for (Branch b : steps_) idx = (idx << 1) | static_cast<std::uint64_t>(b);
  return idx;
}

std::string Composition::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Branch b : steps_) out.push_back(branch_letter(b));
  return out;
}

PathRecord Composition::to_path() const {
  std::vector<bool> bits;
  bits.reserve(steps_.size());
  for (Branch b : steps_) bits.push_back(b == Branch::G);
  return PathRecord(std::move(bits));
}

std::string_view order_name(Order order) {
  return order == Order::kPaperTable ? "paper" : "lexicographic";
}

Order order_from_name(std::string_view name) {
  if (name == "lexicographic" || name == "lex") return Order::kLexicographic;
  if (name == "paper" || name == "paper_table") return Order::kPaperTable;
  throw ParseError("unknown enumeration order '" + std::string(name) + "'", 0);
}

std::uint64_t enumeration_index(std::uint64_t position, std::size_t r, Order order) {
  if (order == Order::kLexicographic || r == 0) return position;
  const std::uint64_t half = std::uint64_t{1} << (r - 1);
  return position < half ? position : position ^ (half - 1);
}

Dyadic apply(const Composition& c, const Natural& x) {
  check_input(x);
  Dyadic value(x);
  for (Branch b : c.steps()) {
    if (b == Branch::F) {
      value.halve();
    } else {
      value.triple_plus_one_half();
    }
  }
  return value;
}

SearchReport search(const Natural& x, std::size_t r, Order order) {
  check_input(x);
  check_search_r(r);
  // Walks the same sequence as enumerate(), decoding index bits directly
  // instead of materializing each Composition.
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t pos = 0; pos < total; ++pos) {
    const std::uint64_t idx = enumeration_index(pos, r, order);
    Dyadic y(x);
    for (std::size_t i = r; i-- > 0;) {
      if ((idx >> i) & 1u) {
        y.triple_plus_one_half();
      } else {
        y.halve();
      }
    }
    if (y.is_integer()) {
      return SearchReport{Composition::from_index(idx, r), y.numerator(), pos + 1, order};
    }
  }
  // Unreachable: the branching path of x is always integral.
  throw DomainError("no integral composition found for x = " + x.to_text());
}

std::vector<Composition> integral_compositions(const Natural& x, std::size_t r) {
  check_input(x);
  if (r == 0) throw DomainError("iteration count r must be >= 1");
  if (r > kOracleMaxR) {
    throw BudgetError("integral_compositions enumerates 2^r compositions; r = " + std::to_string(r) +
                          " exceeds the oracle bound r <= " + std::to_string(kOracleMaxR),
                      r);
  }
  std::vector<Composition> out;
  std::vector<Branch> prefix;
  prefix.reserve(r);
  collect_integral(Dyadic(x), 0, r, prefix, out);
  return out;
}

AffineForm affine_form(const Composition& c) {
  AffineForm form{Natural(1), Natural(0), 0};
  for (Branch b : c.steps()) {
    if (b == Branch::G) {
      // (3(m x + c) / 2^k + 1) / 2 = (3m x + 3c + 2^k) / 2^(k+1)
      form.multiplier.mul_small(3);
      form.offset.mul_small(3);
      form.offset.add_pow2(form.shift);
    }
    ++form.shift;
  }
  return form;
}

}  // namespace owflab::composition
