// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "owflab/owf.hpp"

#include "owflab/errors.hpp"

namespace owflab::owf {

OwfParams OwfParams::profile(std::string_view name) {
  if (name == "paper512") return paper512();
  throw ParseError("unknown parameter profile '" + std::string(name) + "'", 0);
}

void OwfParams::validate() const {
  if (n == 0) throw DomainError("input width n must be >= 1");
  if (r == 0) throw DomainError("iteration count r must be >= 1");
}

std::string OwfOutput::to_hex() const { return digest_hex(digest, width); }

std::string digest_hex(const Natural& digest, std::size_t width) {
  std::string hex = digest.to_text(16);
  const std::size_t digits = (width + 3) / 4;
  if (hex.size() < digits) hex.insert(0, digits - hex.size(), '0');
  return hex;
}

Natural fold(const Natural& v, std::size_t width) {
  if (width == 0) throw DomainError("fold width must be >= 1");
  Natural acc;
  const std::size_t bits = v.bit_length();
  for (std::size_t lo = 0; lo < bits; lo += width) acc ^= v.extract_bits(lo, width);
  return acc;
}

void check_input(const Natural& x, const OwfParams& params) {
  params.validate();
  if (x.is_zero()) throw DomainError("owf input must satisfy x >= 1, got 0");
  const std::size_t bits = x.bit_length();
  if (bits > params.n) {
    throw DomainError("owf input must satisfy x < 2^" + std::to_string(params.n) + ", got a " +
                      std::to_string(bits) + "-bit value");
  }
  if (params.strict_width && bits != params.n) {
    throw DomainError("strict width requires exactly " + std::to_string(params.n) +
                      " significant bits, got " + std::to_string(bits));
  }
}

OwfTrace trace(const Natural& x, const OwfParams& params) {
  check_input(x, params);
  trajectory::TrajectoryResult run = trajectory::run(x, params.r);
  OwfTrace t;
  t.input = x;
  t.folded_input = fold(x, params.r);
  t.folded_final = fold(run.final, params.r);
  t.digest = t.folded_input ^ t.folded_final ^ path_to_natural(run.path);
  t.final = std::move(run.final);
  t.path = std::move(run.path);
  return t;
}

OwfOutput evaluate(const Natural& x, const OwfParams& params) {
  return OwfOutput{trace(x, params).digest, params.r};
}

bool verify(const Natural& x, const OwfOutput& y, const OwfParams& params) {
  if (y.width != params.r) {
    throw WidthError("digest width " + std::to_string(y.width) + " does not match r = " +
                     std::to_string(params.r));
  }
  return evaluate(x, params).digest == y.digest;
}

}  // namespace owflab::owf
