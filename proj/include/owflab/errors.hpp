// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace owflab {

/// Malformed textual input. `position` is the 0-based offset of the first
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value outside the domain of an operation (zero input, x >= 2^n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Digest width does not match the parameter profile.
class WidthError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Work refused up front because it would exceed a configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace owflab
