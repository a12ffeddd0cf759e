// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace pbenc {

using BigInt = boost::multiprecision::cpp_int;
using Tag = std::int64_t;

/// Error raised for every contract violation in the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Propositional variable as seen by encoders and output formulas.
/// Ids are 1-based, matching DIMACS numbering.
struct Var {
  std::uint32_t id = 0;

  friend auto operator<=>(const Var &, const Var &) = default;
};

/// Signed literal over a Var, stored in DIMACS form (+id / -id).
class Lit {
public:
  constexpr Lit() = default;
  constexpr Lit(Var v, bool positive)
      : code_(positive ? static_cast<std::int32_t>(v.id)
                       : -static_cast<std::int32_t>(v.id)) {}

  static constexpr Lit from_dimacs(std::int32_t code) {
    Lit l;
    l.code_ = code;
    return l;
  }

  constexpr std::int32_t dimacs() const { return code_; }
  constexpr Var var() const {
    return Var{static_cast<std::uint32_t>(code_ < 0 ? -code_ : code_)};
  }
  constexpr bool positive() const { return code_ > 0; }
  constexpr Lit operator~() const { return from_dimacs(-code_); }

  friend constexpr bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  /// Orders by variable id, then positive before negative.
  friend constexpr std::strong_ordering operator<=>(Lit a, Lit b) {
    if (auto c = a.var().id <=> b.var().id; c != 0)
      return c;
    return b.positive() <=> a.positive();
  }

private:
  std::int32_t code_ = 0;
};

} // namespace pbenc

template <> struct std::hash<pbenc::Lit> {
  std::size_t operator()(pbenc::Lit l) const noexcept {
    return std::hash<std::int32_t>{}(l.dimacs());
  }
};
