// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/core.hpp"
#include "pbenc/model.hpp"

#include <optional>
#include <vector>

namespace pbenc {

struct Term {
  BigInt coeff;
  Lit lit;

  friend bool operator==(const Term &, const Term &) = default;
};

/// Canonical constraint consumed by every encoder.
///
/// Terms are sorted by decreasing coefficient, then ascending variable id;
/// no variable occurs twice; 0 < coeff <= bound for every term; and the
/// coefficients sum to more than the bound.
struct RawConstraint {
  std::vector<Term> terms;
  BigInt bound;

  std::size_t size() const { return terms.size(); }
  BigInt coeff_sum() const;

  friend bool operator==(const RawConstraint &, const RawConstraint &) =
      default;
};

enum class NormalizeStatus { Unsat, TriviallyTrue, Residual };

struct NormalizeResult {
  NormalizeStatus status = NormalizeStatus::TriviallyTrue;
  /// Literals that must hold in every model; listed in term order.
  std::vector<Lit> forced;
  std::optional<RawConstraint> residual;
};

/// Normalizes sum terms <= bound. Coefficients must be positive.
NormalizeResult normalize(std::vector<Term> terms, BigInt bound);

NormalizeResult to_raw(const PbLeqConstraint &q);

/// Orders terms the way RawConstraint requires.
bool term_order(const Term &a, const Term &b);

} // namespace pbenc
