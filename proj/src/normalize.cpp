// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/normalize.hpp"

#include <algorithm>
#include <map>

namespace pbenc {

BigInt RawConstraint::coeff_sum() const {
  BigInt s = 0;
  for (const auto &t : terms)
    s += t.coeff;
  return s;
}

bool term_order(const Term &a, const Term &b) {
  if (a.coeff != b.coeff)
    return a.coeff > b.coeff;
  return a.lit < b.lit;
}

NormalizeResult normalize(std::vector<Term> terms, BigInt bound) {
  for (const auto &t : terms)
    if (t.coeff <= 0)
      throw Error("normalize: coefficient must be positive");

  // Net weight per variable: positive part on x, negative part on ~x.
  std::map<std::uint32_t, std::pair<BigInt, BigInt>> weights;
  for (const auto &t : terms) {
    auto &w = weights[t.lit.var().id];
    (t.lit.positive() ? w.first : w.second) += t.coeff;
  }

  std::vector<Term> merged;
  merged.reserve(weights.size());
  for (auto &[id, w] : weights) {
    auto &[pos, neg] = w;
    // a.x + a'.~x == (a - a').x + a' when a >= a'
    if (pos >= neg) {
      bound -= neg;
      if (pos > neg)
        merged.push_back({pos - neg, Lit(Var{id}, true)});
    } else {
      bound -= pos;
      merged.push_back({neg - pos, Lit(Var{id}, false)});
    }
  }

  NormalizeResult result;
  if (bound < 0) {
    result.status = NormalizeStatus::Unsat;
    return result;
  }

  std::sort(merged.begin(), merged.end(), term_order);
  std::vector<Term> kept;
  BigInt sum = 0;
  for (auto &t : merged) {
    if (t.coeff > bound) {
      result.forced.push_back(~t.lit);
    } else {
      sum += t.coeff;
      kept.push_back(std::move(t));
    }
  }

  if (sum <= bound) {
    result.status = NormalizeStatus::TriviallyTrue;
    return result;
  }
  result.status = NormalizeStatus::Residual;
  result.residual = RawConstraint{std::move(kept), std::move(bound)};
  return result;
}

NormalizeResult to_raw(const PbLeqConstraint &q) {
  std::vector<Term> terms;
  terms.reserve(q.lits.size());
  for (std::size_t i = 0; i < q.lits.size(); ++i)
    terms.push_back({q.coeffs[i], q.lits[i].lit()});
  return normalize(std::move(terms), q.bound);
}

} // namespace pbenc
