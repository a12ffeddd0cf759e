// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only oracles and generators. Everything here works on plain int64
// arithmetic and truth tables so it stays independent of the library's
// normalization, BDD and encoder code paths.

#pragma once

#include "pbenc/model.hpp"
#include "pbenc/normalize.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace pbenc::oracle {

/// (coefficient, DIMACS literal) pairs; sum <= bound.
struct IntConstraint {
  std::vector<std::pair<std::int64_t, int>> terms;
  std::int64_t bound = 0;
};

inline bool holds(const IntConstraint &c, std::uint32_t mask,
                  const std::vector<std::uint32_t> &vars) {
  std::int64_t sum = 0;
  for (auto [a, lit] : c.terms) {
    std::uint32_t id = static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
    std::size_t k = 0;
    while (vars[k] != id)
      ++k;
    bool value = (mask >> k) & 1U;
    if (value == (lit > 0))
      sum += a;
  }
  return sum <= c.bound;
}

/// Satisfying masks of the conjunction over `vars` (bit k = vars[k]).
inline std::set<std::uint32_t>
brute_models(const std::vector<IntConstraint> &cs,
             const std::vector<std::uint32_t> &vars) {
  std::set<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
    bool ok = true;
    for (const auto &c : cs)
      ok = ok && holds(c, mask, vars);
    if (ok)
      out.insert(mask);
  }
  return out;
}

inline std::vector<Term> to_terms(const IntConstraint &c) {
  std::vector<Term> terms;
  for (auto [a, lit] : c.terms)
    terms.push_back({BigInt(a), Lit::from_dimacs(lit)});
  return terms;
}

/// Canonical residual of a constraint the caller knows is nontrivial.
inline RawConstraint raw(const IntConstraint &c) {
  auto n = normalize(to_terms(c), BigInt(c.bound));
  if (!n.residual)
    throw Error("test constraint has no residual");
  return *n.residual;
}

/// The constraint as given, without normalization (encoders accept it as
/// long as the terms are on distinct variables).
inline RawConstraint unchecked(const IntConstraint &c) {
  return RawConstraint{to_terms(c), BigInt(c.bound)};
}

inline std::vector<std::uint32_t> var_ids(const IntConstraint &c) {
  std::set<std::uint32_t> ids;
  for (auto [a, lit] : c.terms)
    ids.insert(static_cast<std::uint32_t>(lit < 0 ? -lit : lit));
  return {ids.begin(), ids.end()};
}

inline std::vector<Var> as_vars(const std::vector<std::uint32_t> &ids) {
  std::vector<Var> out;
  for (auto id : ids)
    out.push_back(Var{id});
  return out;
}

/// Random constraint over variables 1..vars with n terms on distinct
/// variables, coefficients in [1, max_coeff], bound uniform in [0, sum].
inline IntConstraint random_constraint(std::mt19937_64 &rng, int n,
                                       std::int64_t max_coeff) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    ids[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(ids.begin(), ids.end(), rng);
  IntConstraint c;
  std::int64_t sum = 0;
  std::uniform_int_distribution<std::int64_t> coeff(1, max_coeff);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < n; ++i) {
    std::int64_t a = coeff(rng);
    sum += a;
    c.terms.push_back({a, sign(rng) ? ids[static_cast<std::size_t>(i)]
                                    : -ids[static_cast<std::size_t>(i)]});
  }
  c.bound = std::uniform_int_distribution<std::int64_t>(0, sum)(rng);
  return c;
}

/// Number of nodes of the reduced ordered BDD of `c` under the given literal
/// order, from truth tables: level i contributes one node per distinct
/// subfunction (after fixing the first i literals) that depends on literal i.
inline std::size_t robdd_size_by_truth_table(
    const std::vector<std::pair<std::int64_t, bool>> &ordered_terms,
    std::int64_t bound) {
  std::size_t n = ordered_terms.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::vector<bool>> functions;
    for (std::uint32_t prefix = 0; prefix < (1U << i); ++prefix) {
      std::int64_t used = 0;
      for (std::size_t k = 0; k < i; ++k)
        if ((prefix >> k) & 1U)
          used += ordered_terms[k].first;
      std::vector<bool> table;
      for (std::uint32_t suffix = 0; suffix < (1U << (n - i)); ++suffix) {
        std::int64_t s = used;
        for (std::size_t k = i; k < n; ++k)
          if ((suffix >> (k - i)) & 1U)
            s += ordered_terms[k].first;
        table.push_back(s <= bound);
      }
      // Depends on literal i iff flipping bit 0 of the suffix changes it.
      bool depends = false;
      for (std::size_t s = 0; s < table.size(); s += 2)
        depends = depends || table[s] != table[s + 1];
      if (depends)
        functions.insert(table);
    }
    count += functions.size();
  }
  return count;
}

} // namespace pbenc::oracle
