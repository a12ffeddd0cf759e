// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/formula.hpp"

#include <algorithm>

namespace pbenc {

std::optional<Clause> Clause::make(std::span<const Lit> lits) {
  Clause c;
  c.lits_.reserve(lits.size());
  for (Lit l : lits) {
    if (l.dimacs() == 0)
      throw Error("clause literal over variable 0");
    if (std::find(c.lits_.begin(), c.lits_.end(), ~l) != c.lits_.end())
      return std::nullopt;
    if (std::find(c.lits_.begin(), c.lits_.end(), l) == c.lits_.end())
      c.lits_.push_back(l);
  }
  return c;
}

bool CnfFormula::add(std::span<const Lit> lits) {
  auto c = Clause::make(lits);
  if (!c)
    return false;
  clauses.push_back(std::move(*c));
  return true;
}

void CnfFormula::append(const CnfFormula &other) {
  clauses.insert(clauses.end(), other.clauses.begin(), other.clauses.end());
  aux.insert(aux.end(), other.aux.begin(), other.aux.end());
}

std::uint32_t CnfFormula::max_var() const {
  std::uint32_t m = 0;
  for (const auto &c : clauses)
    for (Lit l : c)
      m = std::max(m, l.var().id);
  for (Var v : aux)
    m = std::max(m, v.id);
  return m;
}

} // namespace pbenc
