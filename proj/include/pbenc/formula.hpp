// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/core.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace pbenc {

/// Disjunction of literals. Never holds a duplicate literal and is never
/// tautological; the empty clause is allowed and denotes falsity.
class Clause {
public:
  /// Drops repeated literals (first occurrence wins) and returns nullopt for
  /// a clause containing both x and ~x.
  static std::optional<Clause> make(std::span<const Lit> lits);
  static std::optional<Clause> make(std::initializer_list<Lit> lits) {
    return make(std::span<const Lit>(lits.begin(), lits.size()));
  }

  const std::vector<Lit> &lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const Clause &, const Clause &) = default;

private:
  std::vector<Lit> lits_;
};

/// Hands out fresh variable ids. Never reissues an id.
class VarAllocator {
public:
  /// The first id handed out is `first`.
  explicit VarAllocator(std::uint32_t first = 1) : next_(first) {}

  Var fresh() { return Var{next_++}; }
  std::uint32_t next_id() const { return next_; }
  /// Number of ids handed out so far, counting from `first`.
  std::uint32_t last_id() const { return next_ - 1; }

private:
  std::uint32_t next_;
};

struct CnfFormula {
  std::vector<Clause> clauses;
  std::vector<Var> aux;

  /// Appends a clause unless it is tautological. Returns whether it was kept.
  bool add(std::span<const Lit> lits);
  bool add(std::initializer_list<Lit> lits) {
    return add(std::span<const Lit>(lits.begin(), lits.size()));
  }
  Var fresh(VarAllocator &alloc) {
    Var v = alloc.fresh();
    aux.push_back(v);
    return v;
  }
  void append(const CnfFormula &other);

  /// Largest variable id mentioned by a clause or allocated (0 if none).
  std::uint32_t max_var() const;
};

/// Sum of coeff * x >= bound over plain variables (OPB normal form).
struct PbOutputConstraint {
  struct Term {
    BigInt coeff;
    Var var;
    friend bool operator==(const Term &, const Term &) = default;
  };
  std::vector<Term> terms;
  BigInt bound;

  friend bool operator==(const PbOutputConstraint &,
                         const PbOutputConstraint &) = default;
};

} // namespace pbenc
