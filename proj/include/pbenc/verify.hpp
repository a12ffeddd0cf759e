// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/encoders.hpp"
#include "pbenc/formula.hpp"
#include "pbenc/normalize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

// Oracles that make propagation strength checkable: a unit propagator, an
// arc-consistency oracle for one pseudo-Boolean constraint, exhaustive model
// enumeration and a small complete SAT solver. Correctness over speed.
namespace pbenc::verify {

/// Input variable -> value.
using PartialAssignment = std::map<std::uint32_t, bool>;

struct UpResult {
  enum class Status { Fixpoint, Conflict } status = Status::Fixpoint;
  /// Literals set by propagation, excluding the assumptions; sorted.
  std::vector<Lit> forced;

  bool conflict() const { return status == Status::Conflict; }
};

UpResult unit_propagate(const CnfFormula &f, std::span<const Lit> assumptions);

struct AcResult {
  bool inconsistent = false;
  /// Literals on unassigned variables that every satisfying extension makes
  /// true; sorted.
  std::vector<Lit> forced;
};

AcResult ac_forced_literals(const RawConstraint &r,
                            const PartialAssignment &sigma);

/// Complete assignment over `vars`: bit k of the mask is the value of vars[k].
using Assignment = std::uint32_t;

bool evaluate(const RawConstraint &r, const std::map<std::uint32_t, bool> &values);

/// Exact satisfying set of the conjunction, by enumeration of 2^|vars|
/// assignments. Throws when |vars| > 20.
std::set<Assignment> enumerate_pb_models(std::span<const RawConstraint> rs,
                                         std::span<const Var> vars);

/// Backtracking search with unit propagation. Branches on `priority` variables
/// first, value false first.
class Solver {
public:
  explicit Solver(const CnfFormula &f);

  void add_clause(std::span<const Lit> lits);
  /// Model indexed by variable id (index 0 unused), or nullopt if UNSAT.
  std::optional<std::vector<bool>> solve(std::span<const Var> priority = {});

private:
  std::uint32_t num_vars_ = 0;
  std::vector<std::vector<Lit>> clauses_;
  bool has_empty_ = false;
};

std::optional<std::vector<bool>> solve_cnf(const CnfFormula &f);

/// All models of `f` projected onto `vars`, found by repeated solving with
/// blocking clauses. Encoded like enumerate_pb_models.
std::set<Assignment> enumerate_projected_models(const CnfFormula &f,
                                                std::span<const Var> vars);

/// Variables of r's terms in ascending id order.
std::vector<Var> input_vars(const RawConstraint &r);

/// Calls `visit` for every partial assignment over `vars` (3^n of them),
/// in ternary counting order with vars[0] the fastest digit
/// (digit 0 = unassigned, 1 = false, 2 = true).
template <class Visit>
void for_each_partial(std::span<const Var> vars, Visit &&visit) {
  std::vector<int> digits(vars.size(), 0);
  while (true) {
    PartialAssignment sigma;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (digits[k])
        sigma[vars[k].id] = digits[k] == 2;
    visit(sigma);
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 2)
      digits[k++] = 0;
    if (k == digits.size())
      return;
    ++digits[k];
  }
}

std::vector<Lit> to_assumptions(const PartialAssignment &sigma);

struct PacResult {
  bool pass = true;
  PartialAssignment sigma;
  std::vector<Lit> up_forced; // input literals only
  std::vector<Lit> ac_forced;
  bool up_conflict = false;
};

/// UP on the encoding must force exactly the arc-consistency literals for
/// every AC-consistent partial assignment. Requires at most 6 terms.
PacResult check_pac(EncoderKind e, const RawConstraint &r);

struct PicResult {
  bool pass = true;
  PartialAssignment sigma;
};

/// UP on the encoding must conflict for every AC-inconsistent partial
/// assignment. Requires at most 6 terms.
PicResult check_pic(EncoderKind e, const RawConstraint &r);

/// UP must conflict on every complete assignment violating r.
PicResult check_complete_detection(EncoderKind e, const RawConstraint &r);

} // namespace pbenc::verify
