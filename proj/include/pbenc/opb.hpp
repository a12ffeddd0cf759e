// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbenc {

class OpbParseError : public Error {
public:
  OpbParseError(std::size_t line, std::size_t column, const std::string &what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

enum class Relation { Geq, Eq, Leq };

struct OpbTerm {
  BigInt coeff;
  std::uint32_t var = 0;
  bool negated = false; // `~x3`
};

struct OpbConstraint {
  std::vector<OpbTerm> terms;
  Relation relation = Relation::Geq;
  BigInt bound;
  std::size_t line = 0;
};

struct OpbDocument {
  std::optional<std::uint32_t> declared_variables;
  std::optional<std::size_t> declared_constraints;
  std::vector<OpbConstraint> constraints;

  /// max(declared variables, largest id used).
  std::uint32_t variable_count() const;
};

/// Linear OPB: `* comment` lines and `(<sign><int> x<id>)+ (>=|=|<=) <int> ;`.
/// Throws OpbParseError (1-based line and column).
OpbDocument parse_opb(std::string_view text);

enum class TagMode {
  Uniform,  // every constraint tagged 1
  PerConstraint // constraint i (1-based, file order) tagged i
};

struct OpbModel {
  InputModel model;
  std::vector<Variable> variables; // variables[k] has id k+1
  /// Equalities whose bound lies outside [0, sum of coefficients].
  std::vector<std::size_t> impossible_equalities;
};

/// Converts every constraint to positive-coefficient <= form
/// (a.x >= k becomes a.~x <= a - k term by term); equalities become two
/// inequalities. Throws Error naming the line of a constraint with no
/// nonzero term that cannot hold.
OpbModel build_model(const OpbDocument &doc, TagMode mode);

/// Writes a model as `<=` OPB constraints, negated literals folded into
/// negative coefficients. parse_opb + build_model gives back an equivalent
/// model.
std::string model_to_opb(const InputModel &m);

} // namespace pbenc
