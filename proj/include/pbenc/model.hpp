// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/core.hpp"

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pbenc {

class Literal;
class InputModel;

/// A propositional variable registered in one InputModel.
///
/// Variables are created by InputModel::new_variable and carry the identity
/// of their owning model, so constraints over foreign variables can be
/// rejected when added.
class Variable {
public:
  Variable() = default;

  std::uint32_t id() const { return id_; }
  Var var() const { return Var{id_}; }

  Literal pos_lit() const;
  Literal neg_lit() const;
  /// get_literal: positive literal for `sign == true`, negative otherwise.
  Literal lit(bool sign) const;

  friend bool operator==(const Variable &, const Variable &) = default;

private:
  friend class InputModel;
  Variable(std::uint64_t owner, std::uint32_t id) : owner_(owner), id_(id) {}

  std::uint64_t owner_ = 0;
  std::uint32_t id_ = 0;
};

/// A variable with a polarity. Literals are plain values, so two requests for
/// the same (variable, sign) always compare equal.
class Literal {
public:
  Literal() = default;
  Literal(Variable v, bool positive) : var_(v), positive_(positive) {}

  const Variable &variable() const { return var_; }
  bool positive() const { return positive_; }
  Literal operator~() const { return Literal(var_, !positive_); }
  Lit lit() const { return Lit(var_.var(), positive_); }

  friend bool operator==(const Literal &, const Literal &) = default;

private:
  Variable var_;
  bool positive_ = true;
};

inline Literal Variable::pos_lit() const { return Literal(*this, true); }
inline Literal Variable::neg_lit() const { return Literal(*this, false); }
inline Literal Variable::lit(bool sign) const { return Literal(*this, sign); }

/// Sum of coeffs[i] * lits[i] <= bound, labelled with one or more tags.
struct PbLeqConstraint {
  std::vector<BigInt> coeffs;
  std::vector<Literal> lits;
  BigInt bound;
  std::vector<Tag> tags; // sorted, unique
};

/// Tags applied to every constraint built until the next set_tags call.
/// A fresh context carries the single tag 1.
class TagContext {
public:
  void set_tags(Tag t1) { set_tags({t1}); }
  void set_tags(Tag t1, Tag t2) { set_tags({t1, t2}); }
  void set_tags(Tag t1, Tag t2, Tag t3) { set_tags({t1, t2, t3}); }
  void set_tags(Tag t1, Tag t2, Tag t3, Tag t4) { set_tags({t1, t2, t3, t4}); }
  void set_tags(std::initializer_list<Tag> tags) {
    set_tags(std::span<const Tag>(tags.begin(), tags.size()));
  }
  /// Variadic form; any nonzero number of tags.
  void set_tags(std::span<const Tag> tags);

  const std::vector<Tag> &active() const { return active_; }

private:
  std::vector<Tag> active_{1};
};

PbLeqConstraint make_leq(std::span<const BigInt> coeffs,
                         std::span<const Literal> lits, const BigInt &bound,
                         const TagContext &ctx);

inline PbLeqConstraint make_leq(const std::vector<BigInt> &coeffs,
                                const std::vector<Literal> &lits,
                                const BigInt &bound, const TagContext &ctx) {
  return make_leq(std::span<const BigInt>(coeffs),
                  std::span<const Literal>(lits), bound, ctx);
}

template <std::integral T>
PbLeqConstraint make_leq(std::span<const T> coeffs,
                         std::span<const Literal> lits, T bound,
                         const TagContext &ctx) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return make_leq(std::span<const BigInt>(big), lits, BigInt(bound), ctx);
}

/// Equality sum c_i l_i = b as the pair (sum c_i l_i <= b,
/// sum c_i ~l_i <= sum c_i - b). Throws when b lies outside [0, sum c_i].
std::pair<PbLeqConstraint, PbLeqConstraint>
make_eq(std::span<const BigInt> coeffs, std::span<const Literal> lits,
        const BigInt &bound, const TagContext &ctx);

inline std::pair<PbLeqConstraint, PbLeqConstraint>
make_eq(const std::vector<BigInt> &coeffs, const std::vector<Literal> &lits,
        const BigInt &bound, const TagContext &ctx) {
  return make_eq(std::span<const BigInt>(coeffs),
                 std::span<const Literal>(lits), bound, ctx);
}

/// Ordered container of input constraints plus the variable registry.
/// Not safe for concurrent mutation.
class InputModel {
public:
  InputModel();

  Variable new_variable();
  void add_constraint(PbLeqConstraint q);

  std::uint32_t variable_count() const { return variable_count_; }
  const std::vector<PbLeqConstraint> &constraints() const {
    return constraints_;
  }
  bool owns(const Variable &v) const {
    return v.owner_ == token_ && v.id_ >= 1 && v.id_ <= variable_count_;
  }

  /// One header line "<k> constraints", then one line per constraint:
  /// `5.x1 + 3.~x2 + 1.x3 <= 8  [tags 1]`.
  std::string to_text() const;

private:
  std::uint64_t token_;
  std::uint32_t variable_count_ = 0;
  std::vector<PbLeqConstraint> constraints_;
};

/// Renders a single constraint without its tags.
std::string constraint_to_text(const PbLeqConstraint &q);

} // namespace pbenc
