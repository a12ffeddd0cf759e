// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/encoders.hpp"
#include "pbenc/formula.hpp"
#include "pbenc/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace pbenc {

/// Tag -> encoders, in assignment order.
class EncoderAssignment {
public:
  void assign(Tag tag, EncoderKind kind) { by_tag_[tag].push_back(kind); }
  /// Empty when nothing is assigned to `tag`.
  const std::vector<EncoderKind> &encoders(Tag tag) const;
  const std::map<Tag, std::vector<EncoderKind>> &by_tag() const {
    return by_tag_;
  }

private:
  std::map<Tag, std::vector<EncoderKind>> by_tag_;
};

/// Size of one (constraint, tag, encoder) translation.
struct TranslationRecord {
  std::size_t constraint = 0;
  Tag tag = 0;
  EncoderKind encoder = EncoderKind::Direct;
  NormalizeStatus status = NormalizeStatus::Residual;
  std::size_t forced = 0;  // unit clauses / constraints for forced literals
  std::size_t clauses = 0; // total clauses or constraints emitted
  std::size_t aux = 0;
};

/// Translation target. Usage: assign encoders, read a model once, then fetch
/// the text.
class OutputProblem {
public:
  virtual ~OutputProblem() = default;

  /// Fails if the problem was already read or the encoder has the wrong kind.
  void assign_encoder(Tag tag, EncoderKind kind);
  /// Translates every constraint of `m` with the encoders of its tags: in
  /// constraint order, tags ascending, encoders in assignment order.
  void read(const InputModel &m);
  virtual std::string get_output() const = 0;

  bool is_read() const { return read_; }
  const EncoderAssignment &assignment() const { return assignment_; }
  const std::vector<TranslationRecord> &records() const { return records_; }
  /// Whether normalization proved some constraint unsatisfiable.
  bool unsat_detected() const { return unsat_; }
  std::uint32_t input_variable_count() const { return input_vars_; }

protected:
  virtual bool accepts(EncoderKind kind) const = 0;
  virtual void translate(const NormalizeResult &n, EncoderKind kind,
                         TranslationRecord &rec) = 0;
  virtual void begin(const InputModel &m) = 0;
  void require_read() const;

  std::uint32_t input_vars_ = 0;

private:
  EncoderAssignment assignment_;
  std::vector<TranslationRecord> records_;
  bool read_ = false;
  bool unsat_ = false;
};

struct DimacsOptions {
  bool comments = false; // `c` preamble
};

class CnfProblem final : public OutputProblem {
public:
  /// `p cnf <vars> <clauses>` then one zero-terminated clause per line.
  std::string get_output() const override { return get_output({}); }
  std::string get_output(DimacsOptions opts) const;

  const CnfFormula &formula() const { return formula_; }
  /// Input variables plus every auxiliary variable.
  std::uint32_t variable_count() const { return alloc_.last_id(); }

protected:
  bool accepts(EncoderKind kind) const override { return is_cnf_encoder(kind); }
  void begin(const InputModel &m) override;
  void translate(const NormalizeResult &n, EncoderKind kind,
                 TranslationRecord &rec) override;

private:
  CnfFormula formula_;
  VarAllocator alloc_;
};

class PbProblem final : public OutputProblem {
public:
  /// `* #variable= <n> #constraint= <m>` then `+a xi ... >= b ;` lines.
  std::string get_output() const override;

  const std::vector<PbOutputConstraint> &constraints() const {
    return constraints_;
  }

protected:
  bool accepts(EncoderKind kind) const override {
    return kind == EncoderKind::PbBasic;
  }
  void begin(const InputModel &) override {}
  void translate(const NormalizeResult &n, EncoderKind kind,
                 TranslationRecord &rec) override;

private:
  std::vector<PbOutputConstraint> constraints_;
  bool empty_unsat_ = false;
};

std::string to_dimacs(const CnfFormula &f, std::uint32_t variables,
                      DimacsOptions opts = {});
std::string to_opb_line(const PbOutputConstraint &c);

} // namespace pbenc
