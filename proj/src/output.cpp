// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/output.hpp"

#include <sstream>

namespace pbenc {

const std::vector<EncoderKind> &EncoderAssignment::encoders(Tag tag) const {
  static const std::vector<EncoderKind> none;
  auto it = by_tag_.find(tag);
  return it == by_tag_.end() ? none : it->second;
}

void OutputProblem::assign_encoder(Tag tag, EncoderKind kind) {
  if (read_)
    throw Error("assign_encoder after read");
  if (!accepts(kind))
    throw Error("encoder '" + std::string(encoder_name(kind)) +
                "' does not match this output problem");
  assignment_.assign(tag, kind);
}

void OutputProblem::require_read() const {
  if (!read_)
    throw Error("get_output called before read");
}

void OutputProblem::read(const InputModel &m) {
  if (read_)
    throw Error("read may only be called once");

  // Dispatch is checked up front so a failure leaves the problem untouched.
  const auto &qs = m.constraints();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    bool matched = false;
    for (Tag t : qs[i].tags)
      matched = matched || !assignment_.encoders(t).empty();
    if (!matched) {
      std::string tags;
      for (Tag t : qs[i].tags)
        tags += (tags.empty() ? "" : ",") + std::to_string(t);
      throw Error("constraint " + std::to_string(i) + " has tags {" + tags +
                  "} with no assigned encoder");
    }
  }

  input_vars_ = m.variable_count();
  begin(m);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    NormalizeResult n = to_raw(qs[i]);
    if (n.status == NormalizeStatus::Unsat)
      unsat_ = true;
    for (Tag t : qs[i].tags) {
      for (EncoderKind kind : assignment_.encoders(t)) {
        TranslationRecord rec;
        rec.constraint = i;
        rec.tag = t;
        rec.encoder = kind;
        rec.status = n.status;
        translate(n, kind, rec);
        records_.push_back(rec);
      }
    }
  }
  read_ = true;
}

//===----------------------------------------------------------------------===//
// CNF
//===----------------------------------------------------------------------===//

void CnfProblem::begin(const InputModel &m) {
  alloc_ = VarAllocator(m.variable_count() + 1);
}

void CnfProblem::translate(const NormalizeResult &n, EncoderKind kind,
                           TranslationRecord &rec) {
  std::size_t before = formula_.clauses.size();
  if (n.status == NormalizeStatus::Unsat) {
    formula_.add({});
  } else {
    for (Lit l : n.forced)
      formula_.add({l});
    rec.forced = n.forced.size();
    if (n.residual) {
      CnfFormula enc = encode_cnf(kind, *n.residual, alloc_);
      rec.aux = enc.aux.size();
      formula_.append(enc);
    }
  }
  rec.clauses = formula_.clauses.size() - before;
}

std::string to_dimacs(const CnfFormula &f, std::uint32_t variables,
                      DimacsOptions opts) {
  std::ostringstream os;
  if (opts.comments)
    os << "c pbenc: " << variables - f.aux.size() << " input variables, "
       << f.aux.size() << " auxiliary variables\n";
  os << "p cnf " << variables << ' ' << f.clauses.size() << '\n';
  for (const auto &c : f.clauses) {
    for (Lit l : c)
      os << l.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

std::string CnfProblem::get_output(DimacsOptions opts) const {
  require_read();
  return to_dimacs(formula_, variable_count(), opts);
}

//===----------------------------------------------------------------------===//
// OPB
//===----------------------------------------------------------------------===//

void PbProblem::translate(const NormalizeResult &n, EncoderKind,
                          TranslationRecord &rec) {
  std::size_t before = constraints_.size();
  if (n.status == NormalizeStatus::Unsat) {
    // No portable empty OPB constraint exists; x1 >= 2 is impossible.
    if (input_vars_ > 0)
      constraints_.push_back({{{1, Var{1}}}, 2});
    else
      empty_unsat_ = true;
  } else {
    for (Lit l : n.forced) {
      // l must hold: 1.~l <= 0 in normal form.
      RawConstraint unit{{{1, ~l}}, 0};
      constraints_.push_back(encode_pb_basic(unit));
    }
    rec.forced = n.forced.size();
    if (n.residual)
      constraints_.push_back(encode_pb_basic(*n.residual));
  }
  rec.clauses = constraints_.size() - before;
}

std::string to_opb_line(const PbOutputConstraint &c) {
  std::ostringstream os;
  for (const auto &t : c.terms)
    os << (t.coeff >= 0 ? "+" : "") << t.coeff << " x" << t.var.id << ' ';
  os << ">= " << c.bound << " ;";
  return os.str();
}

std::string PbProblem::get_output() const {
  require_read();
  std::ostringstream os;
  os << "* #variable= " << input_vars_ << " #constraint= "
     << constraints_.size() << '\n';
  if (empty_unsat_)
    os << "* unsat\n";
  for (const auto &c : constraints_)
    os << to_opb_line(c) << '\n';
  return os.str();
}

} // namespace pbenc
