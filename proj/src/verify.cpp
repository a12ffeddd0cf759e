// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/verify.hpp"

#include <algorithm>

namespace pbenc::verify {

namespace {

// Assignment state shared by the propagator and the solver.
class Trail {
public:
  Trail(std::uint32_t num_vars, const std::vector<std::vector<Lit>> &clauses)
      : value_(num_vars + 1, 0), occurs_(2 * (num_vars + 1)),
        clauses_(clauses) {
    for (std::size_t c = 0; c < clauses.size(); ++c)
      for (Lit l : clauses[c])
        occurs_[index(l)].push_back(c);
  }

  int value(Lit l) const {
    int v = value_[l.var().id];
    return l.positive() ? v : -v;
  }
  bool assign(Lit l) {
    if (value(l) != 0)
      return value(l) > 0;
    value_[l.var().id] = l.positive() ? 1 : -1;
    trail_.push_back(l);
    return true;
  }
  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      value_[trail_.back().var().id] = 0;
      trail_.pop_back();
    }
    head_ = std::min(head_, size);
  }
  std::size_t size() const { return trail_.size(); }
  const std::vector<Lit> &lits() const { return trail_; }

  /// Scans every clause once: returns false on an all-false clause and
  /// assigns the open literal of unit clauses.
  bool initial_scan() {
    for (std::size_t c = 0; c < clauses_.size(); ++c)
      if (!visit(c))
        return false;
    return true;
  }

  /// Propagates pending assignments to fixpoint; false on conflict.
  bool propagate() {
    while (head_ < trail_.size()) {
      Lit l = trail_[head_++];
      for (std::size_t c : occurs_[index(~l)])
        if (!visit(c))
          return false;
    }
    return true;
  }

private:
  static std::size_t index(Lit l) {
    return 2 * l.var().id + (l.positive() ? 0 : 1);
  }

  bool visit(std::size_t c) {
    const auto &clause = clauses_[c];
    std::optional<Lit> open;
    std::size_t open_count = 0;
    for (Lit l : clause) {
      int v = value(l);
      if (v > 0)
        return true;
      if (v == 0) {
        open = l;
        ++open_count;
      }
    }
    if (open_count == 0)
      return false;
    if (open_count == 1)
      assign(*open);
    return true;
  }

  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> occurs_;
  const std::vector<std::vector<Lit>> &clauses_;
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
};

std::vector<std::vector<Lit>> clause_lists(const CnfFormula &f) {
  std::vector<std::vector<Lit>> out;
  out.reserve(f.clauses.size());
  for (const auto &c : f.clauses)
    out.push_back(c.lits());
  return out;
}

} // namespace

std::vector<Lit> to_assumptions(const PartialAssignment &sigma) {
  std::vector<Lit> lits;
  for (auto [id, value] : sigma)
    lits.emplace_back(Var{id}, value);
  return lits;
}

UpResult unit_propagate(const CnfFormula &f, std::span<const Lit> assumptions) {
  std::uint32_t n = f.max_var();
  for (Lit l : assumptions)
    n = std::max(n, l.var().id);
  auto clauses = clause_lists(f);
  Trail trail(n, clauses);

  UpResult result;
  for (Lit l : assumptions) {
    if (!trail.assign(l)) {
      result.status = UpResult::Status::Conflict;
      return result;
    }
  }
  std::size_t assumed = trail.size();
  bool ok = trail.initial_scan() && trail.propagate();
  result.forced.assign(trail.lits().begin() + static_cast<std::ptrdiff_t>(assumed),
                       trail.lits().end());
  std::sort(result.forced.begin(), result.forced.end());
  if (!ok)
    result.status = UpResult::Status::Conflict;
  return result;
}

AcResult ac_forced_literals(const RawConstraint &r,
                            const PartialAssignment &sigma) {
  // Making every open literal false minimizes the sum; a literal is forced
  // false when making it true on top of that minimum overflows the bound.
  BigInt base = 0;
  std::vector<const Term *> open;
  for (const auto &t : r.terms) {
    auto it = sigma.find(t.lit.var().id);
    if (it == sigma.end())
      open.push_back(&t);
    else if (it->second == t.lit.positive())
      base += t.coeff;
  }
  AcResult res;
  if (base > r.bound) {
    res.inconsistent = true;
    return res;
  }
  for (const Term *t : open)
    if (base + t->coeff > r.bound)
      res.forced.push_back(~t->lit);
  std::sort(res.forced.begin(), res.forced.end());
  return res;
}

bool evaluate(const RawConstraint &r,
              const std::map<std::uint32_t, bool> &values) {
  BigInt sum = 0;
  for (const auto &t : r.terms) {
    auto it = values.find(t.lit.var().id);
    if (it == values.end())
      throw Error("evaluate: variable x" + std::to_string(t.lit.var().id) +
                  " has no value");
    if (it->second == t.lit.positive())
      sum += t.coeff;
  }
  return sum <= r.bound;
}

std::set<Assignment> enumerate_pb_models(std::span<const RawConstraint> rs,
                                         std::span<const Var> vars) {
  if (vars.size() > 20)
    throw Error("enumerate_pb_models: more than 20 variables");
  std::set<Assignment> models;
  std::map<std::uint32_t, bool> values;
  for (Assignment mask = 0; mask < (Assignment{1} << vars.size()); ++mask) {
    for (std::size_t k = 0; k < vars.size(); ++k)
      values[vars[k].id] = (mask >> k) & 1U;
    bool ok = true;
    for (const auto &r : rs)
      if (!evaluate(r, values)) {
        ok = false;
        break;
      }
    if (ok)
      models.insert(mask);
  }
  return models;
}

Solver::Solver(const CnfFormula &f)
    : num_vars_(f.max_var()), clauses_(clause_lists(f)) {
  for (const auto &c : clauses_)
    has_empty_ = has_empty_ || c.empty();
}

void Solver::add_clause(std::span<const Lit> lits) {
  auto c = Clause::make(lits);
  if (!c)
    return;
  for (Lit l : *c)
    num_vars_ = std::max(num_vars_, l.var().id);
  has_empty_ = has_empty_ || c->empty();
  clauses_.push_back(c->lits());
}

std::optional<std::vector<bool>> Solver::solve(std::span<const Var> priority) {
  if (has_empty_)
    return std::nullopt;
  std::uint32_t n = num_vars_;
  for (Var v : priority)
    n = std::max(n, v.id);

  std::vector<std::uint32_t> order;
  std::vector<bool> listed(n + 1, false);
  for (Var v : priority)
    if (!listed[v.id]) {
      listed[v.id] = true;
      order.push_back(v.id);
    }
  for (std::uint32_t v = 1; v <= n; ++v)
    if (!listed[v])
      order.push_back(v);

  Trail trail(n, clauses_);
  if (!trail.initial_scan() || !trail.propagate())
    return std::nullopt;

  struct Decision {
    std::size_t trail_size;
    Lit lit;
    bool flipped;
  };
  std::vector<Decision> decisions;
  std::size_t cursor = 0;

  while (true) {
    while (cursor < order.size() &&
           trail.value(Lit(Var{order[cursor]}, true)) != 0)
      ++cursor;
    if (cursor == order.size())
      break;

    Lit pick(Var{order[cursor]}, false);
    decisions.push_back({trail.size(), pick, false});
    trail.assign(pick);
    while (!trail.propagate()) {
      // Chronological backtracking to the last unflipped decision.
      while (!decisions.empty() && decisions.back().flipped) {
        trail.undo_to(decisions.back().trail_size);
        decisions.pop_back();
      }
      if (decisions.empty())
        return std::nullopt;
      Decision &d = decisions.back();
      trail.undo_to(d.trail_size);
      d.flipped = true;
      d.lit = ~d.lit;
      trail.assign(d.lit);
      cursor = 0;
    }
  }

  std::vector<bool> model(n + 1, false);
  for (std::uint32_t v = 1; v <= n; ++v)
    model[v] = trail.value(Lit(Var{v}, true)) > 0;
  return model;
}

std::optional<std::vector<bool>> solve_cnf(const CnfFormula &f) {
  return Solver(f).solve();
}

std::set<Assignment> enumerate_projected_models(const CnfFormula &f,
                                                std::span<const Var> vars) {
  if (vars.size() > 20)
    throw Error("enumerate_projected_models: more than 20 variables");
  Solver solver(f);
  std::set<Assignment> models;
  while (auto m = solver.solve(vars)) {
    Assignment mask = 0;
    std::vector<Lit> block;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      bool value = vars[k].id < m->size() && (*m)[vars[k].id];
      if (value)
        mask |= Assignment{1} << k;
      block.emplace_back(vars[k], !value);
    }
    models.insert(mask);
    solver.add_clause(block);
  }
  return models;
}

std::vector<Var> input_vars(const RawConstraint &r) {
  std::vector<Var> vars;
  for (const auto &t : r.terms)
    vars.push_back(t.lit.var());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

namespace {

CnfFormula encode_for_check(EncoderKind e, const RawConstraint &r,
                            std::span<const Var> vars, std::size_t limit) {
  if (vars.size() > limit)
    throw Error("propagation check limited to " + std::to_string(limit) +
                " variables");
  VarAllocator alloc(vars.empty() ? 1 : vars.back().id + 1);
  return encode_cnf(e, r, alloc);
}

} // namespace

PacResult check_pac(EncoderKind e, const RawConstraint &r) {
  auto vars = input_vars(r);
  CnfFormula f = encode_for_check(e, r, vars, 6);
  PacResult result;
  for_each_partial(vars, [&](const PartialAssignment &sigma) {
    if (!result.pass)
      return;
    AcResult ac = ac_forced_literals(r, sigma);
    if (ac.inconsistent)
      return;
    auto assumptions = to_assumptions(sigma);
    UpResult up = unit_propagate(f, assumptions);
    std::vector<Lit> up_inputs;
    for (Lit l : up.forced)
      if (std::binary_search(vars.begin(), vars.end(), l.var()))
        up_inputs.push_back(l);
    if (up.conflict() || up_inputs != ac.forced) {
      result.pass = false;
      result.sigma = sigma;
      result.up_forced = std::move(up_inputs);
      result.ac_forced = ac.forced;
      result.up_conflict = up.conflict();
    }
  });
  return result;
}

PicResult check_pic(EncoderKind e, const RawConstraint &r) {
  auto vars = input_vars(r);
  CnfFormula f = encode_for_check(e, r, vars, 6);
  PicResult result;
  for_each_partial(vars, [&](const PartialAssignment &sigma) {
    if (!result.pass || !ac_forced_literals(r, sigma).inconsistent)
      return;
    auto assumptions = to_assumptions(sigma);
    if (!unit_propagate(f, assumptions).conflict()) {
      result.pass = false;
      result.sigma = sigma;
    }
  });
  return result;
}

PicResult check_complete_detection(EncoderKind e, const RawConstraint &r) {
  auto vars = input_vars(r);
  CnfFormula f = encode_for_check(e, r, vars, 16);
  PicResult result;
  std::map<std::uint32_t, bool> values;
  for (Assignment mask = 0; mask < (Assignment{1} << vars.size()); ++mask) {
    for (std::size_t k = 0; k < vars.size(); ++k)
      values[vars[k].id] = (mask >> k) & 1U;
    if (evaluate(r, values))
      continue;
    auto assumptions = to_assumptions(values);
    if (!unit_propagate(f, assumptions).conflict()) {
      result.pass = false;
      result.sigma = values;
      break;
    }
  }
  return result;
}

} // namespace pbenc::verify
