// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/model.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace pbenc {

namespace {

std::atomic<std::uint64_t> next_model_token{1};

void check_shape(std::span<const BigInt> coeffs,
                 std::span<const Literal> lits) {
  if (lits.empty())
    throw Error("pseudo-Boolean constraint needs at least one literal");
  if (coeffs.size() != lits.size())
    throw Error("coefficient and literal lists differ in length (" +
                std::to_string(coeffs.size()) + " vs " +
                std::to_string(lits.size()) + ")");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] <= 0)
      throw Error("coefficient " + std::to_string(i) + " is nonpositive (" +
                  coeffs[i].str() + ")");
}

} // namespace

void TagContext::set_tags(std::span<const Tag> tags) {
  if (tags.empty())
    throw Error("set_tags needs at least one tag");
  std::vector<Tag> sorted(tags.begin(), tags.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  active_ = std::move(sorted);
}

PbLeqConstraint make_leq(std::span<const BigInt> coeffs,
                         std::span<const Literal> lits, const BigInt &bound,
                         const TagContext &ctx) {
  check_shape(coeffs, lits);
  return PbLeqConstraint{std::vector<BigInt>(coeffs.begin(), coeffs.end()),
                         std::vector<Literal>(lits.begin(), lits.end()), bound,
                         ctx.active()};
}

std::pair<PbLeqConstraint, PbLeqConstraint>
make_eq(std::span<const BigInt> coeffs, std::span<const Literal> lits,
        const BigInt &bound, const TagContext &ctx) {
  check_shape(coeffs, lits);
  BigInt total = 0;
  for (const auto &c : coeffs)
    total += c;
  if (bound < 0 || bound > total)
    throw Error("equality bound " + bound.str() + " outside [0, " +
                total.str() + "]: no assignment can satisfy it");
  std::vector<Literal> negated;
  negated.reserve(lits.size());
  for (const auto &l : lits)
    negated.push_back(~l);
  return {make_leq(coeffs, lits, bound, ctx),
          make_leq(coeffs, std::span<const Literal>(negated), total - bound,
                   ctx)};
}

InputModel::InputModel() : token_(next_model_token.fetch_add(1)) {}

Variable InputModel::new_variable() {
  return Variable(token_, ++variable_count_);
}

void InputModel::add_constraint(PbLeqConstraint q) {
  if (q.lits.empty() || q.coeffs.size() != q.lits.size())
    throw Error("malformed constraint: coefficient/literal lists");
  if (q.tags.empty())
    throw Error("constraint carries no tag");
  for (const auto &l : q.lits)
    if (!owns(l.variable()))
      throw Error("constraint uses variable x" +
                  std::to_string(l.variable().id()) +
                  " that is not registered in this model");
  constraints_.push_back(std::move(q));
}

std::string constraint_to_text(const PbLeqConstraint &q) {
  std::ostringstream os;
  for (std::size_t i = 0; i < q.lits.size(); ++i) {
    if (i)
      os << " + ";
    os << q.coeffs[i] << '.' << (q.lits[i].positive() ? "" : "~") << 'x'
       << q.lits[i].variable().id();
  }
  os << " <= " << q.bound;
  return os.str();
}

std::string InputModel::to_text() const {
  std::ostringstream os;
  os << constraints_.size() << " constraints\n";
  for (const auto &q : constraints_) {
    os << constraint_to_text(q) << "  [tags";
    for (std::size_t i = 0; i < q.tags.size(); ++i)
      os << (i ? "," : " ") << q.tags[i];
    os << "]\n";
  }
  return os.str();
}

} // namespace pbenc
