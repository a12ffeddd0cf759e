// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/encoders.hpp"

#include "pbenc/bdd.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace pbenc {

std::string_view encoder_name(EncoderKind kind) {
  switch (kind) {
  case EncoderKind::Direct:
    return "direct";
  case EncoderKind::Bdd:
    return "bdd";
  case EncoderKind::Adder:
    return "adder";
  case EncoderKind::Watchdog:
    return "watchdog";
  case EncoderKind::Bargraph:
    return "bargraph";
  case EncoderKind::PbBasic:
    return "pb";
  }
  return "?";
}

std::optional<EncoderKind> encoder_from_name(std::string_view name) {
  for (auto k : {EncoderKind::Direct, EncoderKind::Bdd, EncoderKind::Adder,
                 EncoderKind::Watchdog, EncoderKind::Bargraph,
                 EncoderKind::PbBasic})
    if (encoder_name(k) == name)
      return k;
  return std::nullopt;
}

bool is_cnf_encoder(EncoderKind kind) { return kind != EncoderKind::PbBasic; }

//===----------------------------------------------------------------------===//
// Direct and BDD
//===----------------------------------------------------------------------===//

CnfFormula encode_direct(const RawConstraint &r, VarAllocator &) {
  Bdd bdd = build_robdd(r);
  CnfFormula f;
  std::vector<Lit> path;
  // The function is monotone decreasing in every literal, so a low edge never
  // contributes to a violated path and is left out of the clause.
  std::function<void(Bdd::Ref)> walk = [&](Bdd::Ref ref) {
    if (ref == Bdd::kTrue)
      return;
    if (ref == Bdd::kFalse) {
      f.add(path);
      return;
    }
    const auto &n = bdd.node(ref);
    path.push_back(~r.terms[n.term].lit);
    walk(n.high);
    path.pop_back();
    walk(n.low);
  };
  walk(bdd.root());
  return f;
}

BigInt direct_clause_count(const RawConstraint &r) {
  return build_robdd(r).false_paths();
}

CnfFormula encode_bdd(const RawConstraint &r, VarAllocator &alloc) {
  Bdd bdd = build_robdd(r);
  CnfFormula f;
  auto order = bdd.preorder();
  std::vector<Lit> guard(bdd.size() + 2);
  for (Bdd::Ref ref : order)
    guard[static_cast<std::size_t>(ref)] = Lit(f.fresh(alloc), true);
  auto d = [&](Bdd::Ref ref) { return guard[static_cast<std::size_t>(ref)]; };

  if (Bdd::is_terminal(bdd.root())) {
    if (bdd.root() == Bdd::kFalse)
      f.add({});
    return f;
  }
  f.add({d(bdd.root())});
  for (Bdd::Ref ref : order) {
    const auto &n = bdd.node(ref);
    Lit l = r.terms[n.term].lit;
    if (n.high == Bdd::kFalse)
      f.add({~d(ref), ~l});
    else if (n.high != Bdd::kTrue)
      f.add({~d(ref), ~l, d(n.high)});
    if (n.low == Bdd::kFalse)
      f.add({~d(ref)});
    else if (n.low != Bdd::kTrue)
      f.add({~d(ref), d(n.low)});
  }
  return f;
}

//===----------------------------------------------------------------------===//
// Adder network
//===----------------------------------------------------------------------===//

namespace {

void full_adder(CnfFormula &f, VarAllocator &alloc, Lit x, Lit y, Lit z,
                Lit &sum, Lit &carry) {
  sum = Lit(f.fresh(alloc), true);
  carry = Lit(f.fresh(alloc), true);
  Lit s = sum, c = carry;
  f.add({x, y, z, ~s});
  f.add({x, ~y, ~z, ~s});
  f.add({~x, y, ~z, ~s});
  f.add({~x, ~y, z, ~s});
  f.add({~x, y, z, s});
  f.add({x, ~y, z, s});
  f.add({x, y, ~z, s});
  f.add({~x, ~y, ~z, s});
  f.add({~x, ~y, c});
  f.add({~x, ~z, c});
  f.add({~y, ~z, c});
  f.add({x, y, ~c});
  f.add({x, z, ~c});
  f.add({y, z, ~c});
}

void half_adder(CnfFormula &f, VarAllocator &alloc, Lit x, Lit y, Lit &sum,
                Lit &carry) {
  sum = Lit(f.fresh(alloc), true);
  carry = Lit(f.fresh(alloc), true);
  Lit s = sum, c = carry;
  f.add({~x, ~y, ~s});
  f.add({x, y, ~s});
  f.add({~x, y, s});
  f.add({x, ~y, s});
  f.add({~x, ~y, c});
  f.add({x, ~c});
  f.add({y, ~c});
}

bool bit(const BigInt &v, std::size_t j) {
  return boost::multiprecision::bit_test(v, static_cast<unsigned>(j));
}

} // namespace

CnfFormula encode_adder(const RawConstraint &r, VarAllocator &alloc) {
  CnfFormula f;
  std::vector<std::deque<Lit>> buckets;
  for (const auto &t : r.terms) {
    std::size_t width = boost::multiprecision::msb(t.coeff) + 1;
    if (buckets.size() < width)
      buckets.resize(width);
    for (std::size_t j = 0; j < width; ++j)
      if (bit(t.coeff, j))
        buckets[j].push_back(t.lit);
  }

  // outputs[j] is the j-th bit of the sum; nullopt is constant false.
  std::vector<std::optional<Lit>> outputs;
  for (std::size_t j = 0; j < buckets.size(); ++j) {
    while (buckets[j].size() >= 2) {
      Lit sum, carry;
      Lit x = buckets[j].front();
      buckets[j].pop_front();
      Lit y = buckets[j].front();
      buckets[j].pop_front();
      if (!buckets[j].empty()) {
        Lit z = buckets[j].front();
        buckets[j].pop_front();
        full_adder(f, alloc, x, y, z, sum, carry);
      } else {
        half_adder(f, alloc, x, y, sum, carry);
      }
      buckets[j].push_back(sum);
      if (buckets.size() == j + 1)
        buckets.emplace_back();
      buckets[j + 1].push_back(carry);
    }
    outputs.push_back(buckets[j].empty()
                          ? std::nullopt
                          : std::optional<Lit>(buckets[j].front()));
  }

  // sum > b iff some bit j has sum_j = 1, b_j = 0 while every higher 1-bit of
  // b is also set in the sum.
  for (std::size_t j = 0; j < outputs.size(); ++j) {
    if (bit(r.bound, j) || !outputs[j])
      continue;
    std::vector<Lit> clause{~*outputs[j]};
    bool satisfied = false;
    for (std::size_t k = j + 1; k < outputs.size(); ++k) {
      if (!bit(r.bound, k))
        continue;
      if (!outputs[k]) {
        satisfied = true;
        break;
      }
      clause.push_back(~*outputs[k]);
    }
    if (!satisfied)
      f.add(clause);
  }
  return f;
}

//===----------------------------------------------------------------------===//
// Totalizer and watchdogs
//===----------------------------------------------------------------------===//

namespace {

// Merge node of a totalizer, truncated to `cap` outputs.
std::vector<Lit> merge_unary(const std::vector<Lit> &a,
                             const std::vector<Lit> &b, std::size_t cap,
                             CnfFormula &f, VarAllocator &alloc) {
  std::size_t width = std::min(a.size() + b.size(), cap);
  if (a.empty() || b.empty()) {
    const auto &only = a.empty() ? b : a;
    return {only.begin(), only.begin() + static_cast<std::ptrdiff_t>(width)};
  }
  std::vector<Lit> out;
  out.reserve(width);
  for (std::size_t k = 0; k < width; ++k)
    out.emplace_back(f.fresh(alloc), true);
  for (std::size_t j = 0; j <= b.size(); ++j) {
    for (std::size_t i = 0; i <= a.size(); ++i) {
      if (i + j == 0 || i + j > width)
        continue;
      std::vector<Lit> clause;
      if (i > 0)
        clause.push_back(~a[i - 1]);
      if (j > 0)
        clause.push_back(~b[j - 1]);
      clause.push_back(out[i + j - 1]);
      f.add(clause);
    }
  }
  return out;
}

std::vector<Lit> build_totalizer(std::span<const Lit> inputs, std::size_t cap,
                                 CnfFormula &f, VarAllocator &alloc) {
  if (inputs.size() <= 1 || cap == 0)
    return {inputs.begin(),
            inputs.begin() +
                static_cast<std::ptrdiff_t>(std::min(inputs.size(), cap))};
  std::size_t mid = inputs.size() / 2;
  auto left = build_totalizer(inputs.first(mid), cap, f, alloc);
  auto right = build_totalizer(inputs.subspan(mid), cap, f, alloc);
  return merge_unary(left, right, cap, f, alloc);
}

// Unary number: `ones` constant-true positions followed by `lits`.
struct Unary {
  std::size_t ones = 0;
  std::vector<Lit> lits;

  std::size_t size() const { return ones + lits.size(); }
};

Unary halve(const Unary &u) {
  Unary h;
  for (std::size_t pos = 2; pos <= u.size(); pos += 2) {
    if (pos <= u.ones)
      ++h.ones;
    else
      h.lits.push_back(u.lits[pos - u.ones - 1]);
  }
  return h;
}

Unary merge(const Unary &a, const Unary &b, std::size_t cap, CnfFormula &f,
            VarAllocator &alloc) {
  Unary m;
  m.ones = std::min(a.ones + b.ones, cap);
  m.lits = merge_unary(a.lits, b.lits, cap - m.ones, f, alloc);
  return m;
}

std::size_t to_size(const BigInt &v) {
  return static_cast<std::size_t>(v);
}

struct Watchdog {
  enum class Kind { Never, Always, Output } kind = Kind::Never;
  Lit output;
};

// Literal implied by unit propagation once the true literals among `terms`
// weigh more than `bound`. Never/Always when no assignment, or every
// assignment, overflows.
//
// Coefficients are split into binary buckets. A tare T makes bound + 1 + T a
// multiple of 2^p (p = top bit of the largest coefficient), so the watchdog
// is output q = (bound + 1 + T) / 2^p of the unary count of floor((sum+T)/2^p),
// computed bucket by bucket with halved carries.
Watchdog build_watchdog(std::span<const Term> terms, const BigInt &bound,
                        CnfFormula &f, VarAllocator &alloc) {
  if (bound < 0)
    return {Watchdog::Kind::Always, {}};
  BigInt total = 0, maxc = 0;
  for (const auto &t : terms) {
    total += t.coeff;
    maxc = std::max(maxc, t.coeff);
  }
  if (total <= bound)
    return {};

  std::size_t p = boost::multiprecision::msb(maxc);
  BigInt pow = BigInt(1) << p;
  BigInt tare = (pow - (bound + 1) % pow) % pow;
  BigInt q = (bound + 1 + tare) >> p;

  std::vector<std::vector<Lit>> buckets(p + 1);
  for (const auto &t : terms)
    for (std::size_t j = 0; j <= p; ++j)
      if (bit(t.coeff, j))
        buckets[j].push_back(t.lit);

  std::vector<std::size_t> sizes(p + 1), caps(p + 1);
  for (std::size_t j = 0; j <= p; ++j)
    sizes[j] = buckets[j].size() + (bit(tare, j) ? 1 : 0) +
               (j ? sizes[j - 1] / 2 : 0);
  if (BigInt(sizes[p]) < q)
    throw Error("watchdog: unary count too short");
  caps[p] = to_size(q);
  for (std::size_t j = p; j-- > 0;)
    caps[j] = std::min(sizes[j], 2 * caps[j + 1]);

  Unary carry;
  for (std::size_t j = 0; j <= p; ++j) {
    Unary bucket;
    bucket.ones = bit(tare, j) ? 1 : 0;
    bucket.lits = build_totalizer(buckets[j], caps[j], f, alloc);
    carry = merge(bucket, halve(carry), caps[j], f, alloc);
  }

  std::size_t qi = caps[p];
  if (qi <= carry.ones || qi > carry.size())
    throw Error("watchdog: output position out of range");
  return {Watchdog::Kind::Output, carry.lits[qi - carry.ones - 1]};
}

} // namespace

TotalizerResult totalizer(std::span<const Lit> inputs, VarAllocator &alloc) {
  if (inputs.empty())
    throw Error("totalizer needs at least one input");
  TotalizerResult t;
  t.outputs = build_totalizer(inputs, inputs.size(), t.formula, alloc);
  return t;
}

CnfFormula encode_bargraph(const RawConstraint &r, VarAllocator &alloc) {
  CnfFormula f;
  auto w = build_watchdog(r.terms, r.bound, f, alloc);
  if (w.kind == Watchdog::Kind::Output)
    f.add({~w.output});
  else if (w.kind == Watchdog::Kind::Always)
    f.add({});
  return f;
}

CnfFormula encode_watchdog(const RawConstraint &r, VarAllocator &alloc) {
  CnfFormula f;
  std::vector<Term> others;
  others.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    others.clear();
    for (std::size_t k = 0; k < r.size(); ++k)
      if (k != i)
        others.push_back(r.terms[k]);
    BigInt rest = r.bound - r.terms[i].coeff;
    auto w = build_watchdog(others, rest, f, alloc);
    if (w.kind == Watchdog::Kind::Output)
      f.add({~w.output, ~r.terms[i].lit});
    else if (w.kind == Watchdog::Kind::Always)
      f.add({~r.terms[i].lit});
  }
  return f;
}

CnfFormula encode_cnf(EncoderKind kind, const RawConstraint &r,
                      VarAllocator &alloc) {
  switch (kind) {
  case EncoderKind::Direct:
    return encode_direct(r, alloc);
  case EncoderKind::Bdd:
    return encode_bdd(r, alloc);
  case EncoderKind::Adder:
    return encode_adder(r, alloc);
  case EncoderKind::Watchdog:
    return encode_watchdog(r, alloc);
  case EncoderKind::Bargraph:
    return encode_bargraph(r, alloc);
  case EncoderKind::PbBasic:
    break;
  }
  throw Error("encoder '" + std::string(encoder_name(kind)) +
              "' does not produce CNF");
}

//===----------------------------------------------------------------------===//
// Pseudo-Boolean pass-through
//===----------------------------------------------------------------------===//

PbOutputConstraint encode_pb_basic(const RawConstraint &r) {
  // a.~x == a - a.x; then negate to turn <= into >=.
  PbOutputConstraint out;
  BigInt bound = r.bound;
  for (const auto &t : r.terms) {
    if (t.lit.positive()) {
      out.terms.push_back({-t.coeff, t.lit.var()});
    } else {
      bound -= t.coeff;
      out.terms.push_back({t.coeff, t.lit.var()});
    }
  }
  out.bound = -bound;
  return out;
}

} // namespace pbenc
