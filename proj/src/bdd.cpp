// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/bdd.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pbenc {

namespace {

// Interval endpoint; `inf` stands for -inf on a lower end, +inf on an upper.
struct Endpoint {
  BigInt value;
  bool inf = false;
};

struct Interval {
  Endpoint lo, hi;
};

struct Builder {
  const RawConstraint &raw;
  std::vector<BigInt> suffix; // suffix[i] = sum of coeffs of terms i..n-1
  // Per level: interval lower end -> (upper end, node). Intervals are disjoint.
  std::vector<std::map<BigInt, std::pair<BigInt, Bdd::Ref>>> levels;
  std::map<std::tuple<std::size_t, Bdd::Ref, Bdd::Ref>, Bdd::Ref> unique;
  std::vector<Bdd::Node> nodes;

  explicit Builder(const RawConstraint &r)
      : raw(r), suffix(r.size() + 1), levels(r.size()) {
    for (std::size_t i = r.size(); i-- > 0;)
      suffix[i] = suffix[i + 1] + r.terms[i].coeff;
  }

  std::pair<Interval, Bdd::Ref> build(std::size_t i, const BigInt &k) {
    if (k < 0)
      return {{{0, true}, {-1, false}}, Bdd::kFalse};
    if (k >= suffix[i])
      return {{{suffix[i], false}, {0, true}}, Bdd::kTrue};

    auto &level = levels[i];
    if (auto it = level.upper_bound(k); it != level.begin()) {
      --it;
      if (k <= it->second.first)
        return {{{it->first, false}, {it->second.first, false}},
                it->second.second};
    }

    const BigInt &a = raw.terms[i].coeff;
    auto [hi_iv, hi_ref] = build(i + 1, k - a);
    auto [lo_iv, lo_ref] = build(i + 1, k);

    // Bounds K' at level i reproduce the same (high, low) pair iff
    // K' - a lies in hi_iv and K' lies in lo_iv.
    Interval iv;
    Endpoint shifted_lo{hi_iv.lo.value + a, hi_iv.lo.inf};
    Endpoint shifted_hi{hi_iv.hi.value + a, hi_iv.hi.inf};
    if (shifted_lo.inf)
      iv.lo = lo_iv.lo;
    else if (lo_iv.lo.inf)
      iv.lo = shifted_lo;
    else
      iv.lo = {std::max(shifted_lo.value, lo_iv.lo.value), false};
    if (shifted_hi.inf)
      iv.hi = lo_iv.hi;
    else if (lo_iv.hi.inf)
      iv.hi = shifted_hi;
    else
      iv.hi = {std::min(shifted_hi.value, lo_iv.hi.value), false};

    Bdd::Ref ref;
    if (hi_ref == lo_ref) {
      ref = hi_ref;
    } else {
      auto key = std::make_tuple(i, hi_ref, lo_ref);
      auto found = unique.find(key);
      if (found != unique.end()) {
        ref = found->second;
      } else {
        nodes.push_back({i, hi_ref, lo_ref});
        ref = static_cast<Bdd::Ref>(nodes.size() + 1);
        unique.emplace(key, ref);
      }
    }
    // Below suffix[i] and at or above 0 both ends are finite.
    level.emplace(iv.lo.value, std::make_pair(iv.hi.value, ref));
    return {iv, ref};
  }
};

} // namespace

std::vector<Bdd::Ref> Bdd::node_refs() const {
  std::vector<Ref> refs(nodes_.size());
  for (std::size_t i = 0; i < refs.size(); ++i)
    refs[i] = static_cast<Ref>(i + 2);
  return refs;
}

std::vector<Bdd::Ref> Bdd::preorder() const {
  std::vector<Ref> order;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<Ref> stack;
  if (!is_terminal(root_))
    stack.push_back(root_);
  while (!stack.empty()) {
    Ref r = stack.back();
    stack.pop_back();
    auto idx = static_cast<std::size_t>(r) - 2;
    if (seen[idx])
      continue;
    seen[idx] = true;
    order.push_back(r);
    const Node &n = nodes_[idx];
    if (!is_terminal(n.low))
      stack.push_back(n.low);
    if (!is_terminal(n.high))
      stack.push_back(n.high);
  }
  return order;
}

BigInt Bdd::false_paths() const {
  // Children are created before parents, so one forward pass suffices.
  std::vector<BigInt> count(nodes_.size() + 2);
  count[kFalse] = 1;
  count[kTrue] = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    count[i + 2] = count[static_cast<std::size_t>(nodes_[i].high)] +
                   count[static_cast<std::size_t>(nodes_[i].low)];
  return count[static_cast<std::size_t>(root_)];
}

Bdd build_robdd(const RawConstraint &r) {
  Builder b(r);
  Bdd bdd;
  bdd.root_ = b.build(0, r.bound).second;
  bdd.nodes_ = std::move(b.nodes);
  return bdd;
}

} // namespace pbenc
