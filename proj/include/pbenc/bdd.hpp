// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/normalize.hpp"

#include <cstdint>
#include <vector>

namespace pbenc {

/// Reduced ordered BDD of `sum terms <= bound` for a RawConstraint, branching
/// on terms in their stored order. The high edge of a node is the branch where
/// the node's literal is true.
class Bdd {
public:
  using Ref = std::int32_t;
  static constexpr Ref kFalse = 0;
  static constexpr Ref kTrue = 1;

  struct Node {
    std::size_t term; // index into RawConstraint::terms
    Ref high;
    Ref low;
  };

  static bool is_terminal(Ref r) { return r == kFalse || r == kTrue; }

  Ref root() const { return root_; }
  const Node &node(Ref r) const { return nodes_[static_cast<std::size_t>(r) - 2]; }
  /// Decision nodes only; terminals are not counted.
  std::size_t size() const { return nodes_.size(); }
  /// Decision node refs, in creation order (children before parents).
  std::vector<Ref> node_refs() const;
  /// Decision nodes reachable from the root in depth-first order, high first.
  std::vector<Ref> preorder() const;
  /// Number of root-to-False paths.
  BigInt false_paths() const;

private:
  friend Bdd build_robdd(const RawConstraint &r);

  std::vector<Node> nodes_;
  Ref root_ = kTrue;
};

/// Builds the ROBDD by memoizing sub-problems on residual-bound intervals:
/// at each level, the set of remaining bounds K that give the same function of
/// the suffix is an interval, and every K in it maps to one node.
Bdd build_robdd(const RawConstraint &r);

} // namespace pbenc
