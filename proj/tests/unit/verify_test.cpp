// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace pbenc;
using namespace pbenc::verify;
using oracle::IntConstraint;

namespace {

Lit L(int d) { return Lit::from_dimacs(d); }

CnfFormula cnf(std::initializer_list<std::initializer_list<int>> clauses) {
  CnfFormula f;
  for (auto c : clauses) {
    std::vector<Lit> lits;
    for (int d : c)
      lits.push_back(L(d));
    f.add(lits);
  }
  return f;
}

// Literals that hold in every extension of sigma satisfying c; nullopt if
// none exists. Plain enumeration over all completions.
std::optional<std::vector<Lit>> forced_by_extensions(const IntConstraint &c,
                                                     const PartialAssignment &sigma) {
  auto vars = oracle::var_ids(c);
  std::vector<int> always_true(vars.size(), 1), always_false(vars.size(), 1);
  bool any = false;
  for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
    bool agrees = true;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      auto it = sigma.find(vars[k]);
      if (it != sigma.end() && it->second != (((mask >> k) & 1U) != 0))
        agrees = false;
    }
    if (!agrees || !oracle::holds(c, mask, vars))
      continue;
    any = true;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      bool v = (mask >> k) & 1U;
      (v ? always_false : always_true)[k] = 0;
    }
  }
  if (!any)
    return std::nullopt;
  std::vector<Lit> out;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (sigma.count(vars[k]))
      continue;
    if (always_true[k])
      out.push_back(Lit(Var{vars[k]}, true));
    if (always_false[k])
      out.push_back(Lit(Var{vars[k]}, false));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(UnitPropagateTest, ChainAndConflict) {
  auto f = cnf({{-1, 2}, {-2, 3}, {-3, -4}});
  std::vector<Lit> a{L(1)};
  auto up = unit_propagate(f, a);
  EXPECT_FALSE(up.conflict());
  EXPECT_EQ(up.forced, (std::vector<Lit>{L(2), L(3), L(-4)}));

  std::vector<Lit> b{L(1), L(4)};
  EXPECT_TRUE(unit_propagate(f, b).conflict());
  std::vector<Lit> c{L(1), L(-1)};
  EXPECT_TRUE(unit_propagate(f, c).conflict());
}

TEST(UnitPropagateTest, UnitAndEmptyClauses) {
  auto f = cnf({{5}, {-5, -6}});
  auto up = unit_propagate(f, {});
  EXPECT_EQ(up.forced, (std::vector<Lit>{L(5), L(-6)}));
  CnfFormula g;
  g.add({});
  EXPECT_TRUE(unit_propagate(g, {}).conflict());
}

TEST(UnitPropagateTest, MonotoneInAssumptions) {
  // Extending the assumptions never retracts a forced literal.
  std::mt19937_64 rng(4);
  for (int round = 0; round < 200; ++round) {
    CnfFormula f;
    for (int k = 0; k < 12; ++k) {
      std::vector<Lit> c;
      int len = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < len; ++j) {
        int v = 1 + static_cast<int>(rng() % 8);
        c.push_back(L(rng() % 2 ? v : -v));
      }
      f.add(c);
    }
    int v = 1 + static_cast<int>(rng() % 8);
    std::vector<Lit> small{L(v)};
    std::vector<Lit> big{L(v), L(v % 8 + 1)};
    auto a = unit_propagate(f, small);
    auto b = unit_propagate(f, big);
    if (a.conflict()) {
      EXPECT_TRUE(b.conflict());
      continue;
    }
    if (b.conflict())
      continue;
    for (Lit l : a.forced)
      if (l != big[1] && l != ~big[1])
        EXPECT_TRUE(std::count(b.forced.begin(), b.forced.end(), l));
      else if (l == ~big[1])
        ADD_FAILURE() << "should have conflicted";
  }
}

TEST(ArcConsistencyTest, IntroExamples) {
  auto r = oracle::raw({{{5, 1}, {3, -2}, {1, 3}}, 8});
  auto ac = ac_forced_literals(r, {{1, true}, {2, false}});
  EXPECT_FALSE(ac.inconsistent);
  EXPECT_EQ(ac.forced, (std::vector<Lit>{L(-3)}));
  EXPECT_TRUE(ac_forced_literals(r, {}).forced.empty());
  EXPECT_TRUE(ac_forced_literals(r, {{1, true}, {2, false}, {3, true}}).inconsistent);
}

TEST(ArcConsistencyTest, MatchesExtensionEnumeration) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 150; ++round) {
    auto c = oracle::random_constraint(rng, 1 + static_cast<int>(rng() % 4), 6);
    auto n = normalize(oracle::to_terms(c), BigInt(c.bound));
    if (!n.residual)
      continue;
    auto vars = oracle::as_vars(oracle::var_ids(c));
    IntConstraint residual;
    for (const auto &t : n.residual->terms)
      residual.terms.push_back({static_cast<std::int64_t>(t.coeff), t.lit.dimacs()});
    residual.bound = static_cast<std::int64_t>(n.residual->bound);
    for_each_partial(std::span<const Var>(vars), [&](const PartialAssignment &s) {
      auto ac = ac_forced_literals(*n.residual, s);
      auto expected = forced_by_extensions(residual, s);
      ASSERT_EQ(ac.inconsistent, !expected.has_value());
      if (expected)
        EXPECT_EQ(ac.forced, *expected);
    });
  }
}

TEST(PartialAssignmentTest, CountsAllThreeValued) {
  std::vector<Var> vars{{1}, {2}, {3}};
  std::size_t count = 0;
  std::set<PartialAssignment> seen;
  for_each_partial(std::span<const Var>(vars), [&](const PartialAssignment &s) {
    ++count;
    seen.insert(s);
  });
  EXPECT_EQ(count, 27u);
  EXPECT_EQ(seen.size(), 27u);
  EXPECT_EQ(to_assumptions({{2, false}, {1, true}}),
            (std::vector<Lit>{L(1), L(-2)}));
}

TEST(EnumerationTest, PbModels) {
  auto r = oracle::raw({{{5, 1}, {3, -2}, {1, 3}}, 8});
  std::vector<Var> vars{{1}, {2}, {3}};
  std::vector<RawConstraint> rs{r};
  auto models = enumerate_pb_models(rs, vars);
  EXPECT_EQ(models.size(), 7u);
  EXPECT_FALSE(models.count(0b101));
  std::vector<Var> too_many;
  for (std::uint32_t i = 1; i <= 21; ++i)
    too_many.push_back(Var{i});
  EXPECT_THROW(enumerate_pb_models(rs, too_many), Error);
}

TEST(SolverTest, AgreesWithTruthTable) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 300; ++round) {
    int nv = 1 + static_cast<int>(rng() % 12);
    int nc = static_cast<int>(rng() % (3 * static_cast<unsigned>(nv) + 4));
    CnfFormula f;
    std::vector<std::vector<int>> cls;
    for (int k = 0; k < nc; ++k) {
      std::vector<int> c;
      for (int j = 0; j < 3; ++j) {
        int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(nv));
        c.push_back(rng() % 2 ? v : -v);
      }
      cls.push_back(c);
      std::vector<Lit> lits;
      for (int d : c)
        lits.push_back(L(d));
      f.add(lits);
    }
    bool sat = false;
    for (std::uint32_t mask = 0; mask < (1U << nv) && !sat; ++mask) {
      bool all = true;
      for (const auto &c : cls) {
        bool any = false;
        for (int d : c) {
          bool v = (mask >> (std::abs(d) - 1)) & 1U;
          any = any || v == (d > 0);
        }
        all = all && any;
      }
      sat = all;
    }
    auto model = solve_cnf(f);
    ASSERT_EQ(model.has_value(), sat) << "round " << round;
    if (model)
      for (const auto &c : f.clauses) {
        bool any = false;
        for (Lit l : c)
          any = any || (*model)[l.var().id] == l.positive();
        EXPECT_TRUE(any);
      }
  }
}

TEST(SolverTest, ProjectedModels) {
  // x3 <-> (x1 and x2), projected on {1,2}: every pair.
  auto f = cnf({{-3, 1}, {-3, 2}, {3, -1, -2}});
  std::vector<Var> vars{{1}, {2}};
  EXPECT_EQ(enumerate_projected_models(f, vars),
            (std::set<Assignment>{0, 1, 2, 3}));
  f.add({L(3)});
  EXPECT_EQ(enumerate_projected_models(f, vars), (std::set<Assignment>{3}));
}

TEST(PropagationCheckTest, PacImpliesPic) {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 40; ++round) {
    auto c = oracle::random_constraint(rng, 1 + static_cast<int>(rng() % 4), 5);
    auto n = normalize(oracle::to_terms(c), BigInt(c.bound));
    if (!n.residual)
      continue;
    for (auto e : kCnfEncoders)
      if (check_pac(e, *n.residual).pass)
        EXPECT_TRUE(check_pic(e, *n.residual).pass) << encoder_name(e);
  }
}

TEST(PropagationCheckTest, RejectsLargeInstances) {
  IntConstraint c;
  for (int i = 1; i <= 7; ++i)
    c.terms.push_back({1, i});
  c.bound = 3;
  EXPECT_THROW(check_pac(EncoderKind::Bdd, oracle::raw(c)), Error);
}

TEST(PropagationCheckTest, AtMostOneOfTwo) {
  auto r = oracle::raw({{{1, 1}, {1, 2}}, 1});
  for (auto e : kCnfEncoders) {
    EXPECT_TRUE(check_pac(e, r).pass) << encoder_name(e);
    EXPECT_TRUE(check_complete_detection(e, r).pass) << encoder_name(e);
  }
}
