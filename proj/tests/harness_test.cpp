// Copyright 2026 The atrbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"
#include "atrbench/families.hpp"
#include "atrbench/harness.hpp"
#include "oracles.hpp"

namespace atrbench {
namespace {

Bounds Small() { return {2, 2}; }

TEST(ProblemTest, NamesResolve) {
  EXPECT_EQ(ProblemNames().size(), 19u);
  for (const auto& n : ProblemNames()) EXPECT_EQ(ProblemByName(n).name, n);
  EXPECT_EQ(ProblemByName("product(C, UC)").name, "product(C,UC)");
  EXPECT_EQ(ProblemByName("star(wSCA)").name, "star(wSCA)");
  EXPECT_EQ(ProblemByName("pipeline(UC,singleton-from-first,wList)").name,
            "pipeline(UC,singleton-from-first,wList)");
  EXPECT_THROW(ProblemByName("D"), Error);
  EXPECT_THROW(ProblemByName("pipeline(UC,glue,wList)"), Error);
}

// Every solution the oracle offers passes the validator.
TEST(ProblemTest, SolutionsValidate) {
  for (const auto& n : ProblemNames()) {
    DeskProblem p = ProblemByName(n);
    size_t in_domain = 0;
    for (const Json& x : p.instances(Small())) {
      if (!p.in_domain(x)) continue;
      ++in_domain;
      auto ys = p.solutions(x);
      ASSERT_FALSE(ys.empty()) << n << " " << x.dump();
      for (const Json& y : ys) ASSERT_TRUE(p.valid(x, y)) << n << " " << x.dump() << " " << y.dump();
    }
    EXPECT_GT(in_domain, 0u) << n;
  }
}

std::vector<Lasso> AllLassos(size_t max_size) {
  RationalTree full = ParseTree("root a\nedge a 0 a\nedge a 1 a\n");
  return oracle::PathsUpToSize(full, max_size, 2);
}

// The point validators accept exactly the paths, compared on all lassos of
// size <= 4 over {0,1} against the word-by-word membership test.
TEST(ProblemTest, PointValidatorsAreExact) {
  DeskProblem c = ProblemByName("C"), tc = ProblemByName("TC");
  auto points = AllLassos(4);
  for (const auto& t : DistinctTrees(3, 2)) {
    Json x = TreeJson(t);
    bool nonempty = oracle::HasInfiniteBranch(t);
    for (const Lasso& p : points) {
      bool in = oracle::InPaths(t, p.stem(), p.cycle());
      if (nonempty) ASSERT_EQ(c.valid(x, p.ToString()), in);
      ASSERT_EQ(tc.valid(x, p.ToString()), !nonempty || in);
    }
    EXPECT_FALSE(c.valid(x, "junk"));
  }
}

// Separation validators against the defining rule, over every bit vector.
TEST(ProblemTest, SeparationValidatorsAreExact) {
  DeskProblem sep = ProblemByName("Sep"), dca = ProblemByName("DCA"), wdca = ProblemByName("wDCA");
  for (const Json& x : sep.instances(Small())) {
    auto pairs = PairsOf(x);
    size_t n = pairs.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      Json y = Json::array();
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        int bit = mask >> i & 1;
        y.push_back(bit);
        bool s = oracle::HasInfiniteBranch(pairs[i].first);
        bool t = oracle::HasInfiniteBranch(pairs[i].second);
        if ((s && bit != 0) || (t && bit != 1)) ok = false;
      }
      if (sep.in_domain(x)) ASSERT_EQ(sep.valid(x, y), ok) << x.dump();
      if (dca.in_domain(x)) ASSERT_EQ(dca.valid(x, y), ok) << x.dump();
      if (wdca.in_domain(x)) ASSERT_EQ(wdca.valid(x, y), ok) << x.dump();
    }
    // The oracle offers every valid vector.
    if (sep.in_domain(x)) {
      size_t valid = 0;
      for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Json y = Json::array();
        for (size_t i = 0; i < n; ++i) y.push_back(static_cast<int>(mask >> i & 1));
        valid += sep.valid(x, y);
      }
      EXPECT_EQ(sep.solutions(x).size(), valid);
    }
  }
}

// The game pair validator against full strategy enumeration.
TEST(ProblemTest, DeterminacyValidatorIsExact) {
  DeskProblem det = ProblemByName("Det-Delta");
  for (const Json& x : det.instances(Small())) {
    BoundedGame g = ParseGame(x.get<std::string>());
    auto ones = AllStrategies(g, 1), twos = AllStrategies(g, 2);
    for (const auto& s : ones)
      for (const auto& t : twos) {
        bool s_wins = true, t_wins = true;
        for (const auto& u : twos) s_wins = s_wins && g.Player1Wins(Play(g, s, u));
        for (const auto& u : ones) t_wins = t_wins && !g.Player1Wins(Play(g, u, t));
        Json y = Json::array({WriteStrategy(s), WriteStrategy(t)});
        ASSERT_EQ(det.valid(x, y), s_wins || t_wins);
      }
  }
}

TEST(ProblemTest, Lpo) {
  DeskProblem lpo = ProblemByName("LPO");
  EXPECT_TRUE(lpo.valid(";0", 1));
  EXPECT_FALSE(lpo.valid(";0", 0));
  EXPECT_TRUE(lpo.valid("0,0,1;0", 0));
  EXPECT_FALSE(lpo.valid("0,0,1;0", 2));
  EXPECT_EQ(lpo.instances(Small()).size(), 18u);
}

TEST(ProblemTest, CwoFiniteSolutionsAreUnique) {
  DeskProblem cwo = ProblemByName("CWO");
  Json x = {{"x", "fin(7,2,9)"}, {"y", "fin(2,1)"}};
  auto ys = cwo.solutions(x);
  ASSERT_EQ(ys.size(), 1u);
  EXPECT_EQ(ys[0]["direction"], "succYleX");
  Json bad = ys[0];
  ASSERT_EQ(bad["graph"][0], Json::array({1, 9}));
  bad["graph"][0][1] = 7;
  EXPECT_FALSE(cwo.valid(x, bad));
}

// ---------------------------------------------------------------------------

TEST(ReductionTest, BuiltinsCertify) {
  for (const auto& w : BuiltinWitnesses()) {
    if (w.broken) continue;
    auto r = CheckReduction(ProblemByName(w.f), ProblemByName(w.g), w, Bounds{});
    EXPECT_TRUE(r.certified()) << w.name << "\n" << r.ToText();
    EXPECT_GT(r.instances, 0u) << w.name;
    EXPECT_GE(r.checked, r.instances) << w.name;
  }
}

TEST(ReductionTest, PlantedMistakesAreRefuted) {
  size_t broken = 0;
  for (const auto& w : BuiltinWitnesses()) {
    if (!w.broken) continue;
    ++broken;
    auto r = CheckReduction(ProblemByName(w.f), ProblemByName(w.g), w, Bounds{});
    EXPECT_FALSE(r.certified()) << w.name;
    ASSERT_FALSE(r.counterexamples.empty()) << w.name;
    EXPECT_FALSE(r.counterexamples[0].instance.is_null());
  }
  EXPECT_GE(broken, 5u);
}

TEST(ReductionTest, Identity) {
  auto id = WitnessByName("identity");
  EXPECT_TRUE(id.strong);
  EXPECT_TRUE(CheckReduction(ProblemByName("UC"), ProblemByName("C"), id, Bounds{}).certified());
  auto r = CheckReduction(ProblemByName("C"), ProblemByName("UC"), id, Bounds{});
  EXPECT_FALSE(r.certified());
  EXPECT_EQ(r.counterexamples[0].reason, "H(p) is outside the domain of UC");
}

// The checker counts exactly the failing (instance, solution) pairs.
TEST(ReductionTest, CountsEveryViolation) {
  DeskProblem sep = ProblemByName("Sep");
  ReductionWitness w = WitnessByName("identity");
  w.strong = false;
  // Wrong exactly on the instance whose first pair is (loop, empty).
  std::string loop = "root n0\nedge n0 0 n0\n";
  w.post = [loop](const Json& x, const Json& s) {
    Json y = s;
    if (x.size() == 1 && x[0][0] == loop && x[0][1] == "") y[0] = 1;
    return y;
  };
  auto r = CheckReduction(sep, sep, w, Bounds{});
  EXPECT_EQ(r.failures, 1u);
  EXPECT_EQ(r.counterexamples[0].output, Json::array({1}));
}

TEST(ReductionTest, StrongModeHidesTheInput) {
  ReductionWitness w = WitnessByName("identity");
  bool saw_input = false;
  w.post = [&](const Json& x, const Json& s) {
    saw_input = saw_input || !x.is_null();
    return s;
  };
  EXPECT_TRUE(CheckReduction(ProblemByName("UC"), ProblemByName("C"), w, Bounds{}).certified());
  EXPECT_FALSE(saw_input);
}

TEST(ReductionTest, ReportIsDeterministic) {
  auto w = WitnessByName("sep-via-cwo-flipped");
  auto a = CheckReduction(ProblemByName("Sep"), ProblemByName("CWO"), w, Bounds{}).ToJson();
  auto b = CheckReduction(ProblemByName("Sep"), ProblemByName("CWO"), w, Bounds{}).ToJson();
  EXPECT_EQ(a.dump(), b.dump());
}

// ---------------------------------------------------------------------------

TEST(CombinatorTest, ProductOfChoices) {
  DeskProblem p = ProblemByName("product(C,UC)");
  Json x = {"root a\nedge a 0 a\nedge a 1 a\n", "root a\nedge a 1 b\nedge b 0 b\n"};
  ASSERT_TRUE(p.in_domain(x));
  for (const Json& y : p.solutions(x)) EXPECT_TRUE(p.valid(x, y));
  EXPECT_TRUE(p.valid(x, Json::array({"1;0", "1;0"})));
  EXPECT_FALSE(p.valid(x, Json::array({"1;0", ";0"})));
  EXPECT_FALSE(p.in_domain(Json::array({"", "root a\nedge a 0 a\n"})));
}

TEST(CombinatorTest, StarConcatenatesBits) {
  DeskProblem p = ProblemByName("star(wSCA)");
  std::string loop = "root a\nedge a 0 a\n";
  Json x = {Json::array({loop, ""}), Json::array({""})};
  auto ys = p.solutions(x);
  ASSERT_EQ(ys.size(), 1u);
  EXPECT_EQ(ys[0], Json::parse("[[1,0],[0]]"));
  for (const Json& t : p.instances(Small())) {
    ASSERT_LE(t.size(), 2u);
    if (p.in_domain(t))
      for (const Json& y : p.solutions(t)) EXPECT_TRUE(p.valid(t, y));
  }
}

TEST(CombinatorTest, PipelineExtractsAPoint) {
  DeskProblem p = ProblemByName("pipeline(UC,singleton-from-first,wList)");
  for (const auto& t : DistinctTrees(3, 2)) {
    Json x = TreeJson(t);
    PathCensus c = ComputePathCensus(t);
    ASSERT_EQ(p.in_domain(x), c.countable() && c.kind != CensusKind::kEmpty);
    if (!p.in_domain(x)) continue;
    for (const Json& y : p.solutions(x)) {
      ASSERT_TRUE(p.valid(x, y));
      Lasso q = Lasso::Parse(y.get<std::string>());
      EXPECT_TRUE(oracle::InPaths(t, q.stem(), q.cycle()));
    }
  }
}

TEST(CombinatorTest, LassoTree) {
  for (const Lasso& p : AllLassos(4)) {
    RationalTree t = LassoTree(p);
    ASSERT_EQ(FinitePathCount(t), size_t{1});
    EXPECT_TRUE(oracle::InPaths(t, p.stem(), p.cycle()));
  }
}

// ---------------------------------------------------------------------------

const char* kLoop = "root a\nedge a 0 a\n";

TEST(IfThenElseTest, Examples) {
  DeskProblem c = ProblemByName("C"), uc = ProblemByName("UC");
  TruthName yes = TruthName::Sigma11(ParseTree(kLoop));
  TruthName no = TruthName::Sigma11(ParseTree("root a\n"));
  Json full = "root a\nedge a 0 a\nedge a 1 a\n";
  Json single = "root a\nedge a 1 b\nedge b 0 b\n";
  Json left = IfThenElse(yes, c, full, uc, single);
  EXPECT_TRUE(c.valid(full, left["left"]));
  EXPECT_TRUE(left["right"].is_null());
  Json right = IfThenElse(no, c, full, uc, single);
  EXPECT_EQ(right["right"], "1;0");
  EXPECT_THROW(IfThenElse(yes, c, "", uc, single), Error);
  // The unselected side may be anything.
  EXPECT_NO_THROW(IfThenElse(yes, c, full, uc, ""));
}

// All names over <= 2-node trees of every kind, all (C, UC) instance pairs
// with <= 2 nodes: the output satisfies the definitional disjunction.
TEST(IfThenElseTest, BothSidedExhaustive) {
  DeskProblem c = ProblemByName("C"), uc = ProblemByName("UC");
  auto trees = DistinctTrees(2, 2);
  std::vector<TruthName> names;
  for (const auto& t : trees) {
    names.push_back(TruthName::Sigma11(t));
    names.push_back(TruthName::Pi11(t));
  }
  names.push_back(TruthName::Sierpinski(Lasso()));
  names.push_back(TruthName::Sierpinski(Lasso({0, 1}, {0})));
  size_t checked = 0;
  for (const auto& b : names) {
    bool value = b.kind() == TruthKind::kSierpinski ? b.word() != Lasso()
                 : b.kind() == TruthKind::kSigma11  ? oracle::HasInfiniteBranch(b.tree())
                                                    : !oracle::HasInfiniteBranch(b.tree());
    for (const auto& s : trees)
      for (const auto& t : trees) {
        Json x0 = TreeJson(s), x1 = TreeJson(t);
        bool defined = value ? oracle::HasInfiniteBranch(s) : FinitePathCount(t) == size_t{1};
        if (!defined) {
          EXPECT_THROW(IfThenElse(b, c, x0, uc, x1), Error);
          continue;
        }
        Json out = IfThenElse(b, c, x0, uc, x1);
        ASSERT_TRUE(IfThenElseValid(b, c, x0, uc, x1, out));
        const Json& y = value ? out["left"] : out["right"];
        Lasso p = Lasso::Parse(y.get<std::string>());
        EXPECT_TRUE(oracle::InPaths(value ? s : t, p.stem(), p.cycle()));
        ++checked;
      }
  }
  EXPECT_GT(checked, 100u);
}

// ---------------------------------------------------------------------------

TEST(ExpressionTest, Orders) {
  EXPECT_EQ(CnfType(ParseOrderExpr("sum(nat, fin(1))")), CnfOrdinal::Parse("w+1"));
  EXPECT_EQ(CnfType(ParseOrderExpr("omega(3)")), CnfOrdinal::Parse("w"));
  EXPECT_EQ(CnfType(ParseOrderExpr("succ(sum(nat,nat))")), CnfOrdinal::Parse("w*2+1"));
  EXPECT_EQ(ParseOrderExpr("rat")->Status(), WoStatus::kNotWellOrder);
  EXPECT_EQ(ParseNotation("sum(nat,fin(4,2))").type(), CnfOrdinal::Parse("w+2"));
  EXPECT_EQ(ParseNotation("fin()").type(), CnfOrdinal());
  EXPECT_THROW(ParseNotation("rat"), Error);
  EXPECT_THROW(ParseOrderExpr("sum(nat"), Error);
  EXPECT_THROW(ParseOrderExpr("succ(nat,nat)"), Error);
  EXPECT_THROW(ParseOrderExpr("nat x"), Error);
}

}  // namespace
}  // namespace atrbench
