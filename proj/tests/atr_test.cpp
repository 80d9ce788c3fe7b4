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

#include <random>

#include "atrbench/atr.hpp"
#include "atrbench/census.hpp"
#include "atrbench/error.hpp"
#include "atrbench/families.hpp"
#include "oracles.hpp"

namespace atrbench {
namespace {

TEST(AtrRunTest, ConstantRule) {
  auto x = NotateFinite(FiniteOrder({1, 2}));
  auto r = AtrRun({}, x, Const0Rule());
  EXPECT_EQ(r.y, (StagePairs{{0, 1}, {0, 2}}));
  EXPECT_TRUE(CheckAtrEquivalence(r, {}, x, Const0Rule()));
}

TEST(AtrRunTest, CardinalityRule) {
  auto x = NotateFinite(FiniteOrder({7, 2, 9}));
  auto r = AtrRun({}, x, CardRule());
  EXPECT_EQ(r.y, (StagePairs{{0, 7}, {1, 2}, {2, 9}}));
  ASSERT_EQ(r.trace.size(), 3u);
  EXPECT_EQ(r.trace[2].rank, CnfOrdinal::Finite(2));
  StagePairs tampered = r.y;
  tampered.erase({1, 2});
  tampered.emplace(5, 2);
  std::string why;
  EXPECT_FALSE(CheckAtrEquivalence({tampered, {}}, {}, x, CardRule(), &why));
  EXPECT_NE(why.find("stage 2"), std::string::npos);
}

TEST(AtrRunTest, EmptyOrder) {
  auto r = AtrRun({}, NotateFinite(FiniteOrder(0)), CardRule());
  EXPECT_TRUE(r.y.empty());
  EXPECT_THROW(RuleByName("jump"), Error);
}

TEST(LeafStripTest, Examples) {
  Forest chain = {ParseTree("root a\nedge a 0 b\n")};
  auto s1 = LeafStripStage(chain, AllNodes(chain));
  EXPECT_EQ(s1[0], (std::vector<bool>{true, false}));
  auto s2 = LeafStripStage(chain, s1);
  EXPECT_EQ(s2[0], (std::vector<bool>{false, false}));
  Forest loop = {ParseTree("root a\nedge a 0 a\n")};
  auto s = AllNodes(loop);
  for (int i = 0; i < 5; ++i) s = LeafStripStage(loop, s);
  EXPECT_TRUE(s[0][0]);
}

// Every tree with <= 4 nodes and labels < 2: a well-founded tree loses its
// root exactly at stage height, and live nodes are never removed.
TEST(LeafStripTest, HeightAndLiveNodes) {
  for (const auto& t : DistinctTrees(4, 2)) {
    if (t.empty()) continue;
    Forest f = {t};
    auto s = AllNodes(f);
    bool wf = !oracle::HasInfiniteBranch(t);
    size_t h = wf ? oracle::Height(t, t.root()) : 0;
    for (size_t stage = 1; stage <= t.size() + 2; ++stage) {
      s = LeafStripStage(f, s);
      if (wf) ASSERT_EQ(s[0][t.root()], stage < h) << WriteTree(t);
      for (NodeId q = 0; q < t.size(); ++q)
        if (oracle::LiveFrom(t, q)) ASSERT_TRUE(s[0][q]);
    }
  }
}

// The rule run through AtrRun agrees with the direct stage iteration.
TEST(LeafStripTest, RuleMatchesStages) {
  Forest f = {ParseTree("root a\nedge a 0 b\nedge b 0 c\nedge a 1 d\nedge d 0 d\n"),
              ParseTree("root a\nedge a 0 b\n")};
  auto r = AtrRun(f, NotateFinite(FiniteOrder(4)), LeafStripRule());
  auto s = AllNodes(f);
  for (size_t i = 0; i < 4; ++i) {
    s = LeafStripStage(f, s);
    std::set<Nat> want;
    for (size_t t = 0; t < f.size(); ++t)
      for (NodeId q = 0; q < f[t].size(); ++q)
        if (s[t][q]) want.insert(Pair(t, q));
    EXPECT_EQ(r.trace[i].produced, want);
  }
}

// 100 seeded random combinations of rule, forest and finite order.
TEST(AtrRunTest, RandomEquivalence) {
  auto trees = DistinctTrees(3, 2);
  std::mt19937 rng(11);
  const std::vector<std::string> names = {"const0", "card", "leafstrip"};
  for (int round = 0; round < 100; ++round) {
    StepRule rule = RuleByName(names[rng() % names.size()]);
    Forest z;
    for (size_t k = rng() % 4; k > 0; --k) z.push_back(trees[rng() % trees.size()]);
    std::vector<Nat> codes;
    for (size_t n = rng() % 7; n > 0; --n) {
      Nat c = 1 + rng() % 50;
      if (std::find(codes.begin(), codes.end(), c) == codes.end()) codes.push_back(c);
    }
    auto x = NotateFinite(FiniteOrder(codes));
    auto r = AtrRun(z, x, rule);
    std::string why;
    ASSERT_TRUE(CheckAtrEquivalence(r, z, x, rule, &why)) << why;
  }
}

RationalTree Loop() { return ParseTree("root a\nedge a 0 a\n"); }
RationalTree Leaf() { return ParseTree("root a\n"); }

TEST(DeltaCaTest, Examples) {
  auto a = DeltaCaViaAtr({{Leaf(), Loop()}});
  EXPECT_EQ(a.bits, std::vector<int>{1});
  EXPECT_EQ(a.order_type, CnfOrdinal::Parse("w+2"));
  EXPECT_EQ(a.stage_ranks.back(), CnfOrdinal::Parse("w+1"));
  EXPECT_EQ(DeltaCaViaAtr({{Loop(), Leaf()}}).bits, std::vector<int>{0});
  EXPECT_EQ(DeltaCaViaAtr({{RationalTree(), Loop()}}).order_type, CnfOrdinal::Finite(2));
  EXPECT_EQ(DeltaCaViaAtr({{RationalTree(), Loop()}}).bits, std::vector<int>{1});
  EXPECT_THROW(DeltaCaViaAtr({{Loop(), Loop()}}), Error);
  EXPECT_THROW(DeltaCaViaAtr({{Leaf(), Leaf()}}), Error);
}

TEST(DeltaCaTest, SinglePairsAgainstCensus) {
  auto trees = DistinctTrees(3, 2);
  for (const auto& a : trees)
    for (const auto& b : trees) {
      bool ap = ComputePathCensus(a).kind != CensusKind::kEmpty;
      bool bp = ComputePathCensus(b).kind != CensusKind::kEmpty;
      if (ap == bp) continue;
      ASSERT_EQ(DeltaCaViaAtr({{a, b}}).bits, std::vector<int>{ap ? 0 : 1});
    }
}

}  // namespace
}  // namespace atrbench
