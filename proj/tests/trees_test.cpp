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

#include <set>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"
#include "atrbench/families.hpp"
#include "atrbench/tree.hpp"
#include "oracles.hpp"

namespace atrbench {
namespace {

TEST(TreeFormatTest, RoundTrip) {
  const std::string text =
      "# a comment\n"
      "root r\n"
      "edge x 1 r   # back edge\n"
      "edge r 0 x\n"
      "edge r 2 y\n";
  RationalTree t = ParseTree(text);
  EXPECT_EQ(t.size(), 3u);
  std::string once = WriteTree(t);
  EXPECT_EQ(once, "root r\nedge r 0 x\nedge r 2 y\nedge x 1 r\n");
  EXPECT_EQ(WriteTree(ParseTree(once)), once);
  EXPECT_EQ(ParseTree(once), ParseTree(WriteTree(ParseTree(once))));
}

TEST(TreeFormatTest, UnreachableEdgesSurvive) {
  RationalTree t = ParseTree("root a\nedge b 0 c\nedge c 1 b\n");
  std::string once = WriteTree(t);
  EXPECT_EQ(once, "root a\nedge b 0 c\nedge c 1 b\n");
  EXPECT_EQ(WriteTree(ParseTree(once)), once);
}

TEST(TreeFormatTest, EveryGraphRoundTrips) {
  ForEachGraph(3, 2, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    std::string once = WriteTree(t);
    ASSERT_EQ(WriteTree(ParseTree(once)), once);
    ASSERT_EQ(UnfoldingKey(ParseTree(once)), UnfoldingKey(t));
  });
}

TEST(TreeFormatTest, Errors) {
  EXPECT_THROW(ParseTree("root a\nedge a 0 b\nedge a 0 c\n"), Error);
  EXPECT_THROW(ParseTree("edge a 0 b\n"), Error);
  EXPECT_THROW(ParseTree("root a\nroot b\n"), Error);
  EXPECT_THROW(ParseTree("root a\nedge a x b\n"), Error);
  EXPECT_THROW(ParseTree("root a\nedge a 0\n"), Error);
  EXPECT_THROW(ParseTree("root a-b\n"), Error);
  EXPECT_THROW(ParseTree("node a\n"), Error);
  EXPECT_TRUE(ParseTree("# nothing\n").empty());
}

TEST(TreeFormatTest, TreeLists) {
  auto ts = ParseTreeList("root a\n---\n---\nroot b\nedge b 0 b\n");
  ASSERT_EQ(ts.size(), 3u);
  EXPECT_FALSE(ts[0].empty());
  EXPECT_TRUE(ts[1].empty());
  EXPECT_EQ(ts[2].EdgeCount(), 1u);
  EXPECT_EQ(ParseTreeList(WriteTreeList(ts)).size(), 3u);
}

TEST(WellFoundedTest, Examples) {
  EXPECT_TRUE(IsWellFounded(ParseTree("root a\n")));
  EXPECT_FALSE(IsWellFounded(ParseTree("root a\nedge a 0 a\n")));
  EXPECT_TRUE(IsWellFounded(RationalTree()));
  // A cycle that is not reachable does not count.
  EXPECT_TRUE(IsWellFounded(ParseTree("root a\nedge b 0 b\n")));
}

TEST(WellFoundedTest, AgreesWithUnfoldingSearch) {
  ForEachGraph(4, 2, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    ASSERT_EQ(IsWellFounded(t), !oracle::HasInfiniteBranch(t)) << WriteTree(t);
  });
}

TEST(KbTest, Examples) {
  auto single = KbOrder(ParseTree("root a\n"), 5);
  EXPECT_EQ(single.Sorted(), (std::vector<Word>{{}}));
  auto two = KbOrder(ParseTree("root a\nedge a 0 b\nedge a 1 c\n"), 5);
  EXPECT_EQ(two.Sorted(), (std::vector<Word>{{0}, {1}, {}}));
  EXPECT_TRUE(two.complete());
  auto loop = KbOrder(ParseTree("root r\nedge r 0 a\nedge a 0 a\n"), 4);
  EXPECT_FALSE(loop.complete());
  EXPECT_TRUE(loop.Less({0, 0}, {0}));
  EXPECT_TRUE(loop.Less({0, 0, 0}, {0, 0}));
  auto verdict = CheckKbWellOrder(ParseTree("root r\nedge r 0 a\nedge a 0 a\n"));
  EXPECT_FALSE(verdict.well_order);
  EXPECT_EQ(verdict.descending_branch->ToString(), ";0");
}

// The relation generated by "w below u when w extends u" and "un below um
// when n <= m", closed transitively, computed as a boolean matrix.
std::set<std::pair<Word, Word>> GeneratorClosure(const std::vector<Word>& nodes) {
  std::set<std::pair<Word, Word>> rel;
  for (const Word& w : nodes)
    for (const Word& u : nodes) {
      if (IsPrefix(u, w)) rel.insert({w, u});
      if (!w.empty() && w.size() == u.size() &&
          Word(w.begin(), w.end() - 1) == Word(u.begin(), u.end() - 1) && w.back() <= u.back())
        rel.insert({w, u});
    }
  bool changed = true;
  while (changed) {
    changed = false;
    auto copy = rel;
    for (const auto& [a, b] : copy)
      for (const auto& [c, d] : copy)
        if (b == c && rel.insert({a, d}).second) changed = true;
  }
  return rel;
}

TEST(KbTest, TwoLeavesMatchGeneratorClosure) {
  std::vector<Word> nodes{{}, {0}, {1}};
  auto rel = GeneratorClosure(nodes);
  for (const Word& w : nodes)
    for (const Word& u : nodes) {
      if (w == u) continue;
      EXPECT_EQ(rel.count({w, u}) > 0, KbLess(w, u));
      EXPECT_TRUE(rel.count({w, u}) || rel.count({u, w}));
    }
}

// On deeper trees the literal generator closure leaves a left sibling and
// the children of its right sibling incomparable; the order used here is
// the standard total extension and contains the closure.
TEST(KbTest, GeneratorClosureIsContainedInOrder) {
  ForEachGraph(3, 2, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    if (!IsWellFounded(t)) return;
    auto nodes = UnfoldingNodes(t, 10);
    auto rel = GeneratorClosure(nodes);
    for (const auto& [w, u] : rel)
      if (w != u) ASSERT_TRUE(KbLess(w, u));
  });
  auto nodes = UnfoldingNodes(ParseTree("root a\nedge a 0 b\nedge a 1 c\nedge c 0 b\n"), 5);
  auto rel = GeneratorClosure(nodes);
  EXPECT_FALSE(rel.count({{0}, {1, 0}}) || rel.count({{1, 0}, {0}}));
  EXPECT_TRUE(KbLess({0}, {1, 0}));
}

TEST(KbTest, WellOrderIffWellFoundedSmall) {
  ForEachGraph(3, 3, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    ASSERT_EQ(CheckKbWellOrder(t).well_order, IsWellFounded(t));
  });
}

RationalTree Loop2() { return ParseTree("root a\nedge a 0 a\nedge a 1 a\n"); }

TEST(CensusTest, Examples) {
  EXPECT_EQ(ComputePathCensus(ParseTree("root a\n")).kind, CensusKind::kEmpty);
  auto one = ComputePathCensus(ParseTree("root a\nedge a 0 a\n"));
  EXPECT_EQ(one.kind, CensusKind::kFiniteList);
  ASSERT_EQ(one.paths.size(), 1u);
  EXPECT_EQ(one.paths[0], Lasso());
  EXPECT_EQ(ComputePathCensus(Loop2()).kind, CensusKind::kUncountable);
  auto chain = ComputePathCensus(ParseTree("root a\nedge a 0 a\nedge a 1 b\nedge b 1 b\n"));
  EXPECT_EQ(chain.kind, CensusKind::kCountablyInfinite);
  EXPECT_EQ(ComputePathCensus(RationalTree()).kind, CensusKind::kEmpty);
}

TEST(CensusTest, EnumeratorOrder) {
  LassoEnumerator e(ParseTree("root a\nedge a 0 a\nedge a 1 b\nedge b 1 b\n"));
  auto first = e.First(4);
  ASSERT_EQ(first.size(), 4u);
  EXPECT_EQ(first[0].ToString(), ";0");
  EXPECT_EQ(first[1].ToString(), ";1");
  EXPECT_EQ(first[2].ToString(), "0;1");
  EXPECT_EQ(first[3].ToString(), "0,0;1");
}

// Census and enumerators against word-level brute force on every graph
// with <= 3 nodes and labels < 2, and on every graph with <= 3 nodes and
// labels < 3 for the classification alone.
TEST(CensusTest, AgreesWithBruteForce) {
  ForEachGraph(3, 2, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    auto census = ComputePathCensus(t);
    bool any = oracle::HasInfiniteBranch(t);
    ASSERT_EQ(census.kind == CensusKind::kEmpty, !any);
    ASSERT_EQ(any, !oracle::PathsUpToSize(t, 3, 2).empty());
    ASSERT_EQ(census.kind == CensusKind::kUncountable, oracle::Uncountable(t)) << WriteTree(t);
    auto brute = oracle::PathsUpToSize(t, 6, 2);
    LassoEnumerator e(t);
    auto listed = e.UpToSize(6);
    ASSERT_EQ(listed, brute) << WriteTree(t);
    if (census.kind == CensusKind::kFiniteList) {
      // Finite path sets have all paths within size |nodes|.
      ASSERT_EQ(census.paths, oracle::PathsUpToSize(t, 3, 2));
      LassoEnumerator all(t);
      ASSERT_EQ(all.First(100), census.paths);
    }
    if (census.kind == CensusKind::kCountablyInfinite) {
      ASSERT_GT(oracle::PathsUpToSize(t, 7, 2).size(), oracle::PathsUpToSize(t, 3, 2).size());
    }
  });
  ForEachGraph(3, 3, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    auto census = ComputePathCensus(t);
    ASSERT_EQ(census.kind == CensusKind::kUncountable, oracle::Uncountable(t));
    ASSERT_EQ(census.kind == CensusKind::kEmpty, !HasPath(t));
  });
}

TEST(PruneTest, Examples) {
  EXPECT_TRUE(Prune(ParseTree("root a\nedge a 0 b\n")).empty());
  RationalTree core = Prune(ParseTree("root a\nedge a 0 a\nedge a 1 b\nedge b 0 c\n"));
  EXPECT_EQ(WriteTree(core), "root a\nedge a 0 a\n");
  RationalTree full = ParseTree("root a\nedge a 0 a\nedge a 1 a\n");
  EXPECT_EQ(WriteTree(Prune(full)), WriteTree(full));
}

TEST(PruneTest, IdempotentAndPathPreserving) {
  ForEachGraph(3, 2, [](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    RationalTree p = Prune(t);
    ASSERT_EQ(WriteTree(Prune(p)), WriteTree(p));
    ASSERT_EQ(oracle::PathsUpToSize(p, 5, 2), oracle::PathsUpToSize(t, 5, 2));
    if (!p.empty()) {
      for (NodeId q = 0; q < p.size(); ++q) ASSERT_FALSE(p.edges(q).empty());
    }
  });
}

TEST(FamilyTest, Counts) {
  size_t count = 0;
  ForEachGraph(3, 2, [&](const SmallGraph&) { ++count; });
  EXPECT_EQ(count, 4u + 45u + 816u);
  count = 0;
  ForEachGraph(2, 3, [&](const SmallGraph&) { ++count; });
  EXPECT_EQ(count, 8u + 513u);
  // Distinct unfoldings (they differ by depth 4 on two-node graphs), plus
  // the empty tree.
  std::set<std::vector<Word>> shapes;
  ForEachGraph(2, 2, [&](const SmallGraph& g) {
    auto nodes = UnfoldingNodes(g.ToTree(), 5);
    std::sort(nodes.begin(), nodes.end());
    shapes.insert(nodes);
  });
  EXPECT_EQ(DistinctTrees(2, 2).size(), 1 + shapes.size());
}

TEST(FamilyTest, UnfoldingKeySeparates) {
  auto trees = DistinctTrees(3, 2);
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = i + 1; j < trees.size(); ++j) {
      // Distinct unfoldings differ on some word of length <= 6.
      auto a = UnfoldingNodes(trees[i], 6), b = UnfoldingNodes(trees[j], 6);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ASSERT_NE(a, b);
    }
}

}  // namespace
}  // namespace atrbench
