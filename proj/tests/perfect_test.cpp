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

#include <functional>
#include <set>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"
#include "atrbench/families.hpp"
#include "atrbench/perfect.hpp"
#include "oracles.hpp"

namespace atrbench {
namespace {

RationalTree T(const char* text) { return ParseTree(text); }

const char* kZeroThenOnes = "root a\nedge a 0 a\nedge a 1 b\nedge b 1 b\n";

// Some reachable strongly connected component of the pruned graph is not a
// simple cycle.
bool SccBranching(const RationalTree& t) {
  RationalTree p = Prune(t);
  auto scc = ComputeScc(p);
  for (size_t c = 0; c < scc.members.size(); ++c)
    if (scc.cyclic[c] && !scc.simple[c]) return true;
  return false;
}

// Cantor-Bendixson rank of a countable set: one less than the most cyclic
// components on a chain of the pruned graph's component order.
int RankByChains(const RationalTree& t) {
  RationalTree p = Prune(t);
  if (p.empty()) return -1;
  auto scc = ComputeScc(p);
  std::vector<int> best(scc.members.size(), -1);
  // Components come out in reverse topological order.
  for (size_t c = 0; c < scc.members.size(); ++c) {
    int down = 0;
    for (NodeId q : scc.members[c])
      for (auto [a, d] : p.edges(q))
        if (scc.comp[d] != c) down = std::max(down, best[scc.comp[d]]);
    best[c] = down + (scc.cyclic[c] ? 1 : 0);
  }
  return best[scc.comp[p.root()]] - 1;
}

size_t PathsThrough(const RationalTree& t, const Word& w) {
  auto q = t.Walk(w);
  if (!q) return 0;
  auto n = FinitePathCount(t.Rerooted(*q));
  return n ? *n : 1000;
}

bool Isolated(const RationalTree& t, const Lasso& p) {
  size_t bound = p.stem().size() + (t.size() + 1) * p.cycle().size();
  for (size_t k = 0; k <= bound; ++k)
    if (PathsThrough(t, p.Prefix(k)) == 1) return true;
  return false;
}

void ForFamily(const std::function<void(const RationalTree&)>& fn) {
  ForEachGraph(4, 2, [&](const SmallGraph& g) { fn(g.ToTree()); });
  ForEachGraph(3, 3, [&](const SmallGraph& g) { fn(g.ToTree()); });
}

TEST(KernelTest, Examples) {
  RationalTree two = T("root a\nedge a 0 a\nedge a 1 a\n");
  EXPECT_EQ(WriteTree(PerfectKernel(two)), WriteTree(two));
  EXPECT_TRUE(PerfectKernel(T("root a\nedge a 0 a\n")).empty());
  EXPECT_TRUE(PerfectKernel(T(kZeroThenOnes)).empty());
  RationalTree mixed = T("root r\nedge r 0 a\nedge r 1 b\nedge a 0 a\nedge a 1 a\nedge b 0 b\n");
  EXPECT_EQ(PerfectKernel(mixed).size(), 2u);
  EXPECT_EQ(PerfectKernel(mixed).edges(0).size(), 1u);
}

// Kernel, census and component shape agree, and both agree with the loop
// oracle; the kernel is perfect and its paths are paths of t.
TEST(KernelTest, TripleAgreement) {
  size_t n = 0, uncountable = 0;
  ForFamily([&](const RationalTree& t) {
    ++n;
    RationalTree k = PerfectKernel(t);
    bool census = ComputePathCensus(t).kind == CensusKind::kUncountable;
    ASSERT_EQ(!k.empty(), census) << WriteTree(t);
    ASSERT_EQ(census, SccBranching(t)) << WriteTree(t);
    ASSERT_EQ(census, oracle::Uncountable(t)) << WriteTree(t);
    if (k.empty()) return;
    ++uncountable;
    ASSERT_TRUE(ModulusOfPerfectness(k).modulus.has_value());
    for (const Lasso& p : LassoEnumerator(k).UpToSize(3)) ASSERT_TRUE(IsPath(t, p));
  });
  EXPECT_GT(uncountable, 0u);
  EXPECT_GT(n, 80000u);
}

TEST(ModulusTest, Examples) {
  auto full = ModulusOfPerfectness(T("root a\nedge a 0 a\nedge a 1 a\n"));
  ASSERT_TRUE(full.modulus);
  EXPECT_EQ(full.modulus->At({}), 1u);
  EXPECT_EQ(full.modulus->At({1, 0, 1}), 1u);
  auto one = ModulusOfPerfectness(T("root a\nedge a 0 a\n"));
  EXPECT_FALSE(one.modulus);
  EXPECT_EQ(one.witness, Word{});
  // Branching only with letters 0 and 3.
  auto wide = ModulusOfPerfectness(T("root a\nedge a 0 a\nedge a 3 a\n"));
  ASSERT_TRUE(wide.modulus);
  EXPECT_EQ(wide.modulus->At({}), 3u);
  EXPECT_FALSE(ModulusOfPerfectness(T("root a\n")).modulus);
  EXPECT_FALSE(ModulusOfPerfectness(T("root a\n")).witness);
}

// Succeeds exactly on trees whose pruned part is nonempty and perfect; the
// values are the least windows holding two incomparable extensions.
TEST(ModulusTest, ExhaustiveExactness) {
  ForFamily([&](const RationalTree& t) {
    RationalTree p = Prune(t);
    bool perfect = !p.empty();
    for (const Word& v : UnfoldingNodes(p, p.size()))
      if (PathsThrough(p, v) < 2) perfect = false;
    auto res = ModulusOfPerfectness(t);
    ASSERT_EQ(res.modulus.has_value(), perfect) << WriteTree(t);
    if (!perfect) {
      if (!p.empty()) ASSERT_LT(PathsThrough(p, *res.witness), 2u);
      return;
    }
    for (const Word& v : UnfoldingNodes(p, 2)) {
      Nat m = res.modulus->At(v);
      auto window = [&](Nat k) {
        size_t count = 0;
        std::function<void(Word&)> go = [&](Word& u) {
          if (u.size() == k) {
            ++count;
            return;
          }
          for (Nat a = 0; a <= k; ++a) {
            u.push_back(a);
            Word full = v;
            full.insert(full.end(), u.begin(), u.end());
            if (p.Contains(full)) go(u);
            u.pop_back();
          }
        };
        Word u;
        go(u);
        return count;
      };
      ASSERT_GE(window(m), 2u);
      for (Nat k = 1; k < m; ++k) ASSERT_LT(window(k), 2u);
    }
  });
}

TEST(OneStepTest, Examples) {
  auto c = MakeOneStepCert(T(kZeroThenOnes));
  auto e = c.Entries(4);
  ASSERT_GE(e.size(), 3u);
  EXPECT_EQ(e[0], (CertEntry{{1}, true, Lasso({}, {1})}));
  EXPECT_EQ(e[1], (CertEntry{{0, 1}, true, Lasso({0}, {1})}));
  EXPECT_EQ(e[2], (CertEntry{{2}, false, Lasso()}));
  EXPECT_EQ(LassoEnumerator(c.residue()).First(5), (std::vector<Lasso>{Lasso()}));
  EXPECT_EQ(c.PointCount(), std::nullopt);

  auto two = MakeOneStepCert(T("root r\nedge r 0 a\nedge r 1 b\nedge a 0 a\nedge b 1 b\n"));
  EXPECT_EQ(two.PointCount(), 2u);
  EXPECT_TRUE(two.residue().empty());
  auto one = MakeOneStepCert(T("root a\nedge a 2 b\nedge b 0 b\n"));
  EXPECT_EQ(one.Entries(100), (std::vector<CertEntry>{{{}, true, Lasso({2}, {0})}}));
  EXPECT_TRUE(one.residue().empty());
  EXPECT_THROW(MakeOneStepCert(T("root a\nedge a 0 a\nedge a 1 a\n")), Error);
  EXPECT_THROW(MakeOneStepCert(T("root a\n")), Error);
}

// On every nonempty non-perfect set of the family: the certificate entries
// up to weight 6 satisfy the four conditions, and the residue is the set of
// non-isolated lassos.
TEST(OneStepTest, ConditionsAndDerivative) {
  const Nat kWeight = 6;
  const size_t kSize = 4;
  ForFamily([&](const RationalTree& t) {
    RationalTree p = Prune(t);
    if (p.empty()) return;
    bool perfect = true;
    for (const Word& v : UnfoldingNodes(p, p.size()))
      if (PathsThrough(p, v) < 2) perfect = false;
    if (perfect) {
      ASSERT_THROW(MakeOneStepCert(t), Error);
      return;
    }
    auto c = MakeOneStepCert(t);
    auto entries = c.Entries(kWeight);
    bool any_bit = false;
    std::set<Word> words;
    for (size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      if (i) ASSERT_TRUE(CanonicalWordLess(entries[i - 1].word, e.word));
      for (const auto& f : entries)
        if (&f != &e) ASSERT_FALSE(IsPrefix(f.word, e.word));
      words.insert(e.word);
      if (e.bit) {
        any_bit = true;
        ASSERT_TRUE(IsPath(t, e.point));
        ASSERT_EQ(e.point.Prefix(e.word.size()), e.word);
        ASSERT_EQ(PathsThrough(p, e.word), 1u);
      } else {
        ASSERT_EQ(PathsThrough(p, e.word), 0u);
        ASSERT_EQ(e.point, Lasso());
      }
    }
    ASSERT_TRUE(any_bit) << WriteTree(t);
    // Condition 4 on every word of weight <= kWeight.
    std::function<void(Word&)> cover = [&](Word& w) {
      if (words.count(w)) return;
      ASSERT_GE(PathsThrough(p, w), 2u) << WriteTree(t) << WordToString(w);
      for (Nat a = 0; WordWeight(w) + 1 + a <= kWeight; ++a) {
        w.push_back(a);
        cover(w);
        w.pop_back();
      }
    };
    Word root;
    cover(root);
    std::set<Lasso> derivative;
    for (const Lasso& q : LassoEnumerator(t).UpToSize(kSize))
      if (!Isolated(t, q)) derivative.insert(q);
    auto res = LassoEnumerator(c.residue()).UpToSize(kSize);
    ASSERT_EQ(std::set<Lasso>(res.begin(), res.end()), derivative) << WriteTree(t);
  });
}

TEST(GlobalTest, Examples) {
  EXPECT_EQ(MakeGlobalCert(T("root a\nedge a 0 a\n")).stages.size(), 1u);
  EXPECT_EQ(MakeGlobalCert(T(kZeroThenOnes)).stages.size(), 2u);
  EXPECT_TRUE(MakeGlobalCert(T("root a\n")).stages.empty());
  EXPECT_THROW(MakeGlobalCert(T("root a\nedge a 0 a\nedge a 1 a\n")), Error);
  EXPECT_EQ(WriteListing(ListPaths(T("root a\nedge a 0 a\n"), 3)), "card 2\n;0\n");
  EXPECT_EQ(WriteListing(ListPaths(T("root a\n"), 3)), "card 1\n");
  auto l = ListPaths(T(kZeroThenOnes), 3);
  EXPECT_EQ(l.card, 0u);
  EXPECT_EQ(l.points, (std::vector<Lasso>{Lasso(), Lasso({}, {1}), Lasso({0}, {1}), Lasso({0, 0}, {1})}));
}

// On every countable set of the family: the stage count is the rank plus
// one (rank = last stage with a nonempty derivative), the listed points are
// the enumerated lassos, and the header is the exact cardinality plus one.
TEST(GlobalTest, ExhaustiveStagesAndPoints) {
  const size_t kSize = 5;
  size_t ranked = 0;
  ForFamily([&](const RationalTree& t) {
    auto census = ComputePathCensus(t);
    if (!census.countable()) return;
    auto g = MakeGlobalCert(t);
    ASSERT_EQ(static_cast<int>(g.stages.size()), RankByChains(t) + 1) << WriteTree(t);
    if (g.stages.size() >= 2) ++ranked;
    auto l = ListPaths(t, kSize);
    ASSERT_EQ(l.points, LassoEnumerator(t).UpToSize(kSize)) << WriteTree(t);
    auto n = FinitePathCount(t);
    ASSERT_EQ(l.card, n ? *n + 1 : 0u);
  });
  EXPECT_GT(ranked, 0u);
}

TEST(CantorTest, Examples) {
  auto two = ListFiniteCantor(T("root r\nedge r 0 a\nedge r 1 b\nedge a 0 a\nedge b 1 b\n"));
  EXPECT_EQ(two.depth, 1u);
  EXPECT_EQ(two.points, (std::vector<Lasso>{Lasso(), Lasso({}, {1})}));
  auto one = ListFiniteCantor(T("root a\nedge a 0 b\nedge b 1 a\n"));
  EXPECT_EQ(one.depth, 0u);
  EXPECT_EQ(one.points, (std::vector<Lasso>{Lasso({}, {0, 1})}));
  // 0^w, 10^w, 11^w.
  auto three = ListFiniteCantor(
      T("root r\nedge r 0 z\nedge z 0 z\nedge r 1 s\nedge s 0 z\nedge s 1 o\nedge o 1 o\n"));
  EXPECT_EQ(three.depth, 2u);
  EXPECT_EQ(three.points.size(), 3u);
  EXPECT_THROW(ListFiniteCantor(T(kZeroThenOnes)), Error);
  EXPECT_THROW(ListFiniteCantor(T("root a\n")), Error);
  EXPECT_THROW(ListFiniteCantor(T("root a\nedge a 2 a\n")), Error);
}

TEST(CantorTest, ExhaustiveTuples) {
  ForEachGraph(4, 2, [&](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    auto census = ComputePathCensus(t);
    if (census.kind != CensusKind::kFiniteList) return;
    auto l = ListFiniteCantor(t);
    ASSERT_EQ(std::set<Lasso>(l.points.begin(), l.points.end()),
              std::set<Lasso>(census.paths.begin(), census.paths.end()));
    ASSERT_EQ(l.points.size(), census.paths.size());
    auto distinct = [&](size_t d) {
      std::set<Word> pre;
      for (const Lasso& q : census.paths) pre.insert(q.Prefix(d));
      return pre.size() == census.paths.size();
    };
    ASSERT_TRUE(distinct(l.depth));
    if (l.depth > 0) ASSERT_FALSE(distinct(l.depth - 1));
    for (size_t i = 0; i < l.cells.size(); ++i)
      ASSERT_EQ(l.points[i].Prefix(l.depth), l.cells[i]);
  });
}

}  // namespace
}  // namespace atrbench
