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


#include "atrbench/choice.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"

namespace atrbench {

namespace {

bool IsSingleton(const RationalTree& t) {
  RationalTree p = Prune(t);
  if (p.empty()) return false;
  for (NodeId q = 0; q < p.size(); ++q)
    if (p.edges(q).size() != 1) return false;
  return true;
}

// Number of paths, capped at 2.
size_t PathsUpToTwo(const RationalTree& t) {
  auto n = FinitePathCount(t);
  return n ? std::min<size_t>(*n, 2) : 2;
}

}  // namespace

Lasso ChoiceC(const RationalTree& t) {
  auto p = LassoEnumerator(t).Next();
  if (!p) Fail(ErrorKind::kEmptySet, "closed choice on the empty set");
  return *p;
}

Lasso ChoiceUC(const RationalTree& t) {
  if (!IsSingleton(t)) Fail(ErrorKind::kNotSingleton, "unique choice on a set that is not a singleton");
  return UniquePathFrom(Prune(t), {});
}

std::pair<Lasso, bool> ChoiceTC(const RationalTree& t) {
  auto p = LassoEnumerator(t).Next();
  if (!p) return {Lasso(), false};
  return {*p, true};
}

std::vector<int> SepOracle(const TreePairs& pairs) {
  std::vector<int> bits;
  for (size_t n = 0; n < pairs.size(); ++n) {
    bool s = HasPath(pairs[n].first), t = HasPath(pairs[n].second);
    if (s && t) Fail(ErrorKind::kDomain, "pair " + std::to_string(n) + ": both sides have paths");
    bits.push_back(s ? 0 : 1);
  }
  return bits;
}

std::vector<int> DcaOracle(const TreePairs& pairs, bool weak) {
  for (size_t n = 0; n < pairs.size(); ++n) {
    auto where = "pair " + std::to_string(n) + ": ";
    if (weak) {
      if (PathsUpToTwo(pairs[n].first) + PathsUpToTwo(pairs[n].second) != 1)
        Fail(ErrorKind::kDomain, where + "the sides must hold exactly one path in total");
    } else if (HasPath(pairs[n].first) == HasPath(pairs[n].second)) {
      Fail(ErrorKind::kDomain, where + "exactly one side must have a path");
    }
  }
  return SepOracle(pairs);
}

std::vector<int> WscaOracle(const std::vector<RationalTree>& trees) {
  std::vector<int> bits;
  for (size_t n = 0; n < trees.size(); ++n) {
    size_t k = PathsUpToTwo(trees[n]);
    if (k > 1) Fail(ErrorKind::kDomain, "tree " + std::to_string(n) + " has more than one path");
    bits.push_back(static_cast<int>(k));
  }
  return bits;
}

std::pair<RationalTree, RationalTree> PrefixSplit(const RationalTree& t, const Word& prefix) {
  if (t.empty() || prefix.empty()) return {t, RationalTree()};
  RationalTree near, away;
  // Comparable with the prefix: a chain along the prefix, then a copy of t
  // below its end.
  std::map<NodeId, NodeId> below;
  std::function<NodeId(NodeId)> copy = [&](NodeId q) {
    auto it = below.find(q);
    if (it != below.end()) return it->second;
    NodeId c = near.AddNode("t" + t.name(q));
    below[q] = c;
    for (auto [a, d] : t.edges(q)) near.AddEdge(c, a, copy(d));
    return c;
  };
  NodeId cur = near.AddNode("s0");
  near.SetRoot(cur);
  NodeId q = t.root();
  for (size_t i = 0; i < prefix.size(); ++i) {
    auto it = t.edges(q).find(prefix[i]);
    if (it == t.edges(q).end()) break;
    q = it->second;
    NodeId next = i + 1 == prefix.size() ? copy(q) : near.AddNode("s" + std::to_string(i + 1));
    near.AddEdge(cur, prefix[i], next);
    cur = next;
  }
  // Not extending the prefix: t times "matched k letters so far", k <
  // |prefix|; a node at k = |prefix| is dropped.
  {
    std::map<std::pair<NodeId, size_t>, NodeId> id;
    std::deque<std::pair<NodeId, size_t>> queue{{t.root(), 0}};
    id[{t.root(), 0}] = away.AddNode("p0");
    away.SetRoot(0);
    while (!queue.empty()) {
      auto [q, k] = queue.front();
      queue.pop_front();
      NodeId src = id.at({q, k});
      for (auto [a, d] : t.edges(q)) {
        size_t nk = k == prefix.size() + 1 ? k : (k < prefix.size() && a == prefix[k] ? k + 1 : prefix.size() + 1);
        if (nk == prefix.size()) continue;
        auto [it, fresh] = id.emplace(std::make_pair(d, nk), away.size());
        if (fresh) {
          away.AddNode("p" + std::to_string(it->second));
          queue.push_back({d, nk});
        }
        away.AddEdge(src, a, it->second);
      }
    }
  }
  return {near, away};
}

UcViaWdcaRun UcViaWdca(const RationalTree& t) {
  if (!IsSingleton(t)) Fail(ErrorKind::kDomain, "input is not a singleton");
  UcViaWdcaRun run;
  const size_t n = Prune(t).size();
  for (size_t i = 0; i < 3 * n; ++i) {
    bool found = false;
    for (Nat a = 0; !found; ++a) {
      Word probe = run.digits;
      probe.push_back(a);
      ++run.queries;
      if (DcaOracle({PrefixSplit(t, probe)}, true)[0] == 0) {
        run.digits.push_back(a);
        found = true;
      }
    }
  }
  auto p = Lasso::FromPrefix(run.digits, n);
  if (!p) Fail(ErrorKind::kValidation, "no lasso of size <= node count fits the digits");
  run.point = *p;
  return run;
}

bool TreeSideValid(const RationalTree& t, const RationalTree& sub) {
  if (sub.empty() || !ModulusOfPerfectness(sub).modulus) return false;
  // Every word of sub lies in t: simulate both graphs together.
  if (t.empty()) return false;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::deque<std::pair<NodeId, NodeId>> queue{{sub.root(), t.root()}};
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (!seen.insert({a, b}).second) continue;
    for (auto [l, d] : sub.edges(a)) {
      auto it = t.edges(b).find(l);
      if (it == t.edges(b).end()) return false;
      queue.push_back({d, it->second});
    }
  }
  return true;
}

TwoSidedAnswer PttTwoSided(const RationalTree& t, bool strong, size_t max_size) {
  TwoSidedAnswer ans;
  RationalTree k = PerfectKernel(t);
  if (!k.empty()) {
    ans.tree = k;
    ans.tree_side = true;
    ans.list.card = 0;
    ans.list.points = {Lasso()};
    return ans;
  }
  ans.tree.SetRoot(ans.tree.AddNode("f"));
  ans.list = ListPaths(t, max_size);
  if (!strong) ans.list.card = 0;
  return ans;
}

Strategy LeastMoveStrategy(const BoundedGame& g, int player) {
  Strategy s;
  s.player = player;
  for (const Word& p : g.MovePositions(player)) s.choice[p] = g.ValidMoves(p).front();
  return s;
}

std::pair<Strategy, Strategy> DetTwoSided(const BoundedGame& g) {
  auto sol = SolveGame(g);
  if (sol.winner == 1) return {sol.strategy, LeastMoveStrategy(g, 2)};
  return {LeastMoveStrategy(g, 1), sol.strategy};
}

}  // namespace atrbench
