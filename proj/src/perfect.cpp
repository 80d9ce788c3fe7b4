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


#include "atrbench/perfect.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"

namespace atrbench {

namespace {

constexpr NodeId kNone = static_cast<NodeId>(-1);

// The part of t on kept nodes reachable from the root through kept nodes.
// map[q] is the new id of q, or kNone.
RationalTree Restrict(const RationalTree& t, const std::vector<bool>& keep,
                      std::vector<NodeId>* map = nullptr) {
  RationalTree out;
  std::vector<NodeId> id(t.size(), kNone);
  if (!t.empty() && keep[t.root()]) {
    std::deque<NodeId> queue{t.root()};
    id[t.root()] = out.AddNode(t.name(t.root()));
    out.SetRoot(id[t.root()]);
    while (!queue.empty()) {
      NodeId q = queue.front();
      queue.pop_front();
      for (auto [a, d] : t.edges(q)) {
        if (!keep[d]) continue;
        if (id[d] == kNone) {
          id[d] = out.AddNode(t.name(d));
          queue.push_back(d);
        }
        out.AddEdge(id[q], a, id[d]);
      }
    }
  }
  if (map) *map = id;
  return out;
}

// Nodes of a pruned tree that reach a node with two or more out-edges:
// exactly those whose subtree holds two or more paths.
std::vector<bool> FatNodes(const RationalTree& p) {
  std::vector<bool> fat(p.size(), false);
  bool changed = true;
  for (NodeId q = 0; q < p.size(); ++q) fat[q] = p.edges(q).size() >= 2;
  while (changed) {
    changed = false;
    for (NodeId q = 0; q < p.size(); ++q) {
      if (fat[q]) continue;
      for (auto [a, d] : p.edges(q))
        if (fat[d]) {
          fat[q] = true;
          changed = true;
          break;
        }
    }
  }
  return fat;
}

// Shortest word from the root to each node.
std::vector<std::optional<Word>> ShortestWords(const RationalTree& t) {
  std::vector<std::optional<Word>> w(t.size());
  if (t.empty()) return w;
  std::deque<NodeId> queue{t.root()};
  w[t.root()] = Word{};
  while (!queue.empty()) {
    NodeId q = queue.front();
    queue.pop_front();
    for (auto [a, d] : t.edges(q)) {
      if (w[d]) continue;
      Word x = *w[q];
      x.push_back(a);
      w[d] = x;
      queue.push_back(d);
    }
  }
  return w;
}

}  // namespace

RationalTree PerfectKernel(const RationalTree& t) {
  RationalTree p = Prune(t);
  std::vector<bool> in(p.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId q = 0; q < p.size(); ++q) {
      if (!in[q]) continue;
      // Search inside the set for a node with two edges into the set.
      std::vector<bool> seen(p.size(), false);
      std::deque<NodeId> queue{q};
      seen[q] = true;
      bool branching = false;
      while (!queue.empty() && !branching) {
        NodeId r = queue.front();
        queue.pop_front();
        size_t inside = 0;
        for (auto [a, d] : p.edges(r)) {
          if (!in[d]) continue;
          ++inside;
          if (!seen[d]) {
            seen[d] = true;
            queue.push_back(d);
          }
        }
        branching = inside >= 2;
      }
      if (!branching) {
        in[q] = false;
        changed = true;
      }
    }
  }
  return Restrict(p, in);
}

Nat PerfectnessModulus::At(const Word& v) const {
  auto q = pruned.Walk(v);
  if (!q) Fail(ErrorKind::kDomain, "word " + WordToString(v) + " is not in the tree");
  return at_node[*q];
}

ModulusResult ModulusOfPerfectness(const RationalTree& t) {
  ModulusResult res;
  RationalTree p = Prune(t);
  if (p.empty()) return res;
  const Nat cap = std::max<Nat>({p.size(), p.LabelBound(), 1});
  std::vector<Nat> at(p.size(), 0);
  for (NodeId q = 0; q < p.size(); ++q) {
    for (Nat m = 1; m <= cap && at[q] == 0; ++m) {
      // Walks of length m with letters <= m, counted up to 2.
      std::vector<Nat> cnt(p.size(), 1);
      for (Nat k = 0; k < m; ++k) {
        std::vector<Nat> next(p.size(), 0);
        for (NodeId r = 0; r < p.size(); ++r)
          for (auto [a, d] : p.edges(r))
            if (a <= m) next[r] = std::min<Nat>(2, next[r] + cnt[d]);
        cnt = std::move(next);
      }
      if (cnt[q] >= 2) at[q] = m;
    }
  }
  auto words = ShortestWords(p);
  std::optional<NodeId> bad;
  for (NodeId q = 0; q < p.size(); ++q) {
    if (at[q] != 0) continue;
    if (!bad || CanonicalWordLess(*words[q], *words[*bad])) bad = q;
  }
  if (bad) {
    res.witness = words[*bad];
    return res;
  }
  res.modulus = PerfectnessModulus{p, at};
  return res;
}

Nat WordWeight(const Word& w) {
  Nat s = w.size();
  for (Nat a : w) s = CheckedAdd(s, a);
  return s;
}

bool CanonicalWordLess(const Word& a, const Word& b) {
  Nat wa = WordWeight(a), wb = WordWeight(b);
  return wa != wb ? wa < wb : a < b;
}

Lasso UniquePathFrom(const RationalTree& pruned, const Word& u) {
  auto q = pruned.Walk(u);
  if (!q) Fail(ErrorKind::kDomain, "word " + WordToString(u) + " leaves the tree");
  std::map<NodeId, size_t> seen;
  Word w = u;
  NodeId cur = *q;
  while (!seen.count(cur)) {
    seen[cur] = w.size();
    const auto& e = pruned.edges(cur);
    if (e.size() != 1)
      Fail(ErrorKind::kDomain, "more than one path below " + WordToString(u));
    w.push_back(e.begin()->first);
    cur = e.begin()->second;
  }
  size_t start = seen.at(cur);
  return Lasso(Word(w.begin(), w.begin() + start), Word(w.begin() + start, w.end()));
}

OneStepCert::OneStepCert(RationalTree set) : set_(Prune(set)) {
  fat_ = FatNodes(set_);
  residue_ = Prune(Restrict(set_, fat_));
}

std::vector<CertEntry> OneStepCert::Entries(Nat max_weight) const {
  std::vector<CertEntry> out;
  if (set_.empty()) return out;
  NodeId root = set_.root();
  if (!fat_[root]) {
    out.push_back({{}, true, UniquePathFrom(set_, {})});
    return out;
  }
  Word u;
  std::function<void(NodeId, Nat)> go = [&](NodeId q, Nat weight) {
    for (Nat a = 0; weight + 1 + a <= max_weight; ++a) {
      u.push_back(a);
      auto it = set_.edges(q).find(a);
      if (it == set_.edges(q).end()) {
        out.push_back({u, false, Lasso()});
      } else if (!fat_[it->second]) {
        out.push_back({u, true, UniquePathFrom(set_, u)});
      } else {
        go(it->second, weight + 1 + a);
      }
      u.pop_back();
    }
  };
  go(root, 0);
  std::sort(out.begin(), out.end(),
            [](const CertEntry& x, const CertEntry& y) { return CanonicalWordLess(x.word, y.word); });
  return out;
}

std::optional<size_t> OneStepCert::PointCount() const {
  if (set_.empty()) return 0;
  if (!fat_[set_.root()]) return 1;
  std::vector<NodeId> map;
  RationalTree f = Restrict(set_, fat_, &map);
  std::vector<NodeId> back(f.size());
  for (NodeId q = 0; q < set_.size(); ++q)
    if (map[q] != kNone) back[map[q]] = q;
  std::vector<size_t> thin_children(f.size(), 0);
  for (NodeId x = 0; x < f.size(); ++x)
    for (auto [a, d] : set_.edges(back[x]))
      if (!fat_[d]) ++thin_children[x];
  // Productive: reaches a node with a thin child.
  std::vector<bool> productive(f.size(), false);
  for (NodeId x = 0; x < f.size(); ++x) productive[x] = thin_children[x] > 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId x = 0; x < f.size(); ++x) {
      if (productive[x]) continue;
      for (auto [a, d] : f.edges(x))
        if (productive[d]) {
          productive[x] = changed = true;
          break;
        }
    }
  }
  auto scc = ComputeScc(f);
  for (NodeId x = 0; x < f.size(); ++x)
    if (scc.cyclic[scc.comp[x]] && productive[x]) return std::nullopt;
  std::vector<std::optional<size_t>> memo(f.size());
  std::function<size_t(NodeId)> count = [&](NodeId x) -> size_t {
    if (memo[x]) return *memo[x];
    size_t r = thin_children[x];
    if (productive[x])
      for (auto [a, d] : f.edges(x)) r += count(d);
    memo[x] = r;
    return r;
  };
  return count(f.root());
}

OneStepCert MakeOneStepCert(const RationalTree& t) {
  OneStepCert c(t);
  if (c.set().empty()) Fail(ErrorKind::kDomain, "one-step certificate of the empty set");
  if (std::all_of(c.fat().begin(), c.fat().end(), [](bool b) { return b; }))
    Fail(ErrorKind::kDomain, "one-step certificate of a perfect set");
  return c;
}

GlobalCert MakeGlobalCert(const RationalTree& t) {
  if (!ComputePathCensus(t).countable())
    Fail(ErrorKind::kDomain, "global certificate of an uncountable set");
  GlobalCert g;
  RationalTree cur = Prune(t);
  while (!cur.empty()) {
    g.stages.push_back(MakeOneStepCert(cur));
    cur = g.stages.back().residue();
  }
  return g;
}

namespace {

// Bit-1 entries whose word has length <= max_length.
std::vector<Lasso> StagePoints(const OneStepCert& c, size_t max_length) {
  std::vector<Lasso> out;
  const RationalTree& s = c.set();
  if (s.empty()) return out;
  if (!c.fat()[s.root()]) return {UniquePathFrom(s, {})};
  Word u;
  std::function<void(NodeId)> go = [&](NodeId q) {
    if (u.size() >= max_length) return;
    for (auto [a, d] : s.edges(q)) {
      u.push_back(a);
      if (!c.fat()[d]) out.push_back(UniquePathFrom(s, u));
      else go(d);
      u.pop_back();
    }
  };
  go(s.root());
  return out;
}

}  // namespace

PathListing ListPaths(const RationalTree& t, size_t max_size) {
  GlobalCert g = MakeGlobalCert(t);
  PathListing l;
  size_t total = 0;
  bool infinite = false;
  for (const auto& c : g.stages) {
    auto n = c.PointCount();
    if (!n) infinite = true;
    else total += *n;
  }
  l.card = infinite ? 0 : total + 1;
  // An isolated point stem.cycle^w has its singleton prefix within
  // |stem| + (nodes+1)|cycle| letters.
  const size_t max_length = (Prune(t).size() + 2) * max_size;
  std::set<Lasso> pts;
  for (const auto& c : g.stages)
    for (const Lasso& p : StagePoints(c, max_length))
      if (p.size() <= max_size) pts.insert(p);
  l.points.assign(pts.begin(), pts.end());
  return l;
}

std::string WriteListing(const PathListing& l) {
  std::ostringstream os;
  os << "card " << l.card << "\n";
  for (const Lasso& p : l.points) os << p.ToString() << "\n";
  return os.str();
}

CantorListing ListFiniteCantor(const RationalTree& t) {
  RationalTree p = Prune(t);
  if (p.empty()) Fail(ErrorKind::kDomain, "finite listing of the empty set");
  if (p.LabelBound() > 2) Fail(ErrorKind::kDomain, "not a subset of Cantor space");
  if (!FinitePathCount(p)) Fail(ErrorKind::kDomain, "finite listing of an infinite set");
  auto fat = FatNodes(p);
  CantorListing out;
  for (size_t d = 0;; ++d) {
    std::vector<Word> cells;
    for (const Word& w : UnfoldingNodes(p, d))
      if (w.size() == d) cells.push_back(w);
    bool separated = std::all_of(cells.begin(), cells.end(),
                                 [&](const Word& w) { return !fat[*p.Walk(w)]; });
    if (!separated) continue;
    std::sort(cells.begin(), cells.end());
    out.depth = d;
    out.cells = cells;
    for (const Word& w : cells) out.points.push_back(UniquePathFrom(p, w));
    return out;
  }
}

}  // namespace atrbench
