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

#include "atrbench/census.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "atrbench/error.hpp"

namespace atrbench {

const char* CensusKindName(CensusKind k) {
  switch (k) {
    case CensusKind::kEmpty: return "empty";
    case CensusKind::kFiniteList: return "finite";
    case CensusKind::kCountablyInfinite: return "countably-infinite";
    case CensusKind::kUncountable: return "uncountable";
  }
  return "?";
}

namespace {

// Whether reading cycle forever from q stays inside the graph.
bool CycleRunsForever(const RationalTree& t, NodeId q, const Word& cycle) {
  std::set<NodeId> seen;
  std::optional<NodeId> cur = q;
  while (seen.insert(*cur).second) {
    cur = t.WalkFrom(*cur, cycle);
    if (!cur) return false;
  }
  return true;
}

bool IsCanonicalPair(const Word& stem, const Word& cycle) {
  Lasso l(stem, cycle);
  return l.stem() == stem && l.cycle() == cycle;
}

}  // namespace

LassoEnumerator::LassoEnumerator(const RationalTree& t) : pruned_(Prune(t)) {
  total_ = FinitePathCount(pruned_);
}

std::vector<Lasso> LassoEnumerator::Bucket(size_t size) const {
  std::vector<Lasso> out;
  if (pruned_.empty() || size == 0) return out;
  const RationalTree& t = pruned_;
  Word stem, cycle;
  // Cycles of the remaining length read from q.
  std::function<void(NodeId, NodeId, size_t)> cycles = [&](NodeId start, NodeId q,
                                                           size_t left) {
    if (left == 0) {
      if (IsCanonicalPair(stem, cycle) && CycleRunsForever(t, start, cycle))
        out.emplace_back(stem, cycle);
      return;
    }
    for (auto [a, d] : t.edges(q)) {
      cycle.push_back(a);
      cycles(start, d, left - 1);
      cycle.pop_back();
    }
  };
  std::function<void(NodeId)> stems = [&](NodeId q) {
    if (stem.size() >= size) return;
    cycles(q, q, size - stem.size());
    for (auto [a, d] : t.edges(q)) {
      stem.push_back(a);
      stems(d);
      stem.pop_back();
    }
  };
  stems(t.root());
  std::sort(out.begin(), out.end());
  return out;
}

void LassoEnumerator::FillBucket() {
  while (pos_ >= bucket_.size()) {
    if (pruned_.empty()) return;
    if (total_ && emitted_ >= *total_) return;
    ++size_;
    bucket_ = Bucket(size_);
    pos_ = 0;
  }
}

std::optional<Lasso> LassoEnumerator::Next() {
  if (pruned_.empty()) return std::nullopt;
  if (total_ && emitted_ >= *total_) return std::nullopt;
  FillBucket();
  if (pos_ >= bucket_.size()) return std::nullopt;
  ++emitted_;
  return bucket_[pos_++];
}

std::vector<Lasso> LassoEnumerator::UpToSize(size_t max_size) {
  std::vector<Lasso> out;
  for (size_t s = 1; s <= max_size; ++s) {
    auto b = Bucket(s);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::vector<Lasso> LassoEnumerator::First(size_t count) {
  std::vector<Lasso> out;
  while (out.size() < count) {
    auto p = Next();
    if (!p) break;
    out.push_back(*p);
  }
  return out;
}

std::optional<size_t> FinitePathCount(const RationalTree& t) {
  RationalTree p = Prune(t);
  if (p.empty()) return 0;
  auto scc = ComputeScc(p);
  for (size_t c = 0; c < scc.members.size(); ++c) {
    if (!scc.cyclic[c]) continue;
    if (!scc.simple[c]) return std::nullopt;
    for (NodeId q : scc.members[c])
      for (auto [a, d] : p.edges(q))
        if (scc.comp[d] != c) return std::nullopt;
  }
  std::vector<std::optional<size_t>> memo(p.size());
  std::function<size_t(NodeId)> count = [&](NodeId q) -> size_t {
    if (memo[q]) return *memo[q];
    size_t r = 0;
    if (scc.cyclic[scc.comp[q]]) {
      r = 1;
    } else {
      for (auto [a, d] : p.edges(q)) r += count(d);
    }
    memo[q] = r;
    return r;
  };
  return count(p.root());
}

PathCensus ComputePathCensus(const RationalTree& t) {
  PathCensus r;
  RationalTree p = Prune(t);
  if (p.empty()) {
    r.kind = CensusKind::kEmpty;
    return r;
  }
  auto scc = ComputeScc(p);
  bool exits = false;
  for (size_t c = 0; c < scc.members.size(); ++c) {
    if (!scc.cyclic[c]) continue;
    if (!scc.simple[c]) {
      r.kind = CensusKind::kUncountable;
      return r;
    }
    for (NodeId q : scc.members[c])
      for (auto [a, d] : p.edges(q))
        if (scc.comp[d] != c) exits = true;
  }
  if (exits) {
    r.kind = CensusKind::kCountablyInfinite;
    return r;
  }
  // Finitely many paths: one per walk from the root into a (terminal)
  // cycle. Build them directly.
  r.kind = CensusKind::kFiniteList;
  Word stem;
  std::function<void(NodeId)> go = [&](NodeId q) {
    if (scc.cyclic[scc.comp[q]]) {
      Word cycle;
      NodeId cur = q;
      do {
        auto [a, d] = *p.edges(cur).begin();
        cycle.push_back(a);
        cur = d;
      } while (cur != q);
      r.paths.emplace_back(stem, cycle);
      return;
    }
    for (auto [a, d] : p.edges(q)) {
      stem.push_back(a);
      go(d);
      stem.pop_back();
    }
  };
  go(p.root());
  std::sort(r.paths.begin(), r.paths.end());
  return r;
}

bool HasPath(const RationalTree& t) { return !Prune(t).empty(); }

bool KbLess(const Word& w, const Word& u) {
  size_t n = std::min(w.size(), u.size());
  for (size_t i = 0; i < n; ++i)
    if (w[i] != u[i]) return w[i] < u[i];
  return w.size() > u.size();
}

KbView::KbView(const RationalTree& t, size_t depth_cap) : tree_(t) {
  sorted_ = UnfoldingNodes(t, depth_cap);
  complete_ = true;
  for (const Word& w : sorted_) {
    if (w.size() == depth_cap && !t.edges(*t.Walk(w)).empty()) {
      complete_ = false;
      break;
    }
  }
  std::sort(sorted_.begin(), sorted_.end(), KbLess);
}

KbView KbOrder(const RationalTree& t, size_t depth_cap) { return KbView(t, depth_cap); }

KbVerdict CheckKbWellOrder(const RationalTree& t) {
  KbVerdict v{true, std::nullopt};
  if (t.empty()) return v;
  const size_t n = t.size();
  // Depth-first materialization that stops at the first walk of length n+1.
  std::vector<Word> nodes;
  Word deep_word;
  bool found_deep = false;
  Word cur;
  std::function<void(NodeId)> dfs = [&](NodeId q) {
    if (cur.size() == n + 1) {
      deep_word = cur;
      found_deep = true;
      return;
    }
    nodes.push_back(cur);
    for (auto [a, d] : t.edges(q)) {
      cur.push_back(a);
      dfs(d);
      cur.pop_back();
      if (found_deep) return;
    }
  };
  dfs(t.root());
  const Word* deep = found_deep ? &deep_word : nullptr;
  if (deep == nullptr) {
    // Finite: the relation must be irreflexive and total, and a total
    // antisymmetric relation is transitive iff the numbers of elements
    // below each element are pairwise distinct.
    std::vector<size_t> below(nodes.size(), 0);
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (KbLess(nodes[i], nodes[i])) {
        v.well_order = false;
        return v;
      }
      for (size_t j = 0; j < nodes.size(); ++j) {
        if (i == j) continue;
        bool ij = KbLess(nodes[i], nodes[j]);
        if (ij == KbLess(nodes[j], nodes[i])) {
          v.well_order = false;
          return v;
        }
        if (ij) ++below[j];
      }
    }
    std::sort(below.begin(), below.end());
    for (size_t i = 0; i < below.size(); ++i)
      if (below[i] != i) v.well_order = false;
    return v;
  }
  // A walk of length n+1 visits some graph node twice; pumping the loop
  // gives an infinite branch whose prefixes descend.
  std::vector<NodeId> states{t.root()};
  for (size_t i = 0; i < deep->size(); ++i)
    states.push_back(*t.WalkFrom(states.back(), Word{(*deep)[i]}));
  for (size_t j = 1; j < states.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (states[i] != states[j]) continue;
      Lasso branch(Word(deep->begin(), deep->begin() + i),
                   Word(deep->begin() + i, deep->begin() + j));
      Word prev, cur;
      prev.reserve(2 * n + 3);
      cur.reserve(2 * n + 3);
      bool descending = true;
      for (size_t k = 1; k <= 2 * n + 2 && descending; ++k) {
        cur.push_back(branch.At(k - 1));
        descending = t.Contains(cur) && KbLess(cur, prev);
        prev.assign(cur.begin(), cur.end());
      }
      if (!descending) Fail(ErrorKind::kValidation, "pumped branch is not descending");
      v.well_order = false;
      v.descending_branch = branch;
      return v;
    }
  }
  Fail(ErrorKind::kValidation, "long walk without a repeated node");
}

}  // namespace atrbench
