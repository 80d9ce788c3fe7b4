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

// Brute-force reference implementations used by the tests. They work on
// the unfolding word by word and avoid the graph algorithms of the library.

#ifndef ATRBENCH_TESTS_ORACLES_HPP_
#define ATRBENCH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "atrbench/lasso.hpp"
#include "atrbench/tree.hpp"

namespace atrbench::oracle {

// Any walk longer than the node count repeats a node, so an infinite
// branch exists iff the unfolding reaches depth |nodes|+1.
inline bool HasInfiniteBranch(const RationalTree& t) {
  if (t.empty()) return false;
  const size_t target = t.size() + 1;
  std::function<bool(NodeId, size_t)> go = [&](NodeId q, size_t depth) {
    if (depth == target) return true;
    for (auto [a, d] : t.edges(q))
      if (go(d, depth + 1)) return true;
    return false;
  };
  return go(t.root(), 0);
}

// Membership of stem.cycle^omega: the prefix of length
// |stem| + (|nodes|+1)|cycle| lies in the tree.
inline bool InPaths(const RationalTree& t, const Word& stem, const Word& cycle) {
  Word w = stem;
  for (size_t k = 0; k <= t.size(); ++k) w.insert(w.end(), cycle.begin(), cycle.end());
  return t.Contains(w);
}

// Every canonical lasso of size <= max_size over labels < bound that is a
// path, found by trying all words.
inline std::vector<Lasso> PathsUpToSize(const RationalTree& t, size_t max_size, Nat bound) {
  std::set<Lasso> out;
  std::vector<Word> all{{}};
  for (size_t len = 1; len <= max_size; ++len) {
    std::vector<Word> next;
    for (const Word& w : all)
      if (w.size() == len - 1)
        for (Nat a = 0; a < bound; ++a) {
          Word v = w;
          v.push_back(a);
          next.push_back(v);
        }
    all.insert(all.end(), next.begin(), next.end());
  }
  for (const Word& s : all)
    for (const Word& c : all) {
      if (c.empty() || s.size() + c.size() > max_size) continue;
      if (InPaths(t, s, c)) out.insert(Lasso(s, c));
    }
  return {out.begin(), out.end()};
}

// Words of length <= max_len over labels < bound leading from q back to q.
inline std::vector<Word> Loops(const RationalTree& t, NodeId q, size_t max_len) {
  std::vector<Word> out;
  Word w;
  std::function<void(NodeId)> go = [&](NodeId p) {
    if (!w.empty() && p == q) out.push_back(w);
    if (w.size() == max_len) return;
    for (auto [a, d] : t.edges(p)) {
      w.push_back(a);
      go(d);
      w.pop_back();
    }
  };
  go(q);
  return out;
}

inline bool LiveFrom(const RationalTree& t, NodeId q) {
  return HasInfiniteBranch(t.Rerooted(q));
}

// [T] is uncountable iff some reachable node lies on two loops u, v with
// uv != vu (then {u,v}^omega embeds Cantor space); loops of length <= 2n
// suffice on an n-node graph.
inline bool Uncountable(const RationalTree& t) {
  if (t.empty()) return false;
  const size_t n = t.size();
  std::vector<Word> reach_words = {Word{}};
  std::set<NodeId> reach;
  std::function<void(NodeId, size_t)> mark = [&](NodeId q, size_t depth) {
    if (!reach.insert(q).second) return;
    if (depth > n) return;
    for (auto [a, d] : t.edges(q)) mark(d, depth + 1);
  };
  mark(t.root(), 0);
  for (NodeId q : reach) {
    auto loops = Loops(t, q, 2 * n);
    for (size_t i = 0; i < loops.size(); ++i)
      for (size_t j = i + 1; j < loops.size(); ++j) {
        Word uv = loops[i], vu = loops[j];
        uv.insert(uv.end(), loops[j].begin(), loops[j].end());
        vu.insert(vu.end(), loops[i].begin(), loops[i].end());
        if (uv != vu) return true;
      }
  }
  return false;
}

// Height with a single node at height 1, by recursion on the unfolding.
inline size_t Height(const RationalTree& t, NodeId q) {
  size_t best = 0;
  for (auto [a, d] : t.edges(q)) best = std::max(best, Height(t, d));
  return best + 1;
}

}  // namespace atrbench::oracle

#endif  // ATRBENCH_TESTS_ORACLES_HPP_
