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

#include "atrbench/families.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace atrbench {

RationalTree SmallGraph::ToTree() const {
  RationalTree t;
  for (int q = 0; q < n; ++q) t.AddNode();
  if (n > 0) t.SetRoot(0);
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < label_bound; ++a) {
      int d = succ[q * label_bound + a];
      if (d >= 0) t.AddEdge(q, a, d);
    }
  return t;
}

namespace {

void Fill(SmallGraph& g, int slot, int discovered,
          const std::function<void(const SmallGraph&)>& fn) {
  const int b = g.label_bound;
  if (slot == g.n * b) {
    if (discovered == g.n) fn(g);
    return;
  }
  // Every node must be discovered before its own slots are scanned.
  if (slot % b == 0 && slot / b >= discovered) return;
  for (int v = -1; v <= discovered && v < g.n; ++v) {
    g.succ[slot] = v;
    Fill(g, slot + 1, v == discovered ? discovered + 1 : discovered, fn);
  }
  g.succ[slot] = -1;
}

}  // namespace

void ForEachGraph(int max_nodes, int label_bound,
                  const std::function<void(const SmallGraph&)>& fn) {
  for (int n = 1; n <= max_nodes; ++n) {
    SmallGraph g;
    g.n = n;
    g.label_bound = label_bound;
    g.succ.assign(n * label_bound, -1);
    Fill(g, 0, 1, fn);
  }
}

std::string UnfoldingKey(const RationalTree& t) {
  if (t.empty()) return "empty";
  auto reach = ReachableNodes(t);
  std::vector<size_t> cls(t.size(), 0);
  size_t classes = 1;
  while (true) {
    std::map<std::vector<std::pair<Nat, size_t>>, size_t> ids;
    std::vector<size_t> next(t.size(), 0);
    for (NodeId q = 0; q < t.size(); ++q) {
      if (!reach[q]) continue;
      std::vector<std::pair<Nat, size_t>> sig;
      sig.emplace_back(static_cast<Nat>(-1), cls[q]);
      for (auto [a, d] : t.edges(q)) sig.emplace_back(a, cls[d]);
      auto [it, inserted] = ids.emplace(sig, ids.size());
      next[q] = it->second;
    }
    cls = next;
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  // Canonical numbering of classes by breadth-first discovery.
  std::map<size_t, size_t> number;
  std::deque<NodeId> queue{t.root()};
  number[cls[t.root()]] = 0;
  std::ostringstream os;
  std::set<size_t> done;
  while (!queue.empty()) {
    NodeId q = queue.front();
    queue.pop_front();
    if (!done.insert(cls[q]).second) continue;
    os << number[cls[q]] << ":";
    for (auto [a, d] : t.edges(q)) {
      auto [it, inserted] = number.emplace(cls[d], number.size());
      if (inserted) queue.push_back(d);
      os << a << ">" << it->second << ",";
    }
    os << ";";
  }
  return os.str();
}

std::vector<RationalTree> DistinctTrees(int max_nodes, int label_bound) {
  std::vector<RationalTree> out{RationalTree()};
  std::set<std::string> seen{UnfoldingKey(RationalTree())};
  ForEachGraph(max_nodes, label_bound, [&](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    if (seen.insert(UnfoldingKey(t)).second) out.push_back(std::move(t));
  });
  return out;
}

}  // namespace atrbench
