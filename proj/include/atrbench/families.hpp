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

// Exhaustive families of small rational trees.

#ifndef ATRBENCH_FAMILIES_HPP_
#define ATRBENCH_FAMILIES_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "atrbench/tree.hpp"

namespace atrbench {

// A deterministic graph on nodes 0..n-1 with root 0; succ[q*B + a] is the
// target of label a at q, or -1.
struct SmallGraph {
  int n = 0;
  int label_bound = 0;
  std::vector<int> succ;

  RationalTree ToTree() const;
};

// Calls fn once for every graph with 1..max_nodes nodes, all reachable from
// the root, labels < label_bound, with nodes numbered in order of first
// discovery when scanning (node, label) slots in order. Every reachable
// deterministic graph is isomorphic to exactly one of these.
void ForEachGraph(int max_nodes, int label_bound, const std::function<void(const SmallGraph&)>& fn);

// Key identifying the unfolding: two trees present the same tree iff their
// keys agree. Computed from the minimized reachable graph.
std::string UnfoldingKey(const RationalTree& t);

// The empty tree, then one graph per distinct unfolding among ForEachGraph
// outputs, in enumeration order.
std::vector<RationalTree> DistinctTrees(int max_nodes, int label_bound);

}  // namespace atrbench

#endif  // ATRBENCH_FAMILIES_HPP_
