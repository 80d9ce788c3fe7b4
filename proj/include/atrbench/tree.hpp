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

// Rational trees: finite rooted graphs with deterministic natural-number
// edge labels. The tree presented is the set of label words of walks from
// the root.

#ifndef ATRBENCH_TREE_HPP_
#define ATRBENCH_TREE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atrbench/lasso.hpp"
#include "atrbench/nat.hpp"

namespace atrbench {

using NodeId = size_t;

class RationalTree {
 public:
  // The empty tree (no root, no nodes).
  RationalTree() = default;

  // Adds a node; an empty name gets "n<index>".
  NodeId AddNode(const std::string& name = "");
  NodeId FindOrAddNode(const std::string& name);
  std::optional<NodeId> FindNode(const std::string& name) const;
  void SetRoot(NodeId q);
  // Throws kValidation if (src, label) already has a different target.
  void AddEdge(NodeId src, Nat label, NodeId dst);

  bool empty() const { return !root_.has_value(); }
  NodeId root() const;
  size_t size() const { return names_.size(); }
  const std::string& name(NodeId q) const { return names_[q]; }
  const std::map<Nat, NodeId>& edges(NodeId q) const { return edges_[q]; }
  size_t EdgeCount() const;
  // One more than the largest label used, 0 without edges.
  Nat LabelBound() const;

  // Graph node reached by reading w from the root, if w is in the tree.
  std::optional<NodeId> Walk(const Word& w) const;
  std::optional<NodeId> WalkFrom(NodeId q, const Word& w) const;
  bool Contains(const Word& w) const { return Walk(w).has_value(); }

  // Same graph rerooted at q (q must exist).
  RationalTree Rerooted(NodeId q) const;

  friend bool operator==(const RationalTree& a, const RationalTree& b) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::map<Nat, NodeId>> edges_;
  std::optional<NodeId> root_;
};

// Line format: "root <id>" then "edge <src> <label> <dst>" lines; '#'
// starts a comment. A file without a root line is the empty tree.
RationalTree ParseTree(const std::string& text);
// Writes the root line, then edges grouped by source in breadth-first order
// from the root (labels ascending), then unreachable parts. Idempotent under
// ParseTree.
std::string WriteTree(const RationalTree& t);

// Several trees in one file, separated by lines holding only "---".
std::vector<RationalTree> ParseTreeList(const std::string& text);
std::string WriteTreeList(const std::vector<RationalTree>& ts);

std::vector<bool> ReachableNodes(const RationalTree& t);
// Nodes (reachable or not) from which an infinite walk starts.
std::vector<bool> LiveNodes(const RationalTree& t);

// True iff no cycle is reachable from the root.
bool IsWellFounded(const RationalTree& t);

// Restriction to reachable nodes with an infinite walk. Empty if the root
// has none. Node names are kept.
RationalTree Prune(const RationalTree& t);

// Strongly connected components (Tarjan). comp[q] is the component index
// of q; components come out in reverse topological order.
struct SccDecomposition {
  std::vector<size_t> comp;
  std::vector<std::vector<NodeId>> members;
  // A component is cyclic if it has an internal edge.
  std::vector<bool> cyclic;
  // A cyclic component is a simple cycle if each member has exactly one
  // internal out-edge.
  std::vector<bool> simple;
};
SccDecomposition ComputeScc(const RationalTree& t);

// Height of a well-founded tree: a single node has height 1. Requires
// IsWellFounded(t); the empty tree has height 0.
size_t TreeHeight(const RationalTree& t);
// Number of nodes of the unfolding of a well-founded tree.
Nat UnfoldingSize(const RationalTree& t);

// All unfolding nodes of length <= max_depth.
std::vector<Word> UnfoldingNodes(const RationalTree& t, size_t max_depth);

// Whether the lasso is an infinite path through t.
bool IsPath(const RationalTree& t, const Lasso& p);

}  // namespace atrbench

#endif  // ATRBENCH_TREE_HPP_
