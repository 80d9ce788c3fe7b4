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


#ifndef ATRBENCH_ATR_HPP_
#define ATRBENCH_ATR_HPP_

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "atrbench/cnf.hpp"
#include "atrbench/orders.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

// Pairs (y, j): y was produced at stage j.
using StagePairs = std::set<std::pair<Nat, Nat>>;

// The parameter of a run: a forest of rational trees.
using Forest = std::vector<RationalTree>;

struct StepRule {
  std::string name;
  // Given Y^j (the pairs of all earlier stages) and the parameter, the set
  // produced at stage j.
  std::function<std::set<Nat>(const StagePairs& below, const Forest& z)> apply;
};

// {0} at every stage.
StepRule Const0Rule();
// {|Y^j|}.
StepRule CardRule();
// Nodes of the forest, coded <tree index, node id>. At the first stage, the
// nodes with a child; later, the nodes with a child in every earlier stage.
StepRule LeafStripRule();
// Const0Rule, CardRule or LeafStripRule by name ("const0", "card",
// "leafstrip"); throws kDomain otherwise.
StepRule RuleByName(const std::string& name);

struct AtrStage {
  Nat element;
  CnfOrdinal rank;
  std::set<Nat> produced;
};

struct AtrResult {
  StagePairs y;
  std::vector<AtrStage> trace;
};

// Iterates the rule along x in order. x must have a finite field.
AtrResult AtrRun(const Forest& z, const NotatedWo& x, const StepRule& rule);

// Re-evaluates the rule at every j in x against the final Y: y in stage j
// iff j in x and y in apply(Y^j, z). Returns false and names the first
// mismatch in *why.
bool CheckAtrEquivalence(const AtrResult& r, const Forest& z, const NotatedWo& x,
                         const StepRule& rule, std::string* why = nullptr);

// One leaf-stripping stage: a node survives iff it has a surviving child.
using Survivors = std::vector<std::vector<bool>>;
Survivors AllNodes(const Forest& forest);
Survivors LeafStripStage(const Forest& forest, const Survivors& current);

// A run of the separation-by-transfinite-recursion construction.
struct DcaRun {
  std::vector<int> bits;
  // Order type of Sum_n (KB(T0_n) * KB(T1_n)) + 1.
  CnfOrdinal order_type;
  // Ranks of the stages actually executed: 0 .. K-1 and the top.
  std::vector<CnfOrdinal> stage_ranks;
  AtrResult result;
};

// bit n = 0 iff the root of T0_n survives leaf stripping along
// Sum_n (KB(T0_n) * KB(T1_n)) + 1. Throws kDomain unless exactly one tree of
// each pair has a path. Stages past K = (total node count + 1) repeat the
// previous stage, so only the first K ranks and the top rank are executed.
DcaRun DeltaCaViaAtr(const std::vector<std::pair<RationalTree, RationalTree>>& instance);

}  // namespace atrbench

#endif  // ATRBENCH_ATR_HPP_
