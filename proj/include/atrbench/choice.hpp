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


// Desk oracles for closed choice, separation and comprehension, and the
// two-sided perfect-set and determinacy problems.

#ifndef ATRBENCH_CHOICE_HPP_
#define ATRBENCH_CHOICE_HPP_

#include <utility>
#include <vector>

#include "atrbench/games.hpp"
#include "atrbench/lasso.hpp"
#include "atrbench/perfect.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

using TreePairs = std::vector<std::pair<RationalTree, RationalTree>>;

// The least lasso of [t] in canonical order. Throws kEmptySet.
Lasso ChoiceC(const RationalTree& t);
// Throws kNotSingleton unless every node of the pruned tree has exactly one
// child.
Lasso ChoiceUC(const RationalTree& t);
// The least lasso with flag true, or (0^w, false) on the empty set.
std::pair<Lasso, bool> ChoiceTC(const RationalTree& t);

// bit n = 0 if [S_n] is nonempty, else 1. Throws kDomain when both have
// paths.
std::vector<int> SepOracle(const TreePairs& pairs);
// Separation restricted to pairs with exactly one nonempty side; with weak
// set, each pair holds exactly one path in total.
std::vector<int> DcaOracle(const TreePairs& pairs, bool weak);
// bit n = 1 iff [T_n] is a singleton. Throws kDomain when some [T_n] has
// two or more paths.
std::vector<int> WscaOracle(const std::vector<RationalTree>& trees);

// The pair ({s : t prefix of s or s prefix of t}, {s : t not prefix of s})
// restricted to the tree, as rational trees.
std::pair<RationalTree, RationalTree> PrefixSplit(const RationalTree& t, const Word& prefix);

// The unique path of t, read digit by digit from weak comprehension
// queries on prefix splits: digit n is the a for which the split at
// (digits so far).a has its path on the first side. After 3 * (pruned node
// count) digits the lasso is the shortest consistent one.
struct UcViaWdcaRun {
  Lasso point;
  Word digits;
  size_t queries = 0;
};
UcViaWdcaRun UcViaWdca(const RationalTree& t);

// Two-sided perfect-set answer: the kernel when [t] is uncountable,
// otherwise the filler single-node tree; the listing when [t] is countable,
// otherwise the filler (0^w repeated, header 0). The strong form carries the
// cardinality header, the weak form reports header 0.
struct TwoSidedAnswer {
  RationalTree tree;
  PathListing list;
  bool tree_side = false;
};
TwoSidedAnswer PttTwoSided(const RationalTree& t, bool strong, size_t max_size);
// Whether the tree part is a nonempty perfect subtree of t.
bool TreeSideValid(const RationalTree& t, const RationalTree& sub);

// The winner's strategy from backward induction paired with the other
// player's strategy that plays the least valid move everywhere.
std::pair<Strategy, Strategy> DetTwoSided(const BoundedGame& g);
Strategy LeastMoveStrategy(const BoundedGame& g, int player);

}  // namespace atrbench

#endif  // ATRBENCH_CHOICE_HPP_
