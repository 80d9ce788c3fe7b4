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


// Desk problems over JSON encodings, reduction witnesses and their checker,
// and the product, finite parallelization and pipeline combinators.
//
// Encodings: trees are tree-file text, points are lasso text ("stem;cycle"),
// games and strategies are their file text, tree pairs are arrays
// [S, T], bit vectors are arrays of 0/1.

#ifndef ATRBENCH_HARNESS_HPP_
#define ATRBENCH_HARNESS_HPP_

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "atrbench/games.hpp"
#include "atrbench/lasso.hpp"
#include "atrbench/orders.hpp"
#include "atrbench/tree.hpp"
#include "atrbench/truth.hpp"

namespace atrbench {

using Json = nlohmann::json;

// Instance families: trees have <= max_nodes nodes and labels < 2; tuples
// of two trees use <= max(1, max_nodes - 2) nodes; games have move bound 2
// and depth <= max_depth; points have size <= max_depth + 1.
struct Bounds {
  int max_nodes = 3;
  size_t max_depth = 3;
};

// Listings carry the points of size <= this.
inline constexpr size_t kListSize = 4;

struct DeskProblem {
  std::string name;
  std::function<std::vector<Json>(const Bounds&)> instances;
  std::function<bool(const Json&)> in_domain;
  // Decides y in f(x); x must be in the domain.
  std::function<bool(const Json& x, const Json& y)> valid;
  // All solutions when there are finitely many, otherwise a canonical
  // subset. x must be in the domain.
  std::function<std::vector<Json>(const Json& x)> solutions;
};

// One of C, UC, TC, Sep, DCA, wDCA, wSCA, List, wList, PTT1, PTT2, wPTT2,
// FindWS-Sigma, FindWS-Pi, Det-Delta, Det-Sigma, CWO, ATR, LPO, or
// "product(F,G)", "star(F)", "pipeline(F,glue,G)" over those. Throws
// kDomain for unknown names.
DeskProblem ProblemByName(const std::string& name);
std::vector<std::string> ProblemNames();

// Instances are pairs [x, z]; solutions pairs [y, w].
DeskProblem Product(const DeskProblem& f, const DeskProblem& g);
// Instances are arrays of f-instances of length <= 2.
DeskProblem StarFinite(const DeskProblem& f);
// Runs g on x, glues (x, g-solution) into an f-instance and solves f. A
// y is valid if it solves the glued instance for some g-solution.
using Glue = std::function<Json(const Json& x, const Json& s)>;
DeskProblem Pipeline(const DeskProblem& f, const std::string& glue_name, const Glue& glue,
                     const DeskProblem& g);
// "singleton-from-first": the tree whose only path is the first listed
// point. Throws kDomain for other names.
Glue GlueByName(const std::string& name);

struct ReductionWitness {
  std::string name;
  // Problems the witness is meant for; empty for generic witnesses.
  std::string f, g;
  bool strong = false;
  std::function<Json(const Json& x)> pre;
  // In strong mode x is null.
  std::function<Json(const Json& x, const Json& s)> post;
  // Planted mistakes, expected to be refuted.
  bool broken = false;
};

std::vector<ReductionWitness> BuiltinWitnesses();
// Built-ins plus "identity" (generic, strong). Throws kDomain otherwise.
ReductionWitness WitnessByName(const std::string& name);

struct Counterexample {
  Json instance;
  Json oracle_instance;
  Json oracle_solution;
  Json output;
  std::string reason;
};

struct ReductionReport {
  std::string f, g, witness;
  bool strong = false;
  size_t instances = 0;
  size_t checked = 0;
  size_t failures = 0;
  // The first few, in instance order.
  std::vector<Counterexample> counterexamples;
  bool certified() const { return failures == 0; }
  Json ToJson() const;
  std::string ToText() const;
};

// Every domain instance of f in the family (sorted by encoding), against
// every g-solution of its image.
ReductionReport CheckReduction(const DeskProblem& f, const DeskProblem& g,
                               const ReductionWitness& w, const Bounds& bounds);

// {"left": y0, "right": y1}: the solved side holds an f-solution of x0 when
// b is true, a g-solution of x1 when false; the other side is null. Throws
// kDomain when the selected instance is outside its domain.
Json IfThenElse(const TruthName& b, const DeskProblem& f, const Json& x0, const DeskProblem& g,
                const Json& x1);
bool IfThenElseValid(const TruthName& b, const DeskProblem& f, const Json& x0,
                     const DeskProblem& g, const Json& x1, const Json& out);

// Codecs.
Json TreeJson(const RationalTree& t);
RationalTree TreeOf(const Json& j);
Json PairsJson(const std::vector<std::pair<RationalTree, RationalTree>>& pairs);
std::vector<std::pair<RationalTree, RationalTree>> PairsOf(const Json& j);
// The tree whose only path is p.
RationalTree LassoTree(const Lasso& p);

// Orders: "rat", "nat", "<n>" (1 < ... < n), "fin(a,b,...)" (listed least
// first), "sum(e,...)", "succ(e)", "omega(e)" (omega copies), "star(e,f)".
Order ParseOrderExpr(const std::string& text);
// The well-order subset: fin, nat, sum, succ.
NotatedWo ParseNotation(const std::string& text);

}  // namespace atrbench

#endif  // ATRBENCH_HARNESS_HPP_
