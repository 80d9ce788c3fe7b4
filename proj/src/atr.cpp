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


#include "atrbench/atr.hpp"

#include <algorithm>
#include <map>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"

namespace atrbench {

StepRule Const0Rule() {
  return {"const0", [](const StagePairs&, const Forest&) { return std::set<Nat>{0}; }};
}

StepRule CardRule() {
  return {"card", [](const StagePairs& below, const Forest&) {
            return std::set<Nat>{static_cast<Nat>(below.size())};
          }};
}

StepRule LeafStripRule() {
  return {"leafstrip", [](const StagePairs& below, const Forest& z) {
            std::map<Nat, std::set<Nat>> stages;
            for (auto [y, i] : below) stages[i].insert(y);
            std::set<Nat> out;
            for (size_t t = 0; t < z.size(); ++t)
              for (NodeId q = 0; q < z[t].size(); ++q) {
                const auto& kids = z[t].edges(q);
                if (kids.empty()) continue;
                bool ok = true;
                for (const auto& [i, set] : stages) {
                  bool any = false;
                  for (auto [a, d] : kids)
                    if (set.count(Pair(t, d))) any = true;
                  if (!any) {
                    ok = false;
                    break;
                  }
                }
                if (ok) out.insert(Pair(t, q));
              }
            return out;
          }};
}

StepRule RuleByName(const std::string& name) {
  if (name == "const0") return Const0Rule();
  if (name == "card") return CardRule();
  if (name == "leafstrip") return LeafStripRule();
  Fail(ErrorKind::kDomain, "unknown step rule '" + name + "'");
}

AtrResult AtrRun(const Forest& z, const NotatedWo& x, const StepRule& rule) {
  AtrResult r;
  for (Nat j : x.base()->Sorted()) {
    std::set<Nat> produced = rule.apply(r.y, z);
    for (Nat y : produced) r.y.emplace(y, j);
    r.trace.push_back({j, x.Rank(j), std::move(produced)});
  }
  return r;
}

bool CheckAtrEquivalence(const AtrResult& r, const Forest& z, const NotatedWo& x,
                         const StepRule& rule, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Order& order = x.base();
  for (auto [y, j] : r.y)
    if (!order->Contains(j)) return fail("pair with stage " + std::to_string(j) + " outside X");
  for (Nat j : order->Elements()) {
    StagePairs below;
    std::set<Nat> at;
    for (auto [y, i] : r.y) {
      if (order->Less(i, j)) below.emplace(y, i);
      if (i == j) at.insert(y);
    }
    if (rule.apply(below, z) != at) return fail("stage " + std::to_string(j) + " disagrees with the rule");
  }
  return true;
}

Survivors AllNodes(const Forest& forest) {
  Survivors s;
  for (const auto& t : forest) s.emplace_back(t.size(), true);
  return s;
}

Survivors LeafStripStage(const Forest& forest, const Survivors& current) {
  Survivors next = current;
  for (size_t t = 0; t < forest.size(); ++t)
    for (NodeId q = 0; q < forest[t].size(); ++q) {
      bool any = false;
      for (auto [a, d] : forest[t].edges(q))
        if (current[t][d]) any = true;
      next[t][q] = any;
    }
  return next;
}

DcaRun DeltaCaViaAtr(const std::vector<std::pair<RationalTree, RationalTree>>& instance) {
  Forest z;
  std::vector<Order> parts;
  Nat nodes = 0;
  for (size_t n = 0; n < instance.size(); ++n) {
    const auto& [t0, t1] = instance[n];
    if (HasPath(t0) == HasPath(t1))
      Fail(ErrorKind::kDomain, "pair " + std::to_string(n) + ": exactly one tree must have a path");
    z.push_back(t0);
    z.push_back(t1);
    nodes += t0.size() + t1.size();
    parts.push_back(Star(KbLinearOrder(t0), KbLinearOrder(t1)));
  }
  DcaRun run;
  run.order_type = CnfType(Succ(OrderSum(parts)));
  // The leaf-stripping sets decrease and stop changing once a well-founded
  // tree of height h is gone, which takes h <= node count stages.
  CnfOrdinal top = run.order_type.Predecessor();
  Nat k = nodes + 1;
  if (top.IsFinite()) k = std::min(k, top.AsFinite());
  for (Nat i = 0; i < k; ++i) run.stage_ranks.push_back(CnfOrdinal::Finite(i));
  run.stage_ranks.push_back(top);
  // Stage i of the run executes rank stage_ranks[i].
  NotatedWo stages = NotateFinite(FiniteOrder(run.stage_ranks.size()));
  run.result = AtrRun(z, stages, LeafStripRule());
  for (size_t i = 0; i < run.result.trace.size(); ++i) run.result.trace[i].rank = run.stage_ranks[i];
  const std::set<Nat>& last = run.result.trace.back().produced;
  for (size_t n = 0; n < instance.size(); ++n) {
    const RationalTree& t0 = instance[n].first;
    bool alive = !t0.empty() && last.count(Pair(2 * n, t0.root()));
    run.bits.push_back(alive ? 0 : 1);
  }
  return run;
}

}  // namespace atrbench
