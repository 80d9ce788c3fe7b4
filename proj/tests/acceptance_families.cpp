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


// Instance families of the acceptance run that are too large for the unit
// suites. ATRBENCH_FULL_FAMILIES=1 replaces the bounded two-pair families by
// all pairs of pairs of trees with <= 3 nodes.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "atrbench/atr.hpp"
#include "atrbench/census.hpp"
#include "atrbench/cwo.hpp"
#include "atrbench/families.hpp"
#include "atrbench/harness.hpp"
#include "atrbench/tree.hpp"
#include "cli.hpp"

namespace atrbench {
namespace {

using TreePair = std::pair<RationalTree, RationalTree>;

bool FullFamilies() {
  const char* v = std::getenv("ATRBENCH_FULL_FAMILIES");
  return v != nullptr && std::string(v) == "1";
}

bool Nonempty(const RationalTree& t) { return ComputePathCensus(t).kind != CensusKind::kEmpty; }

// Pairs of trees with <= max_nodes nodes and labels < 2 accepted by keep.
std::vector<TreePair> Pairs(int max_nodes, bool (*keep)(bool, bool)) {
  auto trees = DistinctTrees(max_nodes, 2);
  std::vector<bool> ne;
  for (const auto& t : trees) ne.push_back(Nonempty(t));
  std::vector<TreePair> out;
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = 0; j < trees.size(); ++j)
      if (keep(ne[i], ne[j])) out.emplace_back(trees[i], trees[j]);
  return out;
}

bool SepDomain(bool a, bool b) { return !(a && b); }
bool DcaDomain(bool a, bool b) { return a != b; }

int Bit(const TreePair& p) { return Nonempty(p.first) ? 0 : 1; }

// Calls fn on every two-pair instance (a, b) with a from left and b from
// right, and also (b, a).
template <typename Fn>
void BothOrders(const std::vector<TreePair>& left, const std::vector<TreePair>& right, Fn fn) {
  for (const auto& a : left)
    for (const auto& b : right) {
      fn(a, b);
      fn(b, a);
    }
}

TEST(AcceptanceKb, AllGraphsFourNodesThreeLabels) {
  size_t count = 0;
  ForEachGraph(4, 3, [&](const SmallGraph& g) {
    RationalTree t = g.ToTree();
    ++count;
    ASSERT_EQ(CheckKbWellOrder(t).well_order, IsWellFounded(t)) << WriteTree(t);
  });
  EXPECT_EQ(count, 23928502u);
}

// Two pairs: both from <= 3-node trees under ATRBENCH_FULL_FAMILIES=1,
// otherwise one from <= 3-node trees and one from <= 2-node trees.
TEST(AcceptanceSep, TwoPairsAgainstCensus) {
  auto p3 = Pairs(3, SepDomain);
  auto p2 = FullFamilies() ? p3 : Pairs(2, SepDomain);
  size_t count = 0;
  auto check = [&](const TreePair& a, const TreePair& b) {
    ++count;
    ASSERT_EQ(SepViaCwo({a, b}), (std::vector<int>{Bit(a), Bit(b)}))
        << WriteTree(a.first) << "|" << WriteTree(a.second) << "||" << WriteTree(b.first) << "|"
        << WriteTree(b.second);
  };
  if (FullFamilies()) {
    for (const auto& a : p3)
      for (const auto& b : p3) check(a, b);
  } else {
    BothOrders(p3, p2, check);
  }
  EXPECT_GT(count, 0u);
}

// Two pairs: both from <= 3-node trees under ATRBENCH_FULL_FAMILIES=1,
// otherwise both from <= 2-node trees, or one from <= 3-node trees and one
// from <= 1-node trees.
TEST(AcceptanceDca, TwoPairsAgainstCensus) {
  auto p3 = Pairs(3, DcaDomain);
  auto check = [&](const TreePair& a, const TreePair& b) {
    ASSERT_EQ(DeltaCaViaAtr({a, b}).bits, (std::vector<int>{Bit(a), Bit(b)}))
        << WriteTree(a.first) << "|" << WriteTree(a.second) << "||" << WriteTree(b.first) << "|"
        << WriteTree(b.second);
  };
  if (FullFamilies()) {
    for (const auto& a : p3)
      for (const auto& b : p3) check(a, b);
    return;
  }
  auto p2 = Pairs(2, DcaDomain);
  for (const auto& a : p2)
    for (const auto& b : p2) check(a, b);
  BothOrders(p3, Pairs(1, DcaDomain), check);
}

int RunCli(std::vector<std::string> args, std::string* out) {
  args.insert(args.begin(), "atrbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream os, es;
  int code = cli::Run(static_cast<int>(argv.size()), argv.data(), os, es);
  *out = os.str() + es.str();
  return code;
}

TEST(AcceptanceCli, BuiltinWitnessesCertify) {
  std::string out;
  for (const auto& w : BuiltinWitnesses()) {
    if (w.broken) continue;
    EXPECT_EQ(RunCli({"check-reduction", w.f, w.g, w.name}, &out), 0) << out;
  }
  EXPECT_EQ(RunCli({"check-reduction", "UC", "C", "identity"}, &out), 0) << out;
}

TEST(AcceptanceCli, BrokenWitnessesExitOne) {
  std::string out;
  size_t broken = 0;
  for (const auto& w : BuiltinWitnesses()) {
    if (!w.broken) continue;
    ++broken;
    EXPECT_EQ(RunCli({"check-reduction", w.f, w.g, w.name}, &out), 1) << w.name;
    EXPECT_NE(out.find("counterexample"), std::string::npos) << out;
  }
  EXPECT_GE(broken, 5u);
  EXPECT_EQ(RunCli({"check-reduction", "C", "UC", "identity"}, &out), 1);
  EXPECT_NE(out.find("counterexample"), std::string::npos) << out;
}

}  // namespace
}  // namespace atrbench
