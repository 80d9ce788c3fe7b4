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

#include "atrbench/truth.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <sstream>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"

namespace atrbench {

TruthName TruthName::Sierpinski(const Lasso& p) {
  TruthName n;
  n.kind_ = TruthKind::kSierpinski;
  n.payload_ = p;
  return n;
}

TruthName TruthName::Sigma11(const RationalTree& t) {
  TruthName n;
  n.kind_ = TruthKind::kSigma11;
  n.payload_ = t;
  return n;
}

TruthName TruthName::Pi11(const RationalTree& t) {
  TruthName n;
  n.kind_ = TruthKind::kPi11;
  n.payload_ = t;
  return n;
}

const Lasso& TruthName::word() const {
  if (kind_ != TruthKind::kSierpinski) Fail(ErrorKind::kKindMismatch, "not a word name");
  return std::get<Lasso>(payload_);
}

const RationalTree& TruthName::tree() const {
  if (kind_ == TruthKind::kSierpinski) Fail(ErrorKind::kKindMismatch, "not a tree name");
  return std::get<RationalTree>(payload_);
}

std::string TruthName::ToString() const {
  switch (kind_) {
    case TruthKind::kSierpinski: return "S " + word().ToString() + "\n";
    case TruthKind::kSigma11: return "SIGMA\n" + WriteTree(tree());
    case TruthKind::kPi11: return "PI\n" + WriteTree(tree());
  }
  return "";
}

TruthName TruthName::Parse(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  std::string line;
  while (std::getline(is, line)) {
    auto p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] == '#') continue;
    head = line.substr(p);
    break;
  }
  std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (head.rfind("S ", 0) == 0) return Sierpinski(Lasso::Parse(head.substr(2)));
  if (head == "SIGMA") return Sigma11(ParseTree(rest));
  if (head == "PI") return Pi11(ParseTree(rest));
  Fail(ErrorKind::kParse, "truth name must start with 'S <lasso>', 'SIGMA' or 'PI'");
}

bool TruthValue(const TruthName& n) {
  switch (n.kind()) {
    case TruthKind::kSierpinski: return n.word() != Lasso();
    case TruthKind::kSigma11: return !IsWellFounded(n.tree());
    case TruthKind::kPi11: return IsWellFounded(n.tree());
  }
  return false;
}

namespace {

void RequireSigma(const std::vector<TruthName>& names) {
  for (const auto& n : names)
    if (n.kind() != TruthKind::kSigma11)
      Fail(ErrorKind::kKindMismatch, "expected names of Sigma11 kind");
}

}  // namespace

TruthName TruthOr(const std::vector<TruthName>& names) {
  RequireSigma(names);
  RationalTree out;
  NodeId root = out.AddNode("r");
  out.SetRoot(root);
  for (size_t i = 0; i < names.size(); ++i) {
    const RationalTree& t = names[i].tree();
    if (t.empty()) continue;
    std::vector<NodeId> remap(t.size());
    for (NodeId q = 0; q < t.size(); ++q)
      remap[q] = out.AddNode("t" + std::to_string(i) + "_" + t.name(q));
    for (NodeId q = 0; q < t.size(); ++q)
      for (auto [a, d] : t.edges(q)) out.AddEdge(remap[q], a, remap[d]);
    out.AddEdge(root, i, remap[t.root()]);
  }
  return TruthName::Sigma11(out);
}

TruthName TruthAnd(const std::vector<TruthName>& names) {
  RequireSigma(names);
  RationalTree out;
  for (const auto& n : names)
    if (n.tree().empty()) return TruthName::Sigma11(out);
  std::vector<Nat> radix;
  for (const auto& n : names) radix.push_back(std::max<Nat>(1, n.tree().LabelBound()));
  using State = std::vector<NodeId>;
  std::map<State, NodeId> index;
  std::deque<State> queue;
  State start;
  for (const auto& n : names) start.push_back(n.tree().root());
  index[start] = out.AddNode("p0");
  out.SetRoot(0);
  queue.push_back(start);
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    NodeId src = index[s];
    // Enumerate label tuples (one edge per component) as a mixed-radix
    // counter over the component edge maps.
    std::vector<std::map<Nat, NodeId>::const_iterator> it;
    bool dead = false;
    for (size_t i = 0; i < names.size(); ++i) {
      it.push_back(names[i].tree().edges(s[i]).begin());
      if (it.back() == names[i].tree().edges(s[i]).end()) dead = true;
    }
    if (names.empty()) {
      out.AddEdge(src, 0, src);
      continue;
    }
    while (!dead) {
      Nat label = 0, scale = 1;
      State next;
      for (size_t i = 0; i < names.size(); ++i) {
        label = CheckedAdd(label, CheckedMul(it[i]->first, scale));
        scale = CheckedMul(scale, radix[i]);
        next.push_back(it[i]->second);
      }
      auto [pos, inserted] = index.emplace(next, out.size());
      if (inserted) {
        out.AddNode("p" + std::to_string(pos->second));
        queue.push_back(next);
      }
      out.AddEdge(src, label, pos->second);
      size_t i = 0;
      for (; i < names.size(); ++i) {
        ++it[i];
        if (it[i] != names[i].tree().edges(s[i]).end()) break;
        it[i] = names[i].tree().edges(s[i]).begin();
      }
      if (i == names.size()) dead = true;
    }
  }
  return TruthName::Sigma11(out);
}

}  // namespace atrbench
