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

#include "atrbench/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "atrbench/error.hpp"

namespace atrbench {

NodeId RationalTree::AddNode(const std::string& name) {
  NodeId q = names_.size();
  names_.push_back(name.empty() ? "n" + std::to_string(q) : name);
  edges_.emplace_back();
  return q;
}

std::optional<NodeId> RationalTree::FindNode(const std::string& name) const {
  for (NodeId q = 0; q < names_.size(); ++q)
    if (names_[q] == name) return q;
  return std::nullopt;
}

NodeId RationalTree::FindOrAddNode(const std::string& name) {
  if (auto q = FindNode(name)) return *q;
  return AddNode(name);
}

void RationalTree::SetRoot(NodeId q) {
  if (q >= names_.size()) Fail(ErrorKind::kValidation, "root is not a node");
  root_ = q;
}

void RationalTree::AddEdge(NodeId src, Nat label, NodeId dst) {
  if (src >= names_.size() || dst >= names_.size())
    Fail(ErrorKind::kValidation, "edge endpoint is not a node");
  auto [it, inserted] = edges_[src].emplace(label, dst);
  if (!inserted && it->second != dst) {
    Fail(ErrorKind::kValidation, "nondeterministic edge at " + names_[src] + " label " +
                                     std::to_string(label));
  }
}

NodeId RationalTree::root() const {
  if (!root_) Fail(ErrorKind::kDomain, "empty tree has no root");
  return *root_;
}

size_t RationalTree::EdgeCount() const {
  size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

Nat RationalTree::LabelBound() const {
  Nat b = 0;
  for (const auto& e : edges_)
    if (!e.empty()) b = std::max(b, e.rbegin()->first + 1);
  return b;
}

std::optional<NodeId> RationalTree::WalkFrom(NodeId q, const Word& w) const {
  for (Nat a : w) {
    auto it = edges_[q].find(a);
    if (it == edges_[q].end()) return std::nullopt;
    q = it->second;
  }
  return q;
}

std::optional<NodeId> RationalTree::Walk(const Word& w) const {
  if (!root_) return std::nullopt;
  return WalkFrom(*root_, w);
}

RationalTree RationalTree::Rerooted(NodeId q) const {
  RationalTree t = *this;
  t.SetRoot(q);
  return t;
}

namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool IsIdent(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Nat ParseNat(const std::string& s, size_t lineno) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": bad label '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": label out of range");
  }
}

}  // namespace

RationalTree ParseTree(const std::string& text) {
  RationalTree t;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  bool have_root = false;
  struct PendingEdge {
    std::string src, dst;
    Nat label;
    size_t lineno;
  };
  std::vector<PendingEdge> pending;
  std::string root_name;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto tok = Tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "root") {
      if (tok.size() != 2 || !IsIdent(tok[1]))
        Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": expected 'root <id>'");
      if (have_root) Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": second root");
      have_root = true;
      root_name = tok[1];
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 || !IsIdent(tok[1]) || !IsIdent(tok[3]))
        Fail(ErrorKind::kParse,
             "line " + std::to_string(lineno) + ": expected 'edge <src> <label> <dst>'");
      pending.push_back({tok[1], tok[3], ParseNat(tok[2], lineno), lineno});
    } else {
      Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": unknown directive '" +
                                  tok[0] + "'");
    }
  }
  if (!have_root) {
    if (!pending.empty()) Fail(ErrorKind::kParse, "edges given without a root line");
    return t;
  }
  // Node indices follow first appearance, root first.
  t.SetRoot(t.FindOrAddNode(root_name));
  for (const auto& e : pending) {
    NodeId s = t.FindOrAddNode(e.src);
    NodeId d = t.FindOrAddNode(e.dst);
    try {
      t.AddEdge(s, e.label, d);
    } catch (const Error& err) {
      Fail(ErrorKind::kParse, "line " + std::to_string(e.lineno) + ": " + err.what());
    }
  }
  return t;
}

std::string WriteTree(const RationalTree& t) {
  std::ostringstream os;
  if (t.empty()) return "";
  os << "root " << t.name(t.root()) << "\n";
  std::vector<bool> seen(t.size(), false);
  auto bfs = [&](NodeId start) {
    std::deque<NodeId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      NodeId q = queue.front();
      queue.pop_front();
      for (auto [a, d] : t.edges(q)) {
        os << "edge " << t.name(q) << " " << a << " " << t.name(d) << "\n";
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
      }
    }
  };
  bfs(t.root());
  for (NodeId q = 0; q < t.size(); ++q)
    if (!seen[q] && !t.edges(q).empty()) bfs(q);
  return os.str();
}

std::vector<RationalTree> ParseTreeList(const std::string& text) {
  std::vector<RationalTree> out;
  std::istringstream is(text);
  std::string line, chunk;
  bool any = false;
  while (std::getline(is, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed == "---") {
      out.push_back(ParseTree(chunk));
      chunk.clear();
      any = false;
    } else {
      chunk += line + "\n";
      if (!trimmed.empty() && trimmed[0] != '#') any = true;
    }
  }
  if (any || !out.empty()) out.push_back(ParseTree(chunk));
  return out;
}

std::string WriteTreeList(const std::vector<RationalTree>& ts) {
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) out += "---\n";
    out += WriteTree(ts[i]);
  }
  return out;
}

std::vector<bool> ReachableNodes(const RationalTree& t) {
  std::vector<bool> seen(t.size(), false);
  if (t.empty()) return seen;
  std::vector<NodeId> stack{t.root()};
  seen[t.root()] = true;
  while (!stack.empty()) {
    NodeId q = stack.back();
    stack.pop_back();
    for (auto [a, d] : t.edges(q)) {
      if (!seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
    }
  }
  return seen;
}

std::vector<bool> LiveNodes(const RationalTree& t) {
  // Greatest fixpoint: repeatedly drop nodes without a live successor.
  std::vector<bool> live(t.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId q = 0; q < t.size(); ++q) {
      if (!live[q]) continue;
      bool any = false;
      for (auto [a, d] : t.edges(q)) any = any || live[d];
      if (!any) {
        live[q] = false;
        changed = true;
      }
    }
  }
  return live;
}

bool IsWellFounded(const RationalTree& t) {
  if (t.empty()) return true;
  // Iterative DFS with colors; a back edge means a reachable cycle.
  enum Color { kWhite, kGrey, kBlack };
  std::vector<Color> color(t.size(), kWhite);
  struct Frame {
    NodeId q;
    std::map<Nat, NodeId>::const_iterator it;
  };
  std::vector<Frame> stack;
  color[t.root()] = kGrey;
  stack.push_back({t.root(), t.edges(t.root()).begin()});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.it == t.edges(f.q).end()) {
      color[f.q] = kBlack;
      stack.pop_back();
      continue;
    }
    NodeId d = f.it->second;
    ++f.it;
    if (color[d] == kGrey) return false;
    if (color[d] == kWhite) {
      color[d] = kGrey;
      stack.push_back({d, t.edges(d).begin()});
    }
  }
  return true;
}

RationalTree Prune(const RationalTree& t) {
  RationalTree out;
  if (t.empty()) return out;
  auto reach = ReachableNodes(t);
  auto live = LiveNodes(t);
  if (!live[t.root()]) return out;
  std::vector<NodeId> remap(t.size(), static_cast<NodeId>(-1));
  for (NodeId q = 0; q < t.size(); ++q)
    if (reach[q] && live[q]) remap[q] = out.AddNode(t.name(q));
  out.SetRoot(remap[t.root()]);
  for (NodeId q = 0; q < t.size(); ++q) {
    if (remap[q] == static_cast<NodeId>(-1)) continue;
    for (auto [a, d] : t.edges(q))
      if (remap[d] != static_cast<NodeId>(-1)) out.AddEdge(remap[q], a, remap[d]);
  }
  return out;
}

SccDecomposition ComputeScc(const RationalTree& t) {
  const size_t n = t.size();
  const size_t kUnset = static_cast<size_t>(-1);
  SccDecomposition r;
  r.comp.assign(n, kUnset);
  std::vector<size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  size_t counter = 0;
  struct Frame {
    NodeId q;
    std::map<Nat, NodeId>::const_iterator it;
  };
  for (NodeId s = 0; s < n; ++s) {
    if (index[s] != kUnset) continue;
    std::vector<Frame> call{{s, t.edges(s).begin()}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.it != t.edges(f.q).end()) {
        NodeId d = f.it->second;
        ++f.it;
        if (index[d] == kUnset) {
          index[d] = low[d] = counter++;
          stack.push_back(d);
          on_stack[d] = true;
          call.push_back({d, t.edges(d).begin()});
        } else if (on_stack[d]) {
          low[f.q] = std::min(low[f.q], index[d]);
        }
        continue;
      }
      NodeId q = f.q;
      call.pop_back();
      if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
      if (low[q] == index[q]) {
        size_t c = r.members.size();
        r.members.emplace_back();
        NodeId m;
        do {
          m = stack.back();
          stack.pop_back();
          on_stack[m] = false;
          r.comp[m] = c;
          r.members[c].push_back(m);
        } while (m != q);
        std::sort(r.members[c].begin(), r.members[c].end());
      }
    }
  }
  r.cyclic.assign(r.members.size(), false);
  r.simple.assign(r.members.size(), true);
  for (size_t c = 0; c < r.members.size(); ++c) {
    for (NodeId q : r.members[c]) {
      size_t internal = 0;
      for (auto [a, d] : t.edges(q))
        if (r.comp[d] == c) ++internal;
      if (internal > 0) r.cyclic[c] = true;
      if (internal != 1) r.simple[c] = false;
    }
    if (!r.cyclic[c]) r.simple[c] = false;
  }
  return r;
}

size_t TreeHeight(const RationalTree& t) {
  if (t.empty()) return 0;
  if (!IsWellFounded(t)) Fail(ErrorKind::kDomain, "height of an ill-founded tree");
  std::vector<size_t> memo(t.size(), 0);
  std::function<size_t(NodeId)> h = [&](NodeId q) -> size_t {
    if (memo[q]) return memo[q];
    size_t best = 0;
    for (auto [a, d] : t.edges(q)) best = std::max(best, h(d));
    return memo[q] = best + 1;
  };
  return h(t.root());
}

Nat UnfoldingSize(const RationalTree& t) {
  if (t.empty()) return 0;
  if (!IsWellFounded(t)) Fail(ErrorKind::kDomain, "size of an ill-founded tree");
  std::vector<Nat> memo(t.size(), 0);
  std::function<Nat(NodeId)> c = [&](NodeId q) -> Nat {
    if (memo[q]) return memo[q];
    Nat total = 1;
    for (auto [a, d] : t.edges(q)) total = CheckedAdd(total, c(d));
    return memo[q] = total;
  };
  return c(t.root());
}

std::vector<Word> UnfoldingNodes(const RationalTree& t, size_t max_depth) {
  std::vector<Word> out;
  if (t.empty()) return out;
  std::function<void(NodeId, Word&)> go = [&](NodeId q, Word& w) {
    out.push_back(w);
    if (w.size() == max_depth) return;
    for (auto [a, d] : t.edges(q)) {
      w.push_back(a);
      go(d, w);
      w.pop_back();
    }
  };
  Word w;
  go(t.root(), w);
  return out;
}

bool IsPath(const RationalTree& t, const Lasso& p) {
  auto q = t.Walk(p.stem());
  if (!q) return false;
  // Read the cycle until the state at a cycle boundary repeats.
  std::set<NodeId> seen;
  while (seen.insert(*q).second) {
    q = t.WalkFrom(*q, p.cycle());
    if (!q) return false;
  }
  return true;
}

}  // namespace atrbench
