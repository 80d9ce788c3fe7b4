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


#include "atrbench/games.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>

#include "atrbench/error.hpp"

namespace atrbench {

namespace {

constexpr size_t kMaxPositions = 1 << 20;

Word Extend(const Word& p, Nat a) {
  Word w = p;
  w.push_back(a);
  return w;
}

Word Concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

int Mover(const Word& p) { return p.size() % 2 == 0 ? 1 : 2; }

// "p", "p0", "p0_1", ...: tree-file identifiers.
std::string PosName(const Word& p) {
  std::string s = "p";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "_" : "") + std::to_string(p[i]);
  return s;
}

// A tree with one node per word of a prefix-closed set.
RationalTree TreeOfPositions(const std::vector<Word>& words) {
  RationalTree t;
  std::map<Word, NodeId> id;
  for (const Word& w : words) id[w] = t.AddNode(PosName(w));
  t.SetRoot(id.at({}));
  for (const Word& w : words)
    if (!w.empty()) t.AddEdge(id.at(Word(w.begin(), w.end() - 1)), w.back(), id.at(w));
  return t;
}

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string s;
  while (is >> s) out.push_back(s);
  return out;
}

Nat ParseNatToken(const std::string& s, size_t lineno) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": bad natural '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": natural out of range");
  }
}

}  // namespace

BoundedGame::BoundedGame(Nat moves, size_t depth, PayoffKind kind, std::set<Word> win,
                         std::optional<RationalTree> validity)
    : moves_(moves), depth_(depth), kind_(kind), win_(std::move(win)),
      validity_(std::move(validity)) {
  if (moves_ == 0) Fail(ErrorKind::kValidation, "game needs at least one move");
  if (validity_ && validity_->empty()) Fail(ErrorKind::kValidation, "validity tree is empty");
  std::deque<Word> queue{Word{}};
  while (!queue.empty()) {
    Word p = queue.front();
    queue.pop_front();
    positions_.push_back(p);
    if (positions_.size() > kMaxPositions) Fail(ErrorKind::kCapacity, "game has too many positions");
    for (Nat a : ValidMoves(p)) queue.push_back(Extend(p, a));
  }
  for (const Word& w : win_) {
    if (!Valid(w)) Fail(ErrorKind::kValidation, "payoff position " + WordToString(w) + " is not valid");
    if (kind_ == PayoffKind::kClopen && !Terminal(w))
      Fail(ErrorKind::kValidation, "clopen payoff position " + WordToString(w) + " is not terminal");
  }
}

bool BoundedGame::Valid(const Word& p) const {
  if (p.size() > depth_) return false;
  for (Nat a : p)
    if (a >= moves_) return false;
  return !validity_ || validity_->Contains(p);
}

std::vector<Nat> BoundedGame::ValidMoves(const Word& p) const {
  std::vector<Nat> out;
  if (p.size() >= depth_) return out;
  if (validity_) {
    auto q = validity_->Walk(p);
    if (!q) return out;
    for (auto [a, d] : validity_->edges(*q))
      if (a < moves_) out.push_back(a);
    return out;
  }
  for (Nat a = 0; a < moves_; ++a) out.push_back(a);
  return out;
}

bool BoundedGame::Terminal(const Word& p) const { return ValidMoves(p).empty(); }

bool BoundedGame::AlreadyWon(const Word& p) const {
  if (kind_ == PayoffKind::kClopen) return Terminal(p) && win_.count(p) > 0;
  for (size_t n = 0; n <= p.size(); ++n)
    if (win_.count(Word(p.begin(), p.begin() + n))) return true;
  return false;
}

bool BoundedGame::Player1Wins(const Word& p) const {
  return kind_ == PayoffKind::kClopen ? win_.count(p) > 0 : AlreadyWon(p);
}

std::vector<Word> BoundedGame::MovePositions(int player) const {
  std::vector<Word> out;
  for (const Word& p : positions_)
    if (Mover(p) == player && !Terminal(p)) out.push_back(p);
  return out;
}

bool BoundedGame::operator==(const BoundedGame& o) const {
  return moves_ == o.moves_ && depth_ == o.depth_ && kind_ == o.kind_ && win_ == o.win_ &&
         validity_ == o.validity_;
}

BoundedGame ParseGame(const std::string& text) {
  std::optional<Nat> moves, depth;
  std::optional<PayoffKind> kind;
  std::set<Word> win;
  std::string tree_lines;
  bool any_tree = false;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    auto tok = Tokens(body);
    if (tok.empty()) {
      tree_lines += "\n";
      continue;
    }
    auto where = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "root" || tok[0] == "edge") {
      tree_lines += line + "\n";
      any_tree = true;
      continue;
    }
    tree_lines += "\n";
    if (tok[0] == "moves" && tok.size() == 2) {
      if (moves) Fail(ErrorKind::kParse, where + "second moves line");
      moves = ParseNatToken(tok[1], lineno);
    } else if (tok[0] == "depth" && tok.size() == 2) {
      if (depth) Fail(ErrorKind::kParse, where + "second depth line");
      depth = ParseNatToken(tok[1], lineno);
    } else if (tok[0] == "kind" && tok.size() == 2) {
      if (kind) Fail(ErrorKind::kParse, where + "second kind line");
      if (tok[1] == "open") kind = PayoffKind::kOpen;
      else if (tok[1] == "clopen") kind = PayoffKind::kClopen;
      else Fail(ErrorKind::kParse, where + "kind must be open or clopen");
    } else if (tok[0] == "payoff" && tok.size() == 3 && tok[1] == "win") {
      win.insert(ParseWord(tok[2]));
    } else {
      Fail(ErrorKind::kParse, where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (!moves || !depth || !kind) Fail(ErrorKind::kParse, "game needs moves, depth and kind lines");
  std::optional<RationalTree> validity;
  if (any_tree) validity = ParseTree(tree_lines);
  return BoundedGame(*moves, *depth, *kind, std::move(win), std::move(validity));
}

std::string WriteGame(const BoundedGame& g) {
  std::ostringstream os;
  os << "moves " << g.moves() << "\n";
  os << "depth " << g.depth() << "\n";
  os << "kind " << (g.kind() == PayoffKind::kOpen ? "open" : "clopen") << "\n";
  if (g.validity()) os << WriteTree(*g.validity());
  for (const Word& w : g.win()) os << "payoff win " << WordToString(w) << "\n";
  return os.str();
}

Strategy ParseStrategy(const std::string& text) {
  Strategy s;
  bool have_player = false;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto tok = Tokens(line.substr(0, line.find('#')));
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "player" && tok.size() == 2) {
      if (have_player) Fail(ErrorKind::kParse, where + "second player line");
      if (tok[1] != "1" && tok[1] != "2") Fail(ErrorKind::kParse, where + "player must be 1 or 2");
      s.player = tok[1] == "1" ? 1 : 2;
      have_player = true;
    } else if (tok.size() == 2) {
      Word p = ParseWord(tok[0]);
      if (!s.choice.emplace(p, ParseNatToken(tok[1], lineno)).second)
        Fail(ErrorKind::kParse, where + "second move at " + tok[0]);
    } else {
      Fail(ErrorKind::kParse, where + "expected 'player <n>' or '<position> <move>'");
    }
  }
  if (!have_player) Fail(ErrorKind::kParse, "strategy needs a player line");
  return s;
}

std::string WriteStrategy(const Strategy& s) {
  std::ostringstream os;
  os << "player " << s.player << "\n";
  std::vector<Word> keys;
  for (const auto& [p, m] : s.choice) keys.push_back(p);
  std::stable_sort(keys.begin(), keys.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const Word& p : keys) os << WordToString(p) << " " << s.choice.at(p) << "\n";
  return os.str();
}

void ValidateStrategy(const BoundedGame& g, const Strategy& s) {
  if (s.player != 1 && s.player != 2) Fail(ErrorKind::kValidation, "player must be 1 or 2");
  auto mine = g.MovePositions(s.player);
  for (const Word& p : mine) {
    auto it = s.choice.find(p);
    if (it == s.choice.end())
      Fail(ErrorKind::kValidation, "strategy has no move at " + WordToString(p));
    auto valid = g.ValidMoves(p);
    if (!std::binary_search(valid.begin(), valid.end(), it->second))
      Fail(ErrorKind::kValidation, "invalid move " + std::to_string(it->second) + " at " +
                                       WordToString(p));
  }
  if (s.choice.size() != mine.size())
    Fail(ErrorKind::kValidation, "strategy has moves outside its player's positions");
}

Word Play(const BoundedGame& g, const Strategy& p1, const Strategy& p2) {
  Word p;
  while (!g.Terminal(p)) {
    const Strategy& s = Mover(p) == 1 ? p1 : p2;
    auto it = s.choice.find(p);
    if (it == s.choice.end())
      Fail(ErrorKind::kValidation, "strategy has no move at " + WordToString(p));
    p.push_back(it->second);
  }
  return p;
}

bool WinsAll(const BoundedGame& g, const Strategy& s, Word* line) {
  std::function<bool(Word&)> go = [&](Word& p) {
    if (g.Terminal(p)) {
      if (g.Player1Wins(p) == (s.player == 1)) return true;
      if (line) *line = p;
      return false;
    }
    if (Mover(p) == s.player) {
      auto it = s.choice.find(p);
      if (it == s.choice.end())
        Fail(ErrorKind::kValidation, "strategy has no move at " + WordToString(p));
      p.push_back(it->second);
      bool ok = go(p);
      p.pop_back();
      return ok;
    }
    for (Nat a : g.ValidMoves(p)) {
      p.push_back(a);
      bool ok = go(p);
      p.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  Word p;
  return go(p);
}

std::vector<Strategy> AllStrategies(const BoundedGame& g, int player) {
  auto at = g.MovePositions(player);
  std::vector<std::vector<Nat>> options;
  size_t count = 1;
  for (const Word& p : at) {
    options.push_back(g.ValidMoves(p));
    count *= options.back().size();
    if (count > kMaxPositions) Fail(ErrorKind::kCapacity, "too many strategies");
  }
  std::vector<Strategy> out;
  std::vector<size_t> digit(at.size(), 0);
  for (size_t k = 0; k < count; ++k) {
    Strategy s;
    s.player = player;
    for (size_t i = 0; i < at.size(); ++i) s.choice[at[i]] = options[i][digit[i]];
    out.push_back(std::move(s));
    for (size_t i = 0; i < at.size(); ++i) {
      if (++digit[i] < options[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

GameSolution SolveGame(const BoundedGame& g) {
  GameSolution sol;
  const auto& pos = g.Positions();
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    const Word& p = *it;
    auto moves = g.ValidMoves(p);
    if (moves.empty()) {
      sol.value[p] = g.Player1Wins(p);
      continue;
    }
    bool p1 = Mover(p) == 1;
    bool v = !p1;
    for (Nat a : moves) {
      bool c = sol.value.at(Extend(p, a));
      v = p1 ? (v || c) : (v && c);
    }
    sol.value[p] = v;
  }
  sol.winner = sol.value.at({}) ? 1 : 2;
  sol.strategy.player = sol.winner;
  for (const Word& p : g.MovePositions(sol.winner)) {
    auto moves = g.ValidMoves(p);
    Nat pick = moves.front();
    for (Nat a : moves)
      if (sol.value.at(Extend(p, a)) == (sol.winner == 1)) {
        pick = a;
        break;
      }
    sol.strategy.choice[p] = pick;
  }
  return sol;
}

namespace {

enum class Outcome { kWon, kLost, kOpen };

// Classifies a position reached in play: won or lost for Player 1, or
// still undecided.
Outcome Classify(const BoundedGame& g, const Word& p) {
  if (g.Terminal(p)) return g.Player1Wins(p) ? Outcome::kWon : Outcome::kLost;
  if (g.kind() == PayoffKind::kOpen && g.AlreadyWon(p)) return Outcome::kWon;
  return Outcome::kOpen;
}

Nat MoveOf(const Strategy& s, const Word& p) {
  auto it = s.choice.find(p);
  if (it == s.choice.end()) Fail(ErrorKind::kValidation, "strategy has no move at " + WordToString(p));
  return it->second;
}

// Shared shape of the two options trees: nodes are positions where the
// chooser moves; each chooser move is followed by the responder's reply.
// Reaching a Player 1 win is the leaf "won", a loss the 0-loop "lost".
struct OptionsBuilder {
  const BoundedGame& g;
  const Strategy& responder;
  RationalTree tree;
  std::map<Word, NodeId> id;
  std::map<NodeId, Word> position;
  std::optional<NodeId> won, lost;
  std::deque<Word> queue;

  OptionsBuilder(const BoundedGame& game, const Strategy& reply) : g(game), responder(reply) {}

  NodeId Won() {
    if (!won) won = tree.AddNode("won");
    return *won;
  }
  NodeId Lost() {
    if (!lost) {
      lost = tree.AddNode("lost");
      tree.AddEdge(*lost, 0, *lost);
    }
    return *lost;
  }
  // The node for chooser position p (or the won/lost node).
  NodeId Node(const Word& p) {
    switch (Classify(g, p)) {
      case Outcome::kWon: return Won();
      case Outcome::kLost: return Lost();
      case Outcome::kOpen: break;
    }
    auto [it, fresh] = id.emplace(p, 0);
    if (fresh) {
      it->second = tree.AddNode(PosName(p));
      position[it->second] = p;
      queue.push_back(p);
    }
    return it->second;
  }
  // After the chooser plays a at p: apply the responder's reply.
  NodeId After(const Word& p, Nat a) {
    Word w = Extend(p, a);
    switch (Classify(g, w)) {
      case Outcome::kWon: return Won();
      case Outcome::kLost: return Lost();
      case Outcome::kOpen: break;
    }
    return Node(Extend(w, MoveOf(responder, w)));
  }
  void Run(NodeId root) {
    tree.SetRoot(root);
    while (!queue.empty()) {
      Word p = queue.front();
      queue.pop_front();
      NodeId src = id.at(p);
      for (Nat a : g.ValidMoves(p)) tree.AddEdge(src, a, After(p, a));
    }
  }
};

}  // namespace

OptionTree BuildOptionTree(const BoundedGame& g, const Strategy& tau) {
  if (tau.player != 2) Fail(ErrorKind::kValidation, "option tree needs a Player 2 strategy");
  ValidateStrategy(g, tau);
  OptionsBuilder b(g, tau);
  b.Run(b.Node({}));
  OptionTree out;
  out.position = b.position;
  out.pruned = !b.won;
  if (out.pruned) {
    for (const auto& [p, q] : b.id)
      for (auto [a, d] : b.tree.edges(q))
        if (d != b.won) {
          out.witness[p] = a;
          break;
        }
  } else {
    // Breadth-first search for the won leaf; the line is the position at
    // which Player 1 has won.
    std::map<NodeId, std::pair<NodeId, Nat>> parent;
    std::deque<NodeId> queue{b.tree.root()};
    std::set<NodeId> seen{b.tree.root()};
    while (!queue.empty() && !seen.count(*b.won)) {
      NodeId q = queue.front();
      queue.pop_front();
      for (auto [a, d] : b.tree.edges(q))
        if (seen.insert(d).second) {
          parent[d] = {q, a};
          queue.push_back(d);
        }
    }
    NodeId last = *b.won;
    Nat move = 0;
    if (last != b.tree.root()) {
      std::tie(last, move) = parent.at(last);
      Word w = Extend(b.position.at(last), move);
      if (Classify(g, w) == Outcome::kOpen) w.push_back(MoveOf(tau, w));
      out.winning_line = w;
    }
  }
  out.tree = std::move(b.tree);
  return out;
}

RationalTree Player2Options(const BoundedGame& g, const Strategy& sigma, const Word& v, Nat i) {
  if (sigma.player != 1) Fail(ErrorKind::kValidation, "options tree needs a Player 1 strategy");
  OptionsBuilder b(g, sigma);
  b.Run(b.Node(Extend(v, i)));
  return std::move(b.tree);
}

namespace {

// desc[q]: nodes reachable from q by a nonempty walk.
std::vector<std::vector<bool>> StrictDescendants(const RationalTree& t) {
  std::vector<std::vector<bool>> desc(t.size(), std::vector<bool>(t.size(), false));
  for (NodeId q = 0; q < t.size(); ++q) {
    std::deque<NodeId> queue;
    for (auto [a, d] : t.edges(q)) queue.push_back(d);
    while (!queue.empty()) {
      NodeId d = queue.front();
      queue.pop_front();
      if (desc[q][d]) continue;
      desc[q][d] = true;
      for (auto [a, e] : t.edges(d)) queue.push_back(e);
    }
  }
  return desc;
}

// ok[p][q]: the unfolding from p maps into the unfolding from q with p's
// root sent to q. Greatest fixed point, so infinite walks of a are allowed.
std::vector<std::vector<bool>> MapTable(const RationalTree& a, const RationalTree& b,
                                        const std::vector<std::vector<bool>>& desc) {
  std::vector<std::vector<bool>> ok(a.size(), std::vector<bool>(b.size(), true));
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId p = 0; p < a.size(); ++p)
      for (NodeId q = 0; q < b.size(); ++q) {
        if (!ok[p][q]) continue;
        for (auto [l, c] : a.edges(p)) {
          bool found = false;
          for (NodeId r = 0; r < b.size() && !found; ++r) found = desc[q][r] && ok[c][r];
          if (!found) {
            ok[p][q] = false;
            changed = true;
            break;
          }
        }
      }
  }
  return ok;
}

std::optional<NodeId> RootImage(const RationalTree& a, const RationalTree& b, bool avoid_root,
                                const std::vector<std::vector<bool>>& desc,
                                const std::vector<std::vector<bool>>& ok) {
  NodeId br = b.root();
  if (!avoid_root && ok[a.root()][br]) return br;
  for (NodeId r = 0; r < b.size(); ++r)
    if (desc[br][r] && ok[a.root()][r]) return r;
  return std::nullopt;
}

// Shortest nonempty label word from q to r.
Word PathTo(const RationalTree& t, NodeId q, NodeId r) {
  std::map<NodeId, std::pair<NodeId, Nat>> parent;
  std::deque<NodeId> queue;
  std::set<NodeId> seen;
  for (auto [a, d] : t.edges(q))
    if (seen.insert(d).second) {
      parent[d] = {q, a};
      queue.push_back(d);
    }
  while (!queue.empty() && !seen.count(r)) {
    NodeId x = queue.front();
    queue.pop_front();
    for (auto [a, d] : t.edges(x))
      if (seen.insert(d).second) {
        parent[d] = {x, a};
        queue.push_back(d);
      }
  }
  Word w;
  NodeId x = r;
  do {
    auto [p, a] = parent.at(x);
    w.push_back(a);
    x = p;
  } while (x != q || w.empty());
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

bool PrefixMapExists(const RationalTree& a, const RationalTree& b, bool avoid_root) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  auto desc = StrictDescendants(b);
  auto ok = MapTable(a, b, desc);
  return RootImage(a, b, avoid_root, desc, ok).has_value();
}

std::vector<std::pair<Word, Word>> PrefixMap(const RationalTree& a, const RationalTree& b,
                                             bool avoid_root) {
  if (a.empty()) return {};
  if (!IsWellFounded(a)) Fail(ErrorKind::kDomain, "explicit maps need a well-founded source");
  if (b.empty()) Fail(ErrorKind::kDomain, "no map into the empty tree");
  auto desc = StrictDescendants(b);
  auto ok = MapTable(a, b, desc);
  auto start = RootImage(a, b, avoid_root, desc, ok);
  if (!start) Fail(ErrorKind::kDomain, "no prefix-preserving map exists");
  std::vector<std::pair<Word, Word>> out;
  Word aw;
  std::function<void(NodeId, NodeId, const Word&)> go = [&](NodeId p, NodeId q, const Word& bw) {
    out.emplace_back(aw, bw);
    for (auto [l, c] : a.edges(p)) {
      NodeId r = 0;
      while (!(desc[q][r] && ok[c][r])) ++r;
      aw.push_back(l);
      go(c, r, Concat(bw, PathTo(b, q, r)));
      aw.pop_back();
    }
  };
  go(a.root(), *start, avoid_root || *start != b.root() ? PathTo(b, b.root(), *start) : Word{});
  return out;
}

OptimalityResult CertifyOptimality(const BoundedGame& g, const Strategy& sigma) {
  if (sigma.player != 1) Fail(ErrorKind::kValidation, "certificates are for Player 1 strategies");
  ValidateStrategy(g, sigma);
  OptimalityResult res;
  Word line;
  if (!WinsAll(g, sigma, &line)) {
    res.reason = "strategy loses the play " + WordToString(line);
    res.at = line;
    return res;
  }
  // Player 1 positions consistent with sigma where the game is still open.
  std::vector<Word> reached;
  std::function<void(Word&)> walk = [&](Word& p) {
    if (Classify(g, p) != Outcome::kOpen) return;
    if (Mover(p) == 1) {
      reached.push_back(p);
      p.push_back(sigma.choice.at(p));
      walk(p);
      p.pop_back();
      return;
    }
    for (Nat a : g.ValidMoves(p)) {
      p.push_back(a);
      walk(p);
      p.pop_back();
    }
  };
  Word root;
  walk(root);
  std::sort(reached.begin(), reached.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (const Word& v : reached) {
    PositionCertificate cert;
    cert.position = v;
    cert.move = sigma.choice.at(v);
    RationalTree chosen = Player2Options(g, sigma, v, cert.move);
    for (Nat i : g.ValidMoves(v)) {
      if (i == cert.move) continue;
      RationalTree other = Player2Options(g, sigma, v, i);
      bool avoid = i < cert.move;
      if (!PrefixMapExists(chosen, other, avoid)) {
        res.positions.clear();
        res.reason = "move " + std::to_string(i) + " at " + WordToString(v) +
                     (avoid ? " gives Player 2 no more options than move "
                            : " gives Player 2 fewer options than move ") +
                     std::to_string(cert.move);
        res.at = v;
        return res;
      }
      cert.maps.emplace_back(i, PrefixMap(chosen, other, avoid));
    }
    res.positions.push_back(std::move(cert));
  }
  res.certified = true;
  return res;
}

Strategy OptimalStrategy(const BoundedGame& g) {
  Strategy sigma;
  sigma.player = 1;
  auto at = g.MovePositions(1);
  // Options trees at v read sigma only at longer positions.
  for (auto it = at.rbegin(); it != at.rend(); ++it) {
    const Word& v = *it;
    size_t best = std::numeric_limits<size_t>::max();
    Nat pick = 0;
    bool first = true;
    for (Nat i : g.ValidMoves(v)) {
      RationalTree t = Player2Options(g, sigma, v, i);
      size_t h = IsWellFounded(t) ? TreeHeight(t) : std::numeric_limits<size_t>::max();
      if (first || h < best) {
        best = h;
        pick = i;
        first = false;
      }
    }
    sigma.choice[v] = pick;
  }
  return sigma;
}

BoundedGame BuildSideChoice(const BoundedGame& g) {
  std::vector<Word> words{{}, {0}, {0, 0}};
  std::set<Word> win;
  for (const Word& w : g.Positions()) words.push_back(Concat({0, 0}, w));
  words.push_back({1});
  for (const Word& w : g.Positions()) words.push_back(Concat({1}, w));
  for (const Word& w : g.Positions()) {
    if (!g.Terminal(w)) continue;
    if (g.Player1Wins(w)) win.insert(Concat({0, 0}, w));
    else win.insert(Concat({1}, w));
  }
  return BoundedGame(std::max<Nat>(g.moves(), 2), g.depth() + 2, PayoffKind::kClopen,
                     std::move(win), TreeOfPositions(words));
}

SideChoiceExtraction ExtractSideChoice(const BoundedGame& g, const Strategy& derived) {
  if (derived.player != 1) Fail(ErrorKind::kValidation, "side choice is decided by Player 1");
  SideChoiceExtraction out;
  Nat first = MoveOf(derived, {});
  out.winner = first == 0 ? 1 : 2;
  out.strategy.player = out.winner;
  Word prefix = first == 0 ? Word{0, 0} : Word{1};
  for (const Word& p : g.MovePositions(out.winner))
    out.strategy.choice[p] = MoveOf(derived, Concat(prefix, p));
  return out;
}

BoundedGame BuildJoin(const std::vector<BoundedGame>& gs) {
  if (gs.empty()) Fail(ErrorKind::kDomain, "join of no games");
  Nat moves = gs.size();
  size_t depth = 0;
  std::vector<Word> words{{}, {0}};
  std::set<Word> win;
  for (size_t i = 0; i < gs.size(); ++i) {
    moves = std::max(moves, gs[i].moves());
    depth = std::max(depth, gs[i].depth());
    for (const Word& w : gs[i].Positions()) {
      Word x = Concat({0, i}, w);
      words.push_back(x);
      if (gs[i].Terminal(w) && gs[i].Player1Wins(w)) win.insert(x);
    }
  }
  return BoundedGame(moves, depth + 2, PayoffKind::kClopen, std::move(win), TreeOfPositions(words));
}

std::vector<Strategy> ExtractJoin(const std::vector<BoundedGame>& gs, const Strategy& derived) {
  if (derived.player != 1) Fail(ErrorKind::kValidation, "join extraction needs Player 1");
  std::vector<Strategy> out;
  for (size_t i = 0; i < gs.size(); ++i) {
    Strategy s;
    for (const Word& p : gs[i].MovePositions(1)) s.choice[p] = MoveOf(derived, Concat({0, i}, p));
    out.push_back(std::move(s));
  }
  return out;
}

BorelCode ParseBorelCode(const std::string& text) {
  std::istringstream is(text);
  std::string line, tree_lines;
  std::vector<std::string> truths;
  while (std::getline(is, line)) {
    auto tok = Tokens(line.substr(0, line.find('#')));
    if (!tok.empty() && tok[0] == "true") {
      if (tok.size() != 2) Fail(ErrorKind::kParse, "expected 'true <node>'");
      truths.push_back(tok[1]);
      tree_lines += "\n";
    } else {
      tree_lines += line + "\n";
    }
  }
  BorelCode c;
  c.tree = ParseTree(tree_lines);
  if (c.tree.empty()) Fail(ErrorKind::kValidation, "Borel code needs a root");
  if (!IsWellFounded(c.tree)) Fail(ErrorKind::kValidation, "Borel code must be well-founded");
  for (const auto& name : truths) {
    auto q = c.tree.FindNode(name);
    if (!q) Fail(ErrorKind::kValidation, "unknown node " + name);
    if (!c.tree.edges(*q).empty()) Fail(ErrorKind::kValidation, "true node " + name + " is not a leaf");
    c.true_leaves.insert(*q);
  }
  return c;
}

bool EvaluateBorelCode(const BorelCode& c) {
  if (c.tree.empty() || !IsWellFounded(c.tree))
    Fail(ErrorKind::kValidation, "Borel code must be a nonempty well-founded tree");
  std::function<bool(NodeId, bool)> eval = [&](NodeId q, bool exists) {
    const auto& e = c.tree.edges(q);
    if (e.empty()) return c.true_leaves.count(q) > 0;
    for (auto [a, d] : e)
      if (eval(d, !exists) == exists) return exists;
    return !exists;
  };
  return eval(c.tree.root(), true);
}

BoundedGame BuildBorelGame(const BorelCode& c) {
  if (c.tree.empty() || !IsWellFounded(c.tree))
    Fail(ErrorKind::kValidation, "Borel code must be a nonempty well-founded tree");
  size_t depth = TreeHeight(c.tree) - 1;
  std::set<Word> win;
  for (const Word& w : UnfoldingNodes(c.tree, depth)) {
    NodeId q = *c.tree.Walk(w);
    if (c.tree.edges(q).empty() && c.true_leaves.count(q)) win.insert(w);
  }
  return BoundedGame(std::max<Nat>(1, c.tree.LabelBound()), depth, PayoffKind::kClopen,
                     std::move(win), c.tree);
}

std::vector<std::vector<Word>> BinaryShapes(size_t depth) {
  if (depth == 0) return {{Word{}}};
  auto below = BinaryShapes(depth - 1);
  std::vector<std::vector<Word>> out;
  auto under = [](Nat a, const std::vector<Word>& s) {
    std::vector<Word> r;
    for (const Word& w : s) {
      Word x{a};
      x.insert(x.end(), w.begin(), w.end());
      r.push_back(x);
    }
    return r;
  };
  out.push_back({Word{}});
  for (int mask = 1; mask < 4; ++mask) {
    std::vector<const std::vector<Word>*> none{nullptr};
    std::vector<const std::vector<Word>*> c0 = none, c1 = none;
    if (mask & 1) {
      c0.clear();
      for (const auto& s : below) c0.push_back(&s);
    }
    if (mask & 2) {
      c1.clear();
      for (const auto& s : below) c1.push_back(&s);
    }
    for (auto* a : c0)
      for (auto* b : c1) {
        std::vector<Word> shape{Word{}};
        if (a) for (const Word& w : under(0, *a)) shape.push_back(w);
        if (b) for (const Word& w : under(1, *b)) shape.push_back(w);
        std::sort(shape.begin(), shape.end(), [](const Word& x, const Word& y) {
          return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        out.push_back(std::move(shape));
      }
  }
  return out;
}

RationalTree ShapeTree(const std::vector<Word>& shape) {
  RationalTree t;
  std::map<Word, NodeId> id;
  for (const Word& w : shape) {
    std::string name = "s";
    for (Nat a : w) name += std::to_string(a);
    id[w] = t.AddNode(name);
  }
  t.SetRoot(id.at({}));
  for (const Word& w : shape)
    if (!w.empty()) t.AddEdge(id.at(Word(w.begin(), w.end() - 1)), w.back(), id.at(w));
  return t;
}

std::vector<Word> ShapeLeaves(const std::vector<Word>& shape) {
  std::set<Word> inner;
  for (const Word& w : shape)
    if (!w.empty()) inner.insert(Word(w.begin(), w.end() - 1));
  std::vector<Word> out;
  for (const Word& w : shape)
    if (!inner.count(w)) out.push_back(w);
  return out;
}

// Every clopen game with move bound 2 and depth <= max_depth: each
// validity shape with each set of winning terminal positions.
std::vector<BoundedGame> BinaryClopenGames(size_t max_depth) {
  std::vector<BoundedGame> out;
  for (const auto& shape : BinaryShapes(max_depth)) {
    auto leaves = ShapeLeaves(shape);
    RationalTree t = ShapeTree(shape);
    for (size_t mask = 0; mask < (size_t{1} << leaves.size()); ++mask) {
      std::set<Word> win;
      for (size_t i = 0; i < leaves.size(); ++i)
        if (mask >> i & 1) win.insert(leaves[i]);
      out.emplace_back(2, max_depth, PayoffKind::kClopen, std::move(win), t);
    }
  }
  return out;
}

// Every open game with move bound 2 and depth <= max_depth, with winning
// sets given by antichains of the shape.
std::vector<BoundedGame> BinaryOpenGames(size_t max_depth) {
  std::vector<BoundedGame> out;
  for (const auto& shape : BinaryShapes(max_depth)) {
    RationalTree t = ShapeTree(shape);
    std::set<Word> win;
    std::function<void(size_t)> go = [&](size_t i) {
      if (i == shape.size()) {
        out.emplace_back(2, max_depth, PayoffKind::kOpen, win, t);
        return;
      }
      go(i + 1);
      for (const Word& w : win)
        if (IsPrefix(w, shape[i])) return;
      win.insert(shape[i]);
      go(i + 1);
      win.erase(shape[i]);
    };
    go(0);
  }
  return out;
}

// Every Borel code on an ordered tree with <= max_nodes nodes (children
// labeled 0, 1, ...), with every assignment of truth values to leaves.
}  // namespace atrbench
