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


#include "atrbench/harness.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "atrbench/atr.hpp"
#include "atrbench/census.hpp"
#include "atrbench/choice.hpp"
#include "atrbench/cwo.hpp"
#include "atrbench/error.hpp"
#include "atrbench/families.hpp"
#include "atrbench/perfect.hpp"

namespace atrbench {

// ---------------------------------------------------------------------------
// Expressions.

namespace {

struct Expr {
  std::string head;
  std::vector<Expr> args;
  bool call = false;
};

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  Expr Parse() {
    Expr e = Term();
    Skip();
    if (pos_ != s_.size()) Fail(ErrorKind::kParse, "trailing text in expression '" + s_ + "'");
    return e;
  }

 private:
  void Skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Expr Term() {
    Skip();
    Expr e;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '-' || s_[pos_] == '_'))
      e.head += s_[pos_++];
    if (e.head.empty()) Fail(ErrorKind::kParse, "expected a name in expression '" + s_ + "'");
    Skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      e.call = true;
      ++pos_;
      Skip();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return e;
      }
      while (true) {
        e.args.push_back(Term());
        Skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        Fail(ErrorKind::kParse, "expected ',' or ')' in expression '" + s_ + "'");
      }
    }
    return e;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

bool IsNumber(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Nat Number(const Expr& e) {
  if (!IsNumber(e.head) || e.call) Fail(ErrorKind::kParse, "expected a number, got '" + e.head + "'");
  return std::stoull(e.head);
}

std::vector<Nat> Numbers(const Expr& e) {
  std::vector<Nat> v;
  for (const Expr& a : e.args) v.push_back(Number(a));
  return v;
}

void Arity(const Expr& e, size_t n) {
  if (e.args.size() != n)
    Fail(ErrorKind::kParse, e.head + " takes " + std::to_string(n) + " argument(s)");
}

Order OrderOf(const Expr& e) {
  if (!e.call) {
    if (e.head == "rat") return Rationals();
    if (e.head == "nat") return Naturals();
    if (IsNumber(e.head)) return FiniteOrder(Number(e));
  } else {
    if (e.head == "fin") return FiniteOrder(Numbers(e));
    if (e.head == "succ") {
      Arity(e, 1);
      return Succ(OrderOf(e.args[0]));
    }
    if (e.head == "omega") {
      Arity(e, 1);
      return OrderProdOmega(OrderOf(e.args[0]));
    }
    if (e.head == "star") {
      Arity(e, 2);
      return Star(OrderOf(e.args[0]), OrderOf(e.args[1]));
    }
    if (e.head == "sum") {
      std::vector<Order> parts;
      for (const Expr& a : e.args) parts.push_back(OrderOf(a));
      return OrderSum(parts);
    }
  }
  Fail(ErrorKind::kParse, "unknown order '" + e.head + "'");
}

NotatedWo NotationOf(const Expr& e) {
  if (!e.call) {
    if (e.head == "nat") return NotateNaturals();
    if (IsNumber(e.head)) return NotateFinite(FiniteOrder(Number(e)));
  } else {
    if (e.head == "fin") return NotateFinite(FiniteOrder(Numbers(e)));
    if (e.head == "succ") {
      Arity(e, 1);
      return NotateSucc(NotationOf(e.args[0]));
    }
    if (e.head == "sum") {
      std::vector<NotatedWo> parts;
      for (const Expr& a : e.args) parts.push_back(NotationOf(a));
      return NotateSum(parts);
    }
  }
  Fail(ErrorKind::kParse, "unknown well-order notation '" + e.head + "'");
}

}  // namespace

Order ParseOrderExpr(const std::string& text) { return OrderOf(ExprParser(text).Parse()); }

NotatedWo ParseNotation(const std::string& text) { return NotationOf(ExprParser(text).Parse()); }

// ---------------------------------------------------------------------------
// Codecs.

Json TreeJson(const RationalTree& t) { return WriteTree(t); }

RationalTree TreeOf(const Json& j) { return ParseTree(j.get<std::string>()); }

Json PairsJson(const std::vector<std::pair<RationalTree, RationalTree>>& pairs) {
  Json out = Json::array();
  for (const auto& [s, t] : pairs) out.push_back({TreeJson(s), TreeJson(t)});
  return out;
}

std::vector<std::pair<RationalTree, RationalTree>> PairsOf(const Json& j) {
  if (!j.is_array()) Fail(ErrorKind::kParse, "expected an array of tree pairs");
  std::vector<std::pair<RationalTree, RationalTree>> out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) Fail(ErrorKind::kParse, "expected a pair of trees");
    out.emplace_back(TreeOf(p[0]), TreeOf(p[1]));
  }
  return out;
}

RationalTree LassoTree(const Lasso& p) {
  RationalTree t;
  std::vector<NodeId> stem, cycle;
  for (size_t i = 0; i < p.stem().size(); ++i) stem.push_back(t.AddNode("s" + std::to_string(i)));
  for (size_t i = 0; i < p.cycle().size(); ++i)
    cycle.push_back(t.AddNode("c" + std::to_string(i)));
  t.SetRoot(stem.empty() ? cycle[0] : stem[0]);
  for (size_t i = 0; i < stem.size(); ++i)
    t.AddEdge(stem[i], p.stem()[i], i + 1 < stem.size() ? stem[i + 1] : cycle[0]);
  for (size_t i = 0; i < cycle.size(); ++i)
    t.AddEdge(cycle[i], p.cycle()[i], cycle[(i + 1) % cycle.size()]);
  return t;
}

namespace {

Json LassoJson(const Lasso& p) { return p.ToString(); }
Lasso LassoOf(const Json& j) { return Lasso::Parse(j.get<std::string>()); }

Json LassosJson(const std::vector<Lasso>& ps) {
  Json out = Json::array();
  for (const Lasso& p : ps) out.push_back(LassoJson(p));
  return out;
}

std::vector<Lasso> LassosOf(const Json& j) {
  std::vector<Lasso> out;
  for (const Json& p : j) out.push_back(LassoOf(p));
  return out;
}

BoundedGame GameOf(const Json& j) { return ParseGame(j.get<std::string>()); }
Strategy StrategyOf(const Json& j) { return ParseStrategy(j.get<std::string>()); }

std::vector<RationalTree> TreesOf(const Json& j) {
  if (!j.is_array()) Fail(ErrorKind::kParse, "expected an array of trees");
  std::vector<RationalTree> out;
  for (const Json& t : j) out.push_back(TreeOf(t));
  return out;
}

// Path count capped at 2.
size_t PathsUpToTwo(const RationalTree& t) {
  auto n = FinitePathCount(t);
  return n ? std::min<size_t>(*n, 2) : 2;
}

bool IsBitVector(const Json& y, size_t n) {
  if (!y.is_array() || y.size() != n) return false;
  for (const Json& b : y)
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) return false;
  return true;
}

Json BitsJson(const std::vector<int>& bits) { return Json(bits); }

// Validity checks run on arbitrary outputs; malformed ones are invalid.
DeskProblem Guarded(DeskProblem p) {
  auto valid = p.valid;
  p.valid = [valid](const Json& x, const Json& y) {
    try {
      return valid(x, y);
    } catch (const std::exception&) {
      return false;
    }
  };
  auto dom = p.in_domain;
  p.in_domain = [dom](const Json& x) {
    try {
      return dom(x);
    } catch (const std::exception&) {
      return false;
    }
  };
  return p;
}

// ---------------------------------------------------------------------------
// Families.

int PairNodes(const Bounds& b, int less) { return std::max(1, b.max_nodes - less); }

std::vector<Json> TreeFamily(const Bounds& b) {
  std::vector<Json> out;
  for (const auto& t : DistinctTrees(b.max_nodes, 2)) out.push_back(TreeJson(t));
  return out;
}

// One pair over trees with <= max_nodes - 1 nodes, two pairs over trees
// with <= max_nodes - 2 nodes.
std::vector<Json> TreePairFamily(const Bounds& b) {
  std::vector<Json> out;
  auto one = DistinctTrees(PairNodes(b, 1), 2);
  for (const auto& s : one)
    for (const auto& t : one) out.push_back(Json::array({Json::array({TreeJson(s), TreeJson(t)})}));
  auto two = DistinctTrees(PairNodes(b, 2), 2);
  std::vector<Json> pairs;
  for (const auto& s : two)
    for (const auto& t : two) pairs.push_back(Json::array({TreeJson(s), TreeJson(t)}));
  for (const Json& p : pairs)
    for (const Json& q : pairs) out.push_back(Json::array({p, q}));
  return out;
}

// One tree with <= max_nodes nodes, two with <= max_nodes - 1.
std::vector<Json> TreeListFamily(const Bounds& b) {
  std::vector<Json> out;
  for (const auto& t : DistinctTrees(b.max_nodes, 2)) out.push_back(Json::array({TreeJson(t)}));
  auto two = DistinctTrees(PairNodes(b, 1), 2);
  for (const auto& s : two)
    for (const auto& t : two) out.push_back(Json::array({TreeJson(s), TreeJson(t)}));
  return out;
}

std::vector<Json> LassoFamily(const Bounds& b) {
  std::set<Lasso> seen;
  std::vector<Word> words{{}};
  for (size_t i = 0; i < words.size(); ++i)
    if (words[i].size() < b.max_depth + 1)
      for (Nat a = 0; a < 2; ++a) {
        Word w = words[i];
        w.push_back(a);
        words.push_back(w);
      }
  for (const Word& s : words)
    for (const Word& c : words)
      if (!c.empty() && s.size() + c.size() <= b.max_depth + 1) seen.insert(Lasso(s, c));
  std::vector<Json> out;
  for (const Lasso& p : seen) out.push_back(LassoJson(p));
  return out;
}

std::vector<Json> GameFamily(const std::vector<BoundedGame>& games) {
  std::vector<Json> out;
  for (const auto& g : games) out.push_back(WriteGame(g));
  return out;
}

const std::vector<std::string>& NotationFamily() {
  static const std::vector<std::string> kNotations = {
      "fin()",
      "fin(5)",
      "fin(2,1)",
      "fin(7,2,9)",
      "fin(1,2,3,4)",
      "nat",
      "sum(fin(3),nat)",
      "sum(nat,fin(1))",
      "sum(nat,fin(4,2))",
      "succ(nat)",
      "sum(nat,nat)",
      "sum(nat,fin(2),nat)",
      "sum(nat,nat,fin(6,1))",
      "succ(sum(nat,fin(1),nat))",
  };
  return kNotations;
}

// ---------------------------------------------------------------------------
// Choice problems.

std::vector<Json> CSolutions(const RationalTree& t) {
  PathCensus c = ComputePathCensus(t);
  if (c.kind == CensusKind::kFiniteList) return LassosJson(c.paths);
  return LassosJson(LassoEnumerator(t).First(4));
}

DeskProblem ProblemC() {
  return {"C", TreeFamily, [](const Json& x) { return HasPath(TreeOf(x)); },
          [](const Json& x, const Json& y) { return IsPath(TreeOf(x), LassoOf(y)); },
          [](const Json& x) { return CSolutions(TreeOf(x)); }};
}

DeskProblem ProblemUC() {
  return {"UC", TreeFamily, [](const Json& x) { return FinitePathCount(TreeOf(x)) == size_t{1}; },
          [](const Json& x, const Json& y) { return IsPath(TreeOf(x), LassoOf(y)); },
          [](const Json& x) { return std::vector<Json>{LassoJson(ChoiceUC(TreeOf(x)))}; }};
}

DeskProblem ProblemTC() {
  return {"TC", TreeFamily, [](const Json& x) {
            TreeOf(x);
            return true;
          },
          [](const Json& x, const Json& y) {
            RationalTree t = TreeOf(x);
            Lasso p = LassoOf(y);
            return !HasPath(t) || IsPath(t, p);
          },
          [](const Json& x) {
            RationalTree t = TreeOf(x);
            if (HasPath(t)) return CSolutions(t);
            return std::vector<Json>{LassoJson(Lasso({}, {0})), LassoJson(Lasso({}, {1}))};
          }};
}

// bit 0 allowed iff T_n has no path, bit 1 iff S_n has none.
std::vector<std::vector<int>> AllowedBits(const std::vector<std::pair<RationalTree, RationalTree>>& ps) {
  std::vector<std::vector<int>> allowed;
  for (const auto& [s, t] : ps) {
    std::vector<int> a;
    if (!HasPath(t)) a.push_back(0);
    if (!HasPath(s)) a.push_back(1);
    allowed.push_back(a);
  }
  return allowed;
}

bool BitsAllowed(const Json& x, const Json& y) {
  auto ps = PairsOf(x);
  if (!IsBitVector(y, ps.size())) return false;
  auto allowed = AllowedBits(ps);
  for (size_t n = 0; n < ps.size(); ++n)
    if (std::find(allowed[n].begin(), allowed[n].end(), y[n].get<int>()) == allowed[n].end())
      return false;
  return true;
}

template <typename T>
std::vector<std::vector<T>> Cartesian(const std::vector<std::vector<T>>& choices) {
  std::vector<std::vector<T>> out{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<T>> next;
    for (const auto& prefix : out)
      for (const T& v : c) {
        auto w = prefix;
        w.push_back(v);
        next.push_back(std::move(w));
      }
    out.swap(next);
  }
  return out;
}

std::vector<Json> AllowedBitVectors(const Json& x) {
  std::vector<Json> out;
  for (const auto& bits : Cartesian(AllowedBits(PairsOf(x)))) out.push_back(BitsJson(bits));
  return out;
}

DeskProblem ProblemSep() {
  return {"Sep", TreePairFamily,
          [](const Json& x) {
            for (const auto& [s, t] : PairsOf(x))
              if (HasPath(s) && HasPath(t)) return false;
            return true;
          },
          BitsAllowed, AllowedBitVectors};
}

DeskProblem ProblemDCA() {
  return {"DCA", TreePairFamily,
          [](const Json& x) {
            for (const auto& [s, t] : PairsOf(x))
              if (HasPath(s) == HasPath(t)) return false;
            return true;
          },
          BitsAllowed, AllowedBitVectors};
}

DeskProblem ProblemWDCA() {
  return {"wDCA", TreePairFamily,
          [](const Json& x) {
            for (const auto& [s, t] : PairsOf(x))
              if (PathsUpToTwo(s) + PathsUpToTwo(t) != 1) return false;
            return true;
          },
          BitsAllowed, AllowedBitVectors};
}

DeskProblem ProblemWSCA() {
  return {"wSCA", TreeListFamily,
          [](const Json& x) {
            for (const auto& t : TreesOf(x))
              if (PathsUpToTwo(t) > 1) return false;
            return true;
          },
          [](const Json& x, const Json& y) {
            auto ts = TreesOf(x);
            if (!IsBitVector(y, ts.size())) return false;
            for (size_t n = 0; n < ts.size(); ++n)
              if (static_cast<size_t>(y[n].get<int>()) != PathsUpToTwo(ts[n])) return false;
            return true;
          },
          [](const Json& x) { return std::vector<Json>{BitsJson(WscaOracle(TreesOf(x)))}; }};
}

DeskProblem ProblemLPO() {
  return {"LPO", LassoFamily, [](const Json& x) {
            LassoOf(x);
            return true;
          },
          [](const Json& x, const Json& y) {
            if (y != 0 && y != 1) return false;
            return (LassoOf(x) == Lasso()) == (y == 1);
          },
          [](const Json& x) { return std::vector<Json>{LassoOf(x) == Lasso() ? 1 : 0}; }};
}

// ---------------------------------------------------------------------------
// Listings and perfect sets.

Json ListingJson(const PathListing& l) {
  return {{"card", l.card}, {"points", LassosJson(l.points)}};
}

size_t ExpectedCard(const RationalTree& t) {
  PathCensus c = ComputePathCensus(t);
  return c.kind == CensusKind::kCountablyInfinite ? 0 : c.paths.size() + 1;
}

bool PointsMatch(const RationalTree& t, const Json& points) {
  if (!points.is_array()) return false;
  return LassosOf(points) == LassoEnumerator(t).UpToSize(kListSize);
}

bool Countable(const RationalTree& t) { return ComputePathCensus(t).countable(); }

DeskProblem ProblemList() {
  return {"List", TreeFamily, [](const Json& x) { return Countable(TreeOf(x)); },
          [](const Json& x, const Json& y) {
            RationalTree t = TreeOf(x);
            return y.at("card").get<size_t>() == ExpectedCard(t) && PointsMatch(t, y.at("points"));
          },
          [](const Json& x) { return std::vector<Json>{ListingJson(ListPaths(TreeOf(x), kListSize))}; }};
}

DeskProblem ProblemWList() {
  return {"wList", TreeFamily, [](const Json& x) { return Countable(TreeOf(x)); },
          [](const Json& x, const Json& y) { return PointsMatch(TreeOf(x), y.at("points")); },
          [](const Json& x) {
            return std::vector<Json>{
                Json{{"points", LassosJson(ListPaths(TreeOf(x), kListSize).points)}}};
          }};
}

DeskProblem ProblemPTT1() {
  return {"PTT1", TreeFamily, [](const Json& x) { return !Countable(TreeOf(x)); },
          [](const Json& x, const Json& y) { return TreeSideValid(TreeOf(x), TreeOf(y)); },
          [](const Json& x) { return std::vector<Json>{TreeJson(PerfectKernel(TreeOf(x)))}; }};
}

DeskProblem ProblemPTT2(bool strong) {
  return {strong ? "PTT2" : "wPTT2", TreeFamily, [](const Json& x) {
            TreeOf(x);
            return true;
          },
          [strong](const Json& x, const Json& y) {
            RationalTree t = TreeOf(x);
            if (TreeSideValid(t, TreeOf(y.at("tree")))) return true;
            if (!Countable(t) || !PointsMatch(t, y.at("points"))) return false;
            return !strong || y.at("card").get<size_t>() == ExpectedCard(t);
          },
          [strong](const Json& x) {
            TwoSidedAnswer a = PttTwoSided(TreeOf(x), strong, kListSize);
            Json out = ListingJson(a.list);
            out["tree"] = TreeJson(a.tree);
            return std::vector<Json>{out};
          }};
}

// ---------------------------------------------------------------------------
// Games.

// The strategy of SolveGame, plus for each position of the player with two
// or more winning moves the variant playing the greatest of them.
std::vector<Strategy> WinningStrategies(const BoundedGame& g, int player) {
  GameSolution sol = SolveGame(g);
  if (sol.winner != player) return {};
  std::vector<Strategy> out{sol.strategy};
  for (const Word& v : g.MovePositions(player)) {
    std::vector<Nat> good;
    for (Nat m : g.ValidMoves(v)) {
      Word w = v;
      w.push_back(m);
      if (sol.value.at(w) == (player == 1)) good.push_back(m);
    }
    if (good.size() >= 2) {
      Strategy s = sol.strategy;
      s.choice[v] = good.back();
      out.push_back(s);
    }
  }
  return out;
}

bool WinsFor(const BoundedGame& g, const Json& y, int player) {
  Strategy s = StrategyOf(y);
  if (s.player != player) return false;
  ValidateStrategy(g, s);
  return WinsAll(g, s);
}

DeskProblem ProblemFindWS(int player) {
  return {player == 1 ? "FindWS-Sigma" : "FindWS-Pi",
          [](const Bounds& b) { return GameFamily(BinaryOpenGames(b.max_depth)); },
          [player](const Json& x) { return SolveGame(GameOf(x)).winner == player; },
          [player](const Json& x, const Json& y) { return WinsFor(GameOf(x), y, player); },
          [player](const Json& x) {
            std::vector<Json> out;
            for (const auto& s : WinningStrategies(GameOf(x), player)) out.push_back(WriteStrategy(s));
            return out;
          }};
}

Json PairJson(const Strategy& a, const Strategy& b) {
  return Json::array({WriteStrategy(a), WriteStrategy(b)});
}

DeskProblem ProblemDet(PayoffKind kind) {
  bool clopen = kind == PayoffKind::kClopen;
  return {clopen ? "Det-Delta" : "Det-Sigma",
          [clopen](const Bounds& b) {
            return GameFamily(clopen ? BinaryClopenGames(b.max_depth) : BinaryOpenGames(b.max_depth));
          },
          [kind](const Json& x) { return GameOf(x).kind() == kind; },
          [](const Json& x, const Json& y) {
            BoundedGame g = GameOf(x);
            if (!y.is_array() || y.size() != 2) return false;
            Strategy s = StrategyOf(y[0]), t = StrategyOf(y[1]);
            if (s.player != 1 || t.player != 2) return false;
            ValidateStrategy(g, s);
            ValidateStrategy(g, t);
            return WinsAll(g, s) || WinsAll(g, t);
          },
          [](const Json& x) {
            BoundedGame g = GameOf(x);
            int winner = SolveGame(g).winner;
            std::vector<Json> out;
            for (const auto& s : WinningStrategies(g, winner))
              out.push_back(winner == 1 ? PairJson(s, LeastMoveStrategy(g, 2))
                                        : PairJson(LeastMoveStrategy(g, 1), s));
            return out;
          }};
}

// ---------------------------------------------------------------------------
// CWO and ATR.

// Codes checked by the strong-comparison checker, and the codes whose
// images a solution lists.
constexpr Nat kCwoCheckBound = 8;
constexpr Nat kCwoGraphBound = 64;

struct NotatedPair {
  NotatedWo x, y;
};

NotatedPair NotatedOf(const Json& j) {
  return {ParseNotation(j.at("x").get<std::string>()), ParseNotation(j.at("y").get<std::string>())};
}

bool Finite(const NotatedWo& w) { return w.base()->Size().has_value(); }

Json CwoJson(const std::string& direction, const std::vector<std::pair<Nat, Nat>>& graph) {
  Json g = Json::array();
  for (auto [a, b] : graph) g.push_back({a, b});
  return {{"direction", direction}, {"graph", g}};
}

std::vector<Json> SepAnswers(const Json& pairs) {
  auto ps = PairsOf(pairs);
  SepOrders orders = BuildSepOrders(ps);
  std::vector<std::vector<int>> choices;
  for (size_t n = 0; n < ps.size(); ++n) {
    int base = static_cast<int>(DeskCwoOnSep(orders, ps, SepQueryCode(n)).v_part);
    if (!HasPath(ps[n].first) && !HasPath(ps[n].second))
      choices.push_back({1, 2});
    else
      choices.push_back({base});
  }
  std::vector<Json> out;
  for (const auto& a : Cartesian(choices)) out.push_back(Json{{"answers", a}});
  return out;
}

bool SepInDomain(const Json& pairs) {
  for (const auto& [s, t] : PairsOf(pairs))
    if (HasPath(s) && HasPath(t)) return false;
  return true;
}

DeskProblem ProblemCWO() {
  return {"CWO",
          [](const Bounds&) {
            std::vector<Json> out;
            for (const auto& a : NotationFamily())
              for (const auto& b : NotationFamily()) out.push_back(Json{{"x", a}, {"y", b}});
            return out;
          },
          [](const Json& x) {
            if (x.contains("sep")) return SepInDomain(x.at("sep"));
            NotatedOf(x);
            return true;
          },
          [](const Json& x, const Json& y) {
            if (x.contains("sep")) {
              auto ps = PairsOf(x.at("sep"));
              const Json& a = y.at("answers");
              if (!a.is_array() || a.size() != ps.size()) return false;
              for (size_t n = 0; n < ps.size(); ++n) {
                int v = a[n].get<int>();
                if (v != 1 && v != 2) return false;
                // S_n ill-founded puts the block below U, T_n ill-founded past it.
                if (HasPath(ps[n].first) && v != 1) return false;
                if (HasPath(ps[n].second) && v != 2) return false;
              }
              return true;
            }
            NotatedPair p = NotatedOf(x);
            std::string dir = y.at("direction").get<std::string>();
            Order from, to;
            if (dir == DirectionName(Direction::kXleY)) {
              from = p.x.base();
              to = p.y.base();
            } else if (dir == DirectionName(Direction::kSuccYleX)) {
              from = Succ(p.y.base());
              to = p.x.base();
            } else {
              return false;
            }
            std::map<Nat, Nat> graph;
            for (const Json& e : y.at("graph")) graph[e.at(0).get<Nat>()] = e.at(1).get<Nat>();
            for (Nat a : from->ElementsUpTo(kCwoGraphBound))
              if (!graph.count(a)) return false;
            for (const auto& [a, b] : graph)
              if (!from->Contains(a)) return false;
            NatMap f = [graph](Nat n) {
              auto it = graph.find(n);
              return it == graph.end() ? Nat{0} : it->second;
            };
            return CheckStrongComparison(f, *from, *to, kCwoCheckBound);
          },
          [](const Json& x) {
            if (x.contains("sep")) return SepAnswers(x.at("sep"));
            NotatedPair p = NotatedOf(x);
            std::vector<Json> out;
            if (Finite(p.x) && Finite(p.y)) {
              const Order& from_x = p.x.base();
              const Order& from_y = p.y.base();
              for (const auto& s : AllCwoSolutions(from_x, from_y))
                out.push_back(CwoJson(DirectionName(s.direction), s.graph));
              return out;
            }
            ComparisonMap c = Cwo(p.x, p.y);
            std::vector<std::pair<Nat, Nat>> graph;
            for (Nat a : c.from->ElementsUpTo(kCwoGraphBound)) graph.emplace_back(a, c.map(a));
            out.push_back(CwoJson(DirectionName(c.direction), graph));
            return out;
          }};
}

std::set<Nat> DcaTop(const Json& pairs) {
  DcaRun run = DeltaCaViaAtr(PairsOf(pairs));
  return run.result.trace.back().produced;
}

DeskProblem ProblemATR() {
  return {"ATR",
          [](const Bounds& b) {
            std::vector<Json> forests{Json::array()};
            for (const auto& t : DistinctTrees(PairNodes(b, 1), 2))
              forests.push_back(Json::array({TreeJson(t)}));
            std::vector<Json> out;
            for (const auto& rule : {"const0", "card", "leafstrip"})
              for (const auto& order : {"fin()", "fin(1)", "fin(2,1)", "fin(3,1,2)"})
                for (const auto& z : forests)
                  out.push_back(Json{{"forest", z}, {"order", order}, {"rule", rule}});
            return out;
          },
          [](const Json& x) {
            if (x.contains("dca")) {
              for (const auto& [s, t] : PairsOf(x.at("dca")))
                if (HasPath(s) == HasPath(t)) return false;
              return true;
            }
            TreesOf(x.at("forest"));
            RuleByName(x.at("rule").get<std::string>());
            return Finite(ParseNotation(x.at("order").get<std::string>()));
          },
          [](const Json& x, const Json& y) {
            if (x.contains("dca")) {
              std::set<Nat> top;
              for (const Json& v : y.at("top")) top.insert(v.get<Nat>());
              return top == DcaTop(x.at("dca"));
            }
            AtrResult r;
            for (const Json& e : y.at("y")) r.y.emplace(e.at(0).get<Nat>(), e.at(1).get<Nat>());
            return CheckAtrEquivalence(r, TreesOf(x.at("forest")),
                                       ParseNotation(x.at("order").get<std::string>()),
                                       RuleByName(x.at("rule").get<std::string>()));
          },
          [](const Json& x) {
            if (x.contains("dca")) return std::vector<Json>{Json{{"top", DcaTop(x.at("dca"))}}};
            AtrResult r = AtrRun(TreesOf(x.at("forest")),
                                 ParseNotation(x.at("order").get<std::string>()),
                                 RuleByName(x.at("rule").get<std::string>()));
            Json pairs = Json::array();
            for (auto [v, j] : r.y) pairs.push_back({v, j});
            return std::vector<Json>{Json{{"y", pairs}}};
          }};
}

// ---------------------------------------------------------------------------
// Names.

std::vector<std::string> SplitArgs(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur += c;
  }
  out.push_back(cur);
  return out;
}

std::string Trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

DeskProblem BaseProblem(const std::string& name) {
  if (name == "C") return ProblemC();
  if (name == "UC") return ProblemUC();
  if (name == "TC") return ProblemTC();
  if (name == "Sep") return ProblemSep();
  if (name == "DCA") return ProblemDCA();
  if (name == "wDCA") return ProblemWDCA();
  if (name == "wSCA") return ProblemWSCA();
  if (name == "List") return ProblemList();
  if (name == "wList") return ProblemWList();
  if (name == "PTT1") return ProblemPTT1();
  if (name == "PTT2") return ProblemPTT2(true);
  if (name == "wPTT2") return ProblemPTT2(false);
  if (name == "FindWS-Sigma") return ProblemFindWS(1);
  if (name == "FindWS-Pi") return ProblemFindWS(2);
  if (name == "Det-Delta") return ProblemDet(PayoffKind::kClopen);
  if (name == "Det-Sigma") return ProblemDet(PayoffKind::kOpen);
  if (name == "CWO") return ProblemCWO();
  if (name == "ATR") return ProblemATR();
  if (name == "LPO") return ProblemLPO();
  Fail(ErrorKind::kDomain, "unknown problem '" + name + "'");
}

}  // namespace

std::vector<std::string> ProblemNames() {
  return {"C",     "UC",   "TC",   "Sep",   "DCA",          "wDCA",      "wSCA",
          "List",  "wList", "PTT1", "PTT2", "wPTT2", "FindWS-Sigma", "FindWS-Pi", "Det-Delta",
          "Det-Sigma", "CWO", "ATR", "LPO"};
}

DeskProblem ProblemByName(const std::string& raw) {
  std::string name = Trim(raw);
  auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')') return Guarded(BaseProblem(name));
  std::string head = name.substr(0, open);
  auto args = SplitArgs(name.substr(open + 1, name.size() - open - 2));
  for (auto& a : args) a = Trim(a);
  if (head == "product" && args.size() == 2)
    return Product(ProblemByName(args[0]), ProblemByName(args[1]));
  if (head == "star" && args.size() == 1) return StarFinite(ProblemByName(args[0]));
  if (head == "pipeline" && args.size() == 3)
    return Pipeline(ProblemByName(args[0]), args[1], GlueByName(args[1]), ProblemByName(args[2]));
  Fail(ErrorKind::kDomain, "unknown problem '" + name + "'");
}

// ---------------------------------------------------------------------------
// Combinators.

namespace {

constexpr size_t kCombinedInstances = 12;
constexpr size_t kCombinedSolutions = 16;

std::vector<Json> DomainPrefix(const DeskProblem& f, const Bounds& b, size_t k) {
  std::vector<Json> out;
  for (const Json& x : f.instances(b)) {
    if (out.size() == k) break;
    if (f.in_domain(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

DeskProblem Product(const DeskProblem& f, const DeskProblem& g) {
  DeskProblem p;
  p.name = "product(" + f.name + "," + g.name + ")";
  p.instances = [f, g](const Bounds& b) {
    std::vector<Json> out;
    for (const Json& x : DomainPrefix(f, b, kCombinedInstances))
      for (const Json& z : DomainPrefix(g, b, kCombinedInstances)) out.push_back({x, z});
    return out;
  };
  p.in_domain = [f, g](const Json& x) {
    return x.is_array() && x.size() == 2 && f.in_domain(x[0]) && g.in_domain(x[1]);
  };
  p.valid = [f, g](const Json& x, const Json& y) {
    return y.is_array() && y.size() == 2 && f.valid(x[0], y[0]) && g.valid(x[1], y[1]);
  };
  p.solutions = [f, g](const Json& x) {
    std::vector<Json> out;
    for (const Json& a : f.solutions(x[0]))
      for (const Json& c : g.solutions(x[1]))
        if (out.size() < kCombinedSolutions) out.push_back({a, c});
    return out;
  };
  return Guarded(p);
}

DeskProblem StarFinite(const DeskProblem& f) {
  DeskProblem p;
  p.name = "star(" + f.name + ")";
  p.instances = [f](const Bounds& b) {
    auto xs = DomainPrefix(f, b, kCombinedInstances);
    std::vector<Json> out{Json::array()};
    for (const Json& x : xs) out.push_back(Json::array({x}));
    for (size_t i = 0; i < xs.size() && i < 6; ++i)
      for (size_t j = 0; j < xs.size() && j < 6; ++j) out.push_back(Json::array({xs[i], xs[j]}));
    return out;
  };
  p.in_domain = [f](const Json& x) {
    if (!x.is_array()) return false;
    for (const Json& e : x)
      if (!f.in_domain(e)) return false;
    return true;
  };
  p.valid = [f](const Json& x, const Json& y) {
    if (!y.is_array() || y.size() != x.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!f.valid(x[i], y[i])) return false;
    return true;
  };
  p.solutions = [f](const Json& x) {
    std::vector<std::vector<Json>> each;
    for (const Json& e : x) each.push_back(f.solutions(e));
    std::vector<Json> out;
    for (const auto& t : Cartesian(each)) {
      if (out.size() == kCombinedSolutions) break;
      out.push_back(Json(t));
    }
    return out;
  };
  return Guarded(p);
}

DeskProblem Pipeline(const DeskProblem& f, const std::string& glue_name, const Glue& glue,
                     const DeskProblem& g) {
  DeskProblem p;
  p.name = "pipeline(" + f.name + "," + glue_name + "," + g.name + ")";
  p.instances = g.instances;
  p.in_domain = [f, g, glue](const Json& x) {
    if (!g.in_domain(x)) return false;
    for (const Json& s : g.solutions(x))
      if (!f.in_domain(glue(x, s))) return false;
    return true;
  };
  p.valid = [f, g, glue](const Json& x, const Json& y) {
    for (const Json& s : g.solutions(x))
      if (f.valid(glue(x, s), y)) return true;
    return false;
  };
  p.solutions = [f, g, glue](const Json& x) { return f.solutions(glue(x, g.solutions(x).front())); };
  return Guarded(p);
}

Glue GlueByName(const std::string& name) {
  if (name == "singleton-from-first")
    return [](const Json&, const Json& s) {
      const Json& points = s.at("points");
      if (points.empty()) Fail(ErrorKind::kDomain, "the listing is empty");
      return TreeJson(LassoTree(LassoOf(points[0])));
    };
  Fail(ErrorKind::kDomain, "unknown glue '" + name + "'");
}

// ---------------------------------------------------------------------------
// Witnesses.

namespace {

ReductionWitness Make(std::string name, std::string f, std::string g, bool strong,
                      std::function<Json(const Json&)> pre,
                      std::function<Json(const Json&, const Json&)> post, bool broken = false) {
  ReductionWitness w;
  w.name = std::move(name);
  w.f = std::move(f);
  w.g = std::move(g);
  w.strong = strong;
  w.pre = std::move(pre);
  w.post = std::move(post);
  w.broken = broken;
  return w;
}

Json Identity(const Json& x) { return x; }

Json Side(const Json& x, size_t side) {
  Json out = Json::array();
  for (const Json& p : x) out.push_back(p.at(side));
  return out;
}

// The split queries: one prefix split per word u.a with u an unfolding
// word of length < 3n and a < the label bound, n the pruned node count.
std::vector<Word> SplitWords(const RationalTree& t) {
  const size_t n = Prune(t).size();
  std::vector<Word> out;
  if (n == 0) return out;
  for (const Word& u : UnfoldingNodes(t, 3 * n - 1))
    for (Nat a = 0; a < std::max<Nat>(1, t.LabelBound()); ++a) {
      Word w = u;
      w.push_back(a);
      out.push_back(w);
    }
  return out;
}

Json SplitInstance(const Json& x) {
  RationalTree t = TreeOf(x);
  std::vector<std::pair<RationalTree, RationalTree>> pairs;
  for (const Word& w : SplitWords(t)) pairs.push_back(PrefixSplit(t, w));
  return PairsJson(pairs);
}

// Reads digits: the a with u.a on the near side of its split.
Json ReadSplitDigits(const Json& x, const Json& s, size_t length_factor) {
  RationalTree t = TreeOf(x);
  auto words = SplitWords(t);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  const size_t n = Prune(t).size();
  Word digits;
  for (size_t i = 0; i < length_factor * n; ++i) {
    bool found = false;
    for (Nat a = 0; a < t.LabelBound() && !found; ++a) {
      Word w = digits;
      w.push_back(a);
      auto it = index.find(w);
      if (it != index.end() && s.at(it->second).get<int>() == 0) {
        digits = w;
        found = true;
      }
    }
    if (!found) return nullptr;
  }
  auto p = Lasso::FromPrefix(digits, n);
  return p ? LassoJson(*p) : Json();
}

Json SepBits(const Json& s, bool flip) {
  std::vector<int> bits;
  for (const Json& a : s.at("answers")) bits.push_back((a.get<int>() == 1) != flip ? 0 : 1);
  return BitsJson(bits);
}

Json DcaBits(const Json& x, const Json& s, bool second) {
  auto ps = PairsOf(x);
  std::set<Nat> top;
  for (const Json& v : s.at("top")) top.insert(v.get<Nat>());
  std::vector<int> bits;
  for (size_t n = 0; n < ps.size(); ++n) {
    const RationalTree& t = second ? ps[n].second : ps[n].first;
    bool alive = !t.empty() && top.count(Pair(2 * n + (second ? 1 : 0), t.root()));
    bits.push_back(alive ? 0 : 1);
  }
  return BitsJson(bits);
}

size_t CertifiedCard(const RationalTree& t) {
  size_t total = 0;
  for (const auto& stage : MakeGlobalCert(t).stages) {
    auto k = stage.PointCount();
    if (!k) return 0;
    total += *k;
  }
  return total + 1;
}

// Player 2 strategies in AllStrategies order, one branch per strategy whose
// options tree is pruned: the strategy index, then the prunedness witness
// moves, then zeros.
Json OptionChoiceTree(const Json& x) {
  BoundedGame g = GameOf(x);
  auto taus = AllStrategies(g, 2);
  RationalTree out;
  NodeId root = out.AddNode("r");
  out.SetRoot(root);
  for (size_t i = 0; i < taus.size(); ++i) {
    OptionTree ot = BuildOptionTree(g, taus[i]);
    std::string tag = "b" + std::to_string(i) + "_";
    NodeId cur = out.AddNode(tag + "0");
    out.AddEdge(root, i, cur);
    if (!ot.pruned) continue;
    size_t k = 0;
    for (const auto& [v, m] : ot.witness) {
      NodeId next = out.AddNode(tag + std::to_string(++k));
      out.AddEdge(cur, m, next);
      cur = next;
    }
    out.AddEdge(cur, 0, cur);
  }
  return TreeJson(out);
}

Json StrategyFromChoice(const Json& x, const Json& s) {
  BoundedGame g = GameOf(x);
  auto taus = AllStrategies(g, 2);
  Nat i = LassoOf(s).At(0);
  if (i >= taus.size()) return nullptr;
  return WriteStrategy(taus[i]);
}

Json SideChoicePair(const Json& x, const Json& s, bool ignore_first) {
  BoundedGame g = GameOf(x);
  Strategy derived = StrategyOf(s);
  if (ignore_first) {
    Strategy sigma{1, {}};
    for (const Word& v : g.MovePositions(1)) {
      Word w{0, 0};
      w.insert(w.end(), v.begin(), v.end());
      auto it = derived.choice.find(w);
      sigma.choice[v] = it != derived.choice.end() ? it->second : g.ValidMoves(v).front();
    }
    return PairJson(sigma, LeastMoveStrategy(g, 2));
  }
  SideChoiceExtraction e = ExtractSideChoice(g, derived);
  return e.winner == 1 ? PairJson(e.strategy, LeastMoveStrategy(g, 2))
                       : PairJson(LeastMoveStrategy(g, 1), e.strategy);
}

}  // namespace

std::vector<ReductionWitness> BuiltinWitnesses() {
  std::vector<ReductionWitness> w;
  w.push_back(Make("drop-first", "wDCA", "wSCA", true,
                   [](const Json& x) { return Side(x, 1); },
                   [](const Json&, const Json& s) { return s; }));
  w.push_back(Make("uc-via-wdca", "UC", "wDCA", false, SplitInstance,
                   [](const Json& x, const Json& s) { return ReadSplitDigits(x, s, 3); }));
  w.push_back(Make("sep-via-cwo", "Sep", "CWO", true,
                   [](const Json& x) { return Json{{"sep", x}}; },
                   [](const Json&, const Json& s) { return SepBits(s, false); }));
  w.push_back(Make("dca-via-atr", "DCA", "ATR", false,
                   [](const Json& x) { return Json{{"dca", x}}; },
                   [](const Json& x, const Json& s) { return DcaBits(x, s, false); }));
  w.push_back(Make("list-via-mcb", "List", "wList", false, Identity,
                   [](const Json& x, const Json& s) {
                     return Json{{"card", CertifiedCard(TreeOf(x))}, {"points", s.at("points")}};
                   }));
  w.push_back(Make("findws-pi-via-option-tree", "FindWS-Pi", "C", false, OptionChoiceTree,
                   StrategyFromChoice));
  w.push_back(Make("det-delta-via-side-choice", "Det-Delta", "FindWS-Sigma", false,
                   [](const Json& x) { return Json(WriteGame(BuildSideChoice(GameOf(x)))); },
                   [](const Json& x, const Json& s) { return SideChoicePair(x, s, false); }));
  // Planted mistakes.
  w.push_back(Make("drop-second", "wDCA", "wSCA", true,
                   [](const Json& x) { return Side(x, 0); },
                   [](const Json&, const Json& s) { return s; }, true));
  w.push_back(Make("uc-via-wdca-short", "UC", "wDCA", false, SplitInstance,
                   [](const Json& x, const Json& s) { return ReadSplitDigits(x, s, 1); }, true));
  w.push_back(Make("sep-via-cwo-flipped", "Sep", "CWO", true,
                   [](const Json& x) { return Json{{"sep", x}}; },
                   [](const Json&, const Json& s) { return SepBits(s, true); }, true));
  w.push_back(Make("dca-via-atr-second-root", "DCA", "ATR", false,
                   [](const Json& x) { return Json{{"dca", x}}; },
                   [](const Json& x, const Json& s) { return DcaBits(x, s, true); }, true));
  w.push_back(Make("list-counting-points", "List", "wList", false, Identity,
                   [](const Json&, const Json& s) {
                     return Json{{"card", s.at("points").size() + 1}, {"points", s.at("points")}};
                   },
                   true));
  w.push_back(Make("side-choice-ignoring-first-move", "Det-Delta", "FindWS-Sigma", false,
                   [](const Json& x) { return Json(WriteGame(BuildSideChoice(GameOf(x)))); },
                   [](const Json& x, const Json& s) { return SideChoicePair(x, s, true); }, true));
  return w;
}

ReductionWitness WitnessByName(const std::string& name) {
  if (name == "identity")
    return Make("identity", "", "", true, Identity, [](const Json&, const Json& s) { return s; });
  for (auto& w : BuiltinWitnesses())
    if (w.name == name) return w;
  Fail(ErrorKind::kDomain, "unknown witness '" + name + "'");
}

// ---------------------------------------------------------------------------
// Checking.

namespace {

constexpr size_t kListedCounterexamples = 5;

}  // namespace

ReductionReport CheckReduction(const DeskProblem& f, const DeskProblem& g,
                               const ReductionWitness& w, const Bounds& bounds) {
  ReductionReport r;
  r.f = f.name;
  r.g = g.name;
  r.witness = w.name;
  r.strong = w.strong;
  std::map<std::string, Json> family;
  for (const Json& x : f.instances(bounds))
    if (f.in_domain(x)) family.emplace(x.dump(), x);
  auto fail = [&](const Json& x, const Json& hx, const Json& s, const Json& out,
                  const std::string& why) {
    ++r.failures;
    if (r.counterexamples.size() < kListedCounterexamples)
      r.counterexamples.push_back({x, hx, s, out, why});
  };
  for (const auto& [key, x] : family) {
    ++r.instances;
    Json hx;
    try {
      hx = w.pre(x);
    } catch (const std::exception& e) {
      fail(x, nullptr, nullptr, nullptr, std::string("pre failed: ") + e.what());
      continue;
    }
    if (!g.in_domain(hx)) {
      fail(x, hx, nullptr, nullptr, "H(p) is outside the domain of " + g.name);
      continue;
    }
    std::vector<Json> solutions;
    try {
      solutions = g.solutions(hx);
    } catch (const std::exception& e) {
      fail(x, hx, nullptr, nullptr, std::string("oracle failed: ") + e.what());
      continue;
    }
    for (const Json& s : solutions) {
      ++r.checked;
      Json out;
      try {
        out = w.post(w.strong ? Json() : x, s);
      } catch (const std::exception& e) {
        fail(x, hx, s, nullptr, std::string("post failed: ") + e.what());
        continue;
      }
      if (!f.valid(x, out)) fail(x, hx, s, out, "K(p, s) is not a solution of " + f.name);
    }
  }
  return r;
}

Json ReductionReport::ToJson() const {
  Json cx = Json::array();
  for (const auto& c : counterexamples)
    cx.push_back({{"instance", c.instance},
                  {"oracle_instance", c.oracle_instance},
                  {"oracle_solution", c.oracle_solution},
                  {"output", c.output},
                  {"reason", c.reason}});
  return {{"f", f},
          {"g", g},
          {"witness", witness},
          {"mode", strong ? "strong" : "weak"},
          {"instances", instances},
          {"checked", checked},
          {"failures", failures},
          {"result", certified() ? "certified" : "refuted"},
          {"counterexamples", cx}};
}

std::string ReductionReport::ToText() const {
  std::ostringstream os;
  os << "reduction " << f << " <= " << g << " via " << witness << " ("
     << (strong ? "strong" : "weak") << ")\n";
  os << "instances " << instances << "\nchecked " << checked << "\nfailures " << failures << "\n";
  os << "result " << (certified() ? "certified" : "refuted") << "\n";
  for (size_t i = 0; i < counterexamples.size(); ++i) {
    const auto& c = counterexamples[i];
    os << "counterexample " << i << ": " << c.reason << "\n";
    os << "  instance " << c.instance.dump() << "\n";
    os << "  oracle instance " << c.oracle_instance.dump() << "\n";
    os << "  oracle solution " << c.oracle_solution.dump() << "\n";
    os << "  output " << c.output.dump() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// if-then-else.

Json IfThenElse(const TruthName& b, const DeskProblem& f, const Json& x0, const DeskProblem& g,
                const Json& x1) {
  if (TruthValue(b)) {
    if (!f.in_domain(x0)) Fail(ErrorKind::kDomain, "left instance is outside the domain of " + f.name);
    return {{"left", f.solutions(x0).front()}, {"right", nullptr}};
  }
  if (!g.in_domain(x1)) Fail(ErrorKind::kDomain, "right instance is outside the domain of " + g.name);
  return {{"left", nullptr}, {"right", g.solutions(x1).front()}};
}

bool IfThenElseValid(const TruthName& b, const DeskProblem& f, const Json& x0,
                     const DeskProblem& g, const Json& x1, const Json& out) {
  if (!out.is_object() || !out.contains("left") || !out.contains("right")) return false;
  return TruthValue(b) ? f.valid(x0, out["left"]) : g.valid(x1, out["right"]);
}

}  // namespace atrbench
