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


#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "atrbench/atr.hpp"
#include "atrbench/census.hpp"
#include "atrbench/choice.hpp"
#include "atrbench/cwo.hpp"
#include "atrbench/error.hpp"
#include "atrbench/games.hpp"
#include "atrbench/harness.hpp"
#include "atrbench/orders.hpp"
#include "atrbench/perfect.hpp"
#include "atrbench/truth.hpp"

namespace atrbench::cli {
namespace {

struct Result {
  Result() = default;
  Result(Json j, int c = 0, std::string t = "") : json(std::move(j)), code(c), text(std::move(t)) {}

  Json json;
  int code = 0;
  // Replaces the generic text rendering when set.
  std::string text;
};

struct Globals {
  int max_nodes = 3;
  size_t max_depth = 3;
  std::string format = "text";
  std::string out;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RationalTree TreeFile(const std::string& path) { return ParseTree(ReadFile(path)); }
BoundedGame GameFile(const std::string& path) { return ParseGame(ReadFile(path)); }

TreePairs PairsFile(const std::string& path) {
  auto ts = ParseTreeList(ReadFile(path));
  if (ts.size() % 2) Fail(ErrorKind::kParse, path + ": expected an even number of trees");
  TreePairs out;
  for (size_t i = 0; i < ts.size(); i += 2) out.emplace_back(ts[i], ts[i + 1]);
  return out;
}

// "kb:<tree file>" or an order expression.
Order OrderArg(const std::string& spec) {
  if (spec.rfind("kb:", 0) == 0) return KbLinearOrder(TreeFile(spec.substr(3)));
  return ParseOrderExpr(spec);
}

Json Words(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(WordToString(w));
  return out;
}

Json Lassos(const std::vector<Lasso>& ps) {
  Json out = Json::array();
  for (const Lasso& p : ps) out.push_back(p.ToString());
  return out;
}

Json Bits(const std::vector<int>& bits) { return Json(bits); }

const char* StatusName(WoStatus s) {
  switch (s) {
    case WoStatus::kWellOrder: return "well-order";
    case WoStatus::kNotWellOrder: return "not-well-order";
    case WoStatus::kUnknown: return "unknown";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Text rendering: one "key value" line per scalar, indented blocks for
// multi-line strings and nested values.

bool Scalar(const Json& j) {
  return !j.is_structured() && !(j.is_string() && j.get<std::string>().find('\n') != std::string::npos);
}

std::string ScalarText(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void Render(const Json& j, const std::string& indent, std::ostream& os);

void RenderValue(const std::string& key, const Json& v, const std::string& indent, std::ostream& os) {
  if (Scalar(v)) {
    std::string text = ScalarText(v);
    os << indent << key << (text.empty() ? "" : " ") << text << "\n";
    return;
  }
  if (v.is_string()) {
    os << indent << key << ":\n";
    std::istringstream is(v.get<std::string>());
    std::string line;
    while (std::getline(is, line)) os << indent << "  " << line << "\n";
    return;
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), Scalar)) {
    os << indent << key;
    for (const Json& e : v) os << " " << ScalarText(e);
    os << "\n";
    return;
  }
  if (v.is_array()) {
    for (size_t i = 0; i < v.size(); ++i) RenderValue(key + "[" + std::to_string(i) + "]", v[i], indent, os);
    return;
  }
  os << indent << key << ":\n";
  Render(v, indent + "  ", os);
}

void Render(const Json& j, const std::string& indent, std::ostream& os) {
  for (const auto& [k, v] : j.items()) RenderValue(k, v, indent, os);
}

// ---------------------------------------------------------------------------
// Commands.

Result Kb(const Globals& g, const std::string& file) {
  RationalTree t = TreeFile(file);
  KbView view = KbOrder(t, g.max_depth);
  KbVerdict v = CheckKbWellOrder(t);
  return {{{"nodes", Words(view.Sorted())},
           {"complete", view.complete()},
           {"well_order", v.well_order},
           {"descending_branch", v.descending_branch ? Json(v.descending_branch->ToString()) : Json()}}};
}

Result Ddt(const Globals& g, const std::string& x, const std::string& y, Nat bound) {
  DoubleDescentTree d = DoubleDescent(OrderArg(x), OrderArg(y), g.max_depth, bound);
  Json seqs = Json::array();
  for (const auto& s : d.sequences) {
    Json e = Json::array();
    for (auto [m, n] : s) e.push_back({m, n});
    seqs.push_back(e);
  }
  return {{{"complete", d.complete}, {"depth", d.depth}, {"tree", WriteTree(d.tree)}, {"sequences", seqs}}};
}

Result StarCmd(const std::string& x, const std::string& y) {
  Order s = Star(OrderArg(x), OrderArg(y));
  Json type;
  try {
    type = CnfType(s).ToString();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUnsupported) throw;
    type = "unsupported";
  }
  return {{{"order", s->Describe()}, {"status", StatusName(s->Status())}, {"type", type}}};
}

Result CwoCmd(const std::string& x, const std::string& y, Nat bound) {
  NotatedWo a = ParseNotation(x), b = ParseNotation(y);
  ComparisonMap c = Cwo(a, b);
  Json graph = Json::array();
  for (Nat e : c.from->ElementsUpTo(bound)) graph.push_back({e, c.map(e)});
  return {{{"direction", DirectionName(c.direction)},
           {"type_x", a.type().ToString()},
           {"type_y", b.type().ToString()},
           {"graph", graph},
           {"strong", CheckStrongComparison(c.map, *c.from, *c.to, bound)}}};
}

Result AtrCmd(const std::string& file, const std::string& order, const std::string& rule_name) {
  Forest z = ParseTreeList(ReadFile(file));
  NotatedWo x = ParseNotation(order);
  StepRule rule = RuleByName(rule_name);
  AtrResult r = AtrRun(z, x, rule);
  Json stages = Json::array();
  for (const auto& s : r.trace)
    stages.push_back({{"element", s.element}, {"rank", s.rank.ToString()}, {"produced", s.produced}});
  Json pairs = Json::array();
  for (auto [y, j] : r.y) pairs.push_back({y, j});
  return {{{"stages", stages}, {"pairs", pairs}, {"equivalence", CheckAtrEquivalence(r, z, x, rule)}}};
}

Result LeafStrip(const std::string& file) {
  Forest z{TreeFile(file)};
  Survivors s = AllNodes(z);
  Json stages = Json::array();
  size_t stable = 0;
  for (size_t k = 1; k <= z[0].size() + 1; ++k) {
    Survivors next = LeafStripStage(z, s);
    Json names = Json::array();
    for (NodeId q = 0; q < z[0].size(); ++q)
      if (next[0][q]) names.push_back(z[0].name(q));
    stages.push_back(names);
    bool same = next == s;
    s = next;
    if (same) {
      stable = k;
      break;
    }
  }
  return {{{"stages", stages}, {"stable_at", stable}}};
}

Result DcaViaAtr(const std::string& file) {
  DcaRun r = DeltaCaViaAtr(PairsFile(file));
  Json ranks = Json::array();
  for (const auto& a : r.stage_ranks) ranks.push_back(a.ToString());
  return {{{"bits", Bits(r.bits)}, {"order_type", r.order_type.ToString()}, {"stage_ranks", ranks}}};
}

Result SolveGameCmd(const std::string& file) {
  GameSolution s = SolveGame(GameFile(file));
  return {{{"winner", s.winner}, {"strategy", WriteStrategy(s.strategy)}}};
}

Result OptionTreeCmd(const std::string& game, const std::string& strategy) {
  OptionTree ot = BuildOptionTree(GameFile(game), ParseStrategy(ReadFile(strategy)));
  Json witness = Json::array();
  for (const auto& [v, m] : ot.witness) witness.push_back({WordToString(v), m});
  return {{{"pruned", ot.pruned},
           {"tree", WriteTree(ot.tree)},
           {"witness", witness},
           {"winning_line", ot.pruned ? Json() : Json(WordToString(ot.winning_line))}}};
}

Result CertOptimal(const std::string& game, const std::string& strategy) {
  OptimalityResult r = CertifyOptimality(GameFile(game), ParseStrategy(ReadFile(strategy)));
  Json positions = Json::array();
  for (const auto& p : r.positions) {
    Json maps = Json::array();
    for (const auto& [i, pairs] : p.maps) {
      Json m = Json::array();
      for (const auto& [a, b] : pairs) m.push_back({WordToString(a), WordToString(b)});
      maps.push_back({{"move", i}, {"map", m}});
    }
    positions.push_back({{"position", WordToString(p.position)}, {"move", p.move}, {"maps", maps}});
  }
  Json out = {{"certified", r.certified}, {"positions", positions}};
  if (!r.certified) {
    out["reason"] = r.reason;
    out["at"] = WordToString(r.at);
  }
  return {out, r.certified ? 0 : 1};
}

Result SideChoice(const std::string& file) {
  BoundedGame g = GameFile(file);
  BoundedGame d = BuildSideChoice(g);
  SideChoiceExtraction e = ExtractSideChoice(g, SolveGame(d).strategy);
  return {{{"game", WriteGame(d)}, {"winner", e.winner}, {"strategy", WriteStrategy(e.strategy)}}};
}

Result JoinGame(const std::vector<std::string>& files) {
  std::vector<BoundedGame> gs;
  for (const auto& f : files) gs.push_back(GameFile(f));
  BoundedGame j = BuildJoin(gs);
  GameSolution s = SolveGame(j);
  Json out = {{"game", WriteGame(j)}, {"winner", s.winner}};
  if (s.winner == 1) {
    Json parts = Json::array();
    for (const auto& p : ExtractJoin(gs, s.strategy)) parts.push_back(WriteStrategy(p));
    out["strategies"] = parts;
  }
  return {out};
}

Result BorelGame(const std::string& file) {
  BorelCode c = ParseBorelCode(ReadFile(file));
  BoundedGame g = BuildBorelGame(c);
  return {{{"value", EvaluateBorelCode(c)}, {"game", WriteGame(g)}, {"winner", SolveGame(g).winner}}};
}

Result Kernel(const std::string& file) {
  RationalTree k = PerfectKernel(TreeFile(file));
  return {{{"kernel", WriteTree(k)}, {"empty", k.empty()}}};
}

Result Modulus(const std::string& file) {
  ModulusResult r = ModulusOfPerfectness(TreeFile(file));
  if (!r.modulus)
    return {{{"perfect", false}, {"witness", r.witness ? Json(WordToString(*r.witness)) : Json()}}, 1};
  Json at = Json::array();
  for (NodeId q = 0; q < r.modulus->pruned.size(); ++q)
    at.push_back({r.modulus->pruned.name(q), r.modulus->at_node[q]});
  return {{{"perfect", true}, {"modulus", at}}};
}

Result CbCert(const std::string& file, Nat max_weight) {
  GlobalCert gc = MakeGlobalCert(TreeFile(file));
  Json stages = Json::array();
  for (const auto& s : gc.stages) {
    Json entries = Json::array();
    for (const auto& e : s.Entries(max_weight))
      entries.push_back({{"word", WordToString(e.word)},
                         {"bit", e.bit ? 1 : 0},
                         {"point", e.bit ? Json(e.point.ToString()) : Json()}});
    auto k = s.PointCount();
    stages.push_back({{"set", WriteTree(s.set())},
                      {"residue", WriteTree(s.residue())},
                      {"points", k ? Json(*k) : Json("infinite")},
                      {"entries", entries}});
  }
  Json rank = gc.stages.empty() ? Json() : Json(gc.stages.size() - 1);
  return {{{"rank", rank}, {"stages", stages}}};
}

Result ListPathsCmd(const std::string& file, size_t max_size) {
  PathListing l = ListPaths(TreeFile(file), max_size);
  return {{{"card", l.card}, {"points", Lassos(l.points)}}};
}

Result ListFiniteCantorCmd(const std::string& file) {
  CantorListing l = ListFiniteCantor(TreeFile(file));
  return {{{"depth", l.depth}, {"cells", Words(l.cells)}, {"points", Lassos(l.points)}}};
}

Result Choice(const std::string& mode, const std::string& file) {
  RationalTree t = TreeFile(file);
  if (mode == "c") return {{{"point", ChoiceC(t).ToString()}}};
  if (mode == "uc") return {{{"point", ChoiceUC(t).ToString()}}};
  auto [p, nonempty] = ChoiceTC(t);
  return {{{"point", p.ToString()}, {"nonempty", nonempty}}};
}

Result UcViaWdcaCmd(const std::string& file) {
  UcViaWdcaRun r = UcViaWdca(TreeFile(file));
  return {{{"point", r.point.ToString()}, {"digits", WordToString(r.digits)}, {"queries", r.queries}}};
}

Result Ptt2(const std::string& file, bool weak, size_t max_size) {
  TwoSidedAnswer a = PttTwoSided(TreeFile(file), !weak, max_size);
  return {{{"tree_side", a.tree_side},
           {"tree", WriteTree(a.tree)},
           {"card", a.list.card},
           {"points", Lassos(a.list.points)}}};
}

Result Det2(const std::string& file) {
  BoundedGame g = GameFile(file);
  auto [s, t] = DetTwoSided(g);
  return {{{"player1", WriteStrategy(s)},
           {"player2", WriteStrategy(t)},
           {"winner", WinsAll(g, s) ? 1 : 2}}};
}

Result Ifte(const std::string& name_file, const std::string& f, const std::string& x0_file,
            const std::string& g, const std::string& x1_file) {
  TruthName b = TruthName::Parse(ReadFile(name_file));
  DeskProblem pf = ProblemByName(f), pg = ProblemByName(g);
  Json x0 = Json::parse(ReadFile(x0_file)), x1 = Json::parse(ReadFile(x1_file));
  Json out = IfThenElse(b, pf, x0, pg, x1);
  out["value"] = TruthValue(b);
  return {out};
}

Result CheckReductionCmd(const Globals& gl, const std::string& f, const std::string& g,
                         const std::string& witness) {
  ReductionWitness w = WitnessByName(witness);
  if (!w.f.empty() && (w.f != f || w.g != g))
    Fail(ErrorKind::kDomain, "witness " + w.name + " reduces " + w.f + " to " + w.g);
  ReductionReport r =
      CheckReduction(ProblemByName(f), ProblemByName(g), w, Bounds{gl.max_nodes, gl.max_depth});
  return {r.ToJson(), r.certified() ? 0 : 1, r.ToText()};
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Desk-scale workbench for trees, well orders, games and perfect sets."};
  app.fallthrough();
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--max-nodes", gl.max_nodes, "Node bound for generated families")->capture_default_str();
  app.add_option("--max-depth", gl.max_depth, "Depth bound for unfoldings and games")->capture_default_str();
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", gl.out, "Write the output to this file");

  std::function<Result()> action;
  std::string a, b, c, d, e;
  std::vector<std::string> many;
  Nat bound = 8;
  Nat max_weight = 4;
  size_t max_size = kListSize;
  bool weak = false;
  std::string order, rule;

  auto one = [&](const std::string& name, const std::string& help, const std::string& what,
                 std::function<Result(const std::string&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(what, a, what)->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(a); }; });
    return sub;
  };
  auto two = [&](const std::string& name, const std::string& help, const std::string& w1,
                 const std::string& w2, std::function<Result(const std::string&, const std::string&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(w1, a, w1)->required();
    sub->add_option(w2, b, w2)->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(a, b); }; });
    return sub;
  };

  one("kb", "Kleene-Brouwer order of a tree and its well-order verdict", "tree",
      [&](const std::string& t) { return Kb(gl, t); });
  two("ddt", "Double descent tree of two orders", "x", "y",
      [&](const std::string& x, const std::string& y) { return Ddt(gl, x, y, bound); })
      ->add_option("--bound", bound, "Largest element code used from infinite fields");
  two("star", "Order type of the star of two orders", "x", "y", StarCmd);
  two("cwo", "Comparison map of two notated well orders", "x", "y",
      [&](const std::string& x, const std::string& y) { return CwoCmd(x, y, bound); })
      ->add_option("--bound", bound, "Codes listed and checked");
  one("sep-via-cwo", "Separation through the comparison of well orders", "pairs",
      [](const std::string& f) { return Result{{{"bits", Bits(SepViaCwo(PairsFile(f)))}}}; });
  {
    auto* sub = one("atr", "Transfinite recursion of a rule along a finite notation", "forest",
                    [&](const std::string& f) { return AtrCmd(f, order, rule); });
    sub->add_option("--order", order, "Notation of the well order")->required();
    sub->add_option("--rule", rule, "const0, card or leafstrip")->required();
  }
  one("leafstrip", "Leaf-stripping stages of a tree", "tree", LeafStrip);
  one("dca-via-atr", "Separation of pairs by leaf stripping", "pairs", DcaViaAtr);
  one("solve-game", "Winner and strategy of a bounded game", "game", SolveGameCmd);
  two("option-tree", "Player 1's options tree against a Player 2 strategy", "game", "strategy",
      OptionTreeCmd);
  two("cert-optimal", "Optimality certificate for a Player 1 strategy", "game", "strategy",
      CertOptimal);
  one("side-choice", "Side-choice game and the extracted winning strategy", "game", SideChoice);
  {
    auto* sub = app.add_subcommand("join-game", "Join of several games");
    sub->add_option("games", many, "game files")->required();
    sub->callback([&] { action = [&] { return JoinGame(many); }; });
  }
  one("borel-game", "Game of a Borel code", "code", BorelGame);
  one("kernel", "Perfect kernel of a tree", "tree", Kernel);
  one("modulus", "Modulus of perfectness, or a node with a single path", "tree", Modulus);
  one("cb-cert", "Global Cantor-Bendixson certificate of a countable set", "tree",
      [&](const std::string& t) { return CbCert(t, max_weight); })
      ->add_option("--max-weight", max_weight, "Largest word weight listed");
  one("list-paths", "Listing of a countable path set", "tree",
      [&](const std::string& t) { return ListPathsCmd(t, max_size); })
      ->add_option("--max-size", max_size, "Largest lasso size listed");
  one("list-finite-cantor", "All points of a finite set in Cantor space", "tree",
      ListFiniteCantorCmd);
  {
    auto* sub = app.add_subcommand("choice", "Closed, unique or total choice");
    sub->add_option("mode", c, "c, uc or tc")->required()->check(CLI::IsMember({"c", "uc", "tc"}));
    sub->add_option("tree", a, "tree file")->required();
    sub->callback([&] { action = [&] { return Choice(c, a); }; });
  }
  one("sep", "Separation bits from path census", "pairs",
      [](const std::string& f) { return Result{{{"bits", Bits(SepOracle(PairsFile(f)))}}}; });
  one("wsca", "Weak comprehension bits of a tree list", "trees", [](const std::string& f) {
    return Result{{{"bits", Bits(WscaOracle(ParseTreeList(ReadFile(f))))}}};
  });
  one("uc-via-wdca", "Unique choice through prefix-split queries", "tree", UcViaWdcaCmd);
  one("ptt2", "Two-sided perfect tree or listing", "tree",
      [&](const std::string& t) { return Ptt2(t, weak, max_size); })
      ->add_flag("--weak", weak, "Weak listing form");
  one("det2", "Strategy pair with a winning component", "game", Det2);
  {
    auto* sub = app.add_subcommand("ifte", "If-then-else over a truth name");
    sub->add_option("name", a, "truth name file")->required();
    sub->add_option("f", b, "problem for true")->required();
    sub->add_option("x0", c, "instance file (JSON) for f")->required();
    sub->add_option("g", d, "problem for false")->required();
    sub->add_option("x1", e, "instance file (JSON) for g")->required();
    sub->callback([&] { action = [&] { return Ifte(a, b, c, d, e); }; });
  }
  {
    auto* sub = app.add_subcommand("check-reduction", "Check a reduction witness on bounded families");
    sub->add_option("f", a, "reduced problem")->required();
    sub->add_option("g", b, "oracle problem")->required();
    sub->add_option("witness", c, "witness name")->required();
    sub->callback([&] { action = [&] { return CheckReductionCmd(gl, a, b, c); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  Result r;
  try {
    r = action();
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  std::ostringstream body;
  if (gl.format == "json") {
    body << r.json.dump(2) << "\n";
  } else if (!r.text.empty()) {
    body << r.text;
  } else {
    Render(r.json, "", body);
  }
  if (gl.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(gl.out);
    if (!f) {
      err << "error: cannot write " << gl.out << "\n";
      return 2;
    }
    f << body.str();
  }
  return r.code;
}

}  // namespace atrbench::cli
