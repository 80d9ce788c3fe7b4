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


#include "atrbench/cwo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"

namespace atrbench {

const char* DirectionName(Direction d) {
  return d == Direction::kXleY ? "XleY" : "succYleX";
}

namespace {

// Validation looks at codes up to this bound on infinite fields.
constexpr Nat kNotationCheckBound = 64;

Nat Lookup(const NotatedWo& w, const CnfOrdinal& r) {
  auto e = w.AtRank(r);
  if (!e) Fail(ErrorKind::kAnnotation, "no element of rank " + r.ToString());
  return *e;
}

std::vector<Nat> Field(const LinearOrder& v, Nat bound) {
  return v.Size() ? v.Elements() : v.ElementsUpTo(bound);
}

bool Clauses(const NatMap& f, const LinearOrder& x, const LinearOrder& y, Nat bound, bool strong,
             std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto s = [](Nat n) { return std::to_string(n); };
  for (Nat n = 0; n <= bound; ++n)
    if (!x.Contains(n) && f(n) != 0) return fail("clause 1: " + s(n) + " is not in X but maps to " + s(f(n)));
  std::vector<Nat> xs = Field(x, bound);
  std::map<Nat, Nat> image;
  for (Nat n : xs) {
    Nat v = f(n);
    if (!y.Contains(v)) return fail("clause 2: " + s(n) + " maps to " + s(v) + ", outside Y");
    image[n] = v;
  }
  for (Nat n : xs)
    for (Nat m : xs)
      if (x.LessEq(n, m) != y.LessEq(image[n], image[m]))
        return fail("clause 2: order of " + s(n) + ", " + s(m) + " not preserved");
  if (!strong) return true;
  std::set<Nat> hit;
  for (Nat m : Field(x, std::max(4 * bound, bound * bound))) hit.insert(f(m));
  for (Nat n : xs)
    for (Nat k : Field(y, bound))
      if (y.LessEq(k, image[n]) && !hit.count(k))
        return fail("clause 3: " + s(k) + " lies below f(" + s(n) + ") but is not an image");
  return true;
}

}  // namespace

ComparisonMap Cwo(const NotatedWo& x, const NotatedWo& y) {
  ValidateNotation(x, kNotationCheckBound);
  ValidateNotation(y, kNotationCheckBound);
  if (x.type() <= y.type()) {
    return {Direction::kXleY,
            [x, y](Nat n) -> Nat {
              if (!x.base()->Contains(n)) return 0;
              return Lookup(y, x.Rank(n));
            },
            x.base(), y.base()};
  }
  return {Direction::kSuccYleX,
          [x, y](Nat n) -> Nat {
            if (n == 1) return Lookup(x, y.type());
            if (n == 0 || !y.base()->Contains(n - 1)) return 0;
            return Lookup(x, y.Rank(n - 1));
          },
          Succ(y.base()), x.base()};
}

bool CheckStrongComparison(const NatMap& f, const LinearOrder& x, const LinearOrder& y, Nat bound,
                           std::string* why) {
  return Clauses(f, x, y, bound, true, why);
}

bool CheckOrderPreserving(const NatMap& f, const LinearOrder& x, const LinearOrder& y, Nat bound,
                          std::string* why) {
  return Clauses(f, x, y, bound, false, why);
}

namespace {

void AllMaps(const Order& from, const Order& to, Direction d, std::vector<CwoSolution>* out) {
  std::vector<Nat> dom = from->Elements(), cod = to->Elements();
  Nat bound = 0;
  if (!dom.empty()) bound = std::max(bound, dom.back());
  if (!cod.empty()) bound = std::max(bound, cod.back());
  if (cod.empty() && !dom.empty()) return;
  std::vector<size_t> pick(dom.size(), 0);
  while (true) {
    std::map<Nat, Nat> g;
    for (size_t i = 0; i < dom.size(); ++i) g[dom[i]] = cod[pick[i]];
    NatMap f = [&g](Nat n) {
      auto it = g.find(n);
      return it == g.end() ? Nat{0} : it->second;
    };
    if (CheckStrongComparison(f, *from, *to, bound)) out->push_back({d, {g.begin(), g.end()}});
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < cod.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
}

}  // namespace

std::vector<CwoSolution> AllCwoSolutions(const Order& x, const Order& y) {
  std::vector<CwoSolution> out;
  AllMaps(x, y, Direction::kXleY, &out);
  AllMaps(Succ(y), x, Direction::kSuccYleX, &out);
  return out;
}

namespace {

RationalTree NonEmpty(const RationalTree& t) {
  if (!t.empty()) return t;
  RationalTree one;
  one.SetRoot(one.AddNode("n0"));
  return one;
}

}  // namespace

SepOrders BuildSepOrders(const std::vector<std::pair<RationalTree, RationalTree>>& instance) {
  SepOrders o;
  std::vector<Order> u_parts;
  for (const auto& [s, t] : instance) {
    o.x.push_back(KbLinearOrder(NonEmpty(s)));
    o.y.push_back(KbLinearOrder(NonEmpty(t)));
    u_parts.push_back(Star(Star(Rationals(), o.y.back()), o.x.back()));
  }
  o.u = OrderSum(u_parts);
  for (size_t n = 0; n < instance.size(); ++n)
    o.z.push_back(Star(OrderSum({o.u, o.x[n]}), o.y[n]));
  o.v = OrderSum({FiniteOrder(1), o.u, OrderSum(o.z)});
  std::vector<Order> z_blocks, w_blocks;
  for (size_t n = 0; n < instance.size(); ++n) {
    z_blocks.push_back(OrderSum({o.z[n], OrderProdOmega(o.v)}));
    w_blocks.push_back(OrderSum({o.v, OrderProdOmega(o.v)}));
  }
  o.big_z = OrderSum(z_blocks);
  o.big_w = OrderSum(w_blocks);
  return o;
}

Nat SepMarkCode() { return Pair(0, 1); }

Nat SepUCode(Nat u) { return Pair(1, u); }

Nat SepQueryCode(size_t n) { return Pair(n, Pair(1, Pair(0, SepMarkCode()))); }

SepOracleAnswer DeskCwoOnSep(const SepOrders& orders,
                             const std::vector<std::pair<RationalTree, RationalTree>>& instance,
                             Nat query) {
  auto [n, rest] = Unpair(query);
  if (n >= instance.size() || query != SepQueryCode(n) || !orders.big_z->Contains(query))
    Fail(ErrorKind::kDomain, "the desk oracle answers only block queries");
  // S_n ill-founded: T_n is well-founded and |Z_n| < |U|. T_n ill-founded:
  // |U| < |Z_n|. Both well-founded: either answer separates.
  bool s_ill = !IsWellFounded(instance[n].first);
  return {n, s_ill ? Nat{1} : Nat{2}};
}

std::vector<int> SepViaCwo(const std::vector<std::pair<RationalTree, RationalTree>>& instance) {
  for (size_t n = 0; n < instance.size(); ++n)
    if (HasPath(instance[n].first) && HasPath(instance[n].second))
      Fail(ErrorKind::kDomain, "pair " + std::to_string(n) + ": both trees have paths");
  SepOrders orders = BuildSepOrders(instance);
  std::vector<int> g;
  for (size_t n = 0; n < instance.size(); ++n) {
    SepOracleAnswer a = DeskCwoOnSep(orders, instance, SepQueryCode(n));
    g.push_back(a.v_part == 1 ? 0 : 1);
  }
  return g;
}

}  // namespace atrbench
