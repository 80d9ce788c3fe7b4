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


#ifndef ATRBENCH_CWO_HPP_
#define ATRBENCH_CWO_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "atrbench/orders.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

using NatMap = std::function<Nat(Nat)>;

enum class Direction { kXleY, kSuccYleX };
const char* DirectionName(Direction d);

// The comparison map of a pair (X, Y): either f : X <=s Y, or
// f : Y+1 <=s X, where Y+1 is Succ(Y).
struct ComparisonMap {
  Direction direction;
  NatMap map;
  // Domain and codomain of the map.
  Order from;
  Order to;
};

// Matches equal ranks. Throws kAnnotation when a rank has no element.
ComparisonMap Cwo(const NotatedWo& x, const NotatedWo& y);

// The three clauses of a strong comparison map f : X <=s Y, quantified over
// n, k <= bound (everything when the fields are finite). Existential
// witnesses are searched up to max(4 * bound, bound^2). On failure *why
// names the clause and the elements.
bool CheckStrongComparison(const NatMap& f, const LinearOrder& x, const LinearOrder& y,
                           Nat bound, std::string* why = nullptr);
// Only the first two clauses.
bool CheckOrderPreserving(const NatMap& f, const LinearOrder& x, const LinearOrder& y,
                          Nat bound, std::string* why = nullptr);

// Maps between two finite orders satisfying the CWO postcondition, found by
// trying every function between the fields. Each entry lists the images of
// the domain elements in increasing code order.
struct CwoSolution {
  Direction direction;
  std::vector<std::pair<Nat, Nat>> graph;
};
std::vector<CwoSolution> AllCwoSolutions(const Order& x, const Order& y);

// The orders built from a separation instance (S_n, T_n), n < N. Empty trees
// are first replaced by a single node.
struct SepOrders {
  std::vector<Order> x, y;  // KB(S_n), KB(T_n)
  Order u;                  // sum of (Q * Y_n) * X_n
  std::vector<Order> z;     // (U + X_n) * Y_n
  Order v;                  // mark + U + sum of Z_n
  Order big_z;              // sum of (Z_n + V.N)
  Order big_w;              // sum of (V + V.N)
};
SepOrders BuildSepOrders(const std::vector<std::pair<RationalTree, RationalTree>>& instance);

// Codes in the coded fields.
// The least element of V.
Nat SepMarkCode();
// Element u of U inside V.
Nat SepUCode(Nat u);
// The least element of the first copy of V after Z_n in Z.
Nat SepQueryCode(size_t n);

// The desk stand-in for the comparison oracle on (Z, W). In block n it
// decides from the well-foundedness of S_n and T_n which segment of
// V + V.N receives the first element of the first copy of V: the U segment
// when S_n is ill-founded, past it otherwise. The answer is the W code
// prefix <n, <0, <1, .>>> or <n, <0, <2, .>>>, returned as the pair
// (block, V part).
struct SepOracleAnswer {
  size_t block;
  Nat v_part;  // 1 for U, 2 for the Z sum
};
SepOracleAnswer DeskCwoOnSep(const SepOrders& orders,
                             const std::vector<std::pair<RationalTree, RationalTree>>& instance,
                             Nat query);

// Separation through the comparison of Z and W: bit 0 iff the image of the
// query element of block n lies in U. Throws kDomain outside the domain
// (some S_n and T_n both with paths).
std::vector<int> SepViaCwo(const std::vector<std::pair<RationalTree, RationalTree>>& instance);

}  // namespace atrbench

#endif  // ATRBENCH_CWO_HPP_
