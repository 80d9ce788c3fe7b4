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


#ifndef ATRBENCH_ORDERS_HPP_
#define ATRBENCH_ORDERS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atrbench/cnf.hpp"
#include "atrbench/nat.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

enum class WoStatus { kWellOrder, kNotWellOrder, kUnknown };

// A decidable linear order on a set of positive naturals. Instances are
// immutable and remember how they were built, which is what Type() uses.
class LinearOrder {
 public:
  virtual ~LinearOrder() = default;

  virtual bool Contains(Nat x) const = 0;
  // Strict comparison; both arguments must lie in the field.
  virtual bool Less(Nat x, Nat y) const = 0;
  // Number of elements, nullopt if infinite.
  virtual std::optional<Nat> Size() const = 0;
  virtual WoStatus Status() const = 0;
  // Exact order type. Throws kUnsupported outside the supported terms:
  // finite orders, KB of well-founded trees, sums, omega-sums, omega
  // products, successors, and stars with a finite argument whose other
  // argument is finite, ill-founded, or a well order of type >= w*k.
  virtual CnfOrdinal Type() const = 0;
  virtual std::string Describe() const = 0;

  // The whole field in increasing code order; finite orders only.
  virtual std::vector<Nat> Elements() const;
  // Field elements <= bound in increasing code order.
  virtual std::vector<Nat> ElementsUpTo(Nat bound) const;
  // x_0 > x_1 > ... > x_{n-1}; only for orders known not to be well orders.
  virtual std::vector<Nat> DescendingChain(size_t n) const;

  // Elements() sorted by the order.
  std::vector<Nat> Sorted() const;
  bool LessEq(Nat x, Nat y) const { return x == y || Less(x, y); }
};

using Order = std::shared_ptr<const LinearOrder>;

// Elements listed from least to greatest.
Order FiniteOrder(std::vector<Nat> ascending);
// 1 < 2 < ... < n.
Order FiniteOrder(Nat n);
// The rationals: 1 is 0, 2k is the k-th Calkin-Wilf fraction, 2k+1 its
// negative.
Order Rationals();
std::pair<std::int64_t, std::uint64_t> RationalValue(Nat code);
// 1 < 2 < 3 < ...
Order Naturals();
// KB order of the unfolding; the field is the sequence codes of its nodes.
Order KbLinearOrder(const RationalTree& t);
// Finite sum; element x of part i is coded <i, x>.
Order OrderSum(std::vector<Order> parts);
// The omega-sum of prefix followed by the cycle repeated forever; element x
// of summand i is coded <i, x>.
Order OrderSumOmega(std::vector<Order> prefix, std::vector<Order> cycle);
// Omega copies of v, copy j coded <j, x>.
Order OrderProdOmega(Order v);
// v with a new top element coded 1; x in v is coded x + 1.
Order Succ(Order v);
// KB order of the double descent tree of (x, y). Node labels are <m, n>,
// nodes are coded by SeqCode of their label words.
Order Star(Order x, Order y);

CnfOrdinal CnfType(const Order& v);

// Finite order file: "elem <n>" lines, then "lt <n> <m>" lines. The
// transitive closure is taken and must be a strict total order.
Order ParseFiniteOrder(const std::string& text);
std::string WriteFiniteOrder(const LinearOrder& v);

// The double descent tree of (x, y) cut at depth_cap, using only elements
// <= element_bound of infinite fields. Node names are "d<i>" in discovery
// order; labels are <m, n>.
struct DoubleDescentTree {
  RationalTree tree;
  // The pair sequence of each node.
  std::vector<std::vector<std::pair<Nat, Nat>>> sequences;
  // True when the tree is the whole double descent tree.
  bool complete = false;
  // Longest sequence present.
  size_t depth = 0;
};
DoubleDescentTree DoubleDescent(const Order& x, const Order& y, size_t depth_cap,
                                Nat element_bound);

// A well order with its ranks: Rank(x) is the type of the elements below x.
class NotatedWo {
 public:
  NotatedWo(Order base, std::function<CnfOrdinal(Nat)> rank,
            std::function<std::optional<Nat>(const CnfOrdinal&)> at_rank, CnfOrdinal type);

  const Order& base() const { return base_; }
  CnfOrdinal Rank(Nat x) const { return rank_(x); }
  // The element of the given rank, nullopt if the rank is >= type().
  std::optional<Nat> AtRank(const CnfOrdinal& a) const { return at_rank_(a); }
  const CnfOrdinal& type() const { return type_; }

 private:
  Order base_;
  std::function<CnfOrdinal(Nat)> rank_;
  std::function<std::optional<Nat>(const CnfOrdinal&)> at_rank_;
  CnfOrdinal type_;
};

// Ranks by position.
NotatedWo NotateFinite(const Order& finite);
NotatedWo NotateNaturals();
NotatedWo NotateSum(const std::vector<NotatedWo>& parts);
NotatedWo NotateSucc(const NotatedWo& v);

// Throws kAnnotation on a violation witnessed among the elements <= bound
// (all elements for finite orders).
void ValidateNotation(const NotatedWo& w, Nat bound);

}  // namespace atrbench

#endif  // ATRBENCH_ORDERS_HPP_
