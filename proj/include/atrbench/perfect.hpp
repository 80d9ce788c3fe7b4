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


// Cantor-Bendixson analysis of the path set [t] of a rational tree.

#ifndef ATRBENCH_PERFECT_HPP_
#define ATRBENCH_PERFECT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atrbench/lasso.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

// The largest perfect subtree: the greatest set of live nodes each of which
// reaches, inside the set, a node with two out-edges into the set. Names are
// kept; empty when [t] is countable.
RationalTree PerfectKernel(const RationalTree& t);

// lambda(v) depends only on the graph node reached by v: the least m >= 1
// such that two distinct words of length m with letters <= m lead from v
// into the pruned tree.
struct PerfectnessModulus {
  RationalTree pruned;
  std::vector<Nat> at_node;
  Nat At(const Word& v) const;
};
struct ModulusResult {
  std::optional<PerfectnessModulus> modulus;
  // On refusal: a node of the pruned tree with a single path below it, or
  // nothing when [t] is empty.
  std::optional<Word> witness;
};
ModulusResult ModulusOfPerfectness(const RationalTree& t);

// Words are ordered by weight (length plus sum of letters), then
// lexicographically; each weight has finitely many words.
Nat WordWeight(const Word& w);
bool CanonicalWordLess(const Word& a, const Word& b);

struct CertEntry {
  Word word;
  bool bit;
  Lasso point;
  bool operator==(const CertEntry& o) const = default;
};

// A one-step certificate, presented by the pruned tree of the set it
// certifies. Its words are the u.a with u on a node whose subtree holds two
// or more paths ("fat") and u.a either leaving the tree (bit 0) or reaching
// a node with a single path below it (bit 1, that path as the point). When
// the whole set is one path the only word is the empty one.
class OneStepCert {
 public:
  explicit OneStepCert(RationalTree set);

  const RationalTree& set() const { return set_; }
  // The paths staying among fat nodes forever: the Cantor-Bendixson
  // derivative.
  const RationalTree& residue() const { return residue_; }
  const std::vector<bool>& fat() const { return fat_; }
  // All entries of weight <= max_weight, in canonical word order.
  std::vector<CertEntry> Entries(Nat max_weight) const;
  // Number of bit-1 entries, nullopt when infinite.
  std::optional<size_t> PointCount() const;

 private:
  RationalTree set_;
  std::vector<bool> fat_;
  RationalTree residue_;
};

// Requires [t] nonempty and not perfect.
OneStepCert MakeOneStepCert(const RationalTree& t);

// Stages: certificate i certifies the residue of certificate i-1; the last
// residue is empty. Requires [t] countable.
struct GlobalCert {
  std::vector<OneStepCert> stages;
};
GlobalCert MakeGlobalCert(const RationalTree& t);

// The lasso of the unique path from the end of u, which must reach a node
// of the pruned tree with a single path below it.
Lasso UniquePathFrom(const RationalTree& pruned, const Word& u);

struct PathListing {
  // |A|+1 for finite A, 0 for infinite A.
  size_t card;
  // Points of size <= max_size from the certificate, canonical lasso order.
  std::vector<Lasso> points;
};
PathListing ListPaths(const RationalTree& t, size_t max_size);
// Text form: "card <n>" then one lasso per line.
std::string WriteListing(const PathListing& l);

// Every point of a finite nonempty [t] over {0,1}, found through the least
// depth at which each live word holds a single path.
struct CantorListing {
  size_t depth;
  std::vector<Word> cells;
  std::vector<Lasso> points;
};
CantorListing ListFiniteCantor(const RationalTree& t);

}  // namespace atrbench

#endif  // ATRBENCH_PERFECT_HPP_
