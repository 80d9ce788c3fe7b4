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

// Classification and enumeration of the infinite paths of a rational tree,
// and the Kleene-Brouwer order on its nodes.

#ifndef ATRBENCH_CENSUS_HPP_
#define ATRBENCH_CENSUS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "atrbench/lasso.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

// Enumerates the lassos of [t] without repetition in canonical order
// (size, then stem, then cycle).
class LassoEnumerator {
 public:
  explicit LassoEnumerator(const RationalTree& t);

  // nullopt once every path has been produced (only happens for finite
  // path sets).
  std::optional<Lasso> Next();
  // All paths with size <= max_size.
  std::vector<Lasso> UpToSize(size_t max_size);
  std::vector<Lasso> First(size_t count);

 private:
  void FillBucket();
  std::vector<Lasso> Bucket(size_t size) const;

  RationalTree pruned_;
  std::optional<size_t> total_;  // Set when [t] is finite.
  size_t emitted_ = 0;
  size_t size_ = 0;
  std::vector<Lasso> bucket_;
  size_t pos_ = 0;
};

enum class CensusKind { kEmpty, kFiniteList, kCountablyInfinite, kUncountable };

const char* CensusKindName(CensusKind k);

struct PathCensus {
  CensusKind kind;
  // All paths, canonical order; set only for kFiniteList.
  std::vector<Lasso> paths;
  bool countable() const { return kind != CensusKind::kUncountable; }
};

PathCensus ComputePathCensus(const RationalTree& t);

// Number of paths when finite, nullopt otherwise.
std::optional<size_t> FinitePathCount(const RationalTree& t);

bool HasPath(const RationalTree& t);

// The Kleene-Brouwer order: w < u iff w properly extends u, or w is left of
// u at the first difference.
bool KbLess(const Word& w, const Word& u);

class KbView {
 public:
  KbView(const RationalTree& t, size_t depth_cap);
  bool Contains(const Word& w) const { return tree_.Contains(w); }
  bool Less(const Word& w, const Word& u) const { return KbLess(w, u); }
  // Unfolding nodes up to the cap, sorted by the order.
  const std::vector<Word>& Sorted() const { return sorted_; }
  // False when the cap cut the unfolding short.
  bool complete() const { return complete_; }

 private:
  RationalTree tree_;
  std::vector<Word> sorted_;
  bool complete_;
};

KbView KbOrder(const RationalTree& t, size_t depth_cap);

// Decides whether the KB order of t is a well order by materializing the
// unfolding to depth |nodes|+1: a finite unfolding is checked for totality
// directly; otherwise an infinite branch is exhibited as a lasso whose
// prefixes form a descending chain. Does not call IsWellFounded.
struct KbVerdict {
  bool well_order;
  std::optional<Lasso> descending_branch;
};
KbVerdict CheckKbWellOrder(const RationalTree& t);

}  // namespace atrbench

#endif  // ATRBENCH_CENSUS_HPP_
