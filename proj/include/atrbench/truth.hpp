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

// Names of truth values in Sierpinski-like spaces.

#ifndef ATRBENCH_TRUTH_HPP_
#define ATRBENCH_TRUTH_HPP_

#include <string>
#include <variant>
#include <vector>

#include "atrbench/lasso.hpp"
#include "atrbench/tree.hpp"

namespace atrbench {

enum class TruthKind {
  kSierpinski,  // true iff the payload word is not all zeros
  kSigma11,     // true iff the payload tree is ill-founded
  kPi11,        // true iff the payload tree is well-founded
};

class TruthName {
 public:
  static TruthName Sierpinski(const Lasso& p);
  static TruthName Sigma11(const RationalTree& t);
  static TruthName Pi11(const RationalTree& t);

  TruthKind kind() const { return kind_; }
  const Lasso& word() const;
  const RationalTree& tree() const;

  // Text form: "S <lasso>", or "SIGMA"/"PI" followed by tree lines.
  std::string ToString() const;
  static TruthName Parse(const std::string& text);

 private:
  TruthKind kind_ = TruthKind::kSierpinski;
  std::variant<Lasso, RationalTree> payload_;
};

bool TruthValue(const TruthName& n);

// Join under a fresh root: edge i leads to the root of input i.
TruthName TruthOr(const std::vector<TruthName>& names);
// Product of the input trees.
TruthName TruthAnd(const std::vector<TruthName>& names);

}  // namespace atrbench

#endif  // ATRBENCH_TRUTH_HPP_
