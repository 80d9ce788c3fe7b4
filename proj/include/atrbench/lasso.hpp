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

#ifndef ATRBENCH_LASSO_HPP_
#define ATRBENCH_LASSO_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "atrbench/nat.hpp"

namespace atrbench {

// An eventually periodic infinite word stem . cycle^omega, always held in
// canonical form: the cycle is primitive and the stem does not end with the
// last letter of the cycle (otherwise the cycle could be rotated into it).
class Lasso {
 public:
  // The constant zero word.
  Lasso();
  Lasso(Word stem, Word cycle);

  const Word& stem() const { return stem_; }
  const Word& cycle() const { return cycle_; }
  size_t size() const { return stem_.size() + cycle_.size(); }

  Nat At(size_t n) const;
  Word Prefix(size_t n) const;

  // Text syntax "stem;cycle", e.g. "1,2;3,4" or ";0".
  std::string ToString() const;
  static Lasso Parse(const std::string& text);

  // Shortest lasso of size <= max_size consistent with the prefix. Returns
  // nullopt if none.
  static std::optional<Lasso> FromPrefix(const Word& prefix, size_t max_size);

  // Canonical enumeration order: by size, then stem, then cycle.
  friend std::strong_ordering operator<=>(const Lasso& a, const Lasso& b);
  friend bool operator==(const Lasso& a, const Lasso& b) = default;

 private:
  Word stem_;
  Word cycle_;
};

// Equality as infinite words by comparing prefixes of length
// |s1| + |s2| + 2 lcm(|c1|, |c2|). Works on non-canonical inputs too.
bool SameOmegaWord(const Word& stem1, const Word& cycle1, const Word& stem2,
                   const Word& cycle2);

}  // namespace atrbench

#endif  // ATRBENCH_LASSO_HPP_
