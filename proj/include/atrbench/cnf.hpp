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


#ifndef ATRBENCH_CNF_HPP_
#define ATRBENCH_CNF_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "atrbench/nat.hpp"

namespace atrbench {

// An ordinal below epsilon_0 in Cantor normal form: a strictly descending
// list of terms w^e * c with c >= 1. The empty list is 0.
class CnfOrdinal {
 public:
  struct Term;

  CnfOrdinal() = default;
  static CnfOrdinal Finite(Nat n);
  static CnfOrdinal Omega();
  // w^e.
  static CnfOrdinal OmegaPow(const CnfOrdinal& e);

  const std::vector<Term>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  bool IsFinite() const;
  // The value of a finite ordinal; throws kDomain otherwise.
  Nat AsFinite() const;
  bool IsSuccessor() const;
  // The coefficient of the w^0 term, 0 if there is none.
  Nat FinitePart() const;

  // The ordinal one less; requires a successor.
  CnfOrdinal Predecessor() const;

  CnfOrdinal operator+(const CnfOrdinal& b) const;
  CnfOrdinal operator*(const CnfOrdinal& b) const;
  // The unique d with b + d == *this; requires b <= *this.
  CnfOrdinal LeftSubtract(const CnfOrdinal& b) const;

  std::strong_ordering operator<=>(const CnfOrdinal& o) const;
  bool operator==(const CnfOrdinal& o) const;

  // "0", "5", "w", "w^2*3+w+1", "w^(w+1)".
  std::string ToString() const;
  static CnfOrdinal Parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

struct CnfOrdinal::Term {
  CnfOrdinal exponent;
  Nat coeff;
  bool operator==(const Term& o) const = default;
};

}  // namespace atrbench

#endif  // ATRBENCH_CNF_HPP_
