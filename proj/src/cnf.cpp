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


#include "atrbench/cnf.hpp"

#include <cctype>

#include "atrbench/error.hpp"

namespace atrbench {

CnfOrdinal CnfOrdinal::Finite(Nat n) {
  CnfOrdinal o;
  if (n > 0) o.terms_.push_back({CnfOrdinal(), n});
  return o;
}

CnfOrdinal CnfOrdinal::Omega() { return OmegaPow(Finite(1)); }

CnfOrdinal CnfOrdinal::OmegaPow(const CnfOrdinal& e) {
  CnfOrdinal o;
  o.terms_.push_back({e, 1});
  return o;
}

bool CnfOrdinal::IsFinite() const { return terms_.empty() || terms_[0].exponent.IsZero(); }

Nat CnfOrdinal::AsFinite() const {
  if (!IsFinite()) Fail(ErrorKind::kDomain, "ordinal " + ToString() + " is infinite");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

bool CnfOrdinal::IsSuccessor() const { return FinitePart() > 0; }

Nat CnfOrdinal::FinitePart() const {
  if (terms_.empty() || !terms_.back().exponent.IsZero()) return 0;
  return terms_.back().coeff;
}

CnfOrdinal CnfOrdinal::Predecessor() const {
  if (!IsSuccessor()) Fail(ErrorKind::kDomain, ToString() + " has no predecessor");
  CnfOrdinal o = *this;
  if (--o.terms_.back().coeff == 0) o.terms_.pop_back();
  return o;
}

CnfOrdinal CnfOrdinal::operator+(const CnfOrdinal& b) const {
  if (b.IsZero()) return *this;
  const CnfOrdinal& lead = b.terms_[0].exponent;
  CnfOrdinal out;
  for (const Term& t : terms_) {
    auto c = t.exponent <=> lead;
    if (c < 0) break;
    if (c == 0) {
      out.terms_.push_back({lead, CheckedAdd(t.coeff, b.terms_[0].coeff)});
      out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
      return out;
    }
    out.terms_.push_back(t);
  }
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

CnfOrdinal CnfOrdinal::operator*(const CnfOrdinal& b) const {
  if (IsZero() || b.IsZero()) return CnfOrdinal();
  const CnfOrdinal& lead = terms_[0].exponent;
  CnfOrdinal out;
  for (const Term& t : b.terms_) {
    CnfOrdinal piece;
    if (t.exponent.IsZero()) {
      piece.terms_ = terms_;
      piece.terms_[0].coeff = CheckedMul(piece.terms_[0].coeff, t.coeff);
    } else {
      piece.terms_.push_back({lead + t.exponent, t.coeff});
    }
    out = out + piece;
  }
  return out;
}

CnfOrdinal CnfOrdinal::LeftSubtract(const CnfOrdinal& b) const {
  if (b > *this) Fail(ErrorKind::kDomain, "cannot subtract " + b.ToString() + " from " + ToString());
  size_t i = 0;
  while (i < b.terms_.size() && i < terms_.size() && b.terms_[i] == terms_[i]) ++i;
  CnfOrdinal out;
  if (i == b.terms_.size()) {
    out.terms_.assign(terms_.begin() + i, terms_.end());
    return out;
  }
  // b and *this first differ at term i; b's part from i on is absorbed.
  if (terms_[i].exponent == b.terms_[i].exponent) {
    out.terms_.push_back({terms_[i].exponent, terms_[i].coeff - b.terms_[i].coeff});
    out.terms_.insert(out.terms_.end(), terms_.begin() + i + 1, terms_.end());
    return out;
  }
  out.terms_.assign(terms_.begin() + i, terms_.end());
  return out;
}

std::strong_ordering CnfOrdinal::operator<=>(const CnfOrdinal& o) const {
  for (size_t i = 0; i < terms_.size() && i < o.terms_.size(); ++i) {
    if (auto c = terms_[i].exponent <=> o.terms_[i].exponent; c != 0) return c;
    if (auto c = terms_[i].coeff <=> o.terms_[i].coeff; c != 0) return c;
  }
  return terms_.size() <=> o.terms_.size();
}

bool CnfOrdinal::operator==(const CnfOrdinal& o) const { return terms_ == o.terms_; }

std::string CnfOrdinal::ToString() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += "+";
    if (t.exponent.IsZero()) {
      s += std::to_string(t.coeff);
      continue;
    }
    s += "w";
    if (t.exponent != Finite(1)) {
      std::string e = t.exponent.ToString();
      bool atomic = t.exponent.IsFinite() || e == "w";
      s += atomic ? "^" + e : "^(" + e + ")";
    }
    if (t.coeff > 1) s += "*" + std::to_string(t.coeff);
  }
  return s;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(const std::string& s) : s_(s) {}

  CnfOrdinal Run() {
    CnfOrdinal o = Sum();
    if (pos_ != s_.size()) Bad();
    return o;
  }

 private:
  [[noreturn]] void Bad() { Fail(ErrorKind::kParse, "bad ordinal '" + s_ + "'"); }

  bool Eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Nat Number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) Bad();
    Nat n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      n = CheckedAdd(CheckedMul(n, 10), static_cast<Nat>(s_[pos_++] - '0'));
    return n;
  }

  CnfOrdinal Sum() {
    CnfOrdinal o = Product();
    while (Eat('+')) o = o + Product();
    return o;
  }

  CnfOrdinal Product() {
    CnfOrdinal o = Atom();
    while (Eat('*')) o = o * Atom();
    return o;
  }

  CnfOrdinal Atom() {
    if (Eat('(')) {
      CnfOrdinal o = Sum();
      if (!Eat(')')) Bad();
      return o;
    }
    if (Eat('w')) {
      if (!Eat('^')) return CnfOrdinal::Omega();
      return CnfOrdinal::OmegaPow(Atom());
    }
    return CnfOrdinal::Finite(Number());
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

CnfOrdinal CnfOrdinal::Parse(const std::string& text) { return OrdinalParser(text).Run(); }

}  // namespace atrbench
