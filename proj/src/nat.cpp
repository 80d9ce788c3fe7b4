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

#include "atrbench/nat.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "atrbench/error.hpp"

namespace atrbench {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kKindMismatch: return "kind-mismatch";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kAnnotation: return "annotation";
    case ErrorKind::kEmptySet: return "empty-set";
    case ErrorKind::kNotSingleton: return "not-singleton";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kCapacity: return "capacity";
  }
  return "unknown";
}

void Fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Nat CheckedAdd(Nat a, Nat b) {
  Nat r;
  if (__builtin_add_overflow(a, b, &r)) Fail(ErrorKind::kCapacity, "natural overflow");
  return r;
}

Nat CheckedMul(Nat a, Nat b) {
  Nat r;
  if (__builtin_mul_overflow(a, b, &r)) Fail(ErrorKind::kCapacity, "natural overflow");
  return r;
}

Nat Pair(Nat a, Nat b) {
  Nat s = CheckedAdd(a, b);
  Nat t = CheckedAdd(s, 1);
  // One of s, s+1 is even; halve it first to keep the product small.
  Nat tri = (s % 2 == 0) ? CheckedMul(s / 2, t) : CheckedMul(s, t / 2);
  return CheckedAdd(tri, b);
}

std::pair<Nat, Nat> Unpair(Nat z) {
  // Largest s with s(s+1)/2 <= z.
  long double approx = (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L;
  Nat s = static_cast<Nat>(approx);
  auto tri = [](Nat k) -> unsigned __int128 {
    return static_cast<unsigned __int128>(k) * (k + 1) / 2;
  };
  while (s > 0 && tri(s) > z) --s;
  while (tri(s + 1) <= z) ++s;
  Nat b = z - static_cast<Nat>(tri(s));
  return {s - b, b};
}

Nat SeqCode(const Word& w) {
  Nat c = 1;
  for (Nat a : w) {
    Nat v = CheckedAdd(a, 1);
    int len = std::bit_width(v);
    if (std::bit_width(c) + 2 * len - 1 > 64) Fail(ErrorKind::kCapacity, "sequence code overflow");
    c = (c << (2 * len - 1)) | v;
  }
  return c;
}

bool SeqDecode(Nat z, Word* out) {
  if (z == 0) return false;
  Word w;
  int pos = std::bit_width(z) - 1;
  auto bit = [&](int i) { return (z >> i) & 1; };
  while (pos > 0) {
    int zeros = 0;
    while (pos - 1 - zeros >= 0 && !bit(pos - 1 - zeros)) ++zeros;
    int top = pos - 1 - zeros;
    if (top < 0 || top - zeros < 0) return false;
    Nat v = (z >> (top - zeros)) & ((Nat{1} << (zeros + 1)) - 1);
    w.push_back(v - 1);
    pos = top - zeros;
  }
  *out = std::move(w);
  return true;
}

std::string WordToString(const Word& w) {
  if (w.empty()) return ".";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

Word ParseWord(const std::string& text) {
  Word w;
  if (text.empty() || text == ".") return w;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      Fail(ErrorKind::kParse, "bad natural '" + item + "' in word '" + text + "'");
    }
    try {
      w.push_back(std::stoull(item));
    } catch (const std::out_of_range&) {
      Fail(ErrorKind::kParse, "natural out of range: " + item);
    }
  }
  if (text.back() == ',') Fail(ErrorKind::kParse, "trailing comma in '" + text + "'");
  return w;
}

bool IsPrefix(const Word& prefix, const Word& w) {
  if (prefix.size() > w.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] != w[i]) return false;
  return true;
}

}  // namespace atrbench
