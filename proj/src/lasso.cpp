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

#include "atrbench/lasso.hpp"

#include <algorithm>
#include <numeric>

#include "atrbench/error.hpp"

namespace atrbench {

namespace {

// Length of the primitive root of w.
size_t PrimitivePeriod(const Word& w) {
  size_t n = w.size();
  for (size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

Nat WordAt(const Word& stem, const Word& cycle, size_t n) {
  if (n < stem.size()) return stem[n];
  return cycle[(n - stem.size()) % cycle.size()];
}

}  // namespace

Lasso::Lasso() : cycle_{0} {}

Lasso::Lasso(Word stem, Word cycle) : stem_(std::move(stem)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) Fail(ErrorKind::kValidation, "lasso cycle must be nonempty");
  cycle_.resize(PrimitivePeriod(cycle_));
  while (!stem_.empty() && stem_.back() == cycle_.back()) {
    stem_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

Nat Lasso::At(size_t n) const { return WordAt(stem_, cycle_, n); }

Word Lasso::Prefix(size_t n) const {
  Word w(n);
  for (size_t i = 0; i < n; ++i) w[i] = At(i);
  return w;
}

std::string Lasso::ToString() const {
  std::string s = stem_.empty() ? "" : WordToString(stem_);
  return s + ";" + WordToString(cycle_);
}

Lasso Lasso::Parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos) {
    Fail(ErrorKind::kParse, "lasso must have the form stem;cycle: '" + text + "'");
  }
  std::string stem_text = text.substr(0, semi);
  std::string cycle_text = text.substr(semi + 1);
  if (cycle_text.empty() || cycle_text == ".")
    Fail(ErrorKind::kParse, "lasso cycle must be nonempty: '" + text + "'");
  return Lasso(ParseWord(stem_text), ParseWord(cycle_text));
}

std::optional<Lasso> Lasso::FromPrefix(const Word& prefix, size_t max_size) {
  for (size_t total = 1; total <= max_size; ++total) {
    std::optional<Lasso> best;
    for (size_t k = 0; k < total; ++k) {
      size_t c = total - k;
      if (k + c > prefix.size()) continue;
      bool ok = true;
      for (size_t i = k + c; i < prefix.size() && ok; ++i) ok = prefix[i] == prefix[i - c];
      if (!ok) continue;
      Lasso cand(Word(prefix.begin(), prefix.begin() + k),
                 Word(prefix.begin() + k, prefix.begin() + k + c));
      if (!best || cand < *best) best = cand;
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::strong_ordering operator<=>(const Lasso& a, const Lasso& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.stem_ <=> b.stem_; c != 0) return c;
  return a.cycle_ <=> b.cycle_;
}

bool SameOmegaWord(const Word& stem1, const Word& cycle1, const Word& stem2,
                   const Word& cycle2) {
  size_t l = std::lcm(cycle1.size(), cycle2.size());
  size_t n = stem1.size() + stem2.size() + 2 * l;
  for (size_t i = 0; i < n; ++i)
    if (WordAt(stem1, cycle1, i) != WordAt(stem2, cycle2, i)) return false;
  return true;
}

}  // namespace atrbench
