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

// Naturals and the pairing functions used to code fields of orders.

#ifndef ATRBENCH_NAT_HPP_
#define ATRBENCH_NAT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace atrbench {

using Nat = std::uint64_t;

// A node of a tree on N, identified with its label sequence from the root.
using Word = std::vector<Nat>;

// Checked arithmetic. Throws kCapacity on overflow.
Nat CheckedAdd(Nat a, Nat b);
Nat CheckedMul(Nat a, Nat b);

// Cantor pairing <a,b> = (a+b)(a+b+1)/2 + b, a bijection N x N -> N.
Nat Pair(Nat a, Nat b);
std::pair<Nat, Nat> Unpair(Nat z);

// Sequence codes: a leading 1 bit followed by the Elias gamma codes of
// a + 1 for each letter a. Every code is positive, a proper prefix has a
// smaller code, and not every natural is a code. Throws kCapacity past 64
// bits.
Nat SeqCode(const Word& w);
// Returns false if z is not the code of any sequence.
bool SeqDecode(Nat z, Word* out);

std::string WordToString(const Word& w);
// Accepts "." or "" for the empty word, else comma-separated naturals.
Word ParseWord(const std::string& text);

bool IsPrefix(const Word& prefix, const Word& w);

}  // namespace atrbench

#endif  // ATRBENCH_NAT_HPP_
