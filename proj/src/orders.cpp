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


#include "atrbench/orders.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "atrbench/census.hpp"
#include "atrbench/error.hpp"

namespace atrbench {

std::vector<Nat> LinearOrder::Elements() const {
  Fail(ErrorKind::kUnsupported, Describe() + " has an infinite field");
}

std::vector<Nat> LinearOrder::ElementsUpTo(Nat bound) const {
  std::vector<Nat> out;
  if (Size()) {
    for (Nat x : Elements())
      if (x <= bound) out.push_back(x);
    return out;
  }
  for (Nat x = 1; x <= bound; ++x)
    if (Contains(x)) out.push_back(x);
  return out;
}

std::vector<Nat> LinearOrder::DescendingChain(size_t) const {
  Fail(ErrorKind::kDomain, Describe() + " is not known to be ill-founded");
}

std::vector<Nat> LinearOrder::Sorted() const {
  std::vector<Nat> v = Elements();
  std::sort(v.begin(), v.end(), [this](Nat a, Nat b) { return Less(a, b); });
  return v;
}

namespace {

WoStatus Combine(const std::vector<Order>& parts) {
  bool unknown = false;
  for (const auto& p : parts) {
    if (p->Status() == WoStatus::kNotWellOrder) return WoStatus::kNotWellOrder;
    if (p->Status() == WoStatus::kUnknown) unknown = true;
  }
  return unknown ? WoStatus::kUnknown : WoStatus::kWellOrder;
}

std::string Join(const std::vector<Order>& parts) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i]->Describe();
  return s;
}

class FiniteLo : public LinearOrder {
 public:
  explicit FiniteLo(std::vector<Nat> ascending) : ascending_(std::move(ascending)) {
    for (size_t i = 0; i < ascending_.size(); ++i) {
      if (ascending_[i] == 0) Fail(ErrorKind::kValidation, "0 cannot be an order element");
      if (!pos_.emplace(ascending_[i], i).second)
        Fail(ErrorKind::kValidation, "repeated order element " + std::to_string(ascending_[i]));
    }
  }
  bool Contains(Nat x) const override { return pos_.count(x) > 0; }
  bool Less(Nat x, Nat y) const override { return pos_.at(x) < pos_.at(y); }
  std::optional<Nat> Size() const override { return ascending_.size(); }
  WoStatus Status() const override { return WoStatus::kWellOrder; }
  CnfOrdinal Type() const override { return CnfOrdinal::Finite(ascending_.size()); }
  std::string Describe() const override { return "Finite(" + std::to_string(ascending_.size()) + ")"; }
  std::vector<Nat> Elements() const override {
    std::vector<Nat> v = ascending_;
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::vector<Nat> ascending_;
  std::map<Nat, size_t> pos_;
};

Nat Fusc(Nat n) {
  Nat a = 1, b = 0;
  while (n) {
    if (n & 1)
      b += a;
    else
      a += b;
    n >>= 1;
  }
  return b;
}

class RationalsLo : public LinearOrder {
 public:
  bool Contains(Nat x) const override { return x >= 1; }
  bool Less(Nat x, Nat y) const override {
    auto [a, b] = RationalValue(x);
    auto [c, d] = RationalValue(y);
    return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
  }
  std::optional<Nat> Size() const override { return std::nullopt; }
  WoStatus Status() const override { return WoStatus::kNotWellOrder; }
  CnfOrdinal Type() const override { Fail(ErrorKind::kUnsupported, "Q is not a well order"); }
  std::string Describe() const override { return "Q"; }
  // 1/1 > 1/2 > 1/3 > ..., and 1/k has code 2^k.
  std::vector<Nat> DescendingChain(size_t n) const override {
    if (n > 62) Fail(ErrorKind::kCapacity, "descending chain in Q too long");
    std::vector<Nat> out;
    for (size_t k = 1; k <= n; ++k) out.push_back(Nat{1} << k);
    return out;
  }
};

class NaturalsLo : public LinearOrder {
 public:
  bool Contains(Nat x) const override { return x >= 1; }
  bool Less(Nat x, Nat y) const override { return x < y; }
  std::optional<Nat> Size() const override { return std::nullopt; }
  WoStatus Status() const override { return WoStatus::kWellOrder; }
  CnfOrdinal Type() const override { return CnfOrdinal::Omega(); }
  std::string Describe() const override { return "N"; }
};

class KbLo : public LinearOrder {
 public:
  explicit KbLo(RationalTree t) : tree_(std::move(t)) {
    well_founded_ = IsWellFounded(tree_);
    if (well_founded_) size_ = UnfoldingSize(tree_);
  }
  bool Contains(Nat x) const override {
    Word w;
    return SeqDecode(x, &w) && tree_.Contains(w);
  }
  bool Less(Nat x, Nat y) const override {
    Word w, u;
    SeqDecode(x, &w);
    SeqDecode(y, &u);
    return KbLess(w, u);
  }
  std::optional<Nat> Size() const override {
    if (!well_founded_) return std::nullopt;
    return size_;
  }
  WoStatus Status() const override {
    return well_founded_ ? WoStatus::kWellOrder : WoStatus::kNotWellOrder;
  }
  CnfOrdinal Type() const override {
    if (!well_founded_) Fail(ErrorKind::kUnsupported, "KB of an ill-founded tree");
    return CnfOrdinal::Finite(size_);
  }
  std::string Describe() const override { return "KB"; }
  std::vector<Nat> Elements() const override {
    if (!well_founded_) return LinearOrder::Elements();
    std::vector<Nat> out;
    for (const Word& w : UnfoldingNodes(tree_, tree_.size())) out.push_back(SeqCode(w));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Nat> DescendingChain(size_t n) const override {
    if (well_founded_) return LinearOrder::DescendingChain(n);
    Lasso branch = *CheckKbWellOrder(tree_).descending_branch;
    std::vector<Nat> out;
    for (size_t i = 0; i < n; ++i) out.push_back(SeqCode(branch.Prefix(i)));
    return out;
  }

 private:
  RationalTree tree_;
  bool well_founded_ = false;
  Nat size_ = 0;
};

class SumLo : public LinearOrder {
 public:
  explicit SumLo(std::vector<Order> parts) : parts_(std::move(parts)) {}
  bool Contains(Nat z) const override {
    auto [i, x] = Unpair(z);
    return i < parts_.size() && parts_[i]->Contains(x);
  }
  bool Less(Nat a, Nat b) const override {
    auto [i, x] = Unpair(a);
    auto [j, y] = Unpair(b);
    if (i != j) return i < j;
    return parts_[i]->Less(x, y);
  }
  std::optional<Nat> Size() const override {
    Nat n = 0;
    for (const auto& p : parts_) {
      auto s = p->Size();
      if (!s) return std::nullopt;
      n = CheckedAdd(n, *s);
    }
    return n;
  }
  WoStatus Status() const override { return Combine(parts_); }
  CnfOrdinal Type() const override {
    CnfOrdinal t;
    for (const auto& p : parts_) t = t + p->Type();
    return t;
  }
  std::string Describe() const override { return "Sum(" + Join(parts_) + ")"; }
  std::vector<Nat> Elements() const override {
    if (!Size()) return LinearOrder::Elements();
    std::vector<Nat> out;
    for (size_t i = 0; i < parts_.size(); ++i)
      for (Nat x : parts_[i]->Elements()) out.push_back(Pair(i, x));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Nat> DescendingChain(size_t n) const override {
    for (size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i]->Status() == WoStatus::kNotWellOrder) {
        std::vector<Nat> out;
        for (Nat x : parts_[i]->DescendingChain(n)) out.push_back(Pair(i, x));
        return out;
      }
    return LinearOrder::DescendingChain(n);
  }

 private:
  std::vector<Order> parts_;
};

class SumOmegaLo : public LinearOrder {
 public:
  SumOmegaLo(std::vector<Order> prefix, std::vector<Order> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) Fail(ErrorKind::kValidation, "omega-sum needs a nonempty cycle");
  }
  const Order& Part(Nat i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
  }
  bool Contains(Nat z) const override {
    auto [i, x] = Unpair(z);
    return Part(i)->Contains(x);
  }
  bool Less(Nat a, Nat b) const override {
    auto [i, x] = Unpair(a);
    auto [j, y] = Unpair(b);
    if (i != j) return i < j;
    return Part(i)->Less(x, y);
  }
  std::optional<Nat> Size() const override {
    for (const auto& p : cycle_)
      if (p->Size() != Nat{0}) return std::nullopt;
    return SumLo(prefix_).Size();
  }
  WoStatus Status() const override {
    std::vector<Order> all = prefix_;
    all.insert(all.end(), cycle_.begin(), cycle_.end());
    return Combine(all);
  }
  CnfOrdinal Type() const override {
    return SumLo(prefix_).Type() + SumLo(cycle_).Type() * CnfOrdinal::Omega();
  }
  std::string Describe() const override {
    return "SumOmega(" + Join(prefix_) + ";" + Join(cycle_) + ")";
  }
  std::vector<Nat> Elements() const override {
    if (!Size()) return LinearOrder::Elements();
    return SumLo(prefix_).Elements();
  }
  std::vector<Nat> DescendingChain(size_t n) const override {
    for (size_t i = 0; i < prefix_.size() + cycle_.size(); ++i)
      if (Part(i)->Status() == WoStatus::kNotWellOrder) {
        std::vector<Nat> out;
        for (Nat x : Part(i)->DescendingChain(n)) out.push_back(Pair(i, x));
        return out;
      }
    return LinearOrder::DescendingChain(n);
  }

 private:
  std::vector<Order> prefix_;
  std::vector<Order> cycle_;
};

class ProdOmegaLo : public LinearOrder {
 public:
  explicit ProdOmegaLo(Order v) : v_(std::move(v)) {}
  bool Contains(Nat z) const override { return v_->Contains(Unpair(z).second); }
  bool Less(Nat a, Nat b) const override {
    auto [i, x] = Unpair(a);
    auto [j, y] = Unpair(b);
    if (i != j) return i < j;
    return v_->Less(x, y);
  }
  std::optional<Nat> Size() const override {
    if (v_->Size() == Nat{0}) return 0;
    return std::nullopt;
  }
  WoStatus Status() const override { return v_->Status(); }
  CnfOrdinal Type() const override { return v_->Type() * CnfOrdinal::Omega(); }
  std::string Describe() const override { return "ProdOmega(" + v_->Describe() + ")"; }
  std::vector<Nat> Elements() const override {
    if (Size() == Nat{0}) return {};
    return LinearOrder::Elements();
  }
  std::vector<Nat> DescendingChain(size_t n) const override {
    std::vector<Nat> out;
    for (Nat x : v_->DescendingChain(n)) out.push_back(Pair(0, x));
    return out;
  }

 private:
  Order v_;
};

class SuccLo : public LinearOrder {
 public:
  explicit SuccLo(Order v) : v_(std::move(v)) {}
  bool Contains(Nat x) const override { return x == 1 || (x > 1 && v_->Contains(x - 1)); }
  bool Less(Nat x, Nat y) const override {
    if (x == 1) return false;
    if (y == 1) return true;
    return v_->Less(x - 1, y - 1);
  }
  std::optional<Nat> Size() const override {
    auto s = v_->Size();
    if (!s) return std::nullopt;
    return *s + 1;
  }
  WoStatus Status() const override { return v_->Status(); }
  CnfOrdinal Type() const override { return v_->Type() + CnfOrdinal::Finite(1); }
  std::string Describe() const override { return "Succ(" + v_->Describe() + ")"; }
  std::vector<Nat> Elements() const override {
    std::vector<Nat> out{1};
    for (Nat x : v_->Elements()) out.push_back(CheckedAdd(x, 1));
    return out;
  }
  std::vector<Nat> DescendingChain(size_t n) const override {
    std::vector<Nat> out;
    for (Nat x : v_->DescendingChain(n)) out.push_back(CheckedAdd(x, 1));
    return out;
  }

 private:
  Order v_;
};

Nat Binomial(Nat n, Nat k) {
  if (k > n) return 0;
  Nat r = 1;
  for (Nat i = 1; i <= k; ++i) r = CheckedMul(r, n - k + i) / i;
  return r;
}

class StarLo : public LinearOrder {
 public:
  StarLo(Order x, Order y) : x_(std::move(x)), y_(std::move(y)) {}

  bool Contains(Nat z) const override {
    Word w;
    if (!SeqDecode(z, &w)) return false;
    Nat pm = 0, pn = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      auto [m, n] = Unpair(w[i]);
      if (!x_->Contains(m) || !y_->Contains(n)) return false;
      if (i > 0 && !(x_->Less(m, pm) && y_->Less(n, pn))) return false;
      pm = m;
      pn = n;
    }
    return true;
  }
  bool Less(Nat a, Nat b) const override {
    Word w, u;
    SeqDecode(a, &w);
    SeqDecode(b, &u);
    return KbLess(w, u);
  }
  std::optional<Nat> Size() const override {
    auto a = x_->Size(), b = y_->Size();
    if (a == Nat{0} || b == Nat{0}) return 1;
    if (!a || !b) return std::nullopt;
    Nat total = 0;
    for (Nat k = 0; k <= std::min(*a, *b); ++k)
      total = CheckedAdd(total, CheckedMul(Binomial(*a, k), Binomial(*b, k)));
    return total;
  }
  WoStatus Status() const override {
    WoStatus s = x_->Status(), t = y_->Status();
    if (s == WoStatus::kWellOrder || t == WoStatus::kWellOrder) return WoStatus::kWellOrder;
    if (s == WoStatus::kNotWellOrder && t == WoStatus::kNotWellOrder)
      return WoStatus::kNotWellOrder;
    return WoStatus::kUnknown;
  }
  // A finite side with k elements bounds the depth by k. Against an
  // ill-founded side, every node (m, n) whose n lies above a descending
  // chain has infinitely many children of each smaller height, so the
  // subtree below a node with j elements left has type w^j + 1, and no
  // subtree with j elements left exceeds w^j + 1.
  CnfOrdinal Type() const override {
    if (auto s = Size()) return CnfOrdinal::Finite(*s);
    auto a = x_->Size(), b = y_->Size();
    std::optional<Nat> k;
    if (a && y_->Status() == WoStatus::kNotWellOrder) k = a;
    if (b && x_->Status() == WoStatus::kNotWellOrder) k = b;
    // Against an infinite well order of type >= w*k the elements of rank
    // >= w*(k-1) play the role of the descending chain.
    auto wide = [](const Order& v, Nat k) {
      return v->Status() == WoStatus::kWellOrder &&
             v->Type() >= CnfOrdinal::Omega() * CnfOrdinal::Finite(k);
    };
    if (!k && a && wide(y_, *a)) k = a;
    if (!k && b && wide(x_, *b)) k = b;
    if (!k) Fail(ErrorKind::kUnsupported, "no exact type for " + Describe());
    return CnfOrdinal::OmegaPow(CnfOrdinal::Finite(*k)) + CnfOrdinal::Finite(1);
  }
  std::string Describe() const override {
    return "Star(" + x_->Describe() + "," + y_->Describe() + ")";
  }
  std::vector<Nat> Elements() const override {
    if (!Size()) return LinearOrder::Elements();
    std::vector<Nat> out;
    auto dd = DoubleDescent(x_, y_, SIZE_MAX, 0);
    for (const auto& seq : dd.sequences) {
      Word w;
      for (auto [m, n] : seq) w.push_back(Pair(m, n));
      out.push_back(SeqCode(w));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Nat> DescendingChain(size_t n) const override {
    if (Status() != WoStatus::kNotWellOrder) return LinearOrder::DescendingChain(n);
    auto xs = x_->DescendingChain(n), ys = y_->DescendingChain(n);
    std::vector<Nat> out;
    Word w;
    for (size_t i = 0; i < n; ++i) {
      out.push_back(SeqCode(w));
      w.push_back(Pair(xs[i], ys[i]));
    }
    return out;
  }

 private:
  Order x_, y_;
};

}  // namespace

Order FiniteOrder(std::vector<Nat> ascending) {
  return std::make_shared<FiniteLo>(std::move(ascending));
}

Order FiniteOrder(Nat n) {
  std::vector<Nat> v;
  for (Nat i = 1; i <= n; ++i) v.push_back(i);
  return FiniteOrder(std::move(v));
}

Order Rationals() {
  static const Order q = std::make_shared<RationalsLo>();
  return q;
}

std::pair<std::int64_t, std::uint64_t> RationalValue(Nat code) {
  if (code == 0) Fail(ErrorKind::kDomain, "0 is not a rational code");
  if (code == 1) return {0, 1};
  Nat k = code / 2;
  auto num = static_cast<std::int64_t>(Fusc(k));
  Nat den = Fusc(k + 1);
  return {code % 2 ? -num : num, den};
}

Order Naturals() {
  static const Order n = std::make_shared<NaturalsLo>();
  return n;
}

Order KbLinearOrder(const RationalTree& t) { return std::make_shared<KbLo>(t); }

Order OrderSum(std::vector<Order> parts) { return std::make_shared<SumLo>(std::move(parts)); }

Order OrderSumOmega(std::vector<Order> prefix, std::vector<Order> cycle) {
  return std::make_shared<SumOmegaLo>(std::move(prefix), std::move(cycle));
}

Order OrderProdOmega(Order v) { return std::make_shared<ProdOmegaLo>(std::move(v)); }

Order Succ(Order v) { return std::make_shared<SuccLo>(std::move(v)); }

Order Star(Order x, Order y) { return std::make_shared<StarLo>(std::move(x), std::move(y)); }

CnfOrdinal CnfType(const Order& v) { return v->Type(); }

Order ParseFiniteOrder(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Nat> elems;
  std::map<Nat, size_t> index;
  std::vector<std::pair<Nat, Nat>> lts;
  size_t lineno = 0;
  auto bad = [&](const std::string& msg) {
    Fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad("bad number '" + s + "'");
    return static_cast<Nat>(std::stoull(s));
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw, a, b, extra;
    if (!(ls >> kw)) continue;
    if (kw == "elem") {
      if (!(ls >> a) || (ls >> extra)) bad("expected 'elem <n>'");
      if (!lts.empty()) bad("elem after lt");
      Nat n = number(a);
      if (n == 0) Fail(ErrorKind::kValidation, "0 cannot be an order element");
      if (!index.emplace(n, elems.size()).second) Fail(ErrorKind::kValidation, "repeated element " + a);
      elems.push_back(n);
    } else if (kw == "lt") {
      if (!(ls >> a >> b) || (ls >> extra)) bad("expected 'lt <n> <m>'");
      Nat x = number(a), y = number(b);
      if (!index.count(x) || !index.count(y)) bad("lt on an undeclared element");
      lts.emplace_back(x, y);
    } else {
      bad("unknown keyword '" + kw + "'");
    }
  }
  const size_t n = elems.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n));
  for (auto [x, y] : lts) lt[index[x]][index[y]] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (lt[i][k])
        for (size_t j = 0; j < n; ++j)
          if (lt[k][j]) lt[i][j] = true;
  for (size_t i = 0; i < n; ++i) {
    if (lt[i][i]) Fail(ErrorKind::kValidation, "cycle through " + std::to_string(elems[i]));
    for (size_t j = i + 1; j < n; ++j)
      if (!lt[i][j] && !lt[j][i])
        Fail(ErrorKind::kValidation, "elements " + std::to_string(elems[i]) + " and " +
                                         std::to_string(elems[j]) + " are incomparable");
  }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return lt[a][b]; });
  std::vector<Nat> ascending;
  for (size_t i : order) ascending.push_back(elems[i]);
  return FiniteOrder(std::move(ascending));
}

std::string WriteFiniteOrder(const LinearOrder& v) {
  std::vector<Nat> s = v.Sorted();
  std::string out;
  for (Nat x : s) out += "elem " + std::to_string(x) + "\n";
  for (size_t i = 0; i + 1 < s.size(); ++i)
    out += "lt " + std::to_string(s[i]) + " " + std::to_string(s[i + 1]) + "\n";
  return out;
}

DoubleDescentTree DoubleDescent(const Order& x, const Order& y, size_t depth_cap,
                                Nat element_bound) {
  const bool finite = x->Size() && y->Size();
  std::vector<Nat> xs = x->Size() ? x->Elements() : x->ElementsUpTo(element_bound);
  std::vector<Nat> ys = y->Size() ? y->Elements() : y->ElementsUpTo(element_bound);
  DoubleDescentTree out;
  out.complete = finite;
  out.tree.SetRoot(out.tree.AddNode("d0"));
  out.sequences.push_back({});
  std::deque<NodeId> queue{0};
  while (!queue.empty()) {
    NodeId q = queue.front();
    queue.pop_front();
    auto seq = out.sequences[q];
    out.depth = std::max(out.depth, seq.size());
    std::vector<std::pair<Nat, Nat>> kids;
    for (Nat m : xs) {
      if (!seq.empty() && !x->Less(m, seq.back().first)) continue;
      for (Nat n : ys)
        if (seq.empty() || y->Less(n, seq.back().second)) kids.emplace_back(m, n);
    }
    if (kids.empty()) continue;
    if (seq.size() >= depth_cap) {
      out.complete = false;
      continue;
    }
    std::sort(kids.begin(), kids.end(),
              [](auto a, auto b) { return Pair(a.first, a.second) < Pair(b.first, b.second); });
    for (auto [m, n] : kids) {
      NodeId c = out.tree.AddNode("d" + std::to_string(out.tree.size()));
      out.tree.AddEdge(q, Pair(m, n), c);
      auto next = seq;
      next.emplace_back(m, n);
      out.sequences.push_back(std::move(next));
      queue.push_back(c);
    }
  }
  return out;
}

NotatedWo::NotatedWo(Order base, std::function<CnfOrdinal(Nat)> rank,
                     std::function<std::optional<Nat>(const CnfOrdinal&)> at_rank, CnfOrdinal type)
    : base_(std::move(base)), rank_(std::move(rank)), at_rank_(std::move(at_rank)),
      type_(std::move(type)) {}

NotatedWo NotateFinite(const Order& finite) {
  std::vector<Nat> sorted = finite->Sorted();
  auto pos = std::make_shared<std::map<Nat, Nat>>();
  for (size_t i = 0; i < sorted.size(); ++i) (*pos)[sorted[i]] = i;
  return NotatedWo(
      finite, [pos](Nat x) { return CnfOrdinal::Finite(pos->at(x)); },
      [sorted](const CnfOrdinal& a) -> std::optional<Nat> {
        if (!a.IsFinite() || a.AsFinite() >= sorted.size()) return std::nullopt;
        return sorted[a.AsFinite()];
      },
      CnfOrdinal::Finite(sorted.size()));
}

NotatedWo NotateNaturals() {
  return NotatedWo(
      Naturals(), [](Nat x) { return CnfOrdinal::Finite(x - 1); },
      [](const CnfOrdinal& a) -> std::optional<Nat> {
        if (!a.IsFinite()) return std::nullopt;
        return CheckedAdd(a.AsFinite(), 1);
      },
      CnfOrdinal::Omega());
}

NotatedWo NotateSum(const std::vector<NotatedWo>& parts) {
  std::vector<Order> bases;
  std::vector<CnfOrdinal> offsets;
  CnfOrdinal total;
  for (const auto& p : parts) {
    bases.push_back(p.base());
    offsets.push_back(total);
    total = total + p.type();
  }
  return NotatedWo(
      OrderSum(bases),
      [parts, offsets](Nat z) {
        auto [i, x] = Unpair(z);
        return offsets[i] + parts[i].Rank(x);
      },
      [parts, offsets](const CnfOrdinal& a) -> std::optional<Nat> {
        for (size_t i = 0; i < parts.size(); ++i) {
          CnfOrdinal end = offsets[i] + parts[i].type();
          if (a < end) {
            auto x = parts[i].AtRank(a.LeftSubtract(offsets[i]));
            if (!x) return std::nullopt;
            return Pair(i, *x);
          }
        }
        return std::nullopt;
      },
      total);
}

NotatedWo NotateSucc(const NotatedWo& v) {
  return NotatedWo(
      Succ(v.base()),
      [v](Nat x) { return x == 1 ? v.type() : v.Rank(x - 1); },
      [v](const CnfOrdinal& a) -> std::optional<Nat> {
        if (a == v.type()) return Nat{1};
        auto x = v.AtRank(a);
        if (!x) return std::nullopt;
        return CheckedAdd(*x, 1);
      },
      v.type() + CnfOrdinal::Finite(1));
}

void ValidateNotation(const NotatedWo& w, Nat bound) {
  const Order& b = w.base();
  const bool finite = b->Size().has_value();
  std::vector<Nat> elems = finite ? b->Elements() : b->ElementsUpTo(bound);
  std::sort(elems.begin(), elems.end(), [&](Nat x, Nat y) { return b->Less(x, y); });
  auto bad = [](const std::string& msg) { Fail(ErrorKind::kAnnotation, msg); };
  if (finite && w.type() != CnfOrdinal::Finite(elems.size()))
    bad("type " + w.type().ToString() + " but " + std::to_string(elems.size()) + " elements");
  for (size_t i = 0; i < elems.size(); ++i) {
    Nat x = elems[i];
    CnfOrdinal r = w.Rank(x);
    std::string at = "element " + std::to_string(x);
    if (r >= w.type()) bad(at + " has rank " + r.ToString() + " >= type");
    if (finite && r != CnfOrdinal::Finite(i)) bad(at + " has rank " + r.ToString() + ", expected " + std::to_string(i));
    if (i > 0 && w.Rank(elems[i - 1]) >= r) bad(at + ": ranks not increasing");
    if (r.IsFinite() && r.AsFinite() < i) bad(at + " has more than " + r.ToString() + " elements below");
    if (w.AtRank(r) != x) bad(at + ": rank lookup does not return it");
  }
}

}  // namespace atrbench
