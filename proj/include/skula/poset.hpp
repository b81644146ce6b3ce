//  Copyright 2026 The Skula Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Explicit finite posets on at most 64 elements, with bitset downsets,
// well-founded ranks, width, downset enumeration and the rank function of
// the lattice of nonempty downsets.

#ifndef SKULA_POSET_HPP_
#define SKULA_POSET_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skula/error.hpp"
#include "skula/ordinal.hpp"

namespace skula {

inline constexpr int kMaxElements = 64;
inline constexpr int kDefaultEnumerationBound = 20;

// A set of element indices of one poset.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }
  static constexpr ElementSet singleton(int x) { return ElementSet(std::uint64_t{1} << x); }
  static constexpr ElementSet first(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int x) const noexcept { return (bits_ >> x) & 1; }
  int size() const noexcept { return std::popcount(bits_); }
  constexpr bool subset_of(ElementSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  constexpr ElementSet with(int x) const { return ElementSet(bits_ | (std::uint64_t{1} << x)); }
  constexpr ElementSet without(int x) const { return ElementSet(bits_ & ~(std::uint64_t{1} << x)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

class FinitePoset;

// A downward closed element set. Only FinitePoset hands these out.
class DownSet {
 public:
  ElementSet members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  int size() const noexcept { return members_.size(); }
  friend bool operator==(DownSet, DownSet) = default;
  friend auto operator<=>(DownSet, DownSet) = default;

 private:
  friend class FinitePoset;
  explicit DownSet(ElementSet m) : members_(m) {}
  ElementSet members_;
};

class FinitePoset {
 public:
  FinitePoset() = default;

  // Elements are named; covers (a, b) mean a < b. Takes the transitive
  // closure and rejects cycles, duplicates and unknown names.
  static FinitePoset from_covers(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers) {
    FinitePoset p = with_labels(std::move(elements));
    for (const auto& [a, b] : covers) {
      const int x = p.require_index(a);
      const int y = p.require_index(b);
      if (x == y) throw Error("cycle detected at element '" + a + "'");
      p.below_[y] = p.below_[y].with(x);
    }
    p.close();
    return p;
  }

  // below[x] = elements strictly below x; must already be a strict order.
  static FinitePoset from_relation(std::vector<std::string> labels, std::vector<ElementSet> below) {
    FinitePoset p = with_labels(std::move(labels));
    if (below.size() != p.labels_.size()) throw Error("relation size mismatch");
    p.below_ = std::move(below);
    const int n = p.size();
    for (int x = 0; x < n; ++x) {
      if (!p.below_[x].subset_of(ElementSet::first(n))) throw Error("relation out of range");
      if (p.below_[x].contains(x)) throw Error("relation is not irreflexive");
      for (int y : p.below_[x].elements()) {
        if (!p.below_[y].subset_of(p.below_[x])) throw Error("relation is not transitive");
        if (p.below_[y].contains(x)) throw Error("relation is not antisymmetric");
      }
    }
    p.build_above();
    return p;
  }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(index_label(i));
    return out;
  }

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
  ElementSet all() const { return ElementSet::first(size()); }

  std::optional<int> index_of(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }
  int require_index(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw Error("unknown element '" + name + "'");
    return *i;
  }

  ElementSet strictly_below(int x) const { return below_.at(static_cast<std::size_t>(x)); }
  ElementSet strictly_above(int x) const { return above_.at(static_cast<std::size_t>(x)); }
  bool less(int x, int y) const { return below_[y].contains(x); }
  bool less_equal(int x, int y) const { return x == y || less(x, y); }
  bool comparable(int x, int y) const { return less_equal(x, y) || less_equal(y, x); }

  bool is_downset(ElementSet s) const {
    for (int x : s.elements()) {
      if (!below_[x].subset_of(s)) return false;
    }
    return true;
  }
  bool is_upset(ElementSet s) const {
    for (int x : s.elements()) {
      if (!above_[x].subset_of(s)) return false;
    }
    return true;
  }

  DownSet as_downset(ElementSet s) const {
    if (!s.subset_of(all())) throw Error("set mentions elements outside the poset");
    if (!is_downset(s)) throw Error("set is not downward closed");
    return DownSet(s);
  }
  DownSet down_closure(ElementSet s) const {
    ElementSet out = s;
    for (int x : s.elements()) out = out | below_[x];
    return DownSet(out);
  }
  ElementSet up_closure(ElementSet s) const {
    ElementSet out = s;
    for (int x : s.elements()) out = out | above_[x];
    return out;
  }

  // Elements listed so that everything below x comes before x.
  std::vector<int> linear_extension() const {
    std::vector<int> order(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return below_[a].size() < below_[b].size();
    });
    return order;
  }

  // Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < size(); ++y) {
      for (int x : below_[y].elements()) {
        if ((above_[x] & below_[y]).empty()) out.emplace_back(x, y);
      }
    }
    return out;
  }

  std::string set_name(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (int x : s.elements()) {
      if (!first) out += ",";
      out += labels_[x];
      first = false;
    }
    return out + "}";
  }

 private:
  static std::string index_label(int i) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('a' + i % 26));
      i = i / 26 - 1;
    } while (i >= 0);
    return s;
  }

  static FinitePoset with_labels(std::vector<std::string> labels) {
    if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
      throw BoundError("posets are limited to " + std::to_string(kMaxElements) + " elements");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw Error("duplicate element name '" + l + "'");
    }
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.below_.assign(p.labels_.size(), ElementSet());
    return p;
  }

  void close() {
    const int n = size();
    for (int k = 0; k < n; ++k) {
      for (int y = 0; y < n; ++y) {
        if (below_[y].contains(k)) below_[y] = below_[y] | below_[k];
      }
    }
    for (int x = 0; x < n; ++x) {
      if (below_[x].contains(x)) throw Error("cycle detected at element '" + labels_[x] + "'");
    }
    build_above();
  }

  void build_above() {
    above_.assign(labels_.size(), ElementSet());
    for (int y = 0; y < size(); ++y) {
      for (int x : below_[y].elements()) above_[x] = above_[x].with(y);
    }
  }

  std::vector<std::string> labels_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
};

// ---------------------------------------------------------------------------
// Basic order data

struct PrincipalSets {
  DownSet down;    // includes x
  ElementSet up;   // includes x
};

inline PrincipalSets principal_sets(const FinitePoset& p, int x) {
  if (x < 0 || x >= p.size()) throw Error("unknown element index " + std::to_string(x));
  return PrincipalSets{p.as_downset(p.strictly_below(x).with(x)), p.strictly_above(x).with(x)};
}

struct Extremal {
  ElementSet max;
  ElementSet min;
  bool is_antichain = true;
};

inline Extremal extremal(const FinitePoset& p, ElementSet s) {
  if (!s.subset_of(p.all())) throw Error("set mentions elements outside the poset");
  Extremal out;
  for (int x : s.elements()) {
    if ((p.strictly_above(x) & s).empty()) out.max = out.max.with(x);
    if ((p.strictly_below(x) & s).empty()) out.min = out.min.with(x);
    if (!(p.strictly_below(x) & s).empty()) out.is_antichain = false;
  }
  return out;
}

struct Ranks {
  std::vector<std::uint64_t> element;  // well-founded rank of each element
  std::uint64_t poset = 0;             // sup(rank + 1), 0 when empty
};

inline Ranks ranks(const FinitePoset& p) {
  Ranks r;
  r.element.assign(static_cast<std::size_t>(p.size()), 0);
  for (int x : p.linear_extension()) {
    for (int y : p.strictly_below(x).elements()) {
      r.element[x] = std::max(r.element[x], r.element[y] + 1);
    }
    r.poset = std::max(r.poset, r.element[x] + 1);
  }
  return r;
}

struct WidthReport {
  int width = 0;
  std::vector<std::vector<int>> chains;  // a minimum chain cover
  ElementSet antichain;                  // a maximum antichain
};

// Minimum chain cover from a maximum matching in the comparability
// bipartite graph; the maximum antichain comes from the Konig vertex cover
// and both sizes are checked to agree.
inline WidthReport width(const FinitePoset& p) {
  const int n = p.size();
  std::vector<int> match_right(static_cast<std::size_t>(n), -1);  // right y -> left x
  std::vector<int> match_left(static_cast<std::size_t>(n), -1);
  std::function<bool(int, std::vector<bool>&)> augment = [&](int x, std::vector<bool>& seen) {
    for (int y : p.strictly_above(x).elements()) {
      if (seen[y]) continue;
      seen[y] = true;
      if (match_right[y] < 0 || augment(match_right[y], seen)) {
        match_right[y] = x;
        match_left[x] = y;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (augment(x, seen)) ++matching;
  }

  WidthReport out;
  out.width = n - matching;
  for (int x = 0; x < n; ++x) {
    if (match_right[x] >= 0) continue;  // not a chain start
    std::vector<int> chain;
    for (int y = x; y >= 0; y = match_left[y]) chain.push_back(y);
    out.chains.push_back(std::move(chain));
  }

  // Konig: Z = vertices reachable from unmatched left vertices by
  // alternating paths; cover = (L \ Z_L) u (R n Z_R); antichain = elements
  // in neither side of the cover.
  std::vector<bool> zl(static_cast<std::size_t>(n), false), zr(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  for (int x = 0; x < n; ++x) {
    if (match_left[x] < 0) {
      zl[x] = true;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : p.strictly_above(x).elements()) {
      if (zr[y] || match_left[x] == y) continue;
      zr[y] = true;
      int x2 = match_right[y];
      if (x2 >= 0 && !zl[x2]) {
        zl[x2] = true;
        stack.push_back(x2);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    const bool in_cover = !zl[v] || zr[v];
    if (!in_cover) out.antichain = out.antichain.with(v);
  }
  if (static_cast<int>(out.chains.size()) != out.width || out.antichain.size() != out.width ||
      !extremal(p, out.antichain).is_antichain) {
    throw Error("internal error: chain cover and antichain sizes disagree");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Downsets

inline void check_enumeration_bound(const FinitePoset& p, int bound) {
  if (bound > 24) throw BoundError("enumeration bound is capped at 24 elements");
  if (p.size() > bound) {
    throw BoundError("poset has " + std::to_string(p.size()) + " elements, above the enumeration bound " +
                     std::to_string(bound));
  }
}

// All downsets including the empty one, in depth-first order over a linear
// extension.
inline std::vector<DownSet> enumerate_downsets(const FinitePoset& p,
                                               int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(p, bound);
  const std::vector<int> order = p.linear_extension();
  std::vector<DownSet> out;
  std::function<void(std::size_t, ElementSet)> rec = [&](std::size_t i, ElementSet cur) {
    if (i == order.size()) {
      out.push_back(p.as_downset(cur));
      return;
    }
    const int x = order[i];
    rec(i + 1, cur);
    if (p.strictly_below(x).subset_of(cur)) rec(i + 1, cur.with(x));
  };
  rec(0, ElementSet());
  return out;
}

// The lattice of all downsets ordered by inclusion, elements labelled by
// their member sets. The complement map onto upsets is checked to be an
// order anti-isomorphism.
inline FinitePoset downset_lattice(const FinitePoset& p, int bound = kDefaultEnumerationBound) {
  std::vector<DownSet> ds = enumerate_downsets(p, bound);
  if (ds.size() > static_cast<std::size_t>(kMaxElements)) {
    throw BoundError("downset lattice has " + std::to_string(ds.size()) + " elements, above " +
                     std::to_string(kMaxElements));
  }
  std::sort(ds.begin(), ds.end(), [](DownSet a, DownSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  std::vector<std::string> labels;
  std::vector<ElementSet> below(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    labels.push_back(p.set_name(ds[i].members()));
    const ElementSet ci = p.all() - ds[i].members();
    if (!p.is_upset(ci)) throw Error("internal error: complement of a downset is not an upset");
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const bool sub = ds[j].members().subset_of(ds[i].members());
      const bool rev = ci.subset_of(p.all() - ds[j].members());
      if (sub != rev) throw Error("internal error: complement map is not order reversing");
      if (i != j && sub) below[i] = below[i].with(static_cast<int>(j));
    }
  }
  return FinitePoset::from_relation(std::move(labels), std::move(below));
}

// Rank of each nonempty downset in the inclusion order on nonempty downsets.
class KwRanks {
 public:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  KwRanks(const FinitePoset& p, int bound) : n_(p.size()) {
    check_enumeration_bound(p, bound);
    if (p.size() == 0) throw Error("rank of downsets needs a nonempty poset");
    downsets_ = enumerate_downsets(p, bound);
    std::sort(downsets_.begin(), downsets_.end(),
              [](DownSet a, DownSet b) { return a.size() < b.size(); });
    table_.assign(std::size_t{1} << n_, kNone);
    table_[0] = kNone;
    for (DownSet d : downsets_) {
      if (d.empty()) continue;
      std::uint32_t best = 0;
      // The longest chain reaches d through some d \ {x}, x maximal in d.
      for (int x : extremal(p, d.members()).max.elements()) {
        const ElementSet rest = d.members().without(x);
        if (!rest.empty()) best = std::max(best, table_[rest.bits()] + 1);
      }
      table_[d.members().bits()] = best;
    }
    downsets_.erase(downsets_.begin());  // the empty downset sorts first
  }

  const std::vector<DownSet>& downsets() const noexcept { return downsets_; }
  std::uint32_t of(DownSet d) const { return of(d.members()); }
  std::uint32_t of(ElementSet s) const {
    const auto r = table_.at(s.bits());
    if (r == kNone) throw Error("not a nonempty downset");
    return r;
  }
  // Rank with the empty set added as a new bottom: 0 for the empty set.
  std::uint32_t shifted(ElementSet s) const { return s.empty() ? 0 : of(s) + 1; }

  // sup(rank + 1) over all nonempty downsets.
  std::uint64_t lattice_rank() const {
    std::uint64_t r = 0;
    for (DownSet d : downsets_) r = std::max<std::uint64_t>(r, of(d) + 1);
    return r;
  }

 private:
  int n_;
  std::vector<DownSet> downsets_;
  std::vector<std::uint32_t> table_;
};

inline KwRanks kw_rank(const FinitePoset& p, int bound = kDefaultEnumerationBound) {
  return KwRanks(p, bound);
}

// ---------------------------------------------------------------------------
// Zaguia's bound rank(K(W)) <= w^rank(W), checked on every downset.

struct ZaguiaWitness {
  std::string check;
  ElementSet first;
  ElementSet second;
  std::string detail;
};

struct ZaguiaReport {
  int elements = 0;
  std::uint64_t poset_rank = 0;
  std::uint64_t lattice_rank = 0;
  Ordinal bound;  // w^poset_rank

  bool monotone = true;             // I < J implies rank(I) < rank(J)
  bool union_subadditive = true;    // rho(I' u I'') <= rho(I') (+) rho(I'')
  bool strict_step = true;          // the strict step over proper sub-downsets
  bool max_decomposition = true;    // rho(I) <= (+) of rho(down p), p in Max(I)
  bool principal_bound = true;      // rank(down p) < w^rank(p)
  bool theorem = true;              // rank(K) <= w^rank(W)
  std::optional<ZaguiaWitness> witness;

  // The same two inequalities read with the unshifted rank.
  bool literal_union_subadditive = true;
  bool literal_max_decomposition = true;
  std::optional<ZaguiaWitness> literal_witness;

  bool pass() const {
    return monotone && union_subadditive && strict_step && max_decomposition && principal_bound && theorem;
  }
};

// rho is the rank in the downset order with the empty set adjoined at the
// bottom; the inductive step of the union bound meets empty pieces J n I',
// so this is the reading the argument supports.
inline ZaguiaReport zaguia_verify(const FinitePoset& p, int bound = kDefaultEnumerationBound) {
  const KwRanks kr(p, bound);
  const Ranks wr = ranks(p);
  ZaguiaReport rep;
  rep.elements = p.size();
  rep.poset_rank = wr.poset;
  rep.lattice_rank = kr.lattice_rank();
  rep.bound = pow(Ordinal::omega(), Ordinal(wr.poset));

  auto fail = [&](bool& flag, const std::string& check, ElementSet a, ElementSet b,
                  const std::string& detail) {
    flag = false;
    if (!rep.witness) rep.witness = ZaguiaWitness{check, a, b, detail};
  };
  auto literal_fail = [&](bool& flag, const std::string& check, ElementSet a, ElementSet b,
                          const std::string& detail) {
    flag = false;
    if (!rep.literal_witness) rep.literal_witness = ZaguiaWitness{check, a, b, detail};
  };
  auto rho = [&](ElementSet s) { return static_cast<std::uint64_t>(kr.shifted(s)); };
  auto rank = [&](ElementSet s) { return static_cast<std::uint64_t>(kr.of(s)); };

  const auto& ds = kr.downsets();
  for (DownSet a : ds) {
    for (DownSet b : ds) {
      const ElementSet i1 = a.members();
      const ElementSet i2 = b.members();
      if (i1 != i2 && i1.subset_of(i2) && !(rank(i1) < rank(i2))) {
        fail(rep.monotone, "monotone", i1, i2, "rank does not increase");
      }
      const ElementSet i = i1 | i2;
      const std::uint64_t bound12 = rho(i1) + rho(i2);
      if (!(rho(i) <= bound12)) fail(rep.union_subadditive, "union_subadditive", i1, i2, "rank of union too large");
      if (!(rank(i) <= rank(i1) + rank(i2))) {
        literal_fail(rep.literal_union_subadditive, "union_subadditive", i1, i2, "rank of union exceeds sum of ranks");
      }
      for (int x : extremal(p, i).max.elements()) {
        const ElementSet j = i.without(x);
        const std::uint64_t split = rho(j & i1) + rho(j & i2);
        if (!(rho(j) <= split) || !(split < bound12)) {
          fail(rep.strict_step, "strict_step", i1, i2,
               "sub-downset " + p.set_name(j) + " breaks the strict step");
        }
      }
    }
  }

  for (DownSet d : ds) {
    Ordinal sum, literal;
    for (int x : extremal(p, d.members()).max.elements()) {
      const ElementSet px = principal_sets(p, x).down.members();
      sum = natural_sum(sum, Ordinal(rho(px)));
      literal = natural_sum(literal, Ordinal(rank(px)));
    }
    if (!(Ordinal(rho(d.members())) <= sum)) {
      fail(rep.max_decomposition, "max_decomposition", d.members(), ElementSet(), "bound over maximal elements fails");
    }
    if (!(Ordinal(rank(d.members())) <= literal)) {
      literal_fail(rep.literal_max_decomposition, "max_decomposition", d.members(), ElementSet(),
                   "rank exceeds natural sum over maximal elements");
    }
  }

  for (int x = 0; x < p.size(); ++x) {
    const ElementSet px = principal_sets(p, x).down.members();
    const Ordinal r(rank(px));
    const Ordinal cap = pow(Ordinal::omega(), Ordinal(wr.element[x]));
    if (!(r < cap)) fail(rep.principal_bound, "principal_bound", px, ElementSet(), "rank of principal downset too large");
  }
  if (!(Ordinal(rep.lattice_rank) <= rep.bound)) {
    fail(rep.theorem, "theorem", p.all(), ElementSet(), "lattice rank exceeds bound");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Generators

// Every strict order on n labelled elements (n <= 5).
inline std::vector<FinitePoset> all_labeled_posets(int n) {
  if (n < 0 || n > 5) throw BoundError("labelled poset enumeration supports n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) pairs.emplace_back(x, y);
    }
  }
  std::vector<FinitePoset> out;
  const auto labels = FinitePoset::default_labels(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    std::vector<ElementSet> below(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (code >> k & 1) below[pairs[k].second] = below[pairs[k].second].with(pairs[k].first);
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y : below[x].elements()) {
        if (!below[y].subset_of(below[x]) || below[y].contains(x)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(FinitePoset::from_relation(labels, std::move(below)));
  }
  return out;
}

// Random DAG over a shuffled order, each forward pair an edge with
// probability edge_probability, then closed transitively.
template <class Rng>
FinitePoset random_poset(Rng& rng, int n, double edge_probability) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<std::string, std::string>> covers;
  const auto labels = FinitePoset::default_labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) covers.emplace_back(labels[perm[i]], labels[perm[j]]);
    }
  }
  return FinitePoset::from_covers(labels, covers);
}

inline FinitePoset chain_poset(int n) {
  auto labels = FinitePoset::default_labels(n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return FinitePoset::from_covers(labels, covers);
}

inline FinitePoset antichain_poset(int n) {
  return FinitePoset::from_covers(FinitePoset::default_labels(n), {});
}

// ---------------------------------------------------------------------------
// JSON and DOT

inline FinitePoset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("poset JSON: expected an object");
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw Error("poset JSON: field 'elements' must be an array of names");
  }
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw Error("poset JSON: field 'elements' must contain strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw Error("poset JSON: field 'covers' must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw Error("poset JSON: field 'covers' must hold [lower, upper] name pairs");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return FinitePoset::from_covers(std::move(elements), covers);
}

inline FinitePoset parse_poset_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("poset JSON: ") + e.what(), e.byte);
  }
  return poset_from_json(j);
}

inline nlohmann::json poset_to_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  return nlohmann::json{{"elements", p.labels()}, {"covers", covers}};
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Hasse diagram, one rank per layer, covers only.
inline std::string poset_to_dot(const FinitePoset& p, const std::string& name = "poset") {
  const Ranks r = ranks(p);
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<std::uint64_t, std::vector<int>> layers;
  for (int x = 0; x < p.size(); ++x) layers[r.element[x]].push_back(x);
  for (const auto& [level, xs] : layers) {
    os << "  { rank=same;";
    for (int x : xs) os << " " << dot_quote(p.label(x)) << ";";
    os << " }\n";
  }
  for (auto [a, b] : p.covers()) {
    os << "  " << dot_quote(p.label(a)) << " -> " << dot_quote(p.label(b)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace skula

#endif  // SKULA_POSET_HPP_
