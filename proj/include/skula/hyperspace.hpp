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

// Hyperspaces of finite posets (finite Priestley spaces carry the discrete
// topology, so every subset is clopen): the nonempty downsets under union,
// clopen selectors on finite point sets, the extension of increasing maps
// into finite join semilattices, and a decidable model of the one-point
// compactification of the naturals.

#ifndef SKULA_HYPERSPACE_HPP_
#define SKULA_HYPERSPACE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "skula/error.hpp"
#include "skula/ordinal.hpp"
#include "skula/poset.hpp"

namespace skula {

// ---------------------------------------------------------------------------
// Clopen selectors on a finite point set

class SelectorFamily {
 public:
  using Set = boost::dynamic_bitset<>;

  explicit SelectorFamily(std::size_t points) : points_(points) {}

  std::size_t points() const noexcept { return points_; }

  void assign(std::size_t x, Set u) {
    if (x >= points_) throw Error("selector index out of range");
    if (u.size() != points_) throw Error("selector set has the wrong universe size");
    sets_[x] = std::move(u);
  }
  bool assigned(std::size_t x) const { return sets_.count(x) != 0; }
  const Set& at(std::size_t x) const {
    auto it = sets_.find(x);
    if (it == sets_.end()) throw Error("no selector set assigned to point " + std::to_string(x));
    return it->second;
  }

  // U_x = down x for each element of a finite poset.
  static SelectorFamily principal_ideals(const FinitePoset& p) {
    SelectorFamily fam(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
      Set u(fam.points_);
      for (int y : principal_sets(p, x).down.members().elements()) u.set(static_cast<std::size_t>(y));
      fam.assign(static_cast<std::size_t>(x), std::move(u));
    }
    return fam;
  }

 private:
  std::size_t points_;
  std::unordered_map<std::size_t, Set> sets_;
};

struct SelectorReport {
  bool cond1 = true;  // x in U_x
  bool cond2 = true;  // not both x in U_y and y in U_x
  bool cond3 = true;  // y in U_x implies U_y inside U_x
  bool cond4 = true;  // x <U y iff x != y and x in U_y is a strict order
  bool cond4_equivalent = true;    // cond4 agrees with (cond2 and cond3)
  bool minimal_singletons = true;  // minimal members are singletons
  bool well_founded = true;
  std::optional<bool> matches_space_order;
  std::vector<std::vector<std::size_t>> induced_below;  // x <= y via inclusion
  std::string witness;

  bool pass() const {
    return cond1 && cond2 && cond3 && cond4 && cond4_equivalent && minimal_singletons &&
           well_founded && matches_space_order.value_or(true);
  }
};

// Checks the selector conditions on a finite point set; when `space` is
// given, also compares the induced order with the order of the space.
inline SelectorReport selector_axioms_check(const SelectorFamily& fam,
                                            const FinitePoset* space = nullptr) {
  const std::size_t n = fam.points();
  for (std::size_t x = 0; x < n; ++x) {
    if (!fam.assigned(x)) throw Error("incomplete selector: point " + std::to_string(x) + " has no set");
  }
  SelectorReport rep;
  auto note = [&](bool& flag, const std::string& w) {
    flag = false;
    if (rep.witness.empty()) rep.witness = w;
  };
  auto pt = [](std::size_t x) { return std::to_string(x); };

  for (std::size_t x = 0; x < n; ++x) {
    const auto& ux = fam.at(x);
    if (!ux.test(x)) note(rep.cond1, "cond1: " + pt(x) + " not in its own set");
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto& uy = fam.at(y);
      if (x < y && ux.test(y) && uy.test(x)) note(rep.cond2, "cond2: " + pt(x) + " and " + pt(y));
      if (ux.test(y) && !uy.is_subset_of(ux)) {
        note(rep.cond3, "cond3: U_" + pt(y) + " not inside U_" + pt(x));
      }
    }
  }

  // condition (4) on the relation x < y iff x != y and x in U_y
  bool transitive = true;
  for (std::size_t x = 0; x < n && transitive; ++x) {
    for (std::size_t y = 0; y < n && transitive; ++y) {
      if (x == y || !fam.at(y).test(x)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (y == z || !fam.at(z).test(y)) continue;
        if (x == z || !fam.at(z).test(x)) {
          transitive = false;
          break;
        }
      }
    }
  }
  rep.cond4 = transitive;
  if (!rep.cond4 && rep.witness.empty()) rep.witness = "cond4: relation not a strict order";
  if (rep.cond1 && rep.cond4 != (rep.cond2 && rep.cond3)) {
    note(rep.cond4_equivalent, "cond4 disagrees with cond2 and cond3");
  }

  rep.induced_below.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (fam.at(x).is_subset_of(fam.at(y))) rep.induced_below[y].push_back(x);
    }
  }

  // minimal members of (U, inclusion) and well-foundedness of strict
  // inclusion; on a finite family a strict descent cannot cycle, so this
  // walks descending chains and stops at a minimum.
  for (std::size_t x = 0; x < n; ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (fam.at(y).is_proper_subset_of(fam.at(x))) minimal = false;
    }
    if (minimal && fam.at(x).count() != 1) {
      note(rep.minimal_singletons, "minimal set U_" + pt(x) + " is not a singleton");
    }
    std::size_t cur = x;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > n) {
        note(rep.well_founded, "strict descent from U_" + pt(x) + " does not terminate");
        break;
      }
      std::optional<std::size_t> next;
      for (std::size_t y = 0; y < n && !next; ++y) {
        if (fam.at(y).is_proper_subset_of(fam.at(cur))) next = y;
      }
      if (!next) break;
      cur = *next;
    }
  }

  if (space != nullptr) {
    if (static_cast<std::size_t>(space->size()) != n) throw Error("space size does not match the family");
    bool same = true;
    for (std::size_t x = 0; x < n && same; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const bool induced = fam.at(x).is_subset_of(fam.at(y));
        if (induced != space->less_equal(static_cast<int>(x), static_cast<int>(y))) {
          same = false;
          if (rep.witness.empty()) rep.witness = "induced order differs at " + pt(x) + ", " + pt(y);
          break;
        }
      }
    }
    rep.matches_space_order = same;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// H(P): nonempty downsets under union

class Hyperspace {
 public:
  static constexpr std::size_t kMaxPoints = 1024;

  const FinitePoset& base() const noexcept { return base_; }
  const std::vector<DownSet>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::optional<std::size_t> index_of(ElementSet s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * points_.size() + j]; }
  bool leq(std::size_t i, std::size_t j) const {
    return points_[i].members().subset_of(points_[j].members());
  }
  // eta(x) = down x, as a point index.
  std::size_t eta(int x) const { return eta_.at(static_cast<std::size_t>(x)); }

  bool union_closed() const noexcept { return union_closed_; }
  bool join_generated() const noexcept { return join_generated_; }
  bool equals_kw() const noexcept { return equals_kw_; }
  bool down_max() const noexcept { return down_max_; }
  bool eta_embedding() const noexcept { return eta_embedding_; }
  bool verified() const noexcept {
    return union_closed_ && join_generated_ && equals_kw_ && down_max_ && eta_embedding_;
  }

  // The point order as a poset, labelled by member sets.
  FinitePoset as_poset() const {
    if (points_.size() > static_cast<std::size_t>(kMaxElements)) {
      throw BoundError("hyperspace has " + std::to_string(points_.size()) + " points, above " +
                       std::to_string(kMaxElements));
    }
    std::vector<std::string> labels;
    std::vector<ElementSet> below(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      labels.push_back(base_.set_name(points_[i].members()));
      for (std::size_t j = 0; j < points_.size(); ++j) {
        if (i != j && leq(j, i)) below[i] = below[i].with(static_cast<int>(j));
      }
    }
    return FinitePoset::from_relation(std::move(labels), std::move(below));
  }

  // {K+ : K in H}, K+ = {L in H : L inside K}.
  SelectorFamily k_plus_selector() const {
    SelectorFamily fam(points_.size());
    for (std::size_t k = 0; k < points_.size(); ++k) {
      SelectorFamily::Set u(points_.size());
      for (std::size_t l = 0; l < points_.size(); ++l) {
        if (leq(l, k)) u.set(l);
      }
      fam.assign(k, std::move(u));
    }
    return fam;
  }

 private:
  friend Hyperspace build_hyperspace(const FinitePoset& p, int bound);

  FinitePoset base_;
  std::vector<DownSet> points_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::uint16_t> join_;
  std::vector<std::size_t> eta_;
  bool union_closed_ = true;
  bool join_generated_ = true;
  bool equals_kw_ = true;
  bool down_max_ = true;
  bool eta_embedding_ = true;
};

inline Hyperspace build_hyperspace(const FinitePoset& p, int bound = kDefaultEnumerationBound) {
  if (p.size() == 0) throw Error("hyperspace needs a nonempty poset");
  std::vector<DownSet> all = enumerate_downsets(p, bound);
  Hyperspace h;
  h.base_ = p;
  for (DownSet d : all) {
    if (!d.empty()) h.points_.push_back(d);
  }
  if (h.points_.size() > Hyperspace::kMaxPoints) {
    throw BoundError("hyperspace has " + std::to_string(h.points_.size()) + " points, above " +
                     std::to_string(Hyperspace::kMaxPoints));
  }
  std::sort(h.points_.begin(), h.points_.end(), [](DownSet a, DownSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  const std::size_t m = h.points_.size();
  for (std::size_t i = 0; i < m; ++i) h.index_[h.points_[i].members().bits()] = i;

  h.join_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto k = h.index_of(h.points_[i].members() | h.points_[j].members());
      if (!k) {
        h.union_closed_ = false;
        continue;
      }
      h.join_[i * m + j] = static_cast<std::uint16_t>(*k);
    }
  }

  for (int x = 0; x < p.size(); ++x) {
    h.eta_.push_back(*h.index_of(principal_sets(p, x).down.members()));
  }
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.less_equal(x, y) != h.leq(h.eta(x), h.eta(y))) h.eta_embedding_ = false;
    }
  }

  // closure of the eta image under joins
  std::vector<bool> reached(m, false);
  std::vector<std::size_t> frontier;
  for (auto e : h.eta_) {
    if (!reached[e]) {
      reached[e] = true;
      frontier.push_back(e);
    }
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const std::size_t a = frontier[head];
    for (std::size_t t = 0; t <= head; ++t) {
      const std::size_t k = h.join(a, frontier[t]);
      if (!reached[k]) {
        reached[k] = true;
        frontier.push_back(k);
      }
    }
  }
  h.join_generated_ = frontier.size() == m;

  const KwRanks kr(p, bound);
  std::set<std::uint64_t> kw, hs;
  for (DownSet d : kr.downsets()) kw.insert(d.members().bits());
  for (DownSet d : h.points_) hs.insert(d.members().bits());
  h.equals_kw_ = kw == hs;

  for (DownSet d : h.points_) {
    if (!(p.down_closure(extremal(p, d.members()).max) == d)) h.down_max_ = false;
  }
  return h;
}

// Max(K) for a point K, with down(Max K) = K re-checked.
inline ElementSet max_decomposition(const Hyperspace& h, ElementSet k) {
  if (!h.index_of(k)) throw Error("set is not a point of the hyperspace");
  const ElementSet sigma = extremal(h.base(), k).max;
  if (h.base().down_closure(sigma).members() != k) throw Error("internal error: down(Max K) != K");
  return sigma;
}

inline std::string hyperspace_to_dot(const Hyperspace& h) {
  std::ostringstream os;
  os << "digraph hyperspace {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < h.size(); ++i) layers[h.points()[i].size()].push_back(i);
  auto name = [&](std::size_t i) { return dot_quote(h.base().set_name(h.points()[i].members())); };
  for (const auto& [sz, xs] : layers) {
    os << "  { rank=same;";
    for (auto i : xs) os << " " << name(i) << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h.points()[j].size() == h.points()[i].size() + 1 && h.leq(i, j)) {
        os << "  " << name(i) << " -> " << name(j) << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Finite join semilattices and the universal extension

class FinJoinSemilattice {
 public:
  // Joins are least upper bounds in `order`; throws if some pair has none.
  static FinJoinSemilattice from_order(const FinitePoset& order) {
    const int n = order.size();
    std::vector<int> table(static_cast<std::size_t>(n * n), -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        ElementSet ub = (order.strictly_above(x).with(x)) & (order.strictly_above(y).with(y));
        auto lo = extremal(order, ub).min;
        if (lo.size() != 1) {
          throw Error("no least upper bound for " + order.label(x) + " and " + order.label(y));
        }
        table[static_cast<std::size_t>(x * n + y)] = lo.elements().front();
      }
    }
    return FinJoinSemilattice(order, std::move(table));
  }

  // Validates the semilattice axioms and the induced order.
  FinJoinSemilattice(FinitePoset carrier, std::vector<int> table)
      : carrier_(std::move(carrier)), table_(std::move(table)) {
    const int n = carrier_.size();
    if (n == 0) throw Error("semilattice carrier is empty");
    if (table_.size() != static_cast<std::size_t>(n * n)) throw Error("join table has the wrong size");
    for (int v : table_) {
      if (v < 0 || v >= n) throw Error("join table value out of range");
    }
    for (int x = 0; x < n; ++x) {
      if (join(x, x) != x) throw Error("join is not idempotent at " + carrier_.label(x));
      for (int y = 0; y < n; ++y) {
        if (join(x, y) != join(y, x)) throw Error("join is not commutative");
        if ((join(x, y) == y) != carrier_.less_equal(x, y)) {
          throw Error("join does not induce the carrier order");
        }
        for (int z = 0; z < n; ++z) {
          if (join(join(x, y), z) != join(x, join(y, z))) throw Error("join is not associative");
        }
      }
    }
  }

  const FinitePoset& carrier() const noexcept { return carrier_; }
  int size() const noexcept { return carrier_.size(); }
  int join(int x, int y) const { return table_[static_cast<std::size_t>(x * carrier_.size() + y)]; }

 private:
  FinitePoset carrier_;
  std::vector<int> table_;
};

struct HatReport {
  bool homomorphism = true;
  bool extends = true;
  bool unique = true;
  bool exhaustive = false;        // uniqueness by enumerating all join-homs
  std::uint64_t homomorphisms = 0;  // join-homs found (exhaustive mode)
  std::uint64_t agreeing = 0;       // of those, the ones extending f
  std::string witness;
  bool pass() const { return homomorphism && extends && unique; }
};

struct HatExtension {
  std::vector<int> hat;  // indexed by hyperspace point
  HatReport report;
};

// The join-homomorphism H(P) -> Y extending an increasing f : P -> Y.
inline HatExtension hat_extension(const Hyperspace& h, const FinJoinSemilattice& y,
                                  const std::vector<int>& f) {
  const FinitePoset& p = h.base();
  if (f.size() != static_cast<std::size_t>(p.size())) throw Error("map must assign every element");
  for (int v : f) {
    if (v < 0 || v >= y.size()) throw Error("map value outside the semilattice");
  }
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.less(a, b) && !y.carrier().less_equal(f[a], f[b])) {
        throw Error("map is not increasing at " + p.label(a) + " < " + p.label(b));
      }
    }
  }

  HatExtension out;
  const std::size_t m = h.size();
  out.hat.assign(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    auto members = h.points()[k].members().elements();
    int acc = f[members.front()];
    for (int x : members) acc = y.join(acc, f[x]);
    out.hat[k] = acc;
  }
  auto& rep = out.report;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (out.hat[h.join(i, j)] != y.join(out.hat[i], out.hat[j])) {
        rep.homomorphism = false;
        if (rep.witness.empty()) rep.witness = "hat is not a join-homomorphism";
      }
    }
  }
  for (int x = 0; x < p.size(); ++x) {
    if (out.hat[h.eta(x)] != f[x]) {
      rep.extends = false;
      if (rep.witness.empty()) rep.witness = "hat does not extend f at " + p.label(x);
    }
  }

  if (m <= 64 && y.size() <= 8) {
    rep.exhaustive = true;
    // Points in size order; every pair (a, b) is checked at the point a u b.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs_at(m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) pairs_at[h.join(a, b)].emplace_back(a, b);
    }
    std::vector<int> val(m, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == m) {
        ++rep.homomorphisms;
        bool agrees = true;
        for (int x = 0; x < p.size(); ++x) agrees = agrees && val[h.eta(x)] == f[x];
        if (agrees) {
          ++rep.agreeing;
          if (val != out.hat && rep.witness.empty()) rep.witness = "a second extension exists";
        }
        return;
      }
      for (int v = 0; v < y.size(); ++v) {
        bool ok = true;
        for (auto [a, b] : pairs_at[k]) {
          const int va = a == k ? v : val[a];
          const int vb = b == k ? v : val[b];
          if (y.join(va, vb) != v) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        val[k] = v;
        rec(k + 1);
      }
      val[k] = -1;
    };
    rec(0);
    rep.unique = rep.agreeing == 1;
  } else {
    // Any join-hom g with g(down x) = f(x) satisfies g(K) = join of f over
    // Max(K), since K is the union of the down x for x in Max(K).
    for (std::size_t k = 0; k < m; ++k) {
      auto sigma = max_decomposition(h, h.points()[k].members()).elements();
      int acc = f[sigma.front()];
      for (int x : sigma) acc = y.join(acc, f[x]);
      if (acc != out.hat[k]) {
        rep.unique = false;
        if (rep.witness.empty()) rep.witness = "generator values do not determine hat";
      }
    }
  }
  if (!rep.unique && rep.witness.empty()) rep.witness = "extension is not unique";
  return out;
}

// ---------------------------------------------------------------------------
// X = N u {inf}: naturals discrete, inf their limit, n < inf.

// A clopen subset of X: a finite set of naturals, or a cofinite set that
// contains inf (stored as its finite complement in N).
struct ClopenDescriptor {
  bool cofinite = false;
  std::vector<std::uint64_t> listed;  // members if finite, excluded if cofinite

  bool contains(std::uint64_t n) const {
    const bool in_list = std::binary_search(listed.begin(), listed.end(), n);
    return cofinite ? !in_list : in_list;
  }
  bool contains_infinity() const { return cofinite; }
  bool empty() const { return !cofinite && listed.empty(); }

  static ClopenDescriptor finite(std::vector<std::uint64_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return ClopenDescriptor{false, std::move(xs)};
  }
  static ClopenDescriptor cofinite_excluding(std::vector<std::uint64_t> xs) {
    ClopenDescriptor d = finite(std::move(xs));
    d.cofinite = true;
    return d;
  }
  static ClopenDescriptor whole() { return cofinite_excluding({}); }
};

inline ClopenDescriptor intersect(const ClopenDescriptor& a, const ClopenDescriptor& b) {
  std::vector<std::uint64_t> out;
  if (!a.cofinite && !b.cofinite) {
    std::set_intersection(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end(),
                          std::back_inserter(out));
    return ClopenDescriptor{false, out};
  }
  if (a.cofinite && b.cofinite) {
    std::set_union(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end(),
                   std::back_inserter(out));
    return ClopenDescriptor{true, out};
  }
  const auto& fin = a.cofinite ? b : a;
  const auto& cof = a.cofinite ? a : b;
  std::set_difference(fin.listed.begin(), fin.listed.end(), cof.listed.begin(), cof.listed.end(),
                      std::back_inserter(out));
  return ClopenDescriptor{false, out};
}

// Least natural in d, if any.
inline std::optional<std::uint64_t> least_natural(const ClopenDescriptor& d) {
  if (!d.cofinite) {
    if (d.listed.empty()) return std::nullopt;
    return d.listed.front();
  }
  std::uint64_t n = 0;
  for (auto x : d.listed) {
    if (x != n) break;
    ++n;
  }
  return n;
}

// Text form "fin:1,2,3" or "cofin:4,5" (cofinite sets contain inf).
inline ClopenDescriptor parse_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("descriptor needs 'fin:' or 'cofin:'", 0);
  const std::string kind = text.substr(0, colon);
  if (kind != "fin" && kind != "cofin") throw ParseError("descriptor kind must be fin or cofin", 0);
  std::vector<std::uint64_t> xs;
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(pos, end - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("descriptor entries must be naturals", pos);
    }
    xs.push_back(std::stoull(tok));
    pos = end + 1;
  }
  return kind == "fin" ? ClopenDescriptor::finite(std::move(xs))
                       : ClopenDescriptor::cofinite_excluding(std::move(xs));
}

inline std::string to_string(const ClopenDescriptor& d) {
  std::string out = d.cofinite ? "cofin:" : "fin:";
  for (std::size_t i = 0; i < d.listed.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.listed[i]);
  }
  return out;
}

struct OnePointModel {
  std::uint64_t horizon = 10000;

  void check(const ClopenDescriptor& d) const {
    for (auto x : d.listed) {
      if (x > horizon) {
        throw Error("descriptor mentions " + std::to_string(x) + ", beyond the horizon " +
                    std::to_string(horizon));
      }
    }
  }
};

// Decides whether U+ n V1- n ... n Vk- (closed K inside U meeting every Vi)
// is nonempty, and if so returns a finite F inside N lying in it.
inline std::optional<std::vector<std::uint64_t>> vietoris_density_witness(
    const OnePointModel& m, const ClopenDescriptor& u, const std::vector<ClopenDescriptor>& vs) {
  m.check(u);
  for (const auto& v : vs) m.check(v);
  std::vector<std::uint64_t> picks;
  if (vs.empty()) {
    auto n = least_natural(u);
    if (!n) return std::nullopt;
    picks.push_back(*n);
  }
  for (const auto& v : vs) {
    // a nonempty clopen set always contains a natural
    auto n = least_natural(intersect(u, v));
    if (!n) return std::nullopt;
    picks.push_back(*n);
  }
  std::sort(picks.begin(), picks.end());
  picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  return picks;
}

// Ranks for X = N u {inf}. In H(X) a finite set s has rank |s| - 1 and X
// sits above all of them, so rank(H(X)) = w + 1 <= w^rank(X) = w^2. The
// text states the value 1; both are recorded.
struct OnePointRankSummary {
  Ordinal rank_x;
  Ordinal rank_h;
  Ordinal bound;
  Ordinal stated_rank_h;
  bool within_bound = false;
  bool matches_statement = false;
};

inline OnePointRankSummary one_point_rank_summary() {
  OnePointRankSummary s;
  s.rank_x = Ordinal(2);  // naturals have rank 0, inf rank 1
  s.rank_h = Ordinal::omega() + Ordinal(1);
  s.bound = pow(Ordinal::omega(), s.rank_x);
  s.stated_rank_h = Ordinal(1);
  s.within_bound = s.rank_h <= s.bound;
  s.matches_statement = s.rank_h == s.stated_rank_h;
  return s;
}

// The finite model: an n-antichain below one top element.
inline FinitePoset antichain_with_top(int n) {
  auto labels = FinitePoset::default_labels(n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& l : labels) covers.emplace_back(l, "inf");
  labels.push_back("inf");
  return FinitePoset::from_covers(std::move(labels), covers);
}

}  // namespace skula

#endif  // SKULA_HYPERSPACE_HPP_
