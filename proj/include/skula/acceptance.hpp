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

// The acceptance suite: fourteen criteria, each a pass/fail line with a
// short detail and its wall time. Time limits are pinned below.

#ifndef SKULA_ACCEPTANCE_HPP_
#define SKULA_ACCEPTANCE_HPP_

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skula/clopen.hpp"
#include "skula/hyperspace.hpp"
#include "skula/mrowka.hpp"
#include "skula/ordinal.hpp"
#include "skula/poset.hpp"
#include "skula/random.hpp"
#include "skula/space_term.hpp"

namespace skula {

inline constexpr std::uint64_t kAcceptanceSeed = 20260417;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0;
  double limit_ms = 0;  // 0 means no limit
};

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

inline Outcome fail(const std::string& why) { return Outcome{false, why}; }

// Natural sum through a map from exponents to coefficients.
inline Ordinal coefficient_map_sum(const Ordinal& a, const Ordinal& b) {
  std::map<Ordinal, Natural, std::greater<>> m;
  for (const auto& t : a.terms()) m[t.exponent] += t.coefficient;
  for (const auto& t : b.terms()) m[t.exponent] += t.coefficient;
  std::vector<Ordinal::Term> terms;
  for (auto& [e, c] : m) terms.push_back(Ordinal::Term{e, c});
  return Ordinal::from_terms(std::move(terms));
}

inline Outcome example_one() {
  const std::vector<Ordinal> labels{Ordinal(0),  Ordinal(1),  Ordinal(1),  Ordinal(2),
                                    Ordinal(10), Ordinal(10), parse_ordinal("w+7"), Ordinal(3)};
  const std::string got = to_string(hyper_antichain_height(labels));
  const std::string want = "w^(w+7) + w^9*2 + w^2 + w + 2";
  if (got != want) return fail("got " + got);
  return {true, got};
}

inline Outcome natural_sum_example() {
  const Ordinal a = parse_ordinal("w^(w+w)*8 + w^7*3");
  const Ordinal b = parse_ordinal("w^w + w^7 + w^2 + 5");
  const Ordinal got = natural_sum(a, b);
  const Ordinal want = parse_ordinal("w^(w+w)*8 + w^w + w^7*4 + w^2 + 5");
  if (got != want) return fail("got " + to_string(got));
  if (to_string(got) != "w^(w*2)*8 + w^w + w^7*4 + w^2 + 5") return fail("format " + to_string(got));
  if (coefficient_map_sum(a, b) != got) return fail("coefficient-map oracle disagrees");
  return {true, to_string(got)};
}

inline Outcome hessenberg_examples() {
  const Ordinal w = Ordinal::omega();
  const Ordinal two(2);
  const Ordinal ww = w + w;
  if (natural_product(w, two) != ww) return fail("w (x) 2 = " + to_string(natural_product(w, two)));
  if (natural_product(two, w) != ww) return fail("2 (x) w = " + to_string(natural_product(two, w)));
  if (odot(w, 2) != ww) return fail("w . 2 = " + to_string(odot(w, 2)));
  if (odot(two, NatOrOmega::omega()) != w) return fail("2 . w = " + to_string(odot(two, NatOrOmega::omega())));
  return {true, "w(x)2 = 2(x)w = w(.)2 = w*2, 2(.)w = w"};
}

inline Outcome tip_examples() {
  const auto a = tip_degree(parse_ordinal("w^w*2 + w^7 + w^3*5"));
  if (a.tip != parse_ordinal("w^3")) return fail("tip = " + to_string(a.tip));
  const auto b = tip_degree(parse_ordinal("w+5"));
  if (b.tip != Ordinal(1)) return fail("tip(w+5) = " + to_string(b.tip));
  return {true, "w^3, 1"};
}

inline Outcome hyper_point_table(Rng& rng) {
  const std::vector<std::pair<const char*, const char*>> table = {
      {"0", "0"}, {"1", "1"}, {"2", "w"}, {"3", "w^2"}, {"10", "w^9"}, {"w", "w^w"}, {"w+7", "w^(w+7)"}};
  for (auto [r, h] : table) {
    const Ordinal got = hyper_point_height(parse_ordinal(r));
    if (got != parse_ordinal(h)) return fail(std::string("r = ") + r + " gives " + to_string(got));
  }
  OrdinalShape shape{4, 2, 6, true};
  int pairs = 0;
  for (int t = 0; t < 1000; ++t) {
    Ordinal r = random_ordinal(rng, shape), s = random_ordinal(rng, shape);
    if (r == s) continue;
    if (s < r) std::swap(r, s);
    if (r.is_zero()) r = Ordinal(1);
    if (r == s) continue;
    ++pairs;
    if (!(hyper_point_height(r) < hyper_point_height(s))) {
      return fail("not increasing at " + to_string(r) + " < " + to_string(s));
    }
  }
  return {true, "table exact; " + std::to_string(pairs) + " increasing pairs"};
}

inline Outcome natural_sum_properties(Rng& rng) {
  OrdinalShape shape{6, 2, 5, true};
  int split_cases = 0;
  for (int t = 0; t < 10000; ++t) {
    const Ordinal a = random_ordinal(rng, shape), b = random_ordinal(rng, shape), c = random_ordinal(rng, shape);
    const Ordinal ab = natural_sum(a, b);
    auto where = [&](const std::string& prop) {
      return fail(prop + " fails at a=" + to_string(a) + ", b=" + to_string(b) + ", c=" + to_string(c));
    };
    if (ab != coefficient_map_sum(a, b)) return where("coefficient-map agreement");
    if (ab != natural_sum(b, a)) return where("(i)");
    if (natural_sum(ab, c) != natural_sum(a, natural_sum(b, c))) return where("(ii)");
    if (natural_sum(a, Ordinal()) != a) return where("(iii)");
    if ((b < c) != (ab < natural_sum(a, c))) return where("(iv)");
    const Ordinal delta = std::max(a.degree(), b.degree()) + Ordinal(1);
    if (!(ab < Ordinal::omega_power(delta))) return where("(v) tight");
    const Ordinal d = random_ordinal(rng, shape);
    const Ordinal wd = Ordinal::omega_power(d);
    if (a < wd && b < wd && !(ab < wd)) return where("(v)");
    if (a < c && !(ab < natural_sum(c, b))) return where("(vi) left");
    if (b < c && !(ab < natural_sum(a, c))) return where("(vi) right");
    for (const Ordinal& g : {c, ab.is_zero() ? Ordinal() : drop_tip(ab)}) {
      const auto split = split_below_natural_sum(g, a, b);
      if (split.has_value() != (g < ab)) return where("(vii) existence");
      if (!split) continue;
      ++split_cases;
      const auto& [a1, b1] = *split;
      if (!(a1 <= a && b1 <= b && natural_sum(a1, b1) == g && (a1 < a || b1 < b))) return where("(vii)");
    }
  }
  return {true, "10000 triples, " + std::to_string(split_cases) + " (vii) splits"};
}

inline Outcome zaguia_suite(Rng& rng) {
  std::size_t count = 0;
  std::uint64_t literal_failures = 0;
  auto run = [&](const FinitePoset& p) -> std::optional<std::string> {
    ++count;
    const auto r = zaguia_verify(p);
    if (!r.literal_union_subadditive || !r.literal_max_decomposition) ++literal_failures;
    if (!r.pass()) {
      return poset_to_json(p).dump() + ": " + (r.witness ? r.witness->check + " " + r.witness->detail : "failed");
    }
    return std::nullopt;
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_labeled_posets(n)) {
      if (auto w = run(p)) return fail(*w);
    }
  }
  for (int t = 0; t < 1000; ++t) {
    const int n = static_cast<int>(uniform(rng, 6, 8));
    if (auto w = run(random_poset(rng, n, 0.3))) return fail(*w);
  }
  return {true, std::to_string(count) + " posets; literal unshifted reading fails on " +
                    std::to_string(literal_failures)};
}

inline Outcome hyperspace_suite() {
  const FinitePoset chain3 = chain_poset(3);
  const auto y_chain = FinJoinSemilattice::from_order(chain3);
  const auto square_order = FinitePoset::from_covers({"00", "01", "10", "11"},
                                                     {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  const auto y_square = FinJoinSemilattice::from_order(square_order);
  std::size_t count = 0, exhaustive = 0;
  std::uint64_t homs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : all_labeled_posets(n)) {
      ++count;
      const auto h = build_hyperspace(p);
      const std::string where = poset_to_json(p).dump();
      if (!h.join_generated()) return fail("join generation fails for " + where);
      if (!h.down_max()) return fail("down-Max decomposition fails for " + where);
      if (!h.equals_kw()) return fail("H(P) != K(P) for " + where);
      if (!h.union_closed() || !h.eta_embedding()) return fail("structure check fails for " + where);
      const FinitePoset hp = h.as_poset();
      const auto sel = selector_axioms_check(h.k_plus_selector(), &hp);
      if (!sel.pass()) return fail("K+ selector fails for " + where + ": " + sel.witness);

      const Ranks rk = ranks(p);
      std::vector<int> f_chain, f_square;
      const ElementSet up0 = principal_sets(p, 0).up;
      for (int x = 0; x < p.size(); ++x) {
        f_chain.push_back(static_cast<int>(std::min<std::uint64_t>(rk.element[x], 2)));
        const int bits = (rk.element[x] >= 1 ? 2 : 0) + (up0.contains(x) ? 1 : 0);
        f_square.push_back(square_order.require_index(std::string(1, bits & 2 ? '1' : '0') + (bits & 1 ? '1' : '0')));
      }
      for (const auto* y : {&y_chain, &y_square}) {
        const auto& f = y == &y_chain ? f_chain : f_square;
        const auto ext = hat_extension(h, *y, f);
        if (!ext.report.pass()) return fail("extension fails for " + where + ": " + ext.report.witness);
        if (h.size() <= 64) {
          if (!ext.report.exhaustive) return fail("uniqueness not enumerated for " + where);
          if (ext.report.agreeing != 1) return fail("extension not unique for " + where);
          ++exhaustive;
          homs += ext.report.homomorphisms;
        }
      }
    }
  }
  return {true, std::to_string(count) + " posets; " + std::to_string(exhaustive) + " exhaustive uniqueness runs over " +
                    std::to_string(homs) + " homomorphisms"};
}

inline Outcome bound_chain_suite(Rng& rng) {
  const Ordinal cap = parse_ordinal("w^w*10");
  for (int t = 0; t < 1000; ++t) {
    const Ordinal a = random_ordinal_below_omega_omega(rng, 8, 9, 5);
    if (!(a < cap)) return fail("sample outside range");
    const auto b = bound_chain_check(ord_space(a));
    if (!b.pass()) return fail("chain fails at " + to_string(a));
    // oracle: the three comparisons on hand-built ordinals
    const Ordinal h = a.is_finite() ? Ordinal() : a.degree();
    const Natural e = a.is_finite() ? *a.finite_value() + 1 : a.leading_coefficient();
    if (b.height != h || b.rank != a + Ordinal(1) || b.middle != Ordinal::omega_power(h, e + 1)) {
      return fail("chain data differ at " + to_string(a));
    }
  }
  for (int n = 1; n <= 100; ++n) {
    const Ordinal a = Ordinal::omega() + Ordinal(static_cast<std::uint64_t>(n));
    const auto b = bound_chain_check(ord_space(a));
    if (!b.pass() || b.height != Ordinal(1) || b.rank != a + Ordinal(1)) {
      return fail("sharpness family fails at n = " + std::to_string(n));
    }
  }
  return {true, "1000 random spaces and w+n for n <= 100"};
}

// Points of maximal height of [0, a]: w^deg * k for k <= leading
// coefficient, or every point when a is finite.
inline std::vector<Ordinal> maximizers(const Ordinal& a) {
  std::vector<Ordinal> out;
  if (auto n = a.finite_value()) {
    for (Natural k = 0; k <= *n; ++k) out.push_back(Ordinal(k));
    return out;
  }
  for (Natural k = 1; k <= a.leading_coefficient(); ++k) out.push_back(Ordinal::omega_power(a.degree(), k));
  return out;
}

inline Outcome telgarsky_suite(Rng& rng) {
  for (int t = 0; t < 1000; ++t) {
    const Ordinal a = random_ordinal_below_omega_omega(rng, 5, 4, 3);
    const Ordinal b = random_ordinal_below_omega_omega(rng, 5, 4, 3);
    const auto ra = term_report(ord_space(a)), rb = term_report(ord_space(b));
    const auto rp = term_report(prod_space(ord_space(a), ord_space(b)));
    if (rp.height != natural_sum(ra.height, rb.height) || rp.endpoint_count != ra.endpoint_count * rb.endpoint_count) {
      return fail("product rule fails for " + to_string(a) + " x " + to_string(b));
    }
    auto sample = [&](const Ordinal& x) {
      auto pts = maximizers(x);
      for (int k = 0; k < 12; ++k) {
        Ordinal p = random_ordinal_below_omega_omega(rng, 5, 4, 3);
        if (p <= x) pts.push_back(p);
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      return pts;
    };
    const auto sa = sample(a), sb = sample(b);
    Ordinal best;
    Natural hits = 0;
    for (const auto& x : sa) {
      for (const auto& y : sb) {
        const Ordinal h = natural_sum(point_height(x), point_height(y));
        if (h > best) {
          best = h;
          hits = 0;
        }
        if (h == best) ++hits;
      }
    }
    if (best != rp.height || hits != rp.endpoint_count) {
      return fail("point maximisation disagrees for " + to_string(a) + " x " + to_string(b));
    }
  }
  return {true, "1000 products"};
}

inline Outcome tip_selector_suite(Rng& rng) {
  const Ordinal alpha = parse_ordinal("w^w*5");
  std::vector<Ordinal> points;
  for (int t = 0; t < 1000; ++t) {
    Ordinal b = t == 0 ? alpha : random_ordinal_below_omega_omega(rng, 7, 5, 4);
    if (b > alpha) b = alpha;
    points.push_back(b);
    const auto cb = clopen_cb(tip_selector(b, alpha));
    if (!cb.unitary || !cb.lastpt || *cb.lastpt != b || cb.height != point_height(b)) {
      return fail("U_b not canonical at " + to_string(b));
    }
    try {
      const auto m = min_clopen_with_endpoint(b, alpha, truncation_grid(b, alpha));
      if (!m.matches_tip_selector) return fail("minimal clopen differs at " + to_string(b));
    } catch (const Error& e) {
      return fail(std::string("minimal clopen search at ") + to_string(b) + ": " + e.what());
    }
  }
  const auto tl = treelike_check(alpha, points);
  if (!tl.pass()) return fail(tl.witness);
  return {true, "1000 points canonical, laminar, minimal"};
}

// Join table over all finite points inside [0, 8), the branches, and the top.
inline std::optional<std::string> semilattice_exhaustive(const ADFamily& fam) {
  std::vector<GPoint> pts;
  for (std::uint32_t m = 1; m < 256; ++m) {
    std::vector<std::uint64_t> s;
    for (std::uint64_t k = 0; k < 8; ++k) {
      if (m >> k & 1) s.push_back(k);
    }
    pts.push_back(FinPt{s});
  }
  for (std::size_t i = 0; i < fam.size(); ++i) pts.push_back(Branch{i});
  pts.push_back(Top{});
  const std::size_t n = pts.size();
  auto index = [&](const GPoint& x) -> std::size_t {
    if (const auto* f = std::get_if<FinPt>(&x)) {
      std::uint32_t m = 0;
      for (auto k : f->sigma) {
        if (k >= 8) return n;
        m |= std::uint32_t{1} << k;
      }
      return m - 1;
    }
    if (const auto* b = std::get_if<Branch>(&x)) return 255 + b->index;
    return n - 1;
  };
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index(g_join(pts[a], pts[b], fam));
      if (table[a * n + b] >= n) return "join leaves the point set";
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a * n + a] != a) return "not idempotent at " + to_string(pts[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a * n + b];
      if (ab != table[b * n + a]) return "not commutative";
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
          return "not associative at " + to_string(pts[a]) + ", " + to_string(pts[b]) + ", " + to_string(pts[c]);
        }
      }
      // upper bound in the order: finite <= branch iff inside it, all <= top
      for (std::size_t x : {a, b}) {
        if (const auto* f = std::get_if<FinPt>(&pts[x])) {
          if (const auto* br = std::get_if<Branch>(&pts[ab])) {
            if (!subset_of_branch(f->sigma, fam[br->index])) return "join below a branch not containing it";
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline Outcome mrowka_suite() {
  for (std::size_t k = 1; k <= 4; ++k) {
    if (auto w = semilattice_exhaustive(ADFamily(progression_family(k, k)))) {
      return fail(std::to_string(k) + " branches: " + *w);
    }
  }
  const ADFamily five(progression_family(5, 5));
  for (const auto* fam : {&five}) {
    const auto s = star_truncation(*fam, 12);
    if (!s.pass()) return fail("star intersection law fails");
    for (std::size_t i = 0; i < fam->size(); ++i) {
      const auto members = (*fam)[i].elements_below(12).size();
      if (s.codes[i].size() != (std::size_t{1} << members) - 1) return fail("star code count");
    }
  }
  const ADFamily touching({EvPeriodicSet(4, {0}), EvPeriodicSet(4, {1}, {0, 2}), EvPeriodicSet(4, {2}, {1})});
  const auto st = star_truncation(touching, 12);
  if (!st.pass()) return fail("star intersection law fails with finite meets");
  std::size_t certified = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const auto c = convergence_check(five, i, j, 128);
      if (!c.pass()) return fail("convergence fails for branches " + std::to_string(i) + ", " + std::to_string(j));
      ++certified;
    }
  }
  const auto sel = mrowka_selector_check(five.sets(), 64);
  if (!sel.pass()) return fail("selector: " + sel.witness);
  return {true, "semilattice on 1-4 branches; star law at 12; " + std::to_string(certified) +
                    " convergent pairs; selector at 64"};
}

inline Outcome lusin_suite() {
  const auto chain = lusin_chain(progression_family(64, 64), 50);
  for (std::size_t s = 0; s < chain.stages.size(); ++s) {
    const auto& st = chain.stages[s];
    if (!st.l2_exact) return fail("stage " + std::to_string(s) + ": (L2) counts differ");
    if (!st.l1_bounded) return fail("stage " + std::to_string(s) + ": (L1) bound fails");
    for (std::size_t n = 0; n < st.counts.size(); ++n) {
      if (st.counts[n] != n) return fail("stage " + std::to_string(s) + " count " + std::to_string(n));
    }
  }
  return {true, "50 stages, last enumerates " + std::to_string(chain.stages.back().counts.size()) + " sets"};
}

inline Outcome vietoris_suite(Rng& rng) {
  OnePointModel model;
  auto random_descriptor = [&]() {
    std::vector<std::uint64_t> xs;
    const auto k = uniform(rng, 0, 4);
    for (std::uint64_t i = 0; i < k; ++i) xs.push_back(uniform(rng, 0, 12));
    return uniform(rng, 0, 1) ? ClopenDescriptor::cofinite_excluding(xs) : ClopenDescriptor::finite(xs);
  };
  // U n V is nonempty: cofinite meets cofinite always; otherwise the finite
  // side must keep a point outside the other's exclusions or inside its list.
  auto meets = [](const ClopenDescriptor& a, const ClopenDescriptor& b) {
    if (a.cofinite && b.cofinite) return true;
    const auto& f = a.cofinite ? b : a;
    const auto& g = a.cofinite ? a : b;
    for (auto x : f.listed) {
      if (g.contains(x)) return true;
    }
    return false;
  };
  int nonempty = 0;
  for (int t = 0; t < 200; ++t) {
    const auto u = random_descriptor();
    std::vector<ClopenDescriptor> vs;
    const auto k = uniform(rng, 0, 4);
    for (std::uint64_t i = 0; i < k; ++i) vs.push_back(random_descriptor());
    bool want = vs.empty() ? !u.empty() : true;
    for (const auto& v : vs) want = want && meets(u, v);
    const auto w = vietoris_density_witness(model, u, vs);
    if (w.has_value() != want) return fail("witness existence disagrees at U = " + to_string(u));
    if (!w) continue;
    ++nonempty;
    if (w->empty()) return fail("empty witness");
    for (auto x : *w) {
      if (!u.contains(x)) return fail("witness leaves U");
    }
    for (const auto& v : vs) {
      if (std::none_of(w->begin(), w->end(), [&](std::uint64_t x) { return v.contains(x); })) {
        return fail("witness misses a V");
      }
    }
  }
  return {true, "200 basic opens, " + std::to_string(nonempty) + " nonempty with finite witnesses"};
}

}  // namespace acceptance

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed) {
  using namespace acceptance;
  struct Spec {
    int id;
    const char* name;
    double limit_ms;
    std::function<Outcome(Rng&)> body;
  };
  const std::vector<Spec> specs = {
      {1, "hyper-antichain example exact", 10, [](Rng&) { return example_one(); }},
      {2, "natural sum example exact", 0, [](Rng&) { return natural_sum_example(); }},
      {3, "Hessenberg product examples", 0, [](Rng&) { return hessenberg_examples(); }},
      {4, "tip examples", 0, [](Rng&) { return tip_examples(); }},
      {5, "hyper point height table and monotonicity", 0, [](Rng& r) { return hyper_point_table(r); }},
      {6, "natural sum properties (i)-(vii)", 5000, [](Rng& r) { return natural_sum_properties(r); }},
      {7, "downset rank bound suite", 30000, [](Rng& r) { return zaguia_suite(r); }},
      {8, "hyperspace suite", 0, [](Rng&) { return hyperspace_suite(); }},
      {9, "height-rank bound chain", 0, [](Rng& r) { return bound_chain_suite(r); }},
      {10, "product height rule", 0, [](Rng& r) { return telgarsky_suite(r); }},
      {11, "tip selector canonical and laminar", 0, [](Rng& r) { return tip_selector_suite(r); }},
      {12, "Mrowka suite", 0, [](Rng&) { return mrowka_suite(); }},
      {13, "Lusin stages", 10000, [](Rng&) { return lusin_suite(); }},
      {14, "Vietoris density", 0, [](Rng& r) { return vietoris_suite(r); }},
  };
  std::vector<CriterionResult> out;
  for (const auto& s : specs) {
    Rng rng(seed + static_cast<std::uint64_t>(s.id));
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    r.limit_ms = s.limit_ms;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = s.body(rng);
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass;
    r.detail = o.detail;
    if (r.pass && r.limit_ms > 0 && r.ms > r.limit_ms) {
      r.pass = false;
      r.detail += "; over the time limit";
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_criterion(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << static_cast<long long>(r.ms + 0.5)
     << " ms";
  if (r.limit_ms > 0) os << ", limit " << static_cast<long long>(r.limit_ms) << " ms";
  os << "): " << r.detail;
  return os.str();
}

}  // namespace skula

#endif  // SKULA_ACCEPTANCE_HPP_
