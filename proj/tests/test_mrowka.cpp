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

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "skula/mrowka.hpp"
#include "skula/random.hpp"

using skula::ADFamily;
using skula::EvPeriodicSet;
using skula::GPoint;

namespace {

EvPeriodicSet random_set(skula::Rng& rng) {
  const auto p = skula::uniform(rng, 1, 12);
  std::vector<std::uint64_t> res, delta;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (skula::uniform(rng, 0, 2) == 0) res.push_back(r);
  }
  if (res.empty()) res.push_back(skula::uniform(rng, 0, p - 1));
  for (int k = 0; k < 3; ++k) {
    if (skula::uniform(rng, 0, 1)) delta.push_back(skula::uniform(rng, 0, 40));
  }
  return EvPeriodicSet(p, res, delta);
}

// A & B is infinite iff the pattern repeats on [lcm, 2 lcm) beyond the deltas.
bool infinite_meet_by_scan(const EvPeriodicSet& a, const EvPeriodicSet& b) {
  const std::uint64_t l = std::lcm(a.period(), b.period());
  const std::uint64_t start = 64 * l;
  for (std::uint64_t n = start; n < start + l; ++n) {
    if (a.contains(n) && b.contains(n)) return true;
  }
  return false;
}

}  // namespace

TEST(Mrowka, EvPeriodicSetBasics) {
  EvPeriodicSet s(4, {1, 3}, {3, 4});
  EXPECT_FALSE(s.contains(3));
  EXPECT_TRUE(s.contains(4));
  EXPECT_TRUE(s.contains(7));
  EXPECT_EQ(s.elements_below(10), (std::vector<std::uint64_t>{1, 4, 5, 7, 9}));
  EXPECT_THROW(EvPeriodicSet(0, {}), skula::Error);
  EXPECT_THROW(EvPeriodicSet(3, {3}), skula::Error);

  skula::Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    auto e = random_set(rng);
    std::vector<std::uint64_t> walked;
    for (auto x = e.next_member(0); x && *x < 100; x = e.next_member(*x + 1)) walked.push_back(*x);
    ASSERT_EQ(walked, e.elements_below(100));
  }
}

TEST(Mrowka, AdCheck) {
  auto even_odd = skula::ad_check({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(2, 1)});
  EXPECT_TRUE(even_odd.pass());
  auto nested = skula::ad_check({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(4, 0)});
  ASSERT_FALSE(nested.pass());
  EXPECT_EQ(nested.certificate.residue, 0u);
  EXPECT_EQ(nested.certificate.modulus, 4u);
  EXPECT_TRUE(skula::ad_check(skula::prefix_class_family(6)).pass());
  EXPECT_EQ(skula::prefix_class_family(6).size(), 64u);
  EXPECT_THROW(skula::ad_check({EvPeriodicSet(3, {}, {1})}), skula::Error);
  EXPECT_THROW(ADFamily({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(4, 0)}), skula::Error);

  skula::Rng rng(42);
  for (int t = 0; t < 2000; ++t) {
    auto a = random_set(rng), b = random_set(rng);
    auto c = skula::common_residue(a, b);
    ASSERT_EQ(c.has_value(), infinite_meet_by_scan(a, b));
    if (c) {
      ASSERT_EQ(c->modulus, std::lcm(a.period(), b.period()));
      ASSERT_TRUE(a.periodic_contains(c->residue) && b.periodic_contains(c->residue));
    } else {
      auto meet = skula::finite_intersection(a, b);
      std::vector<std::uint64_t> scan;
      for (std::uint64_t n = 0; n < 200; ++n) {
        if (a.contains(n) && b.contains(n)) scan.push_back(n);
      }
      ASSERT_EQ(*meet, scan);
    }
  }
  // large coprime periods still give a certificate quickly
  auto big = skula::common_residue(EvPeriodicSet(4294967291ull, {5}), EvPeriodicSet(4294967279ull, {7}));
  ASSERT_TRUE(big.has_value());
  EXPECT_EQ(big->residue % 4294967291ull, 5u);
  EXPECT_EQ(big->residue % 4294967279ull, 7u);
}

TEST(Mrowka, StarTruncation) {
  ADFamily eo({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(2, 1)});
  auto r = skula::star_truncation(eo, 8);
  EXPECT_TRUE(r.pass());
  std::vector<std::uint32_t> shared;
  std::set_intersection(r.codes[0].begin(), r.codes[0].end(), r.codes[1].begin(), r.codes[1].end(),
                        std::back_inserter(shared));
  EXPECT_TRUE(shared.empty());

  // meet exactly {0}
  ADFamily touch({EvPeriodicSet(2, {0}), EvPeriodicSet(2, {1}, {0})});
  auto t = skula::star_truncation(touch, 8);
  EXPECT_TRUE(t.pass());
  shared.clear();
  std::set_intersection(t.codes[0].begin(), t.codes[0].end(), t.codes[1].begin(), t.codes[1].end(),
                        std::back_inserter(shared));
  EXPECT_EQ(shared, (std::vector<std::uint32_t>{1}));
  // direct enumeration of subsets of {0..7}
  for (std::size_t b = 0; b < 2; ++b) {
    std::vector<std::uint32_t> want;
    for (std::uint32_t code = 1; code < 256; ++code) {
      bool inside = true;
      for (int k = 0; k < 8; ++k) {
        if ((code >> k & 1) && !touch[b].contains(static_cast<std::uint64_t>(k))) inside = false;
      }
      if (inside) want.push_back(code);
    }
    EXPECT_EQ(t.codes[b], want);
    EXPECT_EQ(t.codes[b].size(), (std::size_t{1} << touch[b].elements_below(8).size()) - 1);
  }
  EXPECT_THROW(skula::star_truncation(eo, 25), skula::BoundError);
}

TEST(Mrowka, GJoinExamples) {
  ADFamily eo({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(2, 1)});
  EXPECT_EQ(skula::g_join(skula::Branch{0}, skula::Branch{1}, eo), GPoint{skula::Top{}});
  EXPECT_EQ(skula::g_join(skula::fin_point({2, 4}), skula::Branch{0}, eo), GPoint{skula::Branch{0}});
  EXPECT_EQ(skula::g_join(skula::fin_point({2, 3}), skula::Branch{0}, eo), GPoint{skula::Top{}});
  EXPECT_EQ(skula::g_join(skula::fin_point({2}), skula::fin_point({3}), eo), skula::fin_point({2, 3}));
  EXPECT_THROW(skula::g_join(skula::Branch{5}, skula::Top{}, eo), skula::Error);
  EXPECT_THROW(skula::fin_point({}), skula::Error);
  EXPECT_EQ(skula::to_string(skula::fin_point({3, 1})), "{1,3}");
}

TEST(Mrowka, GJoinSemilatticeExhaustive) {
  // four branches over [0,8): residues mod 4
  ADFamily fam(skula::progression_family(4, 4));
  std::vector<GPoint> pts;
  for (std::uint32_t m = 1; m < 256; ++m) {
    std::vector<std::uint64_t> s;
    for (int k = 0; k < 8; ++k) {
      if (m >> k & 1) s.push_back(static_cast<std::uint64_t>(k));
    }
    pts.push_back(skula::fin_point(s));
  }
  for (std::size_t i = 0; i < 4; ++i) pts.push_back(skula::Branch{i});
  pts.push_back(skula::Top{});
  const std::size_t n = pts.size();
  auto index = [&](const GPoint& x) {
    return static_cast<std::size_t>(std::find(pts.begin(), pts.end(), x) - pts.begin());
  };
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index(skula::g_join(pts[a], pts[b], fam));
      ASSERT_LT(table[a * n + b], n);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    ASSERT_EQ(table[a * n + a], a);
    for (std::size_t b = 0; b < n; ++b) {
      ASSERT_EQ(table[a * n + b], table[b * n + a]);
      const std::size_t ab = table[a * n + b];
      // upper bound in the stated order
      for (std::size_t x : {a, b}) {
        const auto& px = pts[x];
        const auto& pj = pts[ab];
        bool below = pj == GPoint{skula::Top{}} || px == pj;
        if (const auto* f = std::get_if<skula::FinPt>(&px)) {
          if (const auto* br = std::get_if<skula::Branch>(&pj)) below = below || skula::subset_of_branch(f->sigma, fam[br->index]);
          if (const auto* g = std::get_if<skula::FinPt>(&pj)) {
            below = below || std::includes(g->sigma.begin(), g->sigma.end(), f->sigma.begin(), f->sigma.end());
          }
        }
        ASSERT_TRUE(below);
      }
      for (std::size_t c = 0; c < n; ++c) {
        ASSERT_EQ(table[ab * n + c], table[a * n + table[b * n + c]]);
      }
    }
  }
}

TEST(Mrowka, Convergence) {
  ADFamily eo({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(2, 1)});
  auto r = skula::convergence_check(eo, 0, 1, 64);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.threshold, 2u);  // sigma_2 = {0}, tau_2 = {1}
  EXPECT_EQ(r.distinct_left, 32u);
  EXPECT_THROW(skula::convergence_check(eo, 1, 1, 64), skula::Error);
  EXPECT_THROW(skula::convergence_check(eo, 0, 1, 1), skula::BoundError);

  ADFamily five(skula::progression_family(5, 5));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      auto c = skula::convergence_check(five, i, j, 128);
      ASSERT_TRUE(c.pass());
      // oracle: first n where both prefixes are nonempty and no branch holds both
      std::uint64_t want = 0;
      for (std::uint64_t n = 1; n <= 128 && !want; ++n) {
        bool li = false, lj = false;
        for (std::uint64_t k = 0; k < n; ++k) {
          li = li || k % 5 == i;
          lj = lj || k % 5 == j;
        }
        if (li && lj) want = n;
      }
      ASSERT_EQ(c.threshold, want);
    }
  }
}

TEST(Mrowka, SelectorCheck) {
  auto ok = skula::mrowka_selector_check({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(2, 1)}, 16);
  EXPECT_TRUE(ok.pass()) << ok.witness;
  auto five = skula::mrowka_selector_check(skula::progression_family(5, 5), 64);
  EXPECT_TRUE(five.pass()) << five.witness;
  auto bad = skula::mrowka_selector_check({EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(4, 0)}, 16);
  EXPECT_FALSE(bad.pass());
  EXPECT_FALSE(bad.clopen);
  EXPECT_TRUE(bad.cond3);
  EXPECT_NE(bad.witness.find("closure"), std::string::npos);
  EXPECT_FALSE(skula::mrowka_selector_check({}, 4).pass());
}

TEST(Mrowka, LusinStages) {
  std::vector<skula::LusinSet> mod8;
  for (auto& e : skula::progression_family(8, 8)) mod8.emplace_back(e);
  auto r = skula::lusin_stage(mod8);
  EXPECT_TRUE(r.pass());
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(r.counts[n], n);
  EXPECT_EQ(r.set.known.size(), 28u);

  std::vector<skula::LusinSet> one{skula::LusinSet{EvPeriodicSet::progression(2, 0)}};
  auto single = skula::lusin_stage(one);
  EXPECT_TRUE(single.set.known.empty());

  std::vector<skula::LusinSet> bad{skula::LusinSet{EvPeriodicSet::progression(2, 0)},
                                   skula::LusinSet{EvPeriodicSet::progression(4, 0)}};
  EXPECT_THROW(skula::lusin_stage(bad), skula::Error);
  // a generated set without enough fresh points
  std::vector<skula::LusinSet> thin{skula::LusinSet{EvPeriodicSet::progression(2, 0)},
                                    skula::LusinSet{skula::GeneratedSet{{0, 2}, {}}}};
  EXPECT_THROW(skula::lusin_stage(thin), skula::Error);

  auto chain = skula::lusin_chain(skula::progression_family(64, 64), 12);
  ASSERT_TRUE(chain.pass());
  // oracle: recount each stage against the sets in enumeration order
  std::vector<std::vector<std::uint64_t>> made;
  for (const auto& st : chain.stages) {
    std::vector<std::function<bool(std::uint64_t)>> member;
    for (const auto& g : made) {
      std::set<std::uint64_t> s(g.begin(), g.end());
      member.push_back([s](std::uint64_t x) { return s.count(x) > 0; });
    }
    for (std::uint64_t r64 = 0; r64 < 64; ++r64) member.push_back([r64](std::uint64_t x) { return x % 64 == r64; });
    for (std::size_t n = 0; n < member.size(); ++n) {
      std::size_t c = 0;
      for (auto x : st.set.known) {
        bool earlier = false;
        for (std::size_t k = 0; k < n; ++k) earlier = earlier || member[k](x);
        c += member[n](x) && !earlier;
      }
      ASSERT_EQ(c, n);
    }
    made.push_back(st.set.known);
  }
}

TEST(Mrowka, FamilyJson) {
  auto sets = skula::ev_sets_from_json(nlohmann::json::parse(
      R"({"sets": [{"period": 4, "residues": [1, 3], "delta": [3]}, {"period": 2, "residues": [0]}]})"));
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0], EvPeriodicSet(4, {1, 3}, {3}));
  EXPECT_EQ(skula::ev_sets_from_json(skula::ev_sets_to_json(sets)), sets);
  EXPECT_THROW(skula::ev_sets_from_json(nlohmann::json::parse(R"({"sets": [{"residues": [0]}]})")), skula::Error);
  EXPECT_THROW(skula::ev_sets_from_json(nlohmann::json::parse(R"({"sets": [{"period": 2, "residues": [-1]}]})")),
               skula::Error);
  EXPECT_THROW(skula::ev_sets_from_json(nlohmann::json::parse(R"([])")), skula::Error);
}
