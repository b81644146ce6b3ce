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

#include <set>

#include "oracles.hpp"
#include "skula/poset.hpp"
#include "skula/random.hpp"

using skula::DownSet;
using skula::ElementSet;
using skula::FinitePoset;

namespace {

oracle::MaskPoset to_masks(const FinitePoset& p) {
  oracle::MaskPoset m;
  m.n = p.size();
  for (int x = 0; x < p.size(); ++x) {
    m.below.push_back(static_cast<std::uint32_t>(p.strictly_below(x).bits()));
  }
  return m;
}

// Reachability along the declared cover pairs, computed by DFS.
bool reachable(int n, const std::vector<std::pair<int, int>>& edges, int from, int to) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    if (seen[x]) continue;
    seen[x] = true;
    for (auto [a, b] : edges) {
      if (a == x) stack.push_back(b);
    }
  }
  return false;
}

FinitePoset fence4() {
  return FinitePoset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "b"}, {"c", "d"}});
}

FinitePoset crown4() {
  return FinitePoset::from_covers({"a", "b", "c", "d", "w", "x", "y", "z"},
                                  {{"a", "w"}, {"a", "x"}, {"b", "x"}, {"b", "y"},
                                   {"c", "y"}, {"c", "z"}, {"d", "z"}, {"d", "w"}});
}

}  // namespace

TEST(Poset, FromCovers) {
  auto one = FinitePoset::from_covers({"a"}, {});
  EXPECT_EQ(one.size(), 1);
  auto v = FinitePoset::from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  EXPECT_TRUE(v.less(0, 2));
  EXPECT_TRUE(v.less(1, 2));
  EXPECT_FALSE(v.comparable(0, 1));
  EXPECT_THROW(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), skula::Error);
  EXPECT_THROW(FinitePoset::from_covers({"a", "a"}, {}), skula::Error);
  EXPECT_THROW(FinitePoset::from_covers({"a"}, {{"a", "q"}}), skula::Error);
}

TEST(Poset, PrincipalSets) {
  auto anti = skula::antichain_poset(3);
  auto ps = skula::principal_sets(anti, 1);
  EXPECT_EQ(ps.down.members(), ElementSet::singleton(1));
  EXPECT_EQ(ps.up, ElementSet::singleton(1));

  auto chain = skula::chain_poset(3);
  ps = skula::principal_sets(chain, 1);
  EXPECT_EQ(ps.down.members().bits(), 0b011u);
  EXPECT_EQ(ps.up.bits(), 0b110u);

  std::vector<std::pair<int, int>> edges{{0, 2}, {1, 2}};
  auto v = FinitePoset::from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  for (int x = 0; x < 3; ++x) {
    auto s = skula::principal_sets(v, x);
    for (int y = 0; y < 3; ++y) {
      EXPECT_EQ(s.down.members().contains(y), reachable(3, edges, y, x));
      EXPECT_EQ(s.up.contains(y), reachable(3, edges, x, y));
    }
  }
  EXPECT_THROW(skula::principal_sets(v, 7), skula::Error);
}

TEST(Poset, Extremal) {
  auto chain = skula::chain_poset(3);
  auto e = skula::extremal(chain, ElementSet());
  EXPECT_TRUE(e.max.empty());
  EXPECT_TRUE(e.min.empty());
  EXPECT_TRUE(e.is_antichain);
  e = skula::extremal(chain, ElementSet::from_bits(0b101));
  EXPECT_EQ(e.max, ElementSet::singleton(2));
  EXPECT_EQ(e.min, ElementSet::singleton(0));
  EXPECT_FALSE(e.is_antichain);

  auto crown = crown4();
  for (std::uint64_t s = 0; s < 256; ++s) {
    auto got = skula::extremal(crown, ElementSet::from_bits(s));
    bool anti = true;
    for (int x = 0; x < 8; ++x) {
      if (!(s >> x & 1)) continue;
      bool is_max = true, is_min = true;
      for (int y = 0; y < 8; ++y) {
        if (!(s >> y & 1) || y == x) continue;
        if (crown.less(x, y)) is_max = false;
        if (crown.less(y, x)) is_min = false;
        if (crown.comparable(x, y)) anti = false;
      }
      ASSERT_EQ(got.max.contains(x), is_max);
      ASSERT_EQ(got.min.contains(x), is_min);
    }
    ASSERT_EQ(got.is_antichain, anti);
  }
}

TEST(Poset, Ranks) {
  auto anti = skula::antichain_poset(5);
  auto r = skula::ranks(anti);
  for (auto v : r.element) EXPECT_EQ(v, 0u);
  EXPECT_EQ(r.poset, 1u);
  auto chain = skula::chain_poset(6);
  r = skula::ranks(chain);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(r.element[i], static_cast<std::uint64_t>(i));
  EXPECT_EQ(r.poset, 6u);
  EXPECT_EQ(skula::ranks(FinitePoset()).poset, 0u);

  skula::Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    auto p = skula::random_poset(rng, 8, 0.3);
    auto got = skula::ranks(p);
    auto want = oracle::element_ranks_by_paths(to_masks(p));
    for (int x = 0; x < 8; ++x) ASSERT_EQ(got.element[x], static_cast<std::uint64_t>(want[x]));
  }
}

TEST(Poset, Width) {
  EXPECT_EQ(skula::width(skula::chain_poset(7)).width, 1);
  EXPECT_EQ(skula::width(skula::antichain_poset(6)).width, 6);
  EXPECT_EQ(skula::width(crown4()).width, 4);
  skula::Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    auto p = skula::random_poset(rng, 10, 0.25);
    auto rep = skula::width(p);
    ASSERT_EQ(rep.width, oracle::max_antichain_by_subsets(to_masks(p)));
    ElementSet covered;
    for (const auto& c : rep.chains) {
      for (std::size_t i = 0; i + 1 < c.size(); ++i) ASSERT_TRUE(p.less(c[i], c[i + 1]));
      for (int x : c) {
        ASSERT_FALSE(covered.contains(x));
        covered = covered.with(x);
      }
    }
    ASSERT_EQ(covered, p.all());
  }
}

TEST(Poset, DownsetLattice) {
  auto b3 = skula::downset_lattice(skula::antichain_poset(3));
  EXPECT_EQ(b3.size(), 8);
  EXPECT_EQ(skula::width(b3).width, 3);
  auto c4 = skula::downset_lattice(skula::chain_poset(3));
  EXPECT_EQ(c4.size(), 4);
  EXPECT_EQ(skula::width(c4).width, 1);
  EXPECT_EQ(c4.label(0), "{}");
  EXPECT_EQ(c4.label(3), "{a,b,c}");

  auto fence = fence4();
  EXPECT_EQ(skula::enumerate_downsets(fence).size(),
            oracle::all_downsets(to_masks(fence)).size());
  EXPECT_EQ(skula::downset_lattice(fence).size(), 8);

  EXPECT_THROW(skula::downset_lattice(skula::antichain_poset(7)), skula::BoundError);
  EXPECT_THROW(skula::enumerate_downsets(skula::antichain_poset(21)), skula::BoundError);
}

TEST(Poset, DownsetEnumerationMatchesFilter) {
  skula::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto p = skula::random_poset(rng, static_cast<int>(skula::uniform(rng, 1, 12)), 0.2);
    auto got = skula::enumerate_downsets(p);
    std::set<std::uint64_t> a;
    for (auto d : got) a.insert(d.members().bits());
    ASSERT_EQ(a.size(), got.size());
    std::set<std::uint64_t> b;
    for (auto s : oracle::all_downsets(to_masks(p))) b.insert(s);
    ASSERT_EQ(a, b);
  }
}

TEST(Poset, KwRank) {
  auto one = skula::antichain_poset(1);
  EXPECT_EQ(skula::kw_rank(one).of(ElementSet::singleton(0)), 0u);
  for (int n = 1; n <= 6; ++n) {
    auto kr = skula::kw_rank(skula::antichain_poset(n));
    EXPECT_EQ(kr.of(ElementSet::first(n)), static_cast<std::uint32_t>(n - 1));
    auto kc = skula::kw_rank(skula::chain_poset(n));
    EXPECT_EQ(kc.of(ElementSet::first(n)), static_cast<std::uint32_t>(n - 1));
  }
  EXPECT_THROW(skula::kw_rank(FinitePoset()), skula::Error);

  skula::Rng rng(4);
  for (int t = 0; t < 150; ++t) {
    auto p = skula::random_poset(rng, static_cast<int>(skula::uniform(rng, 1, 9)), 0.3);
    auto kr = skula::kw_rank(p);
    auto want = oracle::kw_rank_by_chains(to_masks(p));
    for (auto d : kr.downsets()) {
      ASSERT_EQ(static_cast<int>(kr.of(d)), want[d.members().bits()]);
    }
  }
}

TEST(Poset, Zaguia) {
  auto chain = skula::zaguia_verify(skula::chain_poset(4));
  EXPECT_TRUE(chain.pass());
  EXPECT_FALSE(chain.witness.has_value());

  auto anti = skula::zaguia_verify(skula::antichain_poset(4));
  EXPECT_TRUE(anti.pass());
  EXPECT_FALSE(anti.witness.has_value());
  EXPECT_EQ(anti.lattice_rank, 4u);
  // the unshifted reading fails on {a} u {b}
  EXPECT_FALSE(anti.literal_union_subadditive);
  EXPECT_FALSE(anti.literal_max_decomposition);
  ASSERT_TRUE(anti.literal_witness.has_value());

  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : skula::all_labeled_posets(n)) {
      auto rep = skula::zaguia_verify(p);
      ASSERT_TRUE(rep.pass()) << rep.witness->check;
      ASSERT_EQ(rep.witness.has_value(), !rep.pass());
    }
  }
}

TEST(Poset, LabeledCounts) {
  // number of labelled posets: 1, 1, 3, 19, 219, 4231
  const std::size_t want[] = {1, 1, 3, 19, 219, 4231};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(skula::all_labeled_posets(n).size(), want[n]);
}

TEST(Poset, StructuralProperties) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : skula::all_labeled_posets(n)) {
      auto ds = skula::enumerate_downsets(p);
      for (auto d : ds) {
        // I = down(Max I)
        auto mx = skula::extremal(p, d.members()).max;
        ASSERT_EQ(p.down_closure(mx), d);
        // the complement is final and equals up(Min) of itself
        ElementSet f = p.all() - d.members();
        ASSERT_TRUE(p.is_upset(f));
        ASSERT_EQ(p.up_closure(skula::extremal(p, f).min), f);
      }
      // Priestley separation: x not <= y gives an upset with x but not y
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (p.less_equal(x, y)) continue;
          ElementSet up = skula::principal_sets(p, x).up;
          ASSERT_TRUE(up.contains(x) && !up.contains(y));
        }
      }
    }
  }
}

TEST(Poset, Json) {
  auto p = skula::parse_poset_json(R"({"elements":["a","b","c"],"covers":[["a","c"],["b","c"]]})");
  EXPECT_EQ(p.size(), 3);
  EXPECT_TRUE(p.less(0, 2));
  auto back = skula::poset_from_json(skula::poset_to_json(p));
  for (int x = 0; x < 3; ++x) EXPECT_EQ(back.strictly_below(x), p.strictly_below(x));
  EXPECT_THROW(skula::parse_poset_json("{"), skula::ParseError);
  EXPECT_THROW(skula::parse_poset_json(R"({"covers":[]})"), skula::Error);
  EXPECT_THROW(skula::parse_poset_json(R"({"elements":["a"],"covers":[["a"]]})"), skula::Error);
}

TEST(Poset, Dot) {
  auto p = FinitePoset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::string dot = skula::poset_to_dot(p);
  EXPECT_NE(dot.find("\"a\" -> \"b\""), std::string::npos);
  EXPECT_NE(dot.find("\"b\" -> \"c\""), std::string::npos);
  EXPECT_EQ(dot.find("\"a\" -> \"c\""), std::string::npos);
}
