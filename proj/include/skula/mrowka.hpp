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

// Almost disjoint families of eventually periodic subsets of N, the
// Mrowka space they define, the Fin+ (star) construction with its quotient
// join, and finite stages of a Lusin-type construction.

#ifndef SKULA_MROWKA_HPP_
#define SKULA_MROWKA_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "skula/error.hpp"

namespace skula {

// (residue classes mod period) xor delta
class EvPeriodicSet {
 public:
  EvPeriodicSet(std::uint64_t period, std::vector<std::uint64_t> residues, std::vector<std::uint64_t> delta = {})
      : period_(period), residues_(std::move(residues)), delta_(std::move(delta)) {
    if (period_ == 0) throw Error("period must be positive");
    if (period_ > (std::uint64_t{1} << 32)) throw Error("period exceeds 2^32");
    for (auto r : residues_) {
      if (r >= period_) throw Error("residue " + std::to_string(r) + " is not below period " + std::to_string(period_));
    }
    normalise(residues_);
    normalise(delta_);
  }

  static EvPeriodicSet progression(std::uint64_t period, std::uint64_t residue) {
    return EvPeriodicSet(period, {residue % period});
  }

  std::uint64_t period() const noexcept { return period_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
  const std::vector<std::uint64_t>& delta() const noexcept { return delta_; }

  bool periodic_contains(std::uint64_t n) const {
    return std::binary_search(residues_.begin(), residues_.end(), n % period_);
  }
  bool contains(std::uint64_t n) const {
    return periodic_contains(n) != std::binary_search(delta_.begin(), delta_.end(), n);
  }
  bool infinite() const noexcept { return !residues_.empty(); }

  // Least member >= x, if any.
  std::optional<std::uint64_t> next_member(std::uint64_t x) const {
    std::optional<std::uint64_t> best;
    for (auto it = std::lower_bound(delta_.begin(), delta_.end(), x); it != delta_.end(); ++it) {
      if (!periodic_contains(*it)) {
        best = *it;
        break;
      }
    }
    if (residues_.empty()) return best;
    std::uint64_t y = x;
    for (;;) {
      const std::uint64_t q = y / period_;
      auto r = std::lower_bound(residues_.begin(), residues_.end(), y % period_);
      y = r != residues_.end() ? q * period_ + *r : (q + 1) * period_ + residues_.front();
      if (best && y >= *best) return best;
      if (!std::binary_search(delta_.begin(), delta_.end(), y)) return y;
      ++y;
    }
  }

  // Members below n, in increasing order.
  std::vector<std::uint64_t> elements_below(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (contains(k)) out.push_back(k);
    }
    return out;
  }

  friend bool operator==(const EvPeriodicSet&, const EvPeriodicSet&) = default;

 private:
  static void normalise(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::uint64_t period_;
  std::vector<std::uint64_t> residues_;
  std::vector<std::uint64_t> delta_;
};

// A common residue class of the periodic parts: r mod modulus lies in both.
struct ResidueCertificate {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
};

inline std::optional<ResidueCertificate> common_residue(const EvPeriodicSet& a, const EvPeriodicSet& b) {
  using Wide = __int128;
  const std::uint64_t g = std::gcd(a.period(), b.period());
  const std::uint64_t mb = b.period() / g;
  const Wide l = static_cast<Wide>(a.period() / g) * b.period();
  // inverse of (a.period / g) mod mb by the extended Euclidean algorithm
  Wide old_r = static_cast<Wide>(a.period() / g) % mb, r = mb, old_s = 1, s = 0;
  while (r != 0) {
    const Wide q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  const Wide inv = ((old_s % static_cast<Wide>(mb)) + mb) % mb;
  for (auto ra : a.residues()) {
    for (auto rb : b.residues()) {
      if (ra % g != rb % g) continue;
      const Wide diff = ((static_cast<Wide>(rb) - ra) / static_cast<Wide>(g)) % static_cast<Wide>(mb);
      const Wide k = (((diff + mb) % mb) * inv) % static_cast<Wide>(mb);
      const Wide x = (ra + k * static_cast<Wide>(a.period())) % l;
      return ResidueCertificate{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(l)};
    }
  }
  return std::nullopt;
}

// A & B when it is finite, otherwise nothing.
inline std::optional<std::vector<std::uint64_t>> finite_intersection(const EvPeriodicSet& a, const EvPeriodicSet& b) {
  if (common_residue(a, b)) return std::nullopt;
  // periodic parts are disjoint, so only toggled points can be shared
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> cand;
  std::set_union(a.delta().begin(), a.delta().end(), b.delta().begin(), b.delta().end(), std::back_inserter(cand));
  for (auto n : cand) {
    if (a.contains(n) && b.contains(n)) out.push_back(n);
  }
  return out;
}

struct AdReport {
  std::size_t pairs = 0;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  ResidueCertificate certificate;
  bool pass() const { return !offending; }
};

inline AdReport ad_check(const std::vector<EvPeriodicSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].infinite()) throw Error("set " + std::to_string(i) + " is finite (no residues)");
  }
  AdReport r;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      ++r.pairs;
      if (auto c = common_residue(sets[i], sets[j])) {
        if (!r.offending) {
          r.offending = std::make_pair(i, j);
          r.certificate = *c;
        }
      }
    }
  }
  return r;
}

class ADFamily {
 public:
  ADFamily() = default;
  explicit ADFamily(std::vector<EvPeriodicSet> sets) : sets_(std::move(sets)) {
    auto r = ad_check(sets_);
    if (!r.pass()) {
      throw Error("sets " + std::to_string(r.offending->first) + " and " + std::to_string(r.offending->second) +
                  " share the residue class " + std::to_string(r.certificate.residue) + " mod " +
                  std::to_string(r.certificate.modulus));
    }
  }

  std::size_t size() const noexcept { return sets_.size(); }
  const EvPeriodicSet& operator[](std::size_t i) const { return sets_.at(i); }
  const std::vector<EvPeriodicSet>& sets() const noexcept { return sets_; }

 private:
  std::vector<EvPeriodicSet> sets_;
};

// {n : n mod 2^depth = r} for every r < 2^depth: the cones of the binary
// tree coding at that depth.
inline std::vector<EvPeriodicSet> prefix_class_family(int depth) {
  if (depth < 0 || depth > 20) throw Error("prefix class depth must lie in [0, 20]");
  const std::uint64_t p = std::uint64_t{1} << depth;
  std::vector<EvPeriodicSet> out;
  for (std::uint64_t r = 0; r < p; ++r) out.push_back(EvPeriodicSet::progression(p, r));
  return out;
}

inline std::vector<EvPeriodicSet> progression_family(std::uint64_t period, std::size_t count) {
  if (count > period) throw Error("at most period many residue classes exist");
  std::vector<EvPeriodicSet> out;
  for (std::size_t r = 0; r < count; ++r) out.push_back(EvPeriodicSet::progression(period, r));
  return out;
}

// Fin+ coding: a nonempty finite set sigma has code sum of 2^k over k in sigma.

inline constexpr int kMaxStarBits = 24;

struct StarReport {
  int bound = 0;                              // elements considered are < bound
  std::vector<std::vector<std::uint32_t>> codes;  // per branch, sorted
  std::size_t pairs = 0;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  bool pass() const { return !violation; }
};

inline std::vector<std::uint32_t> nonempty_submask_codes(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) out.push_back(s);
  std::reverse(out.begin(), out.end());
  return out;
}

inline StarReport star_truncation(const ADFamily& fam, int bound) {
  if (bound < 0 || bound > kMaxStarBits) {
    throw BoundError("star truncation element bound must lie in [0, " + std::to_string(kMaxStarBits) + "]");
  }
  StarReport r;
  r.bound = bound;
  auto mask_of = [bound](const std::vector<std::uint64_t>& xs) {
    std::uint32_t m = 0;
    for (auto x : xs) {
      if (x < static_cast<std::uint64_t>(bound)) m |= std::uint32_t{1} << x;
    }
    return m;
  };
  for (const auto& a : fam.sets()) r.codes.push_back(nonempty_submask_codes(mask_of(a.elements_below(bound))));
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      ++r.pairs;
      std::vector<std::uint32_t> shared;
      std::set_intersection(r.codes[i].begin(), r.codes[i].end(), r.codes[j].begin(), r.codes[j].end(),
                            std::back_inserter(shared));
      auto meet = finite_intersection(fam[i], fam[j]);
      if (!meet || shared != nonempty_submask_codes(mask_of(*meet))) {
        if (!r.violation) r.violation = std::make_pair(i, j);
      }
    }
  }
  return r;
}

// Points of the quotient G(K_A): nonempty finite sets, branches, and the top.

struct FinPt {
  std::vector<std::uint64_t> sigma;  // sorted, nonempty
  friend bool operator==(const FinPt&, const FinPt&) = default;
};
struct Branch {
  std::size_t index;
  friend bool operator==(const Branch&, const Branch&) = default;
};
struct Top {
  friend bool operator==(const Top&, const Top&) = default;
};

using GPoint = std::variant<FinPt, Branch, Top>;

inline GPoint fin_point(std::vector<std::uint64_t> sigma) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  if (sigma.empty()) throw Error("finite point must be a nonempty set");
  return FinPt{std::move(sigma)};
}

inline bool subset_of_branch(const std::vector<std::uint64_t>& sigma, const EvPeriodicSet& a) {
  return std::all_of(sigma.begin(), sigma.end(), [&](std::uint64_t n) { return a.contains(n); });
}

inline void require_point(const GPoint& x, const ADFamily& fam) {
  if (const auto* b = std::get_if<Branch>(&x); b && b->index >= fam.size()) {
    throw Error("branch index " + std::to_string(b->index) + " out of range");
  }
  if (const auto* f = std::get_if<FinPt>(&x); f && f->sigma.empty()) throw Error("finite point must be nonempty");
}

inline GPoint g_join(const GPoint& x, const GPoint& y, const ADFamily& fam) {
  require_point(x, fam);
  require_point(y, fam);
  if (std::holds_alternative<Top>(x) || std::holds_alternative<Top>(y)) return Top{};
  const auto* fx = std::get_if<FinPt>(&x);
  const auto* fy = std::get_if<FinPt>(&y);
  if (fx && fy) {
    std::vector<std::uint64_t> u;
    std::set_union(fx->sigma.begin(), fx->sigma.end(), fy->sigma.begin(), fy->sigma.end(), std::back_inserter(u));
    return FinPt{std::move(u)};
  }
  if (!fx && !fy) {
    return std::get<Branch>(x).index == std::get<Branch>(y).index ? x : GPoint{Top{}};
  }
  const FinPt& f = fx ? *fx : *fy;
  const Branch& b = fx ? std::get<Branch>(y) : std::get<Branch>(x);
  return subset_of_branch(f.sigma, fam[b.index]) ? GPoint{b} : GPoint{Top{}};
}

// x <= y in the quotient order
inline bool g_leq(const GPoint& x, const GPoint& y, const ADFamily& fam) { return g_join(x, y, fam) == y; }

inline std::string to_string(const GPoint& x) {
  if (const auto* f = std::get_if<FinPt>(&x)) {
    std::string out = "{";
    for (std::size_t i = 0; i < f->sigma.size(); ++i) out += (i ? "," : "") + std::to_string(f->sigma[i]);
    return out + "}";
  }
  if (const auto* b = std::get_if<Branch>(&x)) return "A" + std::to_string(b->index);
  return "inf";
}

// Nets sigma_n = A_i & [0,n) and tau_n = A_j & [0,n).
struct ConvergenceReport {
  std::size_t i = 0, j = 0;
  std::uint64_t horizon = 0;
  std::uint64_t threshold = 0;  // first n with both parts nonempty and the union in no branch
  std::uint64_t distinct_left = 0, distinct_right = 0;
  bool left_in_branch = true, right_in_branch = true;
  bool joins_escape = true;  // the union stays outside every branch from the threshold on
  bool pass() const { return left_in_branch && right_in_branch && joins_escape; }
};

inline ConvergenceReport convergence_check(const ADFamily& fam, std::size_t i, std::size_t j, std::uint64_t horizon) {
  if (i >= fam.size() || j >= fam.size()) throw Error("branch index out of range");
  if (i == j) throw Error("convergence check needs two distinct branches");
  ConvergenceReport r;
  r.i = i;
  r.j = j;
  r.horizon = horizon;
  std::vector<std::uint64_t> sigma, tau;
  std::optional<std::uint64_t> threshold;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    const std::uint64_t k = n - 1;
    if (fam[i].contains(k)) {
      sigma.push_back(k);
      ++r.distinct_left;
    }
    if (fam[j].contains(k)) {
      tau.push_back(k);
      ++r.distinct_right;
    }
    if (sigma.empty() || tau.empty()) continue;
    r.left_in_branch = r.left_in_branch && subset_of_branch(sigma, fam[i]);
    r.right_in_branch = r.right_in_branch && subset_of_branch(tau, fam[j]);
    GPoint joined = g_join(FinPt{sigma}, FinPt{tau}, fam);
    const auto& u = std::get<FinPt>(joined).sigma;
    bool escaped = true;
    for (const auto& a : fam.sets()) escaped = escaped && !subset_of_branch(u, a);
    if (escaped && !threshold) threshold = n;
    if (threshold && !escaped) r.joins_escape = false;
  }
  if (!threshold) {
    throw BoundError("horizon " + std::to_string(horizon) + " too small to certify branches " + std::to_string(i) +
                     " and " + std::to_string(j));
  }
  r.threshold = *threshold;
  return r;
}

// Selector {{n}} u {A u {A}} u {everything} on the truncated Mrowka space.
struct MrowkaSelectorReport {
  std::uint64_t truncation = 0;
  bool cond1 = true, cond2 = true, cond3 = true;
  bool order_matches = true;
  bool clopen = true;     // each A u {A} is closed: no other branch meets A infinitely
  bool canonical = true;  // U_A has height 1 with end-point A, U_inf height 2 with end-point inf
  std::string witness;
  bool pass() const { return cond1 && cond2 && cond3 && order_matches && clopen && canonical; }
};

inline MrowkaSelectorReport mrowka_selector_check(const std::vector<EvPeriodicSet>& sets, std::uint64_t truncation) {
  MrowkaSelectorReport r;
  r.truncation = truncation;
  const std::size_t m = sets.size();
  const std::size_t npts = truncation + m + 1;
  // point layout: naturals, then branches, then inf
  auto name = [&](std::size_t x) {
    if (x < truncation) return std::to_string(x);
    if (x < truncation + m) return "A" + std::to_string(x - truncation);
    return std::string("inf");
  };
  auto in_u = [&](std::size_t x, std::size_t y) {  // x in U_y
    if (y < truncation) return x == y;
    if (y < truncation + m) {
      const auto& a = sets[y - truncation];
      return x == y || (x < truncation && a.contains(x));
    }
    return true;
  };
  auto expected_leq = [&](std::size_t x, std::size_t y) {
    if (x == y || y == npts - 1) return true;
    return x < truncation && y >= truncation && y < truncation + m && sets[y - truncation].contains(x);
  };
  auto note = [&](bool& flag, const std::string& w) {
    if (flag && r.witness.empty()) r.witness = w;
    flag = false;
  };
  for (std::size_t x = 0; x < npts; ++x) {
    if (!in_u(x, x)) note(r.cond1, name(x) + " not in its own set");
    for (std::size_t y = 0; y < npts; ++y) {
      if (x != y && in_u(x, y) && in_u(y, x)) note(r.cond2, name(x) + " and " + name(y) + " contain each other");
      if (in_u(x, y)) {
        for (std::size_t z = 0; z < npts; ++z) {
          if (in_u(z, x) && !in_u(z, y)) {
            note(r.cond3, name(z) + " in U_" + name(x) + " but not in U_" + name(y));
            break;
          }
        }
      }
      if (in_u(x, y) != expected_leq(x, y)) note(r.order_matches, "order differs at " + name(x) + ", " + name(y));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!sets[i].infinite()) note(r.canonical, "A" + std::to_string(i) + " is finite, so U_A has height 0");
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (auto c = common_residue(sets[i], sets[j])) {
        note(r.clopen, "A" + std::to_string(j) + " lies in the closure of U_A" + std::to_string(i) + " (common class " +
                           std::to_string(c->residue) + " mod " + std::to_string(c->modulus) + ")");
      }
    }
  }
  if (m == 0) note(r.canonical, "no branches, so U_inf has height 1");
  return r;
}

// Lusin stages. A generated set is known on a finite part; the rest of it
// (its picks from sets not yet enumerated) is a deferred tail that lies
// outside every set present when it was built.

struct GeneratedSet {
  std::vector<std::uint64_t> known;  // sorted
  std::vector<std::size_t> block_sizes;  // picks per enumerated set, in enumeration order
};

using LusinSet = std::variant<EvPeriodicSet, GeneratedSet>;

inline bool lusin_contains(const LusinSet& s, std::uint64_t n) {
  if (const auto* e = std::get_if<EvPeriodicSet>(&s)) return e->contains(n);
  const auto& g = std::get<GeneratedSet>(s).known;
  return std::binary_search(g.begin(), g.end(), n);
}

struct LusinStageReport {
  GeneratedSet set;
  std::vector<std::size_t> counts;  // |A & B_n \ (B_0 u ... u B_{n-1})| recounted
  bool l2_exact = true;
  // for every k, #{n : A & B_n within [0,k)} <= k + 1
  bool l1_bounded = true;
  std::uint64_t l1_worst_k = 0;
  std::size_t l1_worst_count = 0;
  bool pass() const { return l2_exact && l1_bounded; }
};

inline constexpr std::uint64_t kLusinScanLimit = std::uint64_t{1} << 32;

inline LusinStageReport lusin_stage(const std::vector<LusinSet>& prev) {
  std::vector<EvPeriodicSet> periodic;
  for (const auto& s : prev) {
    if (const auto* e = std::get_if<EvPeriodicSet>(&s)) periodic.push_back(*e);
  }
  auto ad = ad_check(periodic);
  if (!ad.pass()) throw Error("Lusin stage input is not almost disjoint");

  auto fresh = [&](std::size_t n, std::uint64_t x) {
    if (!lusin_contains(prev[n], x)) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (lusin_contains(prev[k], x)) return false;
    }
    return true;
  };

  LusinStageReport r;
  for (std::size_t n = 0; n < prev.size(); ++n) {
    std::size_t got = 0;
    if (const auto* g = std::get_if<GeneratedSet>(&prev[n])) {
      for (auto x : g->known) {
        if (got == n) break;
        if (fresh(n, x)) {
          r.set.known.push_back(x);
          ++got;
        }
      }
    } else {
      const auto& e = std::get<EvPeriodicSet>(prev[n]);
      for (auto x = e.next_member(0); x && got < n; x = e.next_member(*x + 1)) {
        if (*x >= kLusinScanLimit) throw Error("scan limit reached while picking from set " + std::to_string(n));
        if (fresh(n, *x)) {
          r.set.known.push_back(*x);
          ++got;
        }
      }
    }
    if (got < n) {
      throw Error("set " + std::to_string(n) + " has only " + std::to_string(got) + " fresh points, " +
                  std::to_string(n) + " needed");
    }
    r.set.block_sizes.push_back(got);
  }
  std::sort(r.set.known.begin(), r.set.known.end());

  // recount: a point is fresh exactly for the first set containing it
  r.counts.assign(prev.size(), 0);
  std::vector<std::uint64_t> max_meet(prev.size(), 0);  // 1 + largest common point, 0 if none
  for (auto x : r.set.known) {
    bool first = true;
    for (std::size_t n = 0; n < prev.size(); ++n) {
      if (!lusin_contains(prev[n], x)) continue;
      if (first) ++r.counts[n];
      first = false;
      max_meet[n] = x + 1;
    }
  }
  for (std::size_t n = 0; n < prev.size(); ++n) r.l2_exact = r.l2_exact && r.counts[n] == n;
  // the count only changes where some max_meet value sits
  std::vector<std::uint64_t> sorted_meet = max_meet;
  std::sort(sorted_meet.begin(), sorted_meet.end());
  for (std::size_t idx = 0; idx < sorted_meet.size(); ++idx) {
    const std::uint64_t k = sorted_meet[idx];
    const auto count = static_cast<std::size_t>(
        std::upper_bound(sorted_meet.begin(), sorted_meet.end(), k) - sorted_meet.begin());
    if (count > r.l1_worst_count) {
      r.l1_worst_count = count;
      r.l1_worst_k = k;
    }
    if (count > k + 1) r.l1_bounded = false;
  }
  return r;
}

struct LusinChainReport {
  std::vector<LusinStageReport> stages;
  bool pass() const {
    return std::all_of(stages.begin(), stages.end(), [](const LusinStageReport& s) { return s.pass(); });
  }
};

// Each stage enumerates the generated sets oldest first, then the base.
inline LusinChainReport lusin_chain(const std::vector<EvPeriodicSet>& base, std::size_t stages) {
  LusinChainReport r;
  std::vector<GeneratedSet> made;
  for (std::size_t s = 0; s < stages; ++s) {
    std::vector<LusinSet> prev;
    for (const auto& g : made) prev.emplace_back(g);
    for (const auto& b : base) prev.emplace_back(b);
    r.stages.push_back(lusin_stage(prev));
    made.push_back(r.stages.back().set);
  }
  return r;
}

// JSON

inline nlohmann::json ev_set_to_json(const EvPeriodicSet& s) {
  return nlohmann::json{{"period", s.period()}, {"residues", s.residues()}, {"delta", s.delta()}};
}

inline std::vector<std::uint64_t> json_naturals(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw Error("family JSON: field '" + field + "' must be an array of naturals");
  std::vector<std::uint64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw Error("family JSON: field '" + field + "' must contain naturals");
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

inline std::vector<EvPeriodicSet> ev_sets_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array()) {
    throw Error("family JSON: field 'sets' must be an array");
  }
  std::vector<EvPeriodicSet> out;
  for (const auto& s : j["sets"]) {
    if (!s.is_object()) throw Error("family JSON: each entry of 'sets' must be an object");
    if (!s.contains("period") || !s["period"].is_number_unsigned()) {
      throw Error("family JSON: field 'period' must be a positive natural");
    }
    if (!s.contains("residues")) throw Error("family JSON: field 'residues' is required");
    out.emplace_back(s["period"].get<std::uint64_t>(), json_naturals(s["residues"], "residues"),
                     s.contains("delta") ? json_naturals(s["delta"], "delta") : std::vector<std::uint64_t>{});
  }
  return out;
}

inline nlohmann::json ev_sets_to_json(const std::vector<EvPeriodicSet>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : sets) arr.push_back(ev_set_to_json(s));
  return nlohmann::json{{"sets", arr}};
}

}  // namespace skula

#endif  // SKULA_MROWKA_HPP_
