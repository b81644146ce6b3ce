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

// Clopen subsets of the ordinal space [0, alpha] as finite unions of
// half-open intervals (s, t], plus a flag for the isolated point 0.

#ifndef SKULA_CLOPEN_HPP_
#define SKULA_CLOPEN_HPP_

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skula/error.hpp"
#include "skula/ordinal.hpp"

namespace skula {

struct Interval {
  Ordinal s;  // exclusive
  Ordinal t;  // inclusive
  friend bool operator==(const Interval&, const Interval&) = default;
};

class ClopenSet {
 public:
  // Pieces are normalised: empty ones dropped, overlapping or adjacent
  // ones merged. Throws if a piece leaves [0, alpha].
  ClopenSet(Ordinal alpha, bool zero_included, std::vector<Interval> pieces)
      : alpha_(std::move(alpha)), zero_(zero_included) {
    for (auto& p : pieces) {
      if (p.t > alpha_) throw Error("interval end " + to_string(p.t) + " exceeds " + to_string(alpha_));
    }
    std::vector<Interval> kept;
    for (auto& p : pieces) {
      if (p.s < p.t) kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) { return a.s < b.s; });
    for (auto& p : kept) {
      if (!pieces_.empty() && p.s <= pieces_.back().t) {
        if (p.t > pieces_.back().t) pieces_.back().t = p.t;
      } else {
        pieces_.push_back(std::move(p));
      }
    }
  }

  static ClopenSet empty_set(Ordinal alpha) { return ClopenSet(std::move(alpha), false, {}); }
  static ClopenSet whole(Ordinal alpha) {
    Ordinal a = alpha;
    return ClopenSet(std::move(alpha), true, {Interval{Ordinal(), std::move(a)}});
  }

  const Ordinal& alpha() const noexcept { return alpha_; }
  bool zero_included() const noexcept { return zero_; }
  const std::vector<Interval>& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return !zero_ && pieces_.empty(); }

  bool contains(const Ordinal& x) const {
    if (x > alpha_) return false;
    if (x.is_zero()) return zero_;
    for (const auto& p : pieces_) {
      if (p.s < x && x <= p.t) return true;
    }
    return false;
  }

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  Ordinal alpha_;
  bool zero_ = false;
  std::vector<Interval> pieces_;
};

inline void require_same_ambient(const ClopenSet& a, const ClopenSet& b) {
  if (a.alpha() != b.alpha()) {
    throw Error("ambient mismatch: " + to_string(a.alpha()) + " vs " + to_string(b.alpha()));
  }
}

inline ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b) {
  require_same_ambient(a, b);
  std::vector<Interval> all = a.pieces();
  all.insert(all.end(), b.pieces().begin(), b.pieces().end());
  return ClopenSet(a.alpha(), a.zero_included() || b.zero_included(), std::move(all));
}

inline ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b) {
  require_same_ambient(a, b);
  std::vector<Interval> out;
  for (const auto& p : a.pieces()) {
    for (const auto& q : b.pieces()) {
      const Ordinal& s = std::max(p.s, q.s);
      const Ordinal& t = std::min(p.t, q.t);
      if (s < t) out.push_back(Interval{s, t});
    }
  }
  return ClopenSet(a.alpha(), a.zero_included() && b.zero_included(), std::move(out));
}

inline ClopenSet clopen_complement(const ClopenSet& a) {
  std::vector<Interval> out;
  Ordinal cur;
  for (const auto& p : a.pieces()) {
    if (cur < p.s) out.push_back(Interval{cur, p.s});
    cur = p.t;
  }
  if (cur < a.alpha()) out.push_back(Interval{cur, a.alpha()});
  return ClopenSet(a.alpha(), !a.zero_included(), std::move(out));
}

inline bool clopen_subset(const ClopenSet& a, const ClopenSet& b) {
  return clopen_intersect(a, b) == a;
}

// ---------------------------------------------------------------------------
// Cantor-Bendixson data

// The points delta + w^exponent * k for k_lo <= k <= k_hi.
struct EndpointRun {
  Ordinal delta;
  Ordinal exponent;
  Natural k_lo;
  Natural k_hi;
};

struct CbReport {
  Ordinal height;
  std::vector<EndpointRun> runs;
  Natural endpoint_count;
  bool unitary = false;
  std::optional<Ordinal> lastpt;

  // Lists the endpoints, at most `limit` of them.
  std::vector<Ordinal> endpoints(std::size_t limit = 64) const {
    std::vector<Ordinal> out;
    for (const auto& r : runs) {
      for (Natural k = r.k_lo; k <= r.k_hi && out.size() < limit; ++k) {
        out.push_back(r.delta + Ordinal::omega_power(r.exponent, k));
      }
    }
    return out;
  }
};

namespace detail {

// Height and endpoints of one piece (s, t], s < t.
inline std::pair<Ordinal, EndpointRun> piece_cb(const Ordinal& s, const Ordinal& t) {
  const auto& ts = t.terms();
  const auto& ss = s.terms();
  std::size_t i = 0;
  while (i < ts.size() && i < ss.size() && ts[i].exponent == ss[i].exponent &&
         ts[i].coefficient == ss[i].coefficient) {
    ++i;
  }
  std::vector<Ordinal::Term> prefix(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(i));
  Ordinal delta = Ordinal::from_terms(std::move(prefix));
  // s < t, so t has a term at position i
  const Ordinal& a = ts[i].exponent;
  const Natural& p = ts[i].coefficient;
  Natural lo = 1;
  if (i < ss.size() && ss[i].exponent == a) lo = ss[i].coefficient + 1;
  return {a, EndpointRun{std::move(delta), a, lo, p}};
}

}  // namespace detail

inline CbReport clopen_cb(const ClopenSet& u) {
  if (u.empty()) throw Error("Cantor-Bendixson data of the empty set is undefined");
  CbReport rep;
  std::vector<std::pair<Ordinal, EndpointRun>> all;
  for (const auto& p : u.pieces()) all.push_back(detail::piece_cb(p.s, p.t));
  for (const auto& [h, run] : all) rep.height = std::max(rep.height, h);
  if (u.zero_included() && rep.height.is_zero()) {
    rep.runs.push_back(EndpointRun{Ordinal(), Ordinal(), 0, 0});
  }
  for (auto& [h, run] : all) {
    if (h == rep.height) rep.runs.push_back(std::move(run));
  }
  rep.endpoint_count = 0;
  for (const auto& r : rep.runs) rep.endpoint_count += r.k_hi - r.k_lo + 1;
  rep.unitary = rep.endpoint_count == 1;
  if (rep.unitary) rep.lastpt = rep.endpoints(1).front();
  return rep;
}

// ---------------------------------------------------------------------------
// The tip selector and its checks

// U_b = (b - tip(b), b], and {0} for b = 0.
inline ClopenSet tip_selector(const Ordinal& beta, const Ordinal& alpha) {
  if (beta > alpha) throw Error(to_string(beta) + " is outside [0, " + to_string(alpha) + "]");
  if (beta.is_zero()) return ClopenSet(alpha, true, {});
  return ClopenSet(alpha, false, {Interval{drop_tip(beta), beta}});
}

struct TreelikeReport {
  bool canonical = true;  // each U_b unitary with lastpt b, height = tip exponent
  bool laminar = true;    // nested or disjoint
  bool heights_increase = true;
  std::string witness;
  bool pass() const { return canonical && laminar && heights_increase; }
};

inline TreelikeReport treelike_check(const Ordinal& alpha, const std::vector<Ordinal>& points) {
  for (const auto& b : points) {
    if (b > alpha) throw Error(to_string(b) + " is outside [0, " + to_string(alpha) + "]");
  }
  TreelikeReport rep;
  std::vector<ClopenSet> sets;
  std::vector<CbReport> cbs;
  for (const auto& b : points) {
    sets.push_back(tip_selector(b, alpha));
    cbs.push_back(clopen_cb(sets.back()));
    const auto& cb = cbs.back();
    if (!cb.unitary || !cb.lastpt || *cb.lastpt != b || cb.height != point_height(b)) {
      rep.canonical = false;
      if (rep.witness.empty()) rep.witness = "U_" + to_string(b) + " is not unitary at its point";
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      const ClopenSet meet = clopen_intersect(sets[i], sets[j]);
      const bool nested = meet == sets[i] || meet == sets[j];
      if (!meet.empty() && !nested) {
        rep.laminar = false;
        if (rep.witness.empty()) {
          rep.witness = "U_" + to_string(points[i]) + " and U_" + to_string(points[j]) + " overlap";
        }
      }
      if (meet == sets[i] && sets[i] != sets[j] && !(cbs[i].height < cbs[j].height)) {
        rep.heights_increase = false;
        if (rep.witness.empty()) rep.witness = "height does not increase into U_" + to_string(points[j]);
      }
    }
  }
  return rep;
}

// 0, b, b+1 (when <= alpha) and for every CNF term i of b with prefix
// delta_i: delta_i, delta_i + w^e_i (p_i - 1), delta_i + w^e_i p_i.
inline std::vector<Ordinal> truncation_grid(const Ordinal& beta, const Ordinal& alpha) {
  std::vector<Ordinal> grid{Ordinal(), beta};
  if (beta + Ordinal(1) <= alpha) grid.push_back(beta + Ordinal(1));
  std::vector<Ordinal::Term> prefix;
  for (const auto& t : beta.terms()) {
    const Ordinal delta = Ordinal::from_terms(prefix);
    grid.push_back(delta);
    grid.push_back(delta + Ordinal::omega_power(t.exponent, t.coefficient - 1));
    grid.push_back(delta + Ordinal::omega_power(t.exponent, t.coefficient));
    prefix.push_back(t);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

struct MinClopenResult {
  ClopenSet set;
  std::size_t pieces = 0;
  bool matches_tip_selector = false;
  bool grid_has_tip_endpoints = false;
};

// Among clopen sets whose interval endpoints come from `grid` and whose
// Endpt is {b}, the one with fewest pieces whose endpoint sequence is
// lexicographically least.
inline MinClopenResult min_clopen_with_endpoint(const Ordinal& beta, const Ordinal& alpha,
                                                std::vector<Ordinal> grid) {
  if (beta > alpha) throw Error(to_string(beta) + " is outside [0, " + to_string(alpha) + "]");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  grid.erase(std::remove_if(grid.begin(), grid.end(), [&](const Ordinal& g) { return g > alpha; }),
             grid.end());
  const ClopenSet tip = tip_selector(beta, alpha);
  const bool has_tip =
      beta.is_zero() || (std::binary_search(grid.begin(), grid.end(), drop_tip(beta)) &&
                         std::binary_search(grid.begin(), grid.end(), beta));

  auto finish = [&](ClopenSet set, std::size_t pieces) {
    MinClopenResult r{std::move(set), pieces, false, has_tip};
    r.matches_tip_selector = r.set == tip;
    if (has_tip && !r.matches_tip_selector) {
      throw Error("internal error: minimal clopen set differs from the tip selector");
    }
    return r;
  };
  if (beta.is_zero()) return finish(tip, 0);

  const std::size_t g = grid.size();
  for (std::size_t ell = 1; 2 * ell <= g; ++ell) {
    const std::size_t len = 2 * ell;
    std::vector<std::size_t> idx(len);
    for (std::size_t i = 0; i < len; ++i) idx[i] = i;
    for (;;) {
      std::vector<Interval> pieces;
      for (std::size_t i = 0; i < ell; ++i) pieces.push_back(Interval{grid[idx[2 * i]], grid[idx[2 * i + 1]]});
      ClopenSet u(alpha, false, pieces);
      // a normalised set with fewer pieces was already seen at a smaller ell
      if (u.pieces().size() == ell) {
        const CbReport cb = clopen_cb(u);
        if (cb.unitary && *cb.lastpt == beta) return finish(std::move(u), ell);
      }
      // next combination in lexicographic order
      std::size_t k = len;
      while (k > 0 && idx[k - 1] == g - len + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < len; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error("no clopen set on the grid has " + to_string(beta) + " as its only endpoint");
}

// ---------------------------------------------------------------------------
// Text and JSON forms: "{0} (s1,t1] (s2,t2] @ alpha", "{} @ alpha"

inline std::string to_string(const ClopenSet& u) {
  std::string out;
  if (u.zero_included()) out += "{0}";
  for (const auto& p : u.pieces()) {
    if (!out.empty()) out += " ";
    out += "(" + to_string(p.s) + ", " + to_string(p.t) + "]";
  }
  if (out.empty()) out = "{}";
  return out + " @ " + to_string(u.alpha());
}

inline ClopenSet parse_clopen(const std::string& text) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) throw ParseError("clopen set needs '@ alpha'", text.size());
  Ordinal alpha;
  try {
    alpha = parse_ordinal(std::string_view(text).substr(at + 1));
  } catch (const ParseError& e) {
    throw ParseError(std::string("clopen ambient: ") + e.what(), at + 1 + e.position());
  }
  bool zero = false;
  std::vector<Interval> pieces;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < at && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto ordinal_until = [&](char stop) {
    const std::size_t start = pos;
    int depth = 0;
    while (pos < at) {
      char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && c == stop) break;
      ++pos;
    }
    if (pos >= at) throw ParseError(std::string("expected '") + stop + "'", pos);
    try {
      return parse_ordinal(std::string_view(text).substr(start, pos - start));
    } catch (const ParseError& e) {
      throw ParseError(std::string("clopen interval: ") + e.what(), start + e.position());
    }
  };
  for (skip(); pos < at; skip()) {
    if (text.compare(pos, 3, "{0}") == 0) {
      zero = true;
      pos += 3;
    } else if (text.compare(pos, 2, "{}") == 0) {
      pos += 2;
    } else if (text[pos] == '(') {
      ++pos;
      Ordinal s = ordinal_until(',');
      ++pos;
      Ordinal t = ordinal_until(']');
      ++pos;
      if (!(s < t)) throw ParseError("interval (s, t] needs s < t", pos);
      pieces.push_back(Interval{std::move(s), std::move(t)});
    } else {
      throw ParseError("expected '{0}' or '(s, t]'", pos);
    }
  }
  return ClopenSet(std::move(alpha), zero, std::move(pieces));
}

inline nlohmann::json clopen_to_json(const ClopenSet& u) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : u.pieces()) pieces.push_back({to_string(p.s), to_string(p.t)});
  return nlohmann::json{{"zero", u.zero_included()}, {"intervals", pieces}, {"alpha", to_string(u.alpha())}};
}

inline ClopenSet clopen_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j["alpha"].is_string()) {
    throw Error("clopen JSON: field 'alpha' must be an ordinal string");
  }
  std::vector<Interval> pieces;
  if (j.contains("intervals")) {
    if (!j["intervals"].is_array()) throw Error("clopen JSON: field 'intervals' must be an array");
    for (const auto& p : j["intervals"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw Error("clopen JSON: field 'intervals' must hold [s, t] string pairs");
      }
      pieces.push_back(Interval{parse_ordinal(p[0].get<std::string>()), parse_ordinal(p[1].get<std::string>())});
    }
  }
  bool zero = false;
  if (j.contains("zero")) {
    if (!j["zero"].is_boolean()) throw Error("clopen JSON: field 'zero' must be a boolean");
    zero = j["zero"].get<bool>();
  }
  return ClopenSet(parse_ordinal(j["alpha"].get<std::string>()), zero, std::move(pieces));
}

}  // namespace skula

#endif  // SKULA_CLOPEN_HPP_
