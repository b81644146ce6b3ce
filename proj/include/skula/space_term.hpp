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

// Symbolic scattered compact spaces: ordinal intervals, disjoint sums,
// products and labelled skeletons, with their height and end-point data.

#ifndef SKULA_SPACE_TERM_HPP_
#define SKULA_SPACE_TERM_HPP_

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "skula/error.hpp"
#include "skula/ordinal.hpp"
#include "skula/poset.hpp"

namespace skula {

// A finite poset of distinguished points, each labelled with the
// Cantor-Bendixson height it has in the space the skeleton stands for.
class Skeleton {
 public:
  Skeleton(FinitePoset poset, std::vector<Ordinal> labels)
      : poset_(std::move(poset)), labels_(std::move(labels)) {
    if (poset_.size() == 0) throw Error("skeleton needs at least one element");
    if (static_cast<int>(labels_.size()) != poset_.size()) throw Error("skeleton: one label per element required");
    for (int x = 0; x < poset_.size(); ++x) {
      for (int y : poset_.strictly_above(x).elements()) {
        if (!(labels_[x] < labels_[y])) {
          throw Error("skeleton labels must increase strictly: " + poset_.label(x) + " < " + poset_.label(y) +
                      " but " + to_string(labels_[x]) + " >= " + to_string(labels_[y]));
        }
      }
    }
  }

  const FinitePoset& poset() const noexcept { return poset_; }
  const std::vector<Ordinal>& labels() const noexcept { return labels_; }
  const Ordinal& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }

  Ordinal max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

  // Every principal upset is a chain, as for a laminar selector.
  bool is_forest() const {
    for (int x = 0; x < poset_.size(); ++x) {
      for (int y : poset_.strictly_above(x).elements()) {
        for (int z : poset_.strictly_above(x).elements()) {
          if (!poset_.comparable(y, z)) return false;
        }
      }
    }
    return true;
  }

 private:
  FinitePoset poset_;
  std::vector<Ordinal> labels_;
};

struct SpaceTerm;

struct OrdSpace {
  Ordinal alpha;  // the space [0, alpha]
};

struct SumTerm {
  std::vector<SpaceTerm> parts;
};

struct ProdTerm {
  std::shared_ptr<const SpaceTerm> left;
  std::shared_ptr<const SpaceTerm> right;
};

struct SpaceTerm {
  std::variant<OrdSpace, SumTerm, ProdTerm, Skeleton> node;
};

inline SpaceTerm ord_space(Ordinal alpha) { return SpaceTerm{OrdSpace{std::move(alpha)}}; }

inline SpaceTerm sum_space(std::vector<SpaceTerm> parts) {
  if (parts.empty()) throw Error("sum needs at least one part");
  return SpaceTerm{SumTerm{std::move(parts)}};
}

inline SpaceTerm prod_space(SpaceTerm a, SpaceTerm b) {
  return SpaceTerm{ProdTerm{std::make_shared<const SpaceTerm>(std::move(a)),
                            std::make_shared<const SpaceTerm>(std::move(b))}};
}

inline SpaceTerm skeleton_space(Skeleton s) { return SpaceTerm{std::move(s)}; }

struct SpaceReport {
  Ordinal height;
  Natural endpoint_count = 1;
  bool unitary = true;
  std::optional<Ordinal> rank;  // empty when no selector is canonical
};

inline SpaceReport term_report(const SpaceTerm& t) {
  SpaceReport r;
  if (const auto* o = std::get_if<OrdSpace>(&t.node)) {
    if (auto n = o->alpha.finite_value()) {
      r.height = Ordinal();
      r.endpoint_count = *n + 1;
    } else {
      r.height = o->alpha.degree();
      r.endpoint_count = o->alpha.leading_coefficient();
    }
    // linear selector {[0, b] : b <= alpha}
    r.rank = o->alpha + Ordinal(1);
  } else if (const auto* s = std::get_if<SumTerm>(&t.node)) {
    if (s->parts.empty()) throw Error("sum needs at least one part");
    bool first = true;
    for (const auto& part : s->parts) {
      auto pr = term_report(part);
      if (first || pr.height > r.height) {
        r.height = pr.height;
        r.endpoint_count = pr.endpoint_count;
        first = false;
      } else if (pr.height == r.height) {
        r.endpoint_count += pr.endpoint_count;
      }
    }
  } else if (const auto* p = std::get_if<ProdTerm>(&t.node)) {
    auto a = term_report(*p->left);
    auto b = term_report(*p->right);
    r.height = natural_sum(a.height, b.height);
    r.endpoint_count = a.endpoint_count * b.endpoint_count;
  } else {
    const auto& sk = std::get<Skeleton>(t.node);
    const auto& poset = sk.poset();
    bool first = true;
    for (int x : extremal(poset, poset.all()).max.elements()) {
      if (first || sk.label(x) > r.height) {
        r.height = sk.label(x);
        r.endpoint_count = 1;
        first = false;
      } else if (sk.label(x) == r.height) {
        r.endpoint_count += 1;
      }
    }
    r.rank = r.height;
  }
  r.unitary = r.endpoint_count == 1;
  return r;
}

// height <= rank < w^height * (endpoints + 1) < w^(height + 1)
struct BoundChainReport {
  Ordinal height;
  Ordinal rank;
  Ordinal middle;
  Ordinal upper;
  bool height_le_rank = false;
  bool rank_lt_middle = false;
  bool middle_lt_upper = false;
  bool pass() const { return height_le_rank && rank_lt_middle && middle_lt_upper; }
};

inline BoundChainReport bound_chain_check(const SpaceTerm& t) {
  auto r = term_report(t);
  if (!r.rank) throw Error("rank is not computed for sums and products");
  BoundChainReport b;
  b.height = r.height;
  b.rank = *r.rank;
  b.middle = Ordinal::omega_power(r.height, r.endpoint_count + 1);
  b.upper = Ordinal::omega_power(r.height + Ordinal(1));
  b.height_le_rank = b.height <= b.rank;
  b.rank_lt_middle = b.rank < b.middle;
  b.middle_lt_upper = b.middle < b.upper;
  return b;
}

// Height in the hyperspace of the point U_x, for x of rank r.
inline Ordinal hyper_point_height(const Ordinal& r) {
  if (r <= Ordinal(1)) return r;
  return Ordinal::omega_power(one_plus_inverse(r));
}

// Height in the hyperspace of U_sigma for an antichain sigma with these labels.
inline Ordinal hyper_antichain_height(const std::vector<Ordinal>& labels) {
  if (labels.empty()) throw Error("antichain label list is empty");
  Ordinal out;
  for (const auto& r : labels) out = natural_sum(out, hyper_point_height(r));
  return out;
}

inline std::vector<ElementSet> skeleton_antichains(const Skeleton& s, int bound = kDefaultEnumerationBound) {
  const FinitePoset& p = s.poset();
  if (p.size() > bound) {
    throw BoundError("skeleton has " + std::to_string(p.size()) + " elements, bound is " + std::to_string(bound));
  }
  std::vector<ElementSet> out;
  // extend antichains element by element in index order
  std::vector<ElementSet> stack{ElementSet()};
  while (!stack.empty()) {
    ElementSet a = stack.back();
    stack.pop_back();
    if (!a.empty()) out.push_back(a);
    int start = 0;
    for (int x : a.elements()) start = x + 1;
    for (int x = start; x < p.size(); ++x) {
      bool free = true;
      for (int y : a.elements()) free = free && !p.comparable(x, y);
      if (free) stack.push_back(a.with(x));
    }
  }
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
  return out;
}

inline std::vector<Ordinal> labels_of(const Skeleton& s, ElementSet a) {
  std::vector<Ordinal> out;
  for (int x : a.elements()) out.push_back(s.label(x));
  return out;
}

struct HyperBoundReport {
  Ordinal bound;      // w^(max label + 1)
  Ordinal max_value;  // largest antichain height seen
  ElementSet argmax;
  std::size_t antichains = 0;
  std::optional<ElementSet> violation;
  bool pass() const { return !violation; }
};

inline HyperBoundReport hyper_bound_check(const Skeleton& s, int bound = kDefaultEnumerationBound) {
  HyperBoundReport r;
  r.bound = Ordinal::omega_power(s.max_label() + Ordinal(1));
  for (ElementSet a : skeleton_antichains(s, bound)) {
    ++r.antichains;
    Ordinal h = hyper_antichain_height(labels_of(s, a));
    if (r.antichains == 1 || h > r.max_value) {
      r.max_value = h;
      r.argmax = a;
    }
    if (!(h < r.bound) && !r.violation) r.violation = a;
  }
  return r;
}

struct MonotonicityReport {
  std::size_t pairs = 0;  // (rho, sigma) with down(rho) strictly inside down(sigma)
  // Pairs whose difference is made of isolated (label 0) points only. Adding
  // an isolated point does not change the height, so only <= is required.
  std::size_t isolated_only = 0;
  std::optional<std::pair<ElementSet, ElementSet>> violation;
  bool pass() const { return !violation; }
};

inline MonotonicityReport hyper_monotonicity_check(const Skeleton& s, int bound = kDefaultEnumerationBound) {
  if (!s.is_forest()) throw Error("monotonicity check needs a forest skeleton (every principal upset a chain)");
  const FinitePoset& p = s.poset();
  auto all = skeleton_antichains(s, bound);
  std::vector<ElementSet> downs;
  std::vector<Ordinal> heights;
  for (ElementSet a : all) {
    downs.push_back(p.down_closure(a).members());
    // antichain elements of a forest skeleton have disjoint clopen sets,
    // so nothing is dominated and the reduced form is the set itself
    heights.push_back(hyper_antichain_height(labels_of(s, extremal(p, a).max)));
  }
  MonotonicityReport r;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j || !downs[i].subset_of(downs[j]) || downs[i] == downs[j]) continue;
      ++r.pairs;
      bool isolated = true;
      for (int x : (downs[j] - downs[i]).elements()) isolated = isolated && s.label(x).is_zero();
      const bool ok = isolated ? heights[i] <= heights[j] : heights[i] < heights[j];
      if (isolated) ++r.isolated_only;
      if (!ok && !r.violation) r.violation = std::make_pair(all[i], all[j]);
    }
  }
  return r;
}

// Text form

inline std::string to_string(const SpaceTerm& t);

inline std::string skeleton_to_string(const Skeleton& s) {
  std::string out = "skel(" + poset_to_json(s.poset()).dump() + ", {";
  for (int x = 0; x < s.poset().size(); ++x) {
    if (x > 0) out += ", ";
    out += s.poset().label(x) + ": " + to_string(s.label(x));
  }
  return out + "})";
}

inline std::string to_string(const SpaceTerm& t) {
  if (const auto* o = std::get_if<OrdSpace>(&t.node)) return "ord(" + to_string(o->alpha) + ")";
  if (const auto* s = std::get_if<SumTerm>(&t.node)) {
    std::string out = "sum(";
    for (std::size_t i = 0; i < s->parts.size(); ++i) out += (i ? ", " : "") + to_string(s->parts[i]);
    return out + ")";
  }
  if (const auto* p = std::get_if<ProdTerm>(&t.node)) {
    return "prod(" + to_string(*p->left) + ", " + to_string(*p->right) + ")";
  }
  return skeleton_to_string(std::get<Skeleton>(t.node));
}

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  SpaceTerm parse() {
    SpaceTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("space term: " + what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Text up to the next top-level delimiter, respecting nested brackets.
  std::string_view balanced_until(std::string_view stops) {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    bool in_string = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (in_string) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '(' || c == '{' || c == '[') {
        ++depth;
      } else if (c == ')' || c == '}' || c == ']') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && stops.find(c) != std::string_view::npos) {
        break;
      }
      ++pos_;
    }
    if (in_string || depth != 0) fail("unbalanced brackets");
    return text_.substr(start, pos_ - start);
  }

  Ordinal ordinal_arg(std::string_view stops) {
    const std::size_t at = pos_;
    std::string_view s = balanced_until(stops);
    try {
      return parse_ordinal(s);
    } catch (const ParseError& e) {
      throw ParseError(std::string("space term: bad ordinal '") + std::string(s) + "'", at + e.position());
    }
  }

  SpaceTerm term() {
    const std::size_t at = pos_;
    std::string head = word();
    expect('(');
    if (head == "ord") {
      Ordinal a = ordinal_arg(")");
      expect(')');
      return ord_space(std::move(a));
    }
    if (head == "sum") {
      std::vector<SpaceTerm> parts{term()};
      while (eat(',')) parts.push_back(term());
      expect(')');
      return sum_space(std::move(parts));
    }
    if (head == "prod") {
      SpaceTerm a = term();
      expect(',');
      SpaceTerm b = term();
      expect(')');
      return prod_space(std::move(a), std::move(b));
    }
    if (head == "skel") return skeleton();
    pos_ = at;
    fail("unknown term '" + head + "' (expected ord, sum, prod or skel)");
  }

  SpaceTerm skeleton() {
    skip_ws();
    const std::size_t json_at = pos_;
    std::string_view json_text = balanced_until(",");
    FinitePoset poset;
    try {
      poset = parse_poset_json(std::string(json_text));
    } catch (const ParseError& e) {
      throw ParseError(std::string("space term: skeleton poset: ") + e.what(), json_at);
    }
    expect(',');
    expect('{');
    std::map<std::string, Ordinal> given;
    if (!eat('}')) {
      do {
        skip_ws();
        std::string key;
        if (eat('"')) {
          while (pos_ < text_.size() && text_[pos_] != '"') key += text_[pos_++];
          expect('"');
        } else {
          std::string_view k = balanced_until(":");
          key = std::string(k);
          while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        }
        if (key.empty()) fail("empty label key");
        expect(':');
        if (!given.emplace(key, ordinal_arg(",}")).second) fail("duplicate label for '" + key + "'");
      } while (eat(','));
      expect('}');
    }
    expect(')');
    std::vector<Ordinal> labels;
    for (const auto& name : poset.labels()) {
      auto it = given.find(name);
      if (it == given.end()) fail("missing label for element '" + name + "'");
      labels.push_back(it->second);
      given.erase(it);
    }
    if (!given.empty()) fail("label for unknown element '" + given.begin()->first + "'");
    return skeleton_space(Skeleton(std::move(poset), std::move(labels)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SpaceTerm parse_space_term(std::string_view text) { return detail::TermParser(text).parse(); }

inline nlohmann::json space_report_to_json(const SpaceReport& r) {
  return nlohmann::json{{"height", to_string(r.height)},
                        {"endpoints", r.endpoint_count.str()},
                        {"unitary", r.unitary},
                        {"rank", r.rank ? nlohmann::json(to_string(*r.rank)) : nlohmann::json("not-computed")}};
}

}  // namespace skula

#endif  // SKULA_SPACE_TERM_HPP_
