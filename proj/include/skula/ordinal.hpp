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

// Exact ordinal arithmetic below epsilon_0 in Cantor normal form.
//
// An ordinal is a list of terms w^e * c with strictly decreasing exponents e
// (themselves ordinals) and coefficients c >= 1; the empty list is 0. Values
// are immutable and every operation is a pure function.
//
// Besides ordinal +, * and exponentiation this header provides the
// commutative natural (Hessenberg) sum and product, the iterated natural sum
// `odot`, and the tip/degree decomposition of a CNF.

#ifndef SKULA_ORDINAL_HPP_
#define SKULA_ORDINAL_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skula/error.hpp"

namespace skula {

using Natural = boost::multiprecision::cpp_int;

class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  explicit Ordinal(std::uint64_t n);
  explicit Ordinal(const Natural& n);

  static Ordinal omega();
  // w^exponent * coefficient; coefficient 0 yields 0.
  static Ordinal omega_power(Ordinal exponent, Natural coefficient = 1);
  // Throws Error unless exponents strictly decrease and coefficients are >= 1.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  std::optional<Natural> finite_value() const;

  // Leading exponent; 0 for the zero ordinal.
  Ordinal degree() const;
  Natural leading_coefficient() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Natural coefficient;
};

// Right argument of odot: a natural number or w.
class NatOrOmega {
 public:
  NatOrOmega(std::uint64_t n) : value_(Natural(n)) {}  // NOLINT
  explicit NatOrOmega(Natural n) : value_(std::move(n)) {}
  static NatOrOmega omega() { return NatOrOmega(); }

  bool is_omega() const noexcept { return !value_.has_value(); }
  const Natural& finite() const { return value_.value(); }

 private:
  NatOrOmega() = default;
  std::optional<Natural> value_;
};

struct TipDegree {
  Ordinal tip;           // w^{last exponent}
  Ordinal tip_exponent;  // last exponent of the CNF
  Ordinal degree;        // leading exponent of the CNF
};

// ---------------------------------------------------------------------------
// Ordinal members

inline Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), Natural(n)});
}

inline Ordinal::Ordinal(const Natural& n) {
  if (n < 0) throw Error("negative natural number");
  if (n != 0) terms_.push_back(Term{Ordinal(), n});
}

inline Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

inline Ordinal Ordinal::omega_power(Ordinal exponent, Natural coefficient) {
  if (coefficient < 0) throw Error("negative coefficient");
  Ordinal out;
  if (coefficient != 0) {
    out.terms_.push_back(Term{std::move(exponent), std::move(coefficient)});
  }
  return out;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw Error("CNF coefficient must be >= 1");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw Error("CNF exponents must strictly decrease");
    }
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

inline std::optional<Natural> Ordinal::finite_value() const {
  if (terms_.empty()) return Natural(0);
  if (!is_finite()) return std::nullopt;
  return terms_[0].coefficient;
}

inline Ordinal Ordinal::degree() const {
  return terms_.empty() ? Ordinal() : terms_.front().exponent;
}

inline Natural Ordinal::leading_coefficient() const {
  return terms_.empty() ? Natural(0) : terms_.front().coefficient;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.terms_[i].exponent <=> b.terms_[i].exponent;
    if (c != 0) return c;
    const auto& x = a.terms_[i].coefficient;
    const auto& y = b.terms_[i].coefficient;
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------------------
// Ordinal arithmetic

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& head = b.terms().front();
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > head.exponent) {
      out.push_back(t);
    } else {
      if (t.exponent == head.exponent) {
        out.push_back(Ordinal::Term{head.exponent, t.coefficient + head.coefficient});
      }
      break;
    }
  }
  std::size_t skip = 0;
  if (!out.empty() && out.back().exponent == head.exponent) skip = 1;
  for (std::size_t i = skip; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
  return Ordinal::from_terms(std::move(out));
}

// a * n for a natural n.
inline Ordinal times_natural(const Ordinal& a, const Natural& n) {
  if (a.is_zero() || n == 0) return Ordinal();
  std::vector<Ordinal::Term> out(a.terms().begin(), a.terms().end());
  out.front().coefficient *= n;
  return Ordinal::from_terms(std::move(out));
}

inline Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal lead = a.degree();
  Ordinal result;
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) {
      result = result + times_natural(a, t.coefficient);
    } else {
      result = result + Ordinal::omega_power(lead + t.exponent, t.coefficient);
    }
  }
  return result;
}

// The unique x with 1 + x = r, for r >= 1.
inline Ordinal one_plus_inverse(const Ordinal& r) {
  if (r.is_zero()) throw Error("one_plus_inverse: r must be >= 1");
  if (!r.is_finite()) return r;
  return Ordinal(*r.finite_value() - 1);
}

namespace detail {

inline constexpr std::uint64_t kMaxExpandedPower = 1u << 16;

inline Ordinal power_natural(const Ordinal& base, Natural m) {
  if (!base.is_finite() && base.terms().size() > 1 && m > kMaxExpandedPower) {
    throw Error("ordinal power: finite exponent too large for a non-monomial base");
  }
  Ordinal result(1);
  Ordinal square = base;
  while (m > 0) {
    if ((m & 1) != 0) result = result * square;
    m >>= 1;
    if (m > 0) square = square * square;
  }
  return result;
}

}  // namespace detail

inline Ordinal pow(const Ordinal& base, const Ordinal& exponent) {
  if (exponent.is_zero()) return Ordinal(1);
  if (base.is_zero()) return Ordinal();
  if (base == Ordinal(1)) return base;

  // exponent = limit_part + m with m finite
  std::vector<Ordinal::Term> limit_terms;
  Natural m = 0;
  for (const auto& t : exponent.terms()) {
    if (t.exponent.is_zero()) {
      m = t.coefficient;
    } else {
      limit_terms.push_back(t);
    }
  }
  Ordinal limit_part = Ordinal::from_terms(std::move(limit_terms));

  Ordinal head(1);
  if (!limit_part.is_zero()) {
    if (base.is_finite()) {
      // k^(w*g) = w^g for finite k >= 2, and w*g has exponents 1 + e'.
      std::vector<Ordinal::Term> g;
      for (const auto& t : limit_part.terms()) {
        g.push_back(Ordinal::Term{one_plus_inverse(t.exponent), t.coefficient});
      }
      head = Ordinal::omega_power(Ordinal::from_terms(std::move(g)));
    } else {
      head = Ordinal::omega_power(base.degree() * limit_part);
    }
  }
  if (m == 0) return head;
  return head * detail::power_natural(base, m);
}

// ---------------------------------------------------------------------------
// Natural (Hessenberg) operations

inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> out;
  std::size_t i = 0, j = 0;
  const auto& x = a.terms();
  const auto& y = b.terms();
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exponent > x[i].exponent) {
      out.push_back(y[j++]);
    } else {
      out.push_back(Ordinal::Term{x[i].exponent, x[i].coefficient + y[j].coefficient});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

inline Ordinal natural_product(const Ordinal& a, const Ordinal& b) {
  Ordinal result;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      result = natural_sum(
          result, Ordinal::omega_power(natural_sum(s.exponent, t.exponent),
                                       s.coefficient * t.coefficient));
    }
  }
  return result;
}

// a odot 0 = 0, a odot (n+1) = (a odot n) (+) a, a odot w = sup_n a odot n.
inline Ordinal odot(const Ordinal& a, const NatOrOmega& n) {
  if (!n.is_omega()) {
    if (a.is_zero() || n.finite() == 0) return Ordinal();
    std::vector<Ordinal::Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out) t.coefficient *= n.finite();
    return Ordinal::from_terms(std::move(out));
  }
  if (a.is_zero()) return Ordinal();
  return Ordinal::omega_power(a.degree() + Ordinal(1));
}

// For gamma < a (+) b, returns (a', b') with a' <= a, b' <= b,
// gamma = a' (+) b', and a' < a or b' < b. nullopt if gamma >= a (+) b.
inline std::optional<std::pair<Ordinal, Ordinal>> split_below_natural_sum(
    const Ordinal& gamma, const Ordinal& a, const Ordinal& b) {
  if (!(gamma < natural_sum(a, b))) return std::nullopt;

  std::vector<Ordinal> exps;
  for (const auto* o : {&a, &b, &gamma}) {
    for (const auto& t : o->terms()) exps.push_back(t.exponent);
  }
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  auto coeff = [](const Ordinal& o, const Ordinal& e) -> Natural {
    for (const auto& t : o.terms()) {
      if (t.exponent == e) return t.coefficient;
    }
    return 0;
  };

  std::vector<Ordinal::Term> left, right;
  auto push = [](std::vector<Ordinal::Term>& v, const Ordinal& e, const Natural& c) {
    if (c != 0) v.push_back(Ordinal::Term{e, c});
  };

  // 0: still equal to a (+) b; 1: left is already strictly below a;
  // 2: right is strictly below b.
  int state = 0;
  for (const auto& e : exps) {
    const Natural g = coeff(gamma, e);
    if (state == 0) {
      const Natural p = coeff(a, e);
      const Natural q = coeff(b, e);
      if (g == p + q) {
        push(left, e, p);
        push(right, e, q);
        continue;
      }
      if (g <= p) {
        push(left, e, g);
        state = (g < p) ? 1 : 2;
      } else {
        push(left, e, p);
        push(right, e, g - p);
        state = 2;
      }
    } else if (state == 1) {
      push(left, e, g);
    } else {
      push(right, e, g);
    }
  }
  return std::make_pair(Ordinal::from_terms(std::move(left)),
                        Ordinal::from_terms(std::move(right)));
}

inline TipDegree tip_degree(const Ordinal& a) {
  if (a.is_zero()) throw Error("tip of 0 is undefined");
  const Ordinal& last = a.terms().back().exponent;
  return TipDegree{Ordinal::omega_power(last), last, a.degree()};
}

// a - tip(a): the CNF of a with one copy of its last block removed.
inline Ordinal drop_tip(const Ordinal& a) {
  if (a.is_zero()) throw Error("tip of 0 is undefined");
  std::vector<Ordinal::Term> out(a.terms().begin(), a.terms().end());
  if (out.back().coefficient == 1) {
    out.pop_back();
  } else {
    out.back().coefficient -= 1;
  }
  return Ordinal::from_terms(std::move(out));
}

// Cantor-Bendixson rank of the point x inside any ordinal space containing
// it: the last exponent of x, and 0 for x = 0.
inline Ordinal point_height(const Ordinal& x) {
  return x.is_zero() ? Ordinal() : x.terms().back().exponent;
}

// ---------------------------------------------------------------------------
// Text form
//
//   expr := term ('+' term)*
//   term := atom ('*' nat)?
//   atom := '0' | nat | 'w' | 'w^' atom | 'w^(' expr ')'

namespace detail {

inline std::string format_terms(const Ordinal& a, const char* separator);

inline std::string exponent_string(const Ordinal& e) {
  if (e.is_finite()) return e.finite_value()->str();
  if (e == Ordinal::omega()) return "w";
  return "(" + format_terms(e, "+") + ")";
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ordinal syntax error: " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Natural nat() {
    if (!at_digit()) fail("expected a natural number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal expr() {
    Ordinal value = term();
    while (accept('+')) value = value + term();
    return value;
  }

  Ordinal term() {
    Ordinal value = atom();
    if (accept('*')) {
      std::size_t at = pos_;
      Natural n = nat();
      if (n == 0) throw ParseError("ordinal syntax error: coefficient 0", at);
      value = times_natural(value, n);
    }
    return value;
  }

  Ordinal atom() {
    if (at_digit()) return Ordinal(nat());
    if (!accept('w')) fail("expected 'w' or a natural number");
    if (!accept('^')) return Ordinal::omega();
    if (accept('(')) {
      Ordinal e = expr();
      if (!accept(')')) fail("expected ')'");
      return Ordinal::omega_power(std::move(e));
    }
    return Ordinal::omega_power(atom());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Top-level terms are joined by " + ", parenthesised exponents by "+".
inline std::string detail::format_terms(const Ordinal& a, const char* separator) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += separator;
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += (t.exponent == Ordinal(1)) ? std::string("w")
                                      : "w^" + detail::exponent_string(t.exponent);
    if (t.coefficient != 1) out += "*" + t.coefficient.str();
  }
  return out;
}

inline std::string to_string(const Ordinal& a) { return detail::format_terms(a, " + "); }

inline Ordinal parse_ordinal(std::string_view text) {
  return detail::OrdinalParser(text).parse();
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << to_string(a);
}

}  // namespace skula

#endif  // SKULA_ORDINAL_HPP_
