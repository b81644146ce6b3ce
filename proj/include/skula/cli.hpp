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

// Command-line front end. Exit codes: 0 success, 1 a check failed (the
// witness is in the output), 2 usage or input error.

#ifndef SKULA_CLI_HPP_
#define SKULA_CLI_HPP_

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skula/acceptance.hpp"
#include "skula/clopen.hpp"
#include "skula/error.hpp"
#include "skula/hyperspace.hpp"
#include "skula/mrowka.hpp"
#include "skula/ordinal.hpp"
#include "skula/poset.hpp"
#include "skula/report.hpp"
#include "skula/space_term.hpp"

namespace skula::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool dot = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> horizon;
  std::optional<int> bound;
  std::string json_file;
  std::vector<std::string> args;
};

struct Context {
  const Options& opt;
  std::ostream& out;

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= opt.args.size()) throw UsageError(std::string("missing argument: ") + what);
    return opt.args[i];
  }
  void expect_at_most(std::size_t n) const {
    if (opt.args.size() > n) throw UsageError("unexpected argument: " + opt.args[n]);
  }
  int bound() const { return opt.bound.value_or(kDefaultEnumerationBound); }

  int emit(const json& j, bool pass = true) const {
    out << j.dump(2) << '\n';
    return pass ? kOk : kCheckFailed;
  }
  int emit_text(const std::string& s) const {
    out << s << '\n';
    return kOk;
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON input: --json <file>, else the positional argument, which is inline
// JSON when it starts with '{' and a file path otherwise.
inline json load_json(const Context& c, std::size_t i, const char* what) {
  std::string text;
  if (!c.opt.json_file.empty()) {
    text = read_file(c.opt.json_file);
  } else {
    const std::string& a = c.arg(i, what);
    text = !a.empty() && a.front() == '{' ? a : read_file(a);
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

// Position of the first positional argument after a JSON payload.
inline std::size_t after_json(const Context& c, std::size_t i) { return c.opt.json_file.empty() ? i + 1 : i; }

inline std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    if (s.empty() || s.front() == '-') throw std::invalid_argument(s);
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": expected a natural number, got '" + s + "'");
  }
}

inline json ord_json(const Ordinal& a) { return to_string(a); }

inline json ords_json(const std::vector<Ordinal>& v) {
  json j = json::array();
  for (const auto& a : v) j.push_back(to_string(a));
  return j;
}

inline json set_json(const FinitePoset& p, ElementSet s) {
  json j = json::array();
  for (int x : s.elements()) j.push_back(p.label(x));
  return j;
}

// ---------------------------------------------------------------------------
// ord

inline int cmd_ord(const std::string& op, const Context& c) {
  auto a = [&](std::size_t i) { return parse_ordinal(c.arg(i, "ordinal")); };
  using Binary = std::function<Ordinal(const Ordinal&, const Ordinal&)>;
  static const std::map<std::string, Binary> binary = {
      {"add", [](const Ordinal& x, const Ordinal& y) { return x + y; }},
      {"mul", [](const Ordinal& x, const Ordinal& y) { return x * y; }},
      {"pow", [](const Ordinal& x, const Ordinal& y) { return pow(x, y); }},
      {"natsum", natural_sum},
      {"natprod", natural_product},
  };
  if (auto it = binary.find(op); it != binary.end()) {
    c.expect_at_most(2);
    return c.emit_text(to_string(it->second(a(0), a(1))));
  }
  if (op == "parse") {
    c.expect_at_most(1);
    return c.emit_text(to_string(a(0)));
  }
  if (op == "height") {
    c.expect_at_most(1);
    return c.emit_text(to_string(point_height(a(0))));
  }
  if (op == "odot") {
    c.expect_at_most(2);
    const std::string& n = c.arg(1, "multiplier");
    const NatOrOmega m = (n == "w" || n == "omega") ? NatOrOmega::omega() : NatOrOmega(parse_u64(n, "multiplier"));
    return c.emit_text(to_string(odot(a(0), m)));
  }
  if (op == "cmp") {
    c.expect_at_most(2);
    const auto r = a(0) <=> a(1);
    return c.emit_text(r < 0 ? "<" : r > 0 ? ">" : "=");
  }
  if (op == "tip") {
    c.expect_at_most(1);
    const Ordinal x = a(0);
    if (x.is_zero()) throw UsageError("tip: the ordinal must be positive");
    const auto t = tip_degree(x);
    return c.emit(json{{"tip", ord_json(t.tip)},
                       {"tip_exponent", ord_json(t.tip_exponent)},
                       {"degree", ord_json(t.degree)},
                       {"drop_tip", ord_json(drop_tip(x))}});
  }
  if (op == "split") {
    c.expect_at_most(3);
    const Ordinal g = a(0), x = a(1), y = a(2);
    const auto s = split_below_natural_sum(g, x, y);
    json w = nullptr;
    if (!s) w = json{{"natural_sum", ord_json(natural_sum(x, y))}, {"reason", "gamma is not below the natural sum"}};
    json extra = json::object();
    if (s) extra = json{{"left", ord_json(s->first)}, {"right", ord_json(s->second)}};
    return c.emit(make_report("split", s.has_value(), w, extra), s.has_value());
  }
  throw UsageError("unknown ord operation: " + op);
}

// ---------------------------------------------------------------------------
// poset

inline int cmd_poset(const std::string& op, const Context& c) {
  const FinitePoset p = poset_from_json(load_json(c, 0, "poset"));
  c.expect_at_most(after_json(c, 0));
  if (op == "info") {
    const Ranks r = ranks(p);
    const WidthReport w = width(p);
    json ranks_j = json::object();
    for (int x = 0; x < p.size(); ++x) ranks_j[p.label(x)] = r.element[x];
    json chains = json::array();
    for (const auto& ch : w.chains) {
      json cj = json::array();
      for (int x : ch) cj.push_back(p.label(x));
      chains.push_back(cj);
    }
    const auto ex = extremal(p, p.all());
    return c.emit(json{{"elements", p.size()},
                       {"rank", r.poset},
                       {"element_ranks", ranks_j},
                       {"width", w.width},
                       {"chain_cover", chains},
                       {"max_antichain", set_json(p, w.antichain)},
                       {"maximal", set_json(p, ex.max)},
                       {"minimal", set_json(p, ex.min)}});
  }
  if (op == "dot") return c.emit_text(poset_to_dot(p));
  if (op == "downsets") {
    json list = json::array();
    for (const auto& d : enumerate_downsets(p, c.bound())) list.push_back(set_json(p, d.members()));
    return c.emit(json{{"count", list.size()}, {"downsets", list}});
  }
  if (op == "lattice") {
    const FinitePoset l = downset_lattice(p, c.bound());
    if (c.opt.dot) return c.emit_text(poset_to_dot(l, "downsets"));
    return c.emit(poset_to_json(l));
  }
  if (op == "zaguia") {
    const auto r = zaguia_verify(p, c.bound());
    json w = nullptr;
    if (r.witness) {
      w = json{{"check", r.witness->check},
               {"first", set_json(p, r.witness->first)},
               {"second", set_json(p, r.witness->second)},
               {"detail", r.witness->detail}};
    }
    json lw = nullptr;
    if (r.literal_witness) lw = json{{"check", r.literal_witness->check}, {"detail", r.literal_witness->detail}};
    return c.emit(make_report("zaguia", r.pass(), w,
                              json{{"poset_rank", r.poset_rank},
                                   {"lattice_rank", r.lattice_rank},
                                   {"bound", ord_json(r.bound)},
                                   {"monotone", r.monotone},
                                   {"union_subadditive", r.union_subadditive},
                                   {"strict_step", r.strict_step},
                                   {"max_decomposition", r.max_decomposition},
                                   {"principal_bound", r.principal_bound},
                                   {"bound_holds", r.theorem},
                                   {"literal_union_subadditive", r.literal_union_subadditive},
                                   {"literal_max_decomposition", r.literal_max_decomposition},
                                   {"literal_witness", lw}}),
                  r.pass());
  }
  throw UsageError("unknown poset operation: " + op);
}

// ---------------------------------------------------------------------------
// hyper

inline json selector_json(const SelectorReport& r) {
  return make_report("selector", r.pass(), r.witness.empty() ? json(nullptr) : json(r.witness),
                     json{{"cond1", r.cond1},
                          {"cond2", r.cond2},
                          {"cond3", r.cond3},
                          {"cond4", r.cond4},
                          {"cond4_equivalent", r.cond4_equivalent},
                          {"minimal_singletons", r.minimal_singletons},
                          {"well_founded", r.well_founded},
                          {"matches_space_order", r.matches_space_order ? json(*r.matches_space_order) : json()}});
}

inline int cmd_hyper(const std::string& op, const Context& c) {
  if (op == "vietoris") {
    OnePointModel m;
    if (c.opt.horizon) m.horizon = *c.opt.horizon;
    const ClopenDescriptor u = parse_descriptor(c.arg(0, "U"));
    std::vector<ClopenDescriptor> vs;
    for (std::size_t i = 1; i < c.opt.args.size(); ++i) vs.push_back(parse_descriptor(c.opt.args[i]));
    const auto w = vietoris_density_witness(m, u, vs);
    return c.emit(json{{"nonempty", w.has_value()}, {"witness", w ? json(*w) : json(nullptr)}});
  }
  if (op == "onepoint") {
    c.expect_at_most(0);
    const auto s = one_point_rank_summary();
    return c.emit(json{{"rank_x", ord_json(s.rank_x)},
                       {"rank_h", ord_json(s.rank_h)},
                       {"bound", ord_json(s.bound)},
                       {"stated_rank_h", ord_json(s.stated_rank_h)},
                       {"within_bound", s.within_bound},
                       {"matches_statement", s.matches_statement}},
                  s.within_bound);
  }
  const FinitePoset p = poset_from_json(load_json(c, 0, "poset"));
  c.expect_at_most(after_json(c, 0));
  const Hyperspace h = build_hyperspace(p, c.bound());
  if (op == "build") {
    if (c.opt.dot) return c.emit_text(hyperspace_to_dot(h));
    json pts = json::array();
    for (const auto& d : h.points()) pts.push_back(set_json(p, d.members()));
    return c.emit(make_report("hyperspace", h.verified(), nullptr,
                              json{{"size", h.size()},
                                   {"points", pts},
                                   {"union_closed", h.union_closed()},
                                   {"join_generated", h.join_generated()},
                                   {"equals_kw", h.equals_kw()},
                                   {"down_max", h.down_max()},
                                   {"eta_embedding", h.eta_embedding()}}),
                  h.verified());
  }
  if (op == "selector") {
    const FinitePoset hp = h.as_poset();
    const auto r = selector_axioms_check(h.k_plus_selector(), &hp);
    return c.emit(selector_json(r), r.pass());
  }
  throw UsageError("unknown hyper operation: " + op);
}

// ---------------------------------------------------------------------------
// space

inline const Skeleton& require_skeleton(const SpaceTerm& t) {
  const auto* s = std::get_if<Skeleton>(&t.node);
  if (!s) throw UsageError("term: expected skel(...)");
  return *s;
}

inline int cmd_space(const std::string& op, const Context& c) {
  if (op == "hyper-point") {
    c.expect_at_most(1);
    return c.emit_text(to_string(hyper_point_height(parse_ordinal(c.arg(0, "rank")))));
  }
  if (op == "hyper-antichain") {
    std::vector<Ordinal> labels;
    for (const auto& a : c.opt.args) labels.push_back(parse_ordinal(a));
    if (labels.empty()) throw UsageError("missing argument: labels");
    return c.emit_text(to_string(hyper_antichain_height(labels)));
  }
  const std::string text = c.opt.json_file.empty() ? c.arg(0, "term") : read_file(c.opt.json_file);
  c.expect_at_most(after_json(c, 0));
  const SpaceTerm t = parse_space_term(text);
  if (op == "report") {
    json j = space_report_to_json(term_report(t));
    j["term"] = to_string(t);
    return c.emit(j);
  }
  if (op == "bounds") {
    const auto b = bound_chain_check(t);
    return c.emit(make_report("bound-chain", b.pass(), nullptr,
                              json{{"height", ord_json(b.height)},
                                   {"rank", ord_json(b.rank)},
                                   {"middle", ord_json(b.middle)},
                                   {"upper", ord_json(b.upper)},
                                   {"height_le_rank", b.height_le_rank},
                                   {"rank_lt_middle", b.rank_lt_middle},
                                   {"middle_lt_upper", b.middle_lt_upper}}),
                  b.pass());
  }
  if (op == "hyper-bound") {
    const Skeleton& s = require_skeleton(t);
    const auto r = hyper_bound_check(s, c.bound());
    const FinitePoset& p = s.poset();
    return c.emit(make_report("hyper-bound", r.pass(), r.violation ? set_json(p, *r.violation) : json(nullptr),
                              json{{"bound", ord_json(r.bound)},
                                   {"max_value", ord_json(r.max_value)},
                                   {"argmax", set_json(p, r.argmax)},
                                   {"antichains", r.antichains}}),
                  r.pass());
  }
  if (op == "monotone") {
    const Skeleton& s = require_skeleton(t);
    const auto r = hyper_monotonicity_check(s, c.bound());
    const FinitePoset& p = s.poset();
    json w = nullptr;
    if (r.violation) w = json{{"smaller", set_json(p, r.violation->first)}, {"larger", set_json(p, r.violation->second)}};
    return c.emit(make_report("monotone", r.pass(), w, json{{"pairs", r.pairs}, {"isolated_only", r.isolated_only}}),
                  r.pass());
  }
  throw UsageError("unknown space operation: " + op);
}

// ---------------------------------------------------------------------------
// clopen

inline ClopenSet load_clopen(const Context& c, std::size_t i) {
  if (!c.opt.json_file.empty() && i == 0) return clopen_from_json(json::parse(read_file(c.opt.json_file)));
  const std::string& a = c.arg(i, "clopen set");
  if (!a.empty() && a.front() == '{' && a.find('"') != std::string::npos) return clopen_from_json(json::parse(a));
  return parse_clopen(a);
}

inline json cb_json(const CbReport& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back(json{{"delta", ord_json(run.delta)},
                        {"exponent", ord_json(run.exponent)},
                        {"k_lo", run.k_lo.str()},
                        {"k_hi", run.k_hi.str()}});
  }
  return json{{"height", ord_json(r.height)},
              {"endpoints", r.endpoint_count.str()},
              {"endpoint_runs", runs},
              {"unitary", r.unitary},
              {"lastpt", r.lastpt ? ord_json(*r.lastpt) : json(nullptr)}};
}

inline int cmd_clopen(const std::string& op, const Context& c) {
  if (op == "cb") {
    c.expect_at_most(1);
    return c.emit(cb_json(clopen_cb(load_clopen(c, 0))));
  }
  if (op == "op") {
    const std::string& which = c.arg(0, "operation");
    if (which == "complement") {
      c.expect_at_most(2);
      return c.emit_text(to_string(clopen_complement(load_clopen(c, 1))));
    }
    c.expect_at_most(3);
    const ClopenSet a = load_clopen(c, 1), b = load_clopen(c, 2);
    if (which == "union") return c.emit_text(to_string(clopen_union(a, b)));
    if (which == "intersect") return c.emit_text(to_string(clopen_intersect(a, b)));
    if (which == "subset") return c.emit_text(clopen_subset(a, b) ? "true" : "false");
    throw UsageError("unknown clopen op: " + which);
  }
  if (op == "tip") {
    c.expect_at_most(2);
    const ClopenSet u = tip_selector(parse_ordinal(c.arg(0, "beta")), parse_ordinal(c.arg(1, "alpha")));
    return c.emit(json{{"set", to_string(u)}, {"cb", cb_json(clopen_cb(u))}});
  }
  if (op == "treelike") {
    const Ordinal alpha = parse_ordinal(c.arg(0, "alpha"));
    std::vector<Ordinal> pts;
    for (std::size_t i = 1; i < c.opt.args.size(); ++i) pts.push_back(parse_ordinal(c.opt.args[i]));
    const auto r = treelike_check(alpha, pts);
    return c.emit(make_report("treelike", r.pass(), r.witness.empty() ? json(nullptr) : json(r.witness),
                              json{{"canonical", r.canonical},
                                   {"laminar", r.laminar},
                                   {"heights_increase", r.heights_increase}}),
                  r.pass());
  }
  if (op == "min") {
    c.expect_at_most(2);
    const Ordinal beta = parse_ordinal(c.arg(0, "beta")), alpha = parse_ordinal(c.arg(1, "alpha"));
    const auto grid = truncation_grid(beta, alpha);
    const auto r = min_clopen_with_endpoint(beta, alpha, grid);
    return c.emit(make_report("min-clopen", r.matches_tip_selector, nullptr,
                              json{{"set", to_string(r.set)},
                                   {"pieces", r.pieces},
                                   {"grid", ords_json(grid)},
                                   {"grid_has_tip_endpoints", r.grid_has_tip_endpoints}}),
                  r.matches_tip_selector);
  }
  throw UsageError("unknown clopen operation: " + op);
}

// ---------------------------------------------------------------------------
// mrowka

// A point of the quotient semilattice: "{1,3}", "A0" or "inf".
inline GPoint parse_gpoint(const std::string& s) {
  if (s == "inf") return Top{};
  if (s.size() > 1 && s.front() == 'A') return Branch{static_cast<std::size_t>(parse_u64(s.substr(1), "branch index"))};
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    std::vector<std::uint64_t> sigma;
    std::stringstream ss(s.substr(1, s.size() - 2));
    for (std::string item; std::getline(ss, item, ',');) {
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      sigma.push_back(parse_u64(item, "point"));
    }
    if (sigma.empty()) throw UsageError("point: the empty set is not a point");
    return fin_point(std::move(sigma));
  }
  throw UsageError("point: expected {n,...}, A<i> or inf, got '" + s + "'");
}

inline int cmd_mrowka(const std::string& op, const Context& c) {
  const std::vector<EvPeriodicSet> sets = ev_sets_from_json(load_json(c, 0, "family"));
  const std::size_t rest = after_json(c, 0);
  auto extra = [&](std::size_t k, const char* what) { return c.arg(rest + k, what); };
  if (op == "ad") {
    c.expect_at_most(rest);
    const auto r = ad_check(sets);
    json w = nullptr;
    if (r.offending) {
      w = json{{"sets", {r.offending->first, r.offending->second}},
               {"residue", r.certificate.residue},
               {"modulus", r.certificate.modulus}};
    }
    return c.emit(make_report("almost-disjoint", r.pass(), w, json{{"pairs", r.pairs}}), r.pass());
  }
  if (op == "lusin") {
    c.expect_at_most(rest + 1);
    const std::size_t stages = c.opt.args.size() > rest ? parse_u64(extra(0, "stages"), "stages") : 10;
    const auto r = lusin_chain(sets, stages);
    json st = json::array();
    for (const auto& s : r.stages) {
      st.push_back(json{{"pass", s.pass()},
                        {"counts", s.counts},
                        {"l2_exact", s.l2_exact},
                        {"l1_bounded", s.l1_bounded},
                        {"l1_worst_k", s.l1_worst_k},
                        {"l1_worst_count", s.l1_worst_count},
                        {"known_prefix", s.set.known}});
    }
    return c.emit(make_report("lusin", r.pass(), nullptr, json{{"stages", st}}), r.pass());
  }
  const ADFamily fam(sets);
  if (op == "star") {
    c.expect_at_most(rest);
    const auto r = star_truncation(fam, c.opt.bound.value_or(12));
    json codes = json::array();
    for (const auto& v : r.codes) codes.push_back(v.size());
    json w = nullptr;
    if (r.violation) w = json{r.violation->first, r.violation->second};
    return c.emit(make_report("star", r.pass(), w, json{{"bound", r.bound}, {"pairs", r.pairs}, {"codes_per_branch", codes}}),
                  r.pass());
  }
  if (op == "converge") {
    c.expect_at_most(rest + 2);
    const auto i = parse_u64(extra(0, "i"), "i"), j = parse_u64(extra(1, "j"), "j");
    const auto r = convergence_check(fam, i, j, c.opt.horizon.value_or(128));
    return c.emit(make_report("converge", r.pass(), nullptr,
                              json{{"i", r.i},
                                   {"j", r.j},
                                   {"horizon", r.horizon},
                                   {"threshold", r.threshold},
                                   {"distinct_left", r.distinct_left},
                                   {"distinct_right", r.distinct_right},
                                   {"left_in_branch", r.left_in_branch},
                                   {"right_in_branch", r.right_in_branch},
                                   {"joins_escape", r.joins_escape}}),
                  r.pass());
  }
  if (op == "selector") {
    c.expect_at_most(rest);
    const auto r = mrowka_selector_check(sets, c.opt.horizon.value_or(64));
    return c.emit(make_report("mrowka-selector", r.pass(), r.witness.empty() ? json(nullptr) : json(r.witness),
                              json{{"truncation", r.truncation},
                                   {"cond1", r.cond1},
                                   {"cond2", r.cond2},
                                   {"cond3", r.cond3},
                                   {"order_matches", r.order_matches},
                                   {"clopen", r.clopen},
                                   {"canonical", r.canonical}}),
                  r.pass());
  }
  if (op == "join") {
    c.expect_at_most(rest + 2);
    const GPoint x = parse_gpoint(extra(0, "x")), y = parse_gpoint(extra(1, "y"));
    return c.emit_text(to_string(g_join(x, y, fam)));
  }
  throw UsageError("unknown mrowka operation: " + op);
}

// ---------------------------------------------------------------------------

inline int cmd_selftest(const Context& c) {
  c.expect_at_most(0);
  if (!c.opt.seed) throw UsageError("selftest requires --seed");
  bool all = true;
  for (const auto& r : run_acceptance(*c.opt.seed)) {
    c.out << format_criterion(r) << '\n';
    all = all && r.pass;
  }
  return all ? kOk : kCheckFailed;
}

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattered Priestley and Skula spaces: ordinals, posets, hyperspaces, selectors", "skula"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0, horizon = 0;
  int bound = 0;
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized checks");
  auto* horizon_opt = app.add_option("--horizon", horizon, "horizon or truncation for infinite constructions");
  auto* bound_opt = app.add_option("--bound", bound, "size bound for enumerations");
  app.add_flag("--dot", opt.dot, "emit Graphviz DOT");
  app.add_option("--json", opt.json_file, "read the JSON or text payload from a file");

  struct Group {
    const char* name;
    const char* help;
    std::vector<const char*> ops;
    std::function<int(const std::string&, const Context&)> body;
  };
  const std::vector<Group> groups = {
      {"ord", "ordinal arithmetic in Cantor normal form",
       {"parse", "add", "mul", "pow", "natsum", "natprod", "odot", "cmp", "tip", "split", "height"}, cmd_ord},
      {"poset", "finite posets and downset ranks", {"info", "zaguia", "downsets", "lattice", "dot"}, cmd_poset},
      {"hyper", "hyperspaces of finite posets", {"build", "selector", "vietoris", "onepoint"}, cmd_hyper},
      {"space", "height calculus for space terms",
       {"report", "bounds", "hyper-point", "hyper-antichain", "hyper-bound", "monotone"}, cmd_space},
      {"clopen", "clopen sets of ordinal spaces", {"cb", "op", "tip", "treelike", "min"}, cmd_clopen},
      {"mrowka", "almost disjoint families", {"ad", "star", "converge", "selector", "lusin", "join"}, cmd_mrowka},
  };
  std::function<int()> action;
  for (const auto& g : groups) {
    auto* sub = app.add_subcommand(g.name, g.help);
    sub->require_subcommand(1);
    sub->fallthrough();
    for (const char* op : g.ops) {
      auto* leaf = sub->add_subcommand(op);
      leaf->fallthrough();
      leaf->add_option("args", opt.args, "operands");
      leaf->callback([&, op, body = g.body] {
        action = [&, op, body] { return body(op, Context{opt, out}); };
      });
    }
  }
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->fallthrough();
  self->callback([&] { action = [&] { return cmd_selftest(Context{opt, out}); }; });

  std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 takes them reversed
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (*seed_opt) opt.seed = seed;
  if (*horizon_opt) opt.horizon = horizon;
  if (*bound_opt) opt.bound = bound;
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace skula::cli

#endif  // SKULA_CLI_HPP_
