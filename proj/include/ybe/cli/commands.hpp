/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file commands.hpp
 *
 * The command layer behind the ybe-growth executable. Each command turns a
 * RunConfig into a Report: a JSON body, optional CSV rows and an exit status.
 * Reports contain no timing except in `verify`, so equal configs give
 * byte-identical output.
 */

#pragma once

#include <ybe/algebra/conjugacy.hpp>
#include <ybe/algebra/group_table.hpp>
#include <ybe/algebra/quandle.hpp>
#include <ybe/budget.hpp>
#include <ybe/growth/class2.hpp>
#include <ybe/growth/defect.hpp>
#include <ybe/oracle/ball.hpp>
#include <ybe/oracle/orbit.hpp>
#include <ybe/reflection/frs.hpp>
#include <ybe/reflection/invariants.hpp>
#include <ybe/reflection/normal_form.hpp>
#include <ybe/series/json.hpp>
#include <ybe/transposition/monoid.hpp>
#include <ybe/verify/acceptance.hpp>
#include <ybe/version.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

/// Bad flags, unsupported (family, d) combinations, malformed words.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string solution = "transpositions";
  int d = 3;
  std::size_t order = 8;
  /// Largest d for the exponential generating function.
  std::size_t order_x = 4;
  std::string format = "json";
  bool closed_form = false;
  bool verify = false;
  std::optional<std::uint64_t> budget_states;
  unsigned threads = 1;
  std::uint64_t seed = 20260101;
  std::string word;
  bool infinite = false;
  /// JSON quandle for the custom-json family.
  std::string input;
  std::vector<int> only;
};

struct Report {
  Json body;
  /// CSV rows, header first; empty when the command has no natural table.
  std::vector<std::vector<std::string>> rows;
  int status = kOk;
};

inline Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["solution"] = c.solution;
  j["d"] = c.d;
  j["order"] = c.order;
  if (c.command == "egf") j["order_x"] = c.order_x;
  j["format"] = c.format;
  j["closed_form"] = c.closed_form;
  j["verify"] = c.verify;
  if (c.budget_states) j["budget_states"] = *c.budget_states;
  j["threads"] = c.threads;
  j["seed"] = c.seed;
  if (!c.word.empty()) j["word"] = c.word;
  if (c.infinite) j["infinite"] = true;
  if (!c.input.empty()) j["input"] = c.input;
  return j;
}

namespace detail {

inline Report start(const RunConfig& c) {
  Report r;
  r.body["version"] = kVersion;
  r.body["config"] = config_json(c);
  return r;
}

inline std::uint64_t budget(const RunConfig& c, std::uint64_t fallback) {
  return c.budget_states ? *c.budget_states : budget_from_env(fallback);
}

inline Json gf_json(const RationalGF& gf) {
  const RationalGF red = gf.reduced();
  Json j = to_json(red);
  j["text"] = red.to_string();
  return j;
}

inline std::vector<std::string> strings(const TruncatedSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

inline std::vector<std::vector<std::string>> series_rows(const TruncatedSeries& s,
                                                         const std::vector<std::string>& oracle = {}) {
  std::vector<std::vector<std::string>> rows{{"n", "coefficient"}};
  if (!oracle.empty()) rows.front().push_back("oracle");
  for (std::size_t n = 0; n <= s.order(); ++n) {
    rows.push_back({std::to_string(n), to_string(s[n])});
    if (!oracle.empty()) rows.back().push_back(n < oracle.size() ? oracle[n] : "");
  }
  return rows;
}

template <typename T>
std::vector<std::string> number_strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

/// Compares the expansion with oracle values over the oracle's lengths.
inline Json comparison(const std::string& oracle, const std::vector<std::string>& expected,
                       const std::vector<std::string>& actual, bool complete) {
  Json j;
  j["oracle"] = oracle;
  j["expected"] = std::vector<std::string>(expected.begin(),
                                           expected.begin() + static_cast<std::ptrdiff_t>(actual.size()));
  j["actual"] = actual;
  j["complete"] = complete;
  bool pass = actual.size() <= expected.size();
  for (std::size_t i = 0; pass && i < actual.size(); ++i) pass = expected[i] == actual[i];
  j["pass"] = pass;
  return j;
}

inline void require_d(const RunConfig& c, int lo, int hi, const std::string& what) {
  if (c.d < lo || c.d > hi)
    throw UsageError(what + " needs " + std::to_string(lo) + " <= d <= " + std::to_string(hi));
}

inline FiniteGroupTable full_conjugation_group(const RunConfig& c) {
  if (c.solution == "permutations") {
    require_d(c, 2, 7, "permutations");
    return make_symmetric_group(c.d);
  }
  require_d(c, 3, 1000, "dihedral");
  return make_dihedral_group(c.d);
}

inline std::vector<Element> every_element(const FiniteGroupTable& g) {
  std::vector<Element> v(g.order());
  for (Element x = 0; x < g.order(); ++x) v[x] = x;
  return v;
}

inline Json defect_json(const DefectContext& ctx, const FiniteGroupTable& g, const DefectSeriesResult& res) {
  Json j;
  j["classification"] = to_string(res.classification);
  j["gamma"] = ctx.gamma();
  Json classes = Json::array();
  const auto& dec = ctx.decomposition();
  for (std::size_t i = 0; i < dec.count(); ++i)
    classes.push_back({{"index", i},
                       {"size", dec.size(i)},
                       {"representative", g.label(dec.representative(i))},
                       {"inverse", dec.inverse_class[i]}});
  j["classes"] = std::move(classes);
  j["truncated"] = to_json(res.truncated);
  if (res.closed_form) {
    j["closed_form"] = gf_json(*res.closed_form);
    j["polynomial_part"] = to_json(res.polynomial_part);
    Json tails = Json::array();
    for (const auto& t : res.tails)
      tails.push_back({{"class", t.cls}, {"period", t.period}, {"numerator", to_json(t.numerator)}});
    j["tails"] = std::move(tails);
  } else {
    j["closed_form"] = nullptr;
  }
  j["diagnostics"] = res.diagnostics;
  return j;
}

inline std::vector<std::int64_t> parse_integers(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string tok = item.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed letter '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("malformed letter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

/// "1-2,2-3" with 1-based points.
inline TranspositionWord parse_transposition_word(const std::string& text, int d) {
  TranspositionWord w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("transposition letters are written i-j");
    const auto ij = parse_integers(item.substr(0, dash) + "," + item.substr(dash + 1));
    if (ij.size() != 2 || ij[0] < 1 || ij[1] < 1 || ij[0] > d || ij[1] > d || ij[0] == ij[1])
      throw UsageError("invalid transposition '" + item + "' for d = " + std::to_string(d));
    w.push_back(make_transposition(static_cast<int>(ij[0] - 1), static_cast<int>(ij[1] - 1)));
  }
  return w;
}

inline ReflectionWord parse_reflection_word(const RunConfig& c) {
  auto letters = parse_integers(c.word);
  if (c.infinite) return ReflectionWord::infinite(std::move(letters));
  if (c.d < 1) throw UsageError("reflection words need d >= 1 or --infinite");
  for (const auto x : letters)
    if (x < 0 || x >= c.d) throw UsageError("letter " + std::to_string(x) + " out of range for d = " + std::to_string(c.d));
  return ReflectionWord::finite(std::move(letters), c.d);
}

inline Json invariants_json(const InvariantTuple& t) {
  Json j;
  j["weight"] = t.weight;
  j["density"] = t.density;
  j["anchor"] = t.anchor;
  j["essential_even"] = t.ess_even;
  j["essential_odd"] = t.ess_odd;
  j["length"] = t.length;
  j["modulus"] = t.modulus == 0 ? Json("infinity") : Json(t.modulus);
  return j;
}

inline Json fts_block_json(const TranspositionWord& w, int d) {
  Json blocks = Json::array();
  const SetPartition p = word_partition(w, d);
  for (const auto& block : p.blocks()) {
    if (block.size() < 2) continue;
    std::vector<int> local(static_cast<std::size_t>(d), -1);
    for (std::size_t i = 0; i < block.size(); ++i) local[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
    // product of the block's letters as a permutation of all d points
    Permutation g = Permutation::identity(d);
    std::int64_t length = 0;
    for (const auto& t : w)
      if (local[static_cast<std::size_t>(t.i)] >= 0) {
        g = g * Permutation::transposition(d, t.i, t.j);
        ++length;
      }
    std::vector<int> points;
    for (const int x : block) points.push_back(x + 1);
    blocks.push_back({{"points", points}, {"permutation", g.to_string()}, {"length", length}});
  }
  return blocks;
}

}  // namespace detail

inline Report cmd_group(const RunConfig& c) {
  Report r = detail::start(c);
  std::optional<RationalGF> closed;
  TruncatedSeries expansion(c.order);
  std::vector<std::string> oracle;
  bool complete = true;
  const std::uint64_t ball_budget = detail::budget(c, kDefaultBallBudget);

  if (c.solution == "transpositions") {
    detail::require_d(c, 2, 8, "transpositions");
    closed = as_transpositions_group_gf(c.d);
    expansion = closed->expand(c.order);
    if (c.verify) {
      const auto g = make_symmetric_group(c.d);
      std::vector<Element> ts;
      for (Element x = 0; x < g.order(); ++x)
        if (symmetric_element(c.d, x).transposition_length() == 1) ts.push_back(x);
      oracle = detail::number_strings(group_ball_enumerate(g, conjugation_embedding(g, ts), c.order, ball_budget).sphere_sizes);
    }
  } else if (c.solution == "reflections") {
    detail::require_d(c, 2, 1000, "reflections");
    closed = as_reflections_group_gf(c.d);
    expansion = closed->expand(c.order);
    if (c.verify) {
      const auto g = make_dihedral_group(c.d);
      std::vector<Element> refl;
      for (int j = 0; j < c.d; ++j) refl.push_back(static_cast<Element>(c.d + j));
      oracle = detail::number_strings(group_ball_enumerate(g, conjugation_embedding(g, refl), c.order, ball_budget).sphere_sizes);
    }
  } else if (c.solution == "permutations" || c.solution == "dihedral") {
    const auto g = detail::full_conjugation_group(c);
    const DefectContext ctx(g);
    if (!has_commutator_length_one(g, ctx.decomposition()))
      throw UsageError("the defect formula needs commutator length 1, which fails for this group");
    const auto f = as_full_conjugation_gf(g, c.order, detail::budget(c, kDefaultDefectBudget));
    closed = f.closed_form;
    expansion = f.truncated;
    r.body["classes"] = f.classes;
    r.body["defect"] = detail::defect_json(ctx, g, f.defect);
    if (!closed) r.body["warning"] = "defect support is not axis-parallel; only the truncated series is exact";
    if (c.verify)
      oracle = detail::number_strings(
          group_ball_enumerate(g, conjugation_embedding(g, detail::every_element(g)), c.order, ball_budget).sphere_sizes);
  } else {
    throw UsageError("group needs --solution transpositions, reflections, permutations or dihedral");
  }

  r.body["closed_form"] = closed ? detail::gf_json(*closed) : Json(nullptr);
  r.body["expansion"] = to_json(expansion);
  if (c.verify) {
    r.body["verify"] = detail::comparison("ball", detail::strings(expansion), oracle, complete);
    if (!r.body["verify"]["pass"].get<bool>()) r.status = kVerifyFailed;
  }
  r.rows = detail::series_rows(expansion, oracle);
  return r;
}

inline Report cmd_monoid(const RunConfig& c) {
  Report r = detail::start(c);
  const std::uint64_t word_budget = detail::budget(c, kDefaultWordBudget);
  if (c.solution == "custom-json") {
    if (c.input.empty()) throw UsageError("custom-json needs --input FILE");
    std::ifstream in(c.input);
    if (!in) throw UsageError("cannot read " + c.input);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed quandle JSON: ") + e.what());
    }
    const QuandleSolution q = quandle_from_json(doc);
    const auto en = monoid_orbit_enumerate(q, c.order, word_budget, c.input);
    r.body["closed_form"] = nullptr;
    r.body["note"] = "no closed form; counts come from the orbit oracle";
    r.body["counts"] = detail::number_strings(en.counts);
    r.body["complete"] = en.complete;
    if (!en.complete) {
      r.body["cutoff"] = en.cutoff;
      r.status = kBudget;
    }
    r.rows = {{"n", "oracle"}};
    for (std::size_t n = 0; n < en.counts.size(); ++n) r.rows.push_back({std::to_string(n), std::to_string(en.counts[n])});
    return r;
  }

  RationalGF gf;
  QuandleSolution sol = reflection_solution(1);
  if (c.solution == "transpositions") {
    detail::require_d(c, 1, 12, "transpositions");
    gf = monoid_growth_transpositions(c.d);
    if (c.verify) {
      if (c.d < 2) throw UsageError("the orbit oracle needs d >= 2 for transpositions");
      sol = transposition_solution(c.d);
    }
  } else if (c.solution == "reflections") {
    detail::require_d(c, 1, 1'000'000, "reflections");
    gf = monoid_growth_reflections(c.d);
    if (c.verify) {
      if (c.d > 4096) throw UsageError("the orbit oracle needs d <= 4096");
      sol = reflection_solution(c.d);
    }
  } else {
    throw UsageError("monoid needs --solution transpositions, reflections or custom-json");
  }
  const TruncatedSeries expansion = gf.expand(c.order);
  if (c.closed_form) r.body["closed_form"] = detail::gf_json(gf);
  r.body["expansion"] = to_json(expansion);
  std::vector<std::string> oracle;
  if (c.verify) {
    const auto en = monoid_orbit_enumerate(sol, c.order, word_budget);
    oracle = detail::number_strings(en.counts);
    r.body["verify"] = detail::comparison("orbit", detail::strings(expansion), oracle, en.complete);
    if (!en.complete) r.body["verify"]["cutoff"] = en.cutoff;
    if (!r.body["verify"]["pass"].get<bool>()) r.status = kVerifyFailed;
    else if (!en.complete) r.status = kBudget;
  }
  r.rows = detail::series_rows(expansion, oracle);
  return r;
}

inline Report cmd_defect_table(const RunConfig& c) {
  Report r = detail::start(c);
  if (c.solution != "permutations" && c.solution != "dihedral")
    throw UsageError("defect-table needs --solution permutations or dihedral");
  const auto g = detail::full_conjugation_group(c);
  const DefectContext ctx(g);
  const auto& dec = ctx.decomposition();
  Json table = Json::array();
  for (std::size_t i = 0; i < dec.count(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < dec.count(); ++j) {
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < dec.count(); ++k)
        if ((ctx.table().at(i, j) >> k) & 1U) members.push_back(k);
      row.push_back(members);
    }
    table.push_back(std::move(row));
  }
  const auto res = defect_series(ctx, c.order, detail::budget(c, kDefaultDefectBudget));
  r.body["defect"] = detail::defect_json(ctx, g, res);
  r.body["class_products"] = std::move(table);

  // nonzero defects with |k|_1 <= order; non-negative entries suffice when
  // every class is its own inverse
  const bool nonneg = dec.all_self_inverse();
  const std::size_t rank = ctx.rank();
  const auto bound = static_cast<std::int64_t>(c.order);
  Json defects = Json::array();
  r.rows = {{"kbar", "product_size", "defect"}};
  std::vector<std::int64_t> k(rank, 0);
  std::uint64_t visited = 0;
  const std::uint64_t limit = detail::budget(c, kDefaultDefectBudget);
  auto walk = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == rank) {
      if (++visited > limit) throw BudgetExceeded("defect table exceeded its state budget");
      const auto rec = ctx.measure(k);
      if (rec.defect == 0) return;
      std::string key;
      for (std::size_t q = 0; q < rank; ++q) key += (q ? ";" : "") + std::to_string(k[q]);
      defects.push_back({{"kbar", k}, {"product_size", rec.product_size}, {"defect", rec.defect}});
      r.rows.push_back({key, std::to_string(rec.product_size), std::to_string(rec.defect)});
      return;
    }
    for (std::int64_t v = nonneg ? 0 : -left; v <= left; ++v) {
      k[i] = v;
      self(self, i + 1, left - (v < 0 ? -v : v));
    }
    k[i] = 0;
  };
  walk(walk, 0, bound);
  r.body["nonzero_defects"] = std::move(defects);
  r.body["signs"] = nonneg ? "non-negative entries only" : "all signs";
  return r;
}

inline Report cmd_egf(const RunConfig& c) {
  Report r = detail::start(c);
  if (c.order_x > 12) throw UsageError("egf cross-check needs order-x <= 12");
  const auto egf = egf_transposition_monoids(c.order, c.order_x);
  Json rows = Json::array();
  r.rows = {{"d", "n", "d!*coefficient", "expected"}};
  bool all = true;
  for (std::size_t d = 0; d <= c.order_x; ++d) {
    const auto expected = monoid_growth_transpositions(static_cast<int>(d)).expand(c.order);
    std::vector<std::string> got, want;
    for (std::size_t n = 0; n <= c.order; ++n) {
      got.push_back(to_string(egf.at(n, d) * factorial(static_cast<unsigned>(d))));
      want.push_back(to_string(expected[n]));
      r.rows.push_back({std::to_string(d), std::to_string(n), got.back(), want.back()});
    }
    const bool pass = got == want;
    all = all && pass;
    rows.push_back({{"d", d}, {"coefficients", got}, {"expected", want}, {"pass", pass}});
  }
  r.body["egf"] = std::move(rows);
  r.body["pass"] = all;
  if (!all) r.status = kVerifyFailed;
  return r;
}

inline Report cmd_normal_form(const RunConfig& c) {
  Report r = detail::start(c);
  if (c.solution == "transpositions") {
    detail::require_d(c, 2, 64, "transpositions");
    const auto w = detail::parse_transposition_word(c.word, c.d);
    const auto nf = transposition_normal_form(w, c.d);
    r.body["input"] = to_string(w);
    r.body["partition"] = word_partition(w, c.d).to_string();
    r.body["blocks"] = detail::fts_block_json(w, c.d);
    r.body["normal_form"] = to_string(nf);
    r.rows = {{"input", "normal_form"}, {to_string(w), to_string(nf)}};
    return r;
  }
  if (c.solution != "reflections") throw UsageError("normal-form needs --solution reflections or transpositions");
  const ReflectionWord w = detail::parse_reflection_word(c);
  const NormalForm nf = normal_form(w);
  r.body["input"] = to_string(w);
  r.body["invariants"] = detail::invariants_json(invariants(w));
  Json j;
  j["shape"] = to_string(nf.shape);
  if (nf.shape == NormalShape::Standard) {
    j["k"] = nf.k;
    j["l"] = nf.l;
    j["c"] = nf.c;
  }
  j["scale"] = nf.scale;
  j["shift"] = nf.shift;
  j["word"] = to_string(nf.word);
  j["letters"] = nf.word.letters;
  r.body["normal_form"] = std::move(j);
  r.rows = {{"input", "normal_form"}, {to_string(w), to_string(nf.word)}};
  return r;
}

inline Report cmd_invariants(const RunConfig& c) {
  Report r = detail::start(c);
  if (c.solution == "transpositions") {
    detail::require_d(c, 2, 64, "transpositions");
    const auto w = detail::parse_transposition_word(c.word, c.d);
    r.body["input"] = to_string(w);
    r.body["partition"] = word_partition(w, c.d).to_string();
    r.body["blocks"] = detail::fts_block_json(w, c.d);
    return r;
  }
  if (c.solution != "reflections") throw UsageError("invariants needs --solution reflections or transpositions");
  const ReflectionWord w = detail::parse_reflection_word(c);
  const InvariantTuple t = invariants(w);
  r.body["input"] = to_string(w);
  r.body["invariants"] = detail::invariants_json(t);
  r.rows = {{"weight", "density", "anchor", "essential_even", "essential_odd", "length"},
            {std::to_string(t.weight), std::to_string(t.density), std::to_string(t.anchor),
             std::to_string(t.ess_even), std::to_string(t.ess_odd), std::to_string(t.length)}};
  if (!w.is_infinite() && !w.letters.empty() && t.density == 1) {
    const FRSImage img = frs_embed(w);
    r.body["full_image"] = {{"weight", img.weight}, {"first", img.first}, {"second", img.second},
                            {"in_image", frs_image_contains(w.modulus, img)}};
  }
  return r;
}

inline Report cmd_verify(const RunConfig& c) {
  Report r = detail::start(c);
  const auto results = run_acceptance({c.seed, c.only});
  Json arr = Json::array();
  bool ok = true;
  r.rows = {{"id", "title", "passed", "seconds", "limit_seconds"}};
  for (const auto& res : results) {
    arr.push_back(to_json(res));
    if (res.gating && !res.passed) ok = false;
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << res.seconds;
    r.rows.push_back({std::to_string(res.id), res.title, res.passed ? "true" : "false", secs.str(),
                      std::to_string(static_cast<int>(res.limit_seconds))});
  }
  r.body["criteria"] = std::move(arr);
  r.body["all_gating_passed"] = ok;
  if (!ok) r.status = kVerifyFailed;
  return r;
}

inline Report dispatch(const RunConfig& c) {
  if (c.order > 100'000) throw UsageError("order is unreasonably large");
  if (c.command == "group") return cmd_group(c);
  if (c.command == "monoid") return cmd_monoid(c);
  if (c.command == "defect-table") return cmd_defect_table(c);
  if (c.command == "egf") return cmd_egf(c);
  if (c.command == "normal-form") return cmd_normal_form(c);
  if (c.command == "invariants") return cmd_invariants(c);
  if (c.command == "verify") return cmd_verify(c);
  throw UsageError("unknown command '" + c.command + "'");
}

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void flatten(const Json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (v.is_array()) {
    bool scalars = true;
    for (const auto& x : v) scalars = scalars && !x.is_structured();
    if (scalars) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
      out << path << ": " << s << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << scalar_text(v) << "\n";
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace detail

inline std::string render(const Report& r, const std::string& format) {
  if (format == "json") return r.body.dump(2) + "\n";
  std::ostringstream out;
  if (format == "csv" && !r.rows.empty()) {
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_cell(row[i]);
      out << "\n";
    }
    return out.str();
  }
  detail::flatten(r.body, "", out);
  return out.str();
}

}  // namespace ybe::cli
