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


#include <ybe/cli/commands.hpp>

#include <catch_amalgamated.hpp>

using namespace ybe;
using namespace ybe::cli;

namespace {

RunConfig config(std::string command, std::string solution, int d, std::size_t order) {
  RunConfig c;
  c.command = std::move(command);
  c.solution = std::move(solution);
  c.d = d;
  c.order = order;
  return c;
}

std::string coeffs(const Json& series) {
  std::string out;
  for (const auto& v : series.at("coeffs")) out += (out.empty() ? "" : ",") + v.get<std::string>();
  return out;
}

}  // namespace

TEST_CASE("group reports", "[cli]") {
  auto c = config("group", "transpositions", 3, 5);
  c.verify = true;
  const auto r = dispatch(c);
  CHECK(r.status == kOk);
  CHECK(coeffs(r.body["expansion"]) == "1,6,8,6,6,6");
  CHECK(r.body["verify"]["pass"].get<bool>());
  CHECK(r.body["config"]["d"] == 3);
  CHECK(r.body["version"] == kVersion);
  CHECK(render(r, "json") == render(dispatch(c), "json"));
  CHECK(render(r, "csv").starts_with("n,coefficient,oracle\n0,1,1\n1,6,6\n"));

  const auto refl = dispatch(config("group", "reflections", 5, 4));
  CHECK(gf_from_json(refl.body["closed_form"]) == RationalGF(Polynomial{1, 0, 4}) + RationalGF(Polynomial{0, 10}, Polynomial{1, -1}));

  const auto s4 = dispatch(config("group", "permutations", 4, 6));
  CHECK(s4.body["defect"]["classification"] == "finite-plus-axis-rays");
  CHECK(s4.body["defect"]["tails"].size() == 1);
  CHECK(s4.body["defect"]["gamma"] == 12);
  CHECK(coeffs(s4.body["expansion"]) == "1,48,453,1886,5268,11896,23512");

  CHECK_THROWS_AS(dispatch(config("group", "permutations", 8, 4)), UsageError);
  CHECK_THROWS_AS(dispatch(config("group", "custom-json", 3, 4)), UsageError);
  auto tight = config("group", "permutations", 4, 8);
  tight.verify = true;
  tight.budget_states = 1000;
  CHECK_THROWS_AS(dispatch(tight), BudgetExceeded);
}

TEST_CASE("monoid reports", "[cli]") {
  auto c = config("monoid", "reflections", 5, 4);
  c.verify = true;
  c.closed_form = true;
  const auto r = dispatch(c);
  CHECK(coeffs(r.body["expansion"]) == "1,5,9,10,10");
  CHECK(r.body["verify"]["pass"].get<bool>());
  CHECK(r.body.contains("closed_form"));
  CHECK_FALSE(dispatch(config("monoid", "reflections", 5, 4)).body.contains("closed_form"));
  CHECK(coeffs(dispatch(config("monoid", "transpositions", 4, 5)).body["expansion"]) == "1,6,17,30,38,42");

  auto custom = config("monoid", "custom-json", 0, 4);
  custom.input = YBE_SAMPLES_DIR "/three_cycles_s4.json";
  const auto cr = dispatch(custom);
  CHECK(cr.body["closed_form"].is_null());
  CHECK(cr.body["counts"] == Json::array({"1", "8", "26", "46", "60"}));
  custom.order = 9;
  custom.budget_states = 100000;
  CHECK(dispatch(custom).status == kBudget);
  custom.input = "/nonexistent.json";
  CHECK_THROWS_AS(dispatch(custom), UsageError);
}

TEST_CASE("defect tables", "[cli]") {
  const auto s3 = dispatch(config("defect-table", "permutations", 3, 3));
  CHECK(s3.body["class_products"] == Json::parse("[[[0],[1],[2]],[[1],[0,1],[2]],[[2],[2],[0,1]]]"));
  CHECK(s3.rows.front() == std::vector<std::string>{"kbar", "product_size", "defect"});

  const auto d5 = dispatch(config("defect-table", "dihedral", 5, 3));
  bool found = false;
  for (const auto& e : d5.body["nonzero_defects"])
    if (e["kbar"] == Json::array({1, 1, 0})) found = e["defect"] == 1;
  CHECK(found);
  CHECK(d5.body["signs"] == "non-negative entries only");
  CHECK_THROWS_AS(dispatch(config("defect-table", "reflections", 5, 3)), UsageError);
}

TEST_CASE("egf, normal forms and invariants", "[cli]") {
  auto e = config("egf", "transpositions", 1, 8);
  e.order_x = 4;
  const auto egf = dispatch(e);
  CHECK(egf.status == kOk);
  CHECK(egf.body["pass"].get<bool>());

  auto nf = config("normal-form", "reflections", 5, 0);
  nf.word = "1,4,1";
  CHECK(dispatch(nf).body["normal_form"]["word"] == "e_4^2 e_3");
  nf.word = "1,x";
  CHECK_THROWS_AS(dispatch(nf), UsageError);
  nf.word = "7";
  CHECK_THROWS_AS(dispatch(nf), UsageError);
  nf.word = "1,-1,1";
  nf.infinite = true;
  CHECK(dispatch(nf).body["normal_form"]["word"] == "e_5^2 e_3");

  auto tn = config("normal-form", "transpositions", 4, 0);
  tn.word = "2-3,1-2,3-4,1-2";
  CHECK(dispatch(tn).body["normal_form"] == "e_(1,2)^2 e_(2,3) e_(3,4)");
  tn.word = "1-1";
  CHECK_THROWS_AS(dispatch(tn), UsageError);

  auto inv = config("invariants", "reflections", 5, 0);
  inv.word = "0,1,3";
  const auto ir = dispatch(inv);
  CHECK(ir.body["invariants"]["weight"] == 2);
  CHECK(ir.body["full_image"]["in_image"] == true);
}

TEST_CASE("verify runs selected criteria", "[cli]") {
  auto c = config("verify", "transpositions", 3, 0);
  c.only = {1, 3};
  const auto r = dispatch(c);
  CHECK(r.status == kOk);
  CHECK(r.body["criteria"].size() == 2);
  CHECK(r.body["all_gating_passed"].get<bool>());
  CHECK_THROWS_AS(dispatch(config("bogus", "transpositions", 3, 0)), UsageError);
}

TEST_CASE("text rendering flattens the report", "[cli]") {
  const auto r = dispatch(config("group", "transpositions", 3, 2));
  const auto text = render(r, "text");
  CHECK(text.find("expansion.coeffs: 1, 6, 8\n") != std::string::npos);
  CHECK(text.find("config.command: group\n") != std::string::npos);
}
