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


// ybe-growth: growth series of structure groups and monoids of conjugation
// quandle solutions, with brute-force cross-checks.

#include <ybe/cli/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

void add_common(CLI::App* sub, ybe::cli::RunConfig& cfg) {
  sub->add_option("--solution", cfg.solution, "transpositions | permutations | reflections | dihedral | custom-json")
      ->check(CLI::IsMember({"transpositions", "permutations", "reflections", "dihedral", "custom-json"}));
  sub->add_option("--d", cfg.d, "size parameter d")->check(CLI::PositiveNumber);
  sub->add_option("--order", cfg.order, "truncation order")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_flag("--closed-form", cfg.closed_form, "include the closed form");
  sub->add_flag("--verify", cfg.verify, "compare against the brute-force oracle");
  sub->add_option("--budget-states", cfg.budget_states, "oracle state budget")->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "worker cap; the oracles currently run on one thread")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for randomized sampling");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth series of Yang-Baxter structure groups and monoids"};
  app.set_version_flag("--version", std::string(ybe::kVersion));
  app.require_subcommand(1);

  ybe::cli::RunConfig cfg;
  const std::map<std::string, std::string> commands{
      {"group", "growth series of a structure group"},
      {"monoid", "growth series of a structure monoid"},
      {"defect-table", "class products and nonzero defects"},
      {"egf", "exponential generating function of the transposition monoids"},
      {"normal-form", "canonical word of a monoid element"},
      {"invariants", "orbit invariants of a word"},
      {"verify", "run the acceptance matrix"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    if (name == "monoid") sub->add_option("--input", cfg.input, "quandle JSON for custom-json");
    if (name == "egf") sub->add_option("--order-x", cfg.order_x, "largest d")->check(CLI::NonNegativeNumber);
    if (name == "normal-form" || name == "invariants") {
      sub->add_option("--word", cfg.word, "comma-separated letters, e.g. 0,1,3 or 1-2,2-3")->required();
      sub->add_flag("--infinite", cfg.infinite, "read the word over Z");
    }
    if (name == "verify") sub->add_option("--only", cfg.only, "criterion ids to run");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  // the per-command default family is set after parsing
  cfg.solution.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ybe::cli::kOk : ybe::cli::kUsage;
  }
  if (cfg.solution.empty())
    cfg.solution = cfg.command == "normal-form" || cfg.command == "invariants" ? "reflections" : "transpositions";

  try {
    const auto report = ybe::cli::dispatch(cfg);
    std::cout << ybe::cli::render(report, cfg.format);
    return report.status;
  } catch (const ybe::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ybe::cli::kUsage;
  } catch (const ybe::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return ybe::cli::kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ybe::cli::kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ybe::cli::kUsage;
  }
}
