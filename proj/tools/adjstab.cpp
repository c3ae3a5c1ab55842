// adjstab: scenario-driven front end.
//
//   adjstab run SCENARIO [--out DIR] [--precision N]
//   adjstab beta SCENARIO [--t p/q | --t-grid a:b:step] [--out DIR] ...
//
// Every subcommand other than "run" executes only the scenario's tasks of
// that kind.  Exit codes: 0 success, 1 invalid scenario or flags, 2 failure
// inside a computation.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adjstab/report.hpp"
#include "adjstab/scenario.hpp"

namespace {

struct Flags {
  std::string scenario;
  std::string t;
  std::string t_grid;
  std::string m_list;
  std::string out;
  int precision = 12;
};

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("scenario", flags.scenario, "scenario JSON file")->required();
  sub->add_option("--t", flags.t, "single parameter value p/q");
  sub->add_option("--t-grid", flags.t_grid, "parameter grid a/b:c/d:step");
  sub->add_option("--m-list", flags.m_list, "levels, e.g. 1,2,4,8");
  sub->add_option("--out", flags.out, "directory for report.txt and CSV files");
  sub->add_option("--precision", flags.precision, "digits after the point in decimal columns");
}

int execute(const Flags& flags, const std::optional<std::string>& kind) {
  using namespace adjstab;
  try {
    cli::Scenario scenario = cli::load_scenario(flags.scenario);
    if (!flags.t.empty() && !flags.t_grid.empty()) throw cli::ScenarioError("--t and --t-grid are exclusive");
    std::vector<Rational> ts;
    if (!flags.t.empty()) {
      try {
        ts.push_back(Rational::parse(flags.t));
      } catch (const std::invalid_argument& e) {
        throw cli::ScenarioError(std::string("--t: ") + e.what());
      }
    }
    if (!flags.t_grid.empty()) ts = cli::parse_t_grid(flags.t_grid);
    if (!ts.empty()) cli::override_t_values(scenario, ts);
    if (!flags.m_list.empty()) cli::override_m_list(scenario, cli::parse_m_list(flags.m_list));
    if (!ts.empty() || !flags.m_list.empty()) cli::validate(scenario);

    cli::RunOptions options;
    options.precision = flags.precision;
    options.only_kind = kind;
    const cli::RunResult result = cli::run(scenario, options);
    std::cout << result.report_text();
    if (!flags.out.empty()) cli::write_outputs(result, flags.out);
    return 0;
  } catch (const cli::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of adjoint Fano foliated structures"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<std::pair<CLI::App*, std::optional<std::string>>> subs;
  subs.emplace_back(app.add_subcommand("run", "run every task in the scenario"), std::nullopt);
  for (const auto& kind : adjstab::cli::task_kinds()) {
    subs.emplace_back(app.add_subcommand(kind, "run the scenario's '" + kind + "' tasks"), kind);
  }
  for (auto& [sub, kind] : subs) add_common(sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  for (auto& [sub, kind] : subs) {
    if (sub->parsed()) return execute(flags, kind);
  }
  return 1;
}
