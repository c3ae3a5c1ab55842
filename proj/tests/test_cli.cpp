#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "adjstab/report.hpp"
#include "adjstab/scenario.hpp"
#include "support.hpp"

using namespace adjstab;
using namespace adjstab::cli;
using adjstab::testing::r;

namespace fs = std::filesystem;

namespace {

fs::path scenario_path(const std::string& name) { return fs::path(ADJSTAB_SCENARIO_DIR) / (name + ".json"); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ADJSTAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path temp_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("adjstab_test_" + name);
  fs::remove_all(p);
  return p;
}

const char* kMinimal = R"({
  "model": {"type": "projective", "n": 2, "d_X": "3", "d_F": "1"},
  "valuations": [{"label": "l", "template": "hyperplane", "invariant": true}],
  "tasks": [TASKS]
})";

std::string with_tasks(const std::string& tasks) {
  std::string s = kMinimal;
  s.replace(s.find("TASKS"), 5, tasks);
  return s;
}

}  // namespace

TEST(Scenario, RadialReportLine) {
  const auto result = run(load_scenario(scenario_path("radial_p2")), RunOptions{});
  EXPECT_NE(std::find(result.report_lines.begin(), result.report_lines.end(),
                      "beta(invariant_line; t=1/3) = -1/9"),
            result.report_lines.end());
  EXPECT_NE(std::find(result.report_lines.begin(), result.report_lines.end(), "interval(invariant_line) = [0, 0]"),
            result.report_lines.end());
}

TEST(Scenario, CubicFourfoldCsv) {
  const auto result = run(load_scenario(scenario_path("cubic_fourfold")), RunOptions{});
  const auto it = result.csv_files.find("01_beta_pencil_member.csv");
  ASSERT_NE(it, result.csv_files.end());
  const auto rows = parse_csv(it->second);
  ASSERT_GT(rows.size(), 2u);
  const std::size_t ti = column(rows[0], "t"), bi = column(rows[0], "beta"), bd = column(rows[0], "beta_decimal");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Rational t = r(rows[i][ti].c_str());
    const Rational expected = (Rational(2) - Rational(3) * t) / Rational(5);
    EXPECT_EQ(r(rows[i][bi].c_str()), expected);
    EXPECT_EQ(rows[i][bd], expected.to_decimal(12));
  }
  EXPECT_EQ(rows.size(), 14u);
}

TEST(Scenario, EmptyTaskList) {
  const auto result = run(load_scenario(scenario_path("empty")), RunOptions{});
  EXPECT_TRUE(result.report_lines.empty());
  EXPECT_TRUE(result.csv_files.empty());
  EXPECT_EQ(result.report_text(), "");
}

TEST(Scenario, EveryDecimalHasExactTwin) {
  for (const char* name : {"radial_p2", "cubic_fourfold", "cubic_pencil"}) {
    const auto result = run(load_scenario(scenario_path(name)), RunOptions{});
    for (const auto& [file, text] : result.csv_files) {
      const auto rows = parse_csv(text);
      const auto& header = rows.front();
      for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string suffix = "_decimal";
        if (header[c].size() <= suffix.size() || header[c].substr(header[c].size() - suffix.size()) != suffix) continue;
        const std::string exact = header[c].substr(0, header[c].size() - suffix.size());
        ASSERT_GT(c, 0u);
        EXPECT_EQ(header[c - 1], exact) << file;
        for (std::size_t i = 1; i < rows.size(); ++i) {
          EXPECT_EQ(r(rows[i][c - 1].c_str()).to_decimal(12), rows[i][c]) << file;
        }
      }
    }
  }
}

TEST(BetaCurve, Examples) {
  const auto radial = make_pn_model(2, Rational(3), Rational(1));
  const auto line = hyperplane_valuation(radial, "invariant_line", true, Rational(0), Rational(0));
  const std::vector<Rational> grid{Rational(0), r("1/4"), r("1/2")};
  auto table = emit_beta_curve(radial, line, grid, 12);
  ASSERT_EQ(table.row_count(), 3u);
  const auto rows = parse_csv(table.render());
  const std::size_t bi = column(rows[0], "beta");
  EXPECT_EQ(rows[1][bi], "0");
  EXPECT_EQ(rows[2][bi], "-1/12");
  EXPECT_EQ(rows[3][bi], "-1/6");
  EXPECT_EQ(emit_beta_curve(radial, line, std::vector<Rational>{Rational(0)}, 12).row_count(), 1u);
  const auto cf = make_pn_model(4, Rational(3), Rational(1), Rational(3));
  const auto d = hyperplane_valuation(cf, "d", true, Rational(0), Rational(0));
  const auto root = parse_csv(emit_beta_curve(cf, d, std::vector<Rational>{r("2/3")}, 12).render());
  EXPECT_EQ(root[1][column(root[0], "beta")], "0");
  const auto pencil = make_pn_model(2, Rational(3), Rational(-3));
  const auto member = hyperplane_valuation(pencil, "m", true, Rational(0), Rational(0), Rational(3));
  EXPECT_THROW(emit_beta_curve(pencil, member, std::vector<Rational>{r("3/4")}, 12), std::domain_error);
}

TEST(Csv, RenderingIsLfAndChecksWidth) {
  CsvTable table({"a", "b"});
  table.add_row({"1", "2"});
  EXPECT_EQ(table.render(), "a,b\n1,2\n");
  EXPECT_THROW(table.add_row({"1"}), std::logic_error);
}

TEST(Flags, TGridAndMList) {
  EXPECT_EQ(parse_t_grid("0:1/2:1/4"), (std::vector<Rational>{Rational(0), r("1/4"), r("1/2")}));
  EXPECT_EQ(parse_t_grid("1/3:1/3:1/9"), (std::vector<Rational>{r("1/3")}));
  EXPECT_EQ(parse_t_grid("0:1:1/24").size(), 25u);
  EXPECT_THROW(parse_t_grid("0:1:0"), ScenarioError);
  EXPECT_THROW(parse_t_grid("1:0:1/2"), ScenarioError);
  EXPECT_THROW(parse_t_grid("0:1"), ScenarioError);
  EXPECT_EQ(parse_m_list("1,2,4,8"), (std::vector<int>{1, 2, 4, 8}));
  EXPECT_THROW(parse_m_list("1,0"), ScenarioError);
  EXPECT_THROW(parse_m_list("a"), ScenarioError);
}

TEST(Validation, Errors) {
  EXPECT_THROW(parse_scenario("{"), ScenarioError);
  EXPECT_THROW(parse_scenario(with_tasks(R"({"kind": "beta", "valuations": ["nope"], "t": "0"})")), ScenarioError);
  EXPECT_THROW(parse_scenario(with_tasks(R"({"kind": "beta", "t": "3/2"})")), ScenarioError);
  EXPECT_THROW(parse_scenario(with_tasks(R"({"kind": "beta", "t": 0.5})")), ScenarioError);
  EXPECT_THROW(parse_scenario(with_tasks(R"({"kind": "frobnicate"})")), ScenarioError);
  EXPECT_THROW(parse_scenario(with_tasks(R"({"kind": "blowup", "d": 2, "r": 2, "k": "1", "b": "1",
                                            "case": "invariant", "t": "0"})")),
               ScenarioError);
  EXPECT_THROW(parse_scenario(with_tasks(R"({"kind": "lct", "orders": {"l": "0"}, "t": "0"})")), ScenarioError);
  EXPECT_NO_THROW(parse_scenario(with_tasks(R"({"kind": "beta", "t": "1/2"})")));
  EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), ScenarioError);
}

TEST(Validation, OverridesAreRevalidated) {
  auto s = parse_scenario(with_tasks(R"({"kind": "beta", "t": "1/2"})"));
  override_t_values(s, {r("1/3"), r("2/3")});
  EXPECT_NO_THROW(validate(s));
  const auto result = run(s, RunOptions{});
  EXPECT_EQ(result.report_lines.front(), "beta(l; t=1/3) = -1/9");
  override_t_values(s, {Rational(2)});
  EXPECT_THROW(validate(s), ScenarioError);
}

TEST(Cli, ExitCodesAndDeterminism) {
  const fs::path a = temp_dir("a"), b = temp_dir("b");
  const std::string radial = scenario_path("radial_p2").string();
  EXPECT_EQ(run_cli("run " + radial + " --out " + a.string()), 0);
  EXPECT_EQ(run_cli("run " + radial + " --out " + b.string()), 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(read_file(entry.path()), read_file(b / entry.path().filename())) << entry.path();
  }
  EXPECT_GT(files, 5u);
  EXPECT_NE(read_file(a / "report.txt").find("beta(invariant_line; t=1/3) = -1/9\n"), std::string::npos);

  EXPECT_EQ(run_cli("run " + scenario_path("empty").string() + " --out " + a.string() + "_empty"), 0);
  EXPECT_EQ(read_file(a.string() + "_empty/report.txt"), "");

  EXPECT_EQ(run_cli("beta " + radial + " --t 3/2"), 1);
  EXPECT_EQ(run_cli("beta " + radial + " --t zz"), 1);
  EXPECT_EQ(run_cli("beta /nonexistent.json"), 1);
  EXPECT_EQ(run_cli("interval " + scenario_path("cubic_pencil").string()), 0);
  EXPECT_EQ(run_cli("beta " + scenario_path("cubic_pencil").string() + " --t 1/2"), 1);

  const fs::path bad = temp_dir("bad.json");
  std::ofstream(bad) << R"({"model": {"type": "projective", "n": 2, "d_X": "3", "d_F": "1"},
    "tasks": [{"kind": "jna", "data": {"n": 2, "V": "1", "Lbar_pow": "3", "L_mu_pullback": "0"}}]})";
  EXPECT_EQ(run_cli("run " + bad.string()), 2);
}

TEST(Cli, SubcommandFiltersAndPrecision) {
  const fs::path out = temp_dir("sub");
  EXPECT_EQ(run_cli("beta " + scenario_path("cubic_fourfold").string() + " --t-grid 0:1:1/3 --precision 4 --out " +
                    out.string()),
            0);
  const auto rows = parse_csv(read_file(out / "01_beta_pencil_member.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[2][column(rows[0], "beta_decimal")], "0.2000");
  EXPECT_FALSE(fs::exists(out / "02_destabilize.csv"));
}
