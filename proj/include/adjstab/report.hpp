#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjstab/model.hpp"
#include "adjstab/rational.hpp"
#include "adjstab/scenario.hpp"

namespace adjstab::cli {

/// Comma-separated, header row, LF line endings.  Rational columns come in
/// pairs: exact "p/q" followed by a fixed-precision decimal.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  /// Header for a rational column: {name, name_decimal}.
  static std::vector<std::string> rational_header(const std::string& name);

  void add_row(std::vector<std::string> row);
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void append_rational(std::vector<std::string>& row, const Rational& value, int precision);

/// Rows (t, A, S, T, beta) along the grid; every grid point must be ample.
CsvTable emit_beta_curve(const FoliatedModel& model, const ValuationRecord& v, std::span<const Rational> t_grid,
                         int precision);

struct RunOptions {
  int precision = 12;
  /// Restrict to tasks of this kind (a subcommand).
  std::optional<std::string> only_kind;
};

struct RunResult {
  std::vector<std::string> report_lines;
  /// file name -> contents; ordered so output is deterministic.
  std::map<std::string, std::string> csv_files;

  std::string report_text() const;
};

/// Runs the scenario's tasks in order.  Validation problems surface as
/// ScenarioError; failures inside the computations propagate unchanged.
RunResult run(const Scenario& scenario, const RunOptions& options);

/// Writes report.txt and the CSV files into `dir`, creating it if needed.
void write_outputs(const RunResult& result, const std::filesystem::path& dir);

}  // namespace adjstab::cli
