#pragma once

// Scenario files: one JSON document with "model", "valuations" and "tasks".
// Rationals are written as strings ("p/q") so they survive the wire
// exactly; see docs/scenario_format.md.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adjstab/finite_level.hpp"
#include "adjstab/model.hpp"
#include "adjstab/stability.hpp"
#include "adjstab/testconfig.hpp"

namespace adjstab::cli {

/// Malformed or inconsistent scenario input (exit code 1).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValuationEntry {
  ValuationRecord record;
  /// Set for Pn templates that admit a monomial order histogram.
  std::optional<MonomialTemplate> monomial_template;
};

struct BetaTask {
  std::vector<std::string> labels;
  std::vector<Rational> t_values;
};
struct IntervalTask {
  std::vector<std::string> labels;
};
struct DestabilizeTask {
  std::vector<std::string> labels;
  std::vector<Rational> t_values;
};
struct AlphaDeltaTask {
  std::vector<std::string> labels;
  std::vector<Rational> t_values;
};
struct DeltaMTask {
  std::vector<std::string> labels;
  std::vector<Rational> t_values;
  std::vector<int> m_list;
};
struct ConvergenceTask {
  std::string label;
  Rational t;
  std::vector<int> m_list;
};
struct DfTask {
  TestConfigData data;
};
struct DingTask {
  TestConfigData data;
  /// Alternative to data.lct_along_fibre.
  std::vector<FibreComponent> fibre;
};
struct JnaTask {
  TestConfigData data;
};
struct DfBetaTask {
  std::vector<std::string> labels;
  std::vector<Rational> t_values;
};
struct BlowupTask {
  WeightedBlowup blowup;
  Rational t;
  std::optional<Rational> a;
};
struct CertifyTask {
  int d;
  Rational volume;
  /// Defaults to 1 / (d + 1), the alpha bound of t-K-semistable structures.
  Rational delta;
  Rational t;
};
struct LctTask {
  std::vector<std::pair<std::string, Rational>> orders;
  std::vector<Rational> t_values;
};
struct NormalizedVolumeTask {
  std::vector<std::string> labels;
  std::vector<Rational> t_values;
};
struct AlphaVerdictTask {
  Rational alpha_lower_bound;
};

using Task = std::variant<BetaTask, IntervalTask, DestabilizeTask, AlphaDeltaTask, DeltaMTask, ConvergenceTask, DfTask,
                          DingTask, JnaTask, DfBetaTask, BlowupTask, CertifyTask, LctTask, NormalizedVolumeTask,
                          AlphaVerdictTask>;

/// Subcommand / "kind" name of a task.
std::string task_kind(const Task& task);
/// All recognised kinds, in a fixed order.
const std::vector<std::string>& task_kinds();

struct Scenario {
  std::string name;
  FoliatedModel model;
  std::vector<ValuationEntry> valuations;
  std::vector<Task> tasks;

  const ValuationEntry& valuation(std::string_view label) const;
};

Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// "a/b:c/d:step" -> a/b, a/b + step, ..., up to c/d inclusive.
std::vector<Rational> parse_t_grid(std::string_view spec);
/// "1,2,4,8"
std::vector<int> parse_m_list(std::string_view spec);

/// Replaces the t values (and m lists) of every task that takes them.
void override_t_values(Scenario& scenario, const std::vector<Rational>& t_values);
void override_m_list(Scenario& scenario, const std::vector<int>& m_list);

/// Checks labels and t ranges; throws ScenarioError.
void validate(const Scenario& scenario);

}  // namespace adjstab::cli
