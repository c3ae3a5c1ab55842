#include "adjstab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "adjstab/finite_level.hpp"
#include "adjstab/invariants.hpp"
#include "adjstab/stability.hpp"
#include "adjstab/testconfig.hpp"

namespace adjstab::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string kind_name(DivisorKind kind) { return kind == DivisorKind::kInvariant ? "invariant" : "transverse"; }

std::string csv_name(std::size_t index, const std::string& kind, const std::string& label = "") {
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "%02zu", index + 1);
  std::string name = std::string(prefix) + "_" + kind;
  if (!label.empty()) name += "_" + label;
  return name + ".csv";
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Runner {
 public:
  Runner(const Scenario& scenario, const RunOptions& options, RunResult& out)
      : scenario_(scenario), precision_(options.precision), out_(out) {}

  void run(std::size_t index, const Task& task) {
    index_ = index;
    std::visit(Overloaded{
                   [&](const BetaTask& t) { beta_task(t); },
                   [&](const IntervalTask& t) { interval_task(t); },
                   [&](const DestabilizeTask& t) { destabilize_task(t); },
                   [&](const AlphaDeltaTask& t) { alpha_delta_task(t); },
                   [&](const DeltaMTask& t) { delta_m_task(t); },
                   [&](const ConvergenceTask& t) { convergence_task(t); },
                   [&](const DfTask& t) { line("df = " + df(t.data).to_string()); },
                   [&](const DingTask& t) { ding_task(t); },
                   [&](const JnaTask& t) { line("jna = " + jna(t.data).to_string()); },
                   [&](const DfBetaTask& t) { df_beta_task(t); },
                   [&](const BlowupTask& t) { blowup_task(t); },
                   [&](const CertifyTask& t) { certify_task(t); },
                   [&](const LctTask& t) { lct_task(t); },
                   [&](const NormalizedVolumeTask& t) { normalized_volume_task(t); },
                   [&](const AlphaVerdictTask& t) {
                     const int n = scenario_.model.dimension();
                     line("alpha_verdict(n=" + std::to_string(n) + ", alpha_lb=" + t.alpha_lower_bound.to_string() +
                          ") = " + to_string(sufficient_alpha_verdict(n, t.alpha_lower_bound)));
                   },
               },
               task);
  }

 private:
  void line(std::string text) { out_.report_lines.push_back(std::move(text)); }

  void csv(const std::string& kind, const CsvTable& table, const std::string& label = "") {
    out_.csv_files[csv_name(index_, kind, label)] = table.render();
  }

  std::vector<ValuationRecord> records(const std::vector<std::string>& labels) const {
    std::vector<ValuationRecord> out;
    if (labels.empty()) {
      for (const auto& v : scenario_.valuations) out.push_back(v.record);
    } else {
      for (const auto& l : labels) out.push_back(scenario_.valuation(l).record);
    }
    return out;
  }

  static std::string join(const std::vector<ValuationRecord>& vs) {
    std::string out;
    for (const auto& v : vs) out += (out.empty() ? "" : ",") + v.label;
    return out;
  }

  void beta_task(const BetaTask& task) {
    for (const auto& v : records(task.labels)) {
      for (const auto& t : task.t_values) {
        const BetaReport r = beta(scenario_.model, v, t);
        line("beta(" + v.label + "; t=" + t.to_string() + ") = " + r.beta.to_string());
        line("  A = " + r.A.to_string() + ", S = " + r.S.to_string() + ", T = " + r.T.to_string() +
             ", j = " + r.j.to_string());
      }
      csv("beta", emit_beta_curve(scenario_.model, v, task.t_values, precision_), v.label);
    }
  }

  void interval_task(const IntervalTask& task) {
    const auto vs = records(task.labels);
    const SemistableInterval result = semistable_interval(scenario_.model, vs);
    line("interval(" + join(vs) + ") = " + result.interval.to_string());
    CsvTable table(concat(concat({"valuation"}, CsvTable::rational_header("intercept")),
                          concat(CsvTable::rational_header("slope"), {"admissible"})));
    const TInterval ample = scenario_.model.ample_range().closed;
    for (const auto& v : vs) {
      const AffineInT f = beta_affine_form(scenario_.model, v);
      line("  beta_affine(" + v.label + ") = " + f.to_string());
      std::vector<std::string> row{v.label};
      append_rational(row, f.intercept, precision_);
      append_rational(row, f.slope, precision_);
      row.push_back(admissible_interval(f, ample).to_string());
      table.add_row(std::move(row));
    }
    if (result.ample_wall) {
      line("  ample wall at t = " + result.ample_wall->to_string() + " (open; closed range ends at " +
           ample.hi().to_string() + ")");
    }
    csv("interval", table);
  }

  void destabilize_task(const DestabilizeTask& task) {
    const auto vs = records(task.labels);
    CsvTable table(concat(concat(concat({"t", "t_decimal", "destabilized", "label"}, CsvTable::rational_header("beta")),
                                 CsvTable::rational_header("delta_ub")),
                          {}));
    for (const auto& t : task.t_values) {
      const DestabilizerVerdict verdict = destabilizer_search(scenario_.model, vs, t);
      line("destabilize(t=" + t.to_string() + ") = " + verdict.to_string());
      std::vector<std::string> row{t.to_string(), t.to_decimal(precision_), verdict.destabilized ? "true" : "false",
                                   verdict.label};
      append_rational(row, verdict.beta, precision_);
      append_rational(row, verdict.delta_ub, precision_);
      table.add_row(std::move(row));
    }
    csv("destabilize", table);
  }

  void alpha_delta_task(const AlphaDeltaTask& task) {
    const auto vs = records(task.labels);
    CsvTable table(concat(concat(CsvTable::rational_header("t"), CsvTable::rational_header("alpha_ub")),
                          concat({"alpha_label"}, concat(CsvTable::rational_header("delta_ub"), {"delta_label"}))));
    for (const auto& t : task.t_values) {
      const CandidateBounds b = alpha_delta_over_candidates(scenario_.model, vs, t);
      line("alpha_delta(t=" + t.to_string() + ") = alpha_ub " + b.alpha_ub.to_string() + " (" + b.alpha_label +
           "), delta_ub " + b.delta_ub.to_string() + " (" + b.delta_label + ")");
      std::vector<std::string> row;
      append_rational(row, t, precision_);
      append_rational(row, b.alpha_ub, precision_);
      row.push_back(b.alpha_label);
      append_rational(row, b.delta_ub, precision_);
      row.push_back(b.delta_label);
      table.add_row(std::move(row));
    }
    csv("alpha-delta", table);
  }

  void delta_m_task(const DeltaMTask& task) {
    std::vector<LevelCandidate> cands;
    const std::vector<std::string> labels = task.labels;
    for (const auto& entry : scenario_.valuations) {
      if (!labels.empty() && std::find(labels.begin(), labels.end(), entry.record.label) == labels.end()) continue;
      cands.push_back({entry.record, *entry.monomial_template});
    }
    CsvTable table(concat(concat(CsvTable::rational_header("t"), {"m"}), CsvTable::rational_header("delta_m")));
    for (const auto& t : task.t_values) {
      for (int m : task.m_list) {
        const Rational value = delta_m(scenario_.model, cands, t, m);
        line("delta_m(t=" + t.to_string() + "; m=" + std::to_string(m) + ") = " + value.to_string());
        std::vector<std::string> row;
        append_rational(row, t, precision_);
        row.push_back(std::to_string(m));
        append_rational(row, value, precision_);
        table.add_row(std::move(row));
      }
    }
    csv("delta-m", table);
  }

  void convergence_task(const ConvergenceTask& task) {
    const ValuationEntry& entry = scenario_.valuation(task.label);
    const Rational c = scenario_.model.hyperplane_coefficient(task.t);
    const auto rows = convergence_report(scenario_.model.dimension(), c, *entry.monomial_template, task.m_list);
    CsvTable table(concat(concat({"m"}, CsvTable::rational_header("S_m")),
                          concat(CsvTable::rational_header("S"), CsvTable::rational_header("gap"))));
    for (const auto& r : rows) {
      line("S_m(" + task.label + "; t=" + task.t.to_string() + "; m=" + std::to_string(r.m) + ") = " +
           r.s_m.to_string() + ", S = " + r.s.to_string() + ", gap = " + r.gap.to_string());
      std::vector<std::string> row{std::to_string(r.m)};
      append_rational(row, r.s_m, precision_);
      append_rational(row, r.s, precision_);
      append_rational(row, r.gap, precision_);
      table.add_row(std::move(row));
    }
    csv("convergence", table, task.label);
  }

  void ding_task(const DingTask& task) {
    TestConfigData data = task.data;
    if (!task.fibre.empty()) {
      data.lct_along_fibre = fibre_lct(data.t, task.fibre);
      line("fibre_lct(t=" + data.t.to_string() + ") = " + data.lct_along_fibre->to_string());
    }
    line("ding = " + ding(data).to_string());
  }

  void df_beta_task(const DfBetaTask& task) {
    CsvTable table(concat(concat({"valuation"}, CsvTable::rational_header("t")),
                          concat(CsvTable::rational_header("beta"), concat(CsvTable::rational_header("Lbar_pow"),
                                                                           CsvTable::rational_header("df")))));
    for (const auto& v : records(task.labels)) {
      for (const auto& t : task.t_values) {
        const DfFromBeta r = df_from_beta(scenario_.model, v, t);
        line("df_from_beta(" + v.label + "; t=" + t.to_string() + ") = " + r.df.to_string() +
             " [Lbar^(n+1) = " + r.Lbar_pow.to_string() + "]");
        std::vector<std::string> row{v.label};
        append_rational(row, t, precision_);
        append_rational(row, r.beta, precision_);
        append_rational(row, r.Lbar_pow, precision_);
        append_rational(row, r.df, precision_);
        table.add_row(std::move(row));
      }
    }
    csv("df-beta", table);
  }

  void blowup_task(const BlowupTask& task) {
    const WeightedBlowup& w = task.blowup;
    const std::string args = "d=" + std::to_string(w.d) + ", r=" + std::to_string(w.r) + ", k=" + w.k.to_string() +
                             ", b=" + w.b.to_string() + ", t=" + task.t.to_string() + ", " + kind_name(w.kind);
    line("blowup_discrepancy(" + args + ") = " + weighted_blowup_discrepancy(w, task.t).to_string());
    if (task.a) {
      const PullbackBound p = weighted_blowup_pullback(w, task.t, *task.a);
      line("blowup_pullback(" + args + ", a=" + task.a->to_string() + ") = " + p.value.to_string() +
           "; bound_ok = " + (p.bound_ok ? "true" : "false"));
    }
  }

  void certify_task(const CertifyTask& task) {
    const Rational eps = epsilon_lc_certificate(task.d, task.volume, task.delta, task.t);
    line("epsilon_lc(d=" + std::to_string(task.d) + ", V=" + task.volume.to_string() + ", delta=" +
         task.delta.to_string() + ", t=" + task.t.to_string() + ") = " + eps.to_string());
  }

  void lct_task(const LctTask& task) {
    DivisorOrders orders;
    for (const auto& [label, order] : task.orders) orders.push_back({scenario_.valuation(label).record, order});
    for (const auto& t : task.t_values) {
      line("lct(t=" + t.to_string() + ") = " + lct_over_candidates(t, orders).to_string());
    }
  }

  void normalized_volume_task(const NormalizedVolumeTask& task) {
    for (const auto& v : records(task.labels)) {
      for (const auto& t : task.t_values) {
        line("normalized_volume(" + v.label + "; t=" + t.to_string() +
             ") = " + normalized_volume(scenario_.model, v, t).to_string());
      }
    }
  }

  const Scenario& scenario_;
  int precision_;
  RunResult& out_;
  std::size_t index_ = 0;
};

}  // namespace

std::vector<std::string> CsvTable::rational_header(const std::string& name) { return {name, name + "_decimal"}; }

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw std::logic_error("CSV row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::render() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(',');
      out += cells[i];
    }
    out.push_back('\n');
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
  return out;
}

void append_rational(std::vector<std::string>& row, const Rational& value, int precision) {
  row.push_back(value.to_string());
  row.push_back(value.to_decimal(precision));
}

CsvTable emit_beta_curve(const FoliatedModel& model, const ValuationRecord& v, std::span<const Rational> t_grid,
                         int precision) {
  std::vector<std::string> header{"valuation"};
  for (const char* name : {"t", "A", "S", "T", "beta"}) header = concat(header, CsvTable::rational_header(name));
  CsvTable table(std::move(header));
  for (const auto& t : t_grid) {
    const BetaReport r = beta(model, v, t);
    std::vector<std::string> row{v.label};
    for (const Rational* x : {&t, &r.A, &r.S, &r.T, &r.beta}) append_rational(row, *x, precision);
    table.add_row(std::move(row));
  }
  return table;
}

std::string RunResult::report_text() const {
  std::string out;
  for (const auto& l : report_lines) out += l + "\n";
  return out;
}

RunResult run(const Scenario& scenario, const RunOptions& options) {
  if (options.precision < 0 || options.precision > 100) throw ScenarioError("precision must lie in [0, 100]");
  RunResult result;
  Runner runner(scenario, options, result);
  for (std::size_t i = 0; i < scenario.tasks.size(); ++i) {
    if (options.only_kind && task_kind(scenario.tasks[i]) != *options.only_kind) continue;
    runner.run(i, scenario.tasks[i]);
  }
  return result;
}

void write_outputs(const RunResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << text;
  };
  write("report.txt", result.report_text());
  for (const auto& [name, text] : result.csv_files) write(name, text);
}

}  // namespace adjstab::cli
