#include "adjstab/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace adjstab::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ScenarioError(where + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, "missing key '" + key + "'");
  return obj.at(key);
}

Rational to_rational(const json& value, const std::string& where) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational string \"p/q\"");
}

Rational rational_at(const json& obj, const std::string& key, const std::string& where) {
  return to_rational(require(obj, key, where), where + "." + key);
}

std::optional<Rational> optional_rational(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  return to_rational(obj.at(key), where + "." + key);
}

int int_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::string string_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

bool valid_label(const std::string& label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
           c == '.';
  });
}

PolarizationRule parse_rule(const json& obj, const std::string& where) {
  const std::string rule = obj.value("polarization", std::string("anti_adjoint"));
  if (rule == "anti_adjoint") return PolarizationRule::kAntiAdjoint;
  if (rule == "fixed") return PolarizationRule::kFixed;
  fail(where + ".polarization", "expected \"anti_adjoint\" or \"fixed\"");
}

FoliatedModel parse_model(const json& obj, const std::string& name) {
  const std::string where = "model";
  const std::string type = string_at(obj, "type", where);
  const int n = int_at(obj, "n", where);
  try {
    if (type == "projective") {
      return make_pn_model(n, rational_at(obj, "d_X", where), rational_at(obj, "d_F", where),
                           optional_rational(obj, "hyperplane_degree", where).value_or(Rational(1)),
                           parse_rule(obj, where), name);
    }
    if (type == "proportional") {
      return FoliatedModel(name, n, rational_at(obj, "anticanonical_volume", where),
                           Proportional{rational_at(obj, "q", where)}, parse_rule(obj, where));
    }
    if (type == "explicit") {
      const json& slope = require(obj, "slope", where);
      std::optional<TInterval> range;
      if (obj.contains("t_range")) {
        const json& r = obj.at("t_range");
        if (!r.is_array() || r.size() != 2) fail(where + ".t_range", "expected [lo, hi]");
        range = TInterval(to_rational(r[0], where + ".t_range"), to_rational(r[1], where + ".t_range"));
      }
      return FoliatedModel(name, n, rational_at(obj, "volume", where),
                           ExplicitSlope{rational_at(slope, "intercept", where + ".slope"),
                                         rational_at(slope, "slope", where + ".slope")},
                           PolarizationRule::kFixed, std::nullopt, range);
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where + ".type", "unknown model type '" + type + "'");
}

PiecewisePoly parse_volume_function(const json& obj, const std::string& where) {
  const json& breaks = require(obj, "breakpoints", where);
  const json& pieces = require(obj, "pieces", where);
  if (!breaks.is_array() || !pieces.is_array()) fail(where, "breakpoints and pieces must be arrays");
  std::vector<Rational> bps;
  for (const auto& b : breaks) bps.push_back(to_rational(b, where + ".breakpoints"));
  std::vector<UniPoly> polys;
  for (const auto& p : pieces) {
    if (!p.is_array()) fail(where + ".pieces", "each piece is an array of ascending coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : p) coeffs.push_back(to_rational(c, where + ".pieces"));
    polys.emplace_back(std::move(coeffs));
  }
  try {
    return PiecewisePoly(std::move(bps), std::move(polys));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

ValuationEntry parse_valuation(const json& obj, const FoliatedModel& model, std::size_t index) {
  std::string where = "valuations[" + std::to_string(index) + "]";
  const std::string label = string_at(obj, "label", where);
  if (!valid_label(label)) fail(where + ".label", "labels use only [A-Za-z0-9_.-]");
  where += " '" + label + "'";
  const std::string tmpl = string_at(obj, "template", where);
  const Rational a_x = optional_rational(obj, "a_X", where).value_or(Rational(0));
  const Rational a_f = optional_rational(obj, "a_F", where).value_or(Rational(0));

  auto epsilon_of = [&]() {
    const int eps = int_at(obj, "epsilon", where);
    if (eps != 0 && eps != 1) fail(where + ".epsilon", "must be 0 or 1");
    return eps;
  };

  std::optional<ValuationEntry> entry;
  try {
    if (tmpl == "hyperplane") {
      const json& inv = require(obj, "invariant", where);
      if (!inv.is_boolean()) fail(where + ".invariant", "expected true or false");
      const Rational multiple = optional_rational(obj, "class_multiple", where).value_or(Rational(1));
      std::optional<MonomialTemplate> mono;
      if (multiple == Rational(1)) mono = MonomialTemplate::kHyperplane;
      entry = ValuationEntry{hyperplane_valuation(model, label, inv.get<bool>(), a_x, a_f, multiple), mono};
    } else if (tmpl == "point") {
      entry = ValuationEntry{
          point_blowup_valuation(model, label, a_x, a_f, epsilon_of(), optional_rational(obj, "threshold", where)),
          MonomialTemplate::kPoint};
    } else if (tmpl == "explicit") {
      const std::string scaling = obj.value("scaling", std::string("follows_polarization"));
      VolumeScaling rule = VolumeScaling::kFollowsPolarization;
      if (scaling == "fixed") {
        rule = VolumeScaling::kFixed;
      } else if (scaling != "follows_polarization") {
        fail(where + ".scaling", "expected \"follows_polarization\" or \"fixed\"");
      }
      entry = ValuationEntry{
          ValuationRecord(label, a_x, a_f, epsilon_of(),
                          parse_volume_function(require(obj, "volume_function", where), where + ".volume_function"),
                          rule),
          std::nullopt};
    } else {
      fail(where + ".template", "unknown template '" + tmpl + "'");
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  entry->record.valuation_volume = optional_rational(obj, "val_volume", where);
  if (entry->record.valuation_volume && entry->record.valuation_volume->sign() < 0) {
    fail(where + ".val_volume", "must be non-negative");
  }
  entry->record.provenance = obj.value("provenance", std::string());
  return std::move(*entry);
}

std::vector<std::string> labels_at(const json& obj, const std::string& where) {
  std::vector<std::string> out;
  if (!obj.contains("valuations")) return out;  // empty means all
  const json& arr = obj.at("valuations");
  if (!arr.is_array()) fail(where + ".valuations", "expected an array of labels");
  for (const auto& l : arr) {
    if (!l.is_string()) fail(where + ".valuations", "expected an array of labels");
    out.push_back(l.get<std::string>());
  }
  return out;
}

std::vector<Rational> t_values_at(const json& obj, const std::string& where) {
  std::vector<Rational> out;
  if (obj.contains("t_grid")) {
    const json& g = obj.at("t_grid");
    if (!g.is_string()) fail(where + ".t_grid", "expected \"lo:hi:step\"");
    try {
      out = parse_t_grid(g.get<std::string>());
    } catch (const ScenarioError& e) {
      fail(where + ".t_grid", e.what());
    }
  }
  if (obj.contains("t")) {
    const json& t = obj.at("t");
    if (t.is_array()) {
      for (const auto& x : t) out.push_back(to_rational(x, where + ".t"));
    } else {
      out.push_back(to_rational(t, where + ".t"));
    }
  }
  return out;
}

std::vector<int> m_list_at(const json& obj, const std::string& where) {
  const json& arr = require(obj, "m_list", where);
  if (!arr.is_array() || arr.empty()) fail(where + ".m_list", "expected a nonempty array of positive integers");
  std::vector<int> out;
  for (const auto& m : arr) {
    if (!m.is_number_integer() || m.get<int>() < 1) fail(where + ".m_list", "expected positive integers");
    out.push_back(m.get<int>());
  }
  return out;
}

TestConfigData parse_testconfig(const json& obj, const std::string& where, const Rational& default_t) {
  TestConfigData d;
  d.n = int_at(obj, "n", where);
  d.V = rational_at(obj, "V", where);
  d.mu = optional_rational(obj, "mu", where).value_or(Rational(1));
  d.Lbar_pow = rational_at(obj, "Lbar_pow", where);
  d.K_dot_L = optional_rational(obj, "K_dot_L", where).value_or(-d.Lbar_pow);
  d.L_mu_pullback = optional_rational(obj, "L_mu_pullback", where);
  d.lct_along_fibre = optional_rational(obj, "lct_along_fibre", where);
  d.t = optional_rational(obj, "t", where).value_or(default_t);
  if (d.n < 1) fail(where + ".n", "must be at least 1");
  if (d.V.sign() <= 0) fail(where + ".V", "must be positive");
  if (d.t.sign() < 0 || d.t > Rational(1)) fail(where + ".t", "must lie in [0, 1]");
  return d;
}

DivisorKind parse_kind(const json& obj, const std::string& where) {
  const std::string c = string_at(obj, "case", where);
  if (c == "invariant") return DivisorKind::kInvariant;
  if (c == "transverse") return DivisorKind::kTransverse;
  fail(where + ".case", "expected \"invariant\" or \"transverse\"");
}

Task parse_task(const json& obj, std::size_t index) {
  const std::string where = "tasks[" + std::to_string(index) + "]";
  const std::string kind = string_at(obj, "kind", where);
  if (kind == "beta") return BetaTask{labels_at(obj, where), t_values_at(obj, where)};
  if (kind == "interval") return IntervalTask{labels_at(obj, where)};
  if (kind == "destabilize") return DestabilizeTask{labels_at(obj, where), t_values_at(obj, where)};
  if (kind == "alpha-delta") return AlphaDeltaTask{labels_at(obj, where), t_values_at(obj, where)};
  if (kind == "delta-m") return DeltaMTask{labels_at(obj, where), t_values_at(obj, where), m_list_at(obj, where)};
  if (kind == "convergence") {
    return ConvergenceTask{string_at(obj, "valuation", where),
                           optional_rational(obj, "t", where).value_or(Rational(0)), m_list_at(obj, where)};
  }
  if (kind == "df") return DfTask{parse_testconfig(require(obj, "data", where), where + ".data", Rational(0))};
  if (kind == "jna") return JnaTask{parse_testconfig(require(obj, "data", where), where + ".data", Rational(0))};
  if (kind == "ding") {
    DingTask task{parse_testconfig(require(obj, "data", where), where + ".data", Rational(0)), {}};
    if (obj.contains("fibre")) {
      const json& arr = obj.at("fibre");
      if (!arr.is_array() || arr.empty()) fail(where + ".fibre", "expected a nonempty array of components");
      for (const auto& c : arr) {
        task.fibre.push_back({c.value("label", std::string()),
                              optional_rational(c, "multiplicity", where + ".fibre").value_or(Rational(1)),
                              optional_rational(c, "boundary_coefficient", where + ".fibre").value_or(Rational(0))});
      }
    }
    if (!task.data.lct_along_fibre && task.fibre.empty()) {
      fail(where, "ding needs data.lct_along_fibre or a fibre component list");
    }
    return task;
  }
  if (kind == "df-beta") return DfBetaTask{labels_at(obj, where), t_values_at(obj, where)};
  if (kind == "blowup") {
    WeightedBlowup w{int_at(obj, "d", where), int_at(obj, "r", where), rational_at(obj, "k", where),
                     rational_at(obj, "b", where), parse_kind(obj, where)};
    return BlowupTask{w, rational_at(obj, "t", where), optional_rational(obj, "a", where)};
  }
  if (kind == "certify") {
    const int d = int_at(obj, "d", where);
    if (d < 1) fail(where + ".d", "must be at least 1");
    const Rational delta = optional_rational(obj, "delta", where).value_or(Rational(1, d + 1));
    return CertifyTask{d, rational_at(obj, "V", where), delta, rational_at(obj, "t", where)};
  }
  if (kind == "lct") {
    const json& orders = require(obj, "orders", where);
    if (!orders.is_object() || orders.empty()) fail(where + ".orders", "expected {label: order}");
    LctTask task;
    for (const auto& [label, order] : orders.items()) {
      task.orders.emplace_back(label, to_rational(order, where + ".orders." + label));
    }
    task.t_values = t_values_at(obj, where);
    return task;
  }
  if (kind == "normalized-volume") return NormalizedVolumeTask{labels_at(obj, where), t_values_at(obj, where)};
  if (kind == "alpha-verdict") return AlphaVerdictTask{rational_at(obj, "alpha_lb", where)};
  fail(where + ".kind", "unknown task kind '" + kind + "'");
}

// t lists of tasks evaluated on the model.
template <typename F>
void for_each_model_t_list(Scenario& scenario, F&& f) {
  for (auto& task : scenario.tasks) {
    std::visit(
        [&](auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (requires { t.t_values; }) f(t.t_values);
          if constexpr (std::is_same_v<T, ConvergenceTask>) {
            std::vector<Rational> one{t.t};
            f(one);
            if (!one.empty()) t.t = one.front();
          }
        },
        task);
  }
}

}  // namespace

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> names = {"beta", "interval", "destabilize", "alpha-delta", "delta-m",
                                                 "convergence", "df", "ding", "jna", "df-beta", "blowup",
                                                 "certify", "lct", "normalized-volume", "alpha-verdict"};
  return names;
}

std::string task_kind(const Task& task) { return task_kinds().at(task.index()); }

const ValuationEntry& Scenario::valuation(std::string_view label) const {
  for (const auto& v : valuations) {
    if (v.record.label == label) return v;
  }
  throw ScenarioError("undefined valuation label '" + std::string(label) + "'");
}

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  const std::string name = doc.value("name", std::string("scenario"));
  Scenario scenario{name, parse_model(require(doc, "model", "scenario"), name), {}, {}};

  if (doc.contains("valuations")) {
    const json& vals = doc.at("valuations");
    if (!vals.is_array()) throw ScenarioError("valuations must be an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      ValuationEntry entry = parse_valuation(vals[i], scenario.model, i);
      if (!seen.insert(entry.record.label).second) {
        throw ScenarioError("duplicate valuation label '" + entry.record.label + "'");
      }
      scenario.valuations.push_back(std::move(entry));
    }
  }
  const json& tasks = require(doc, "tasks", "scenario");
  if (!tasks.is_array()) throw ScenarioError("tasks must be an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) scenario.tasks.push_back(parse_task(tasks[i], i));
  validate(scenario);
  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::vector<Rational> parse_t_grid(std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw ScenarioError("t-grid must look like lo:hi:step");
  Rational lo, hi, step;
  try {
    lo = Rational::parse(parts[0]);
    hi = Rational::parse(parts[1]);
    step = Rational::parse(parts[2]);
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("t-grid: ") + e.what());
  }
  if (step.sign() <= 0) throw ScenarioError("t-grid step must be positive");
  if (lo > hi) throw ScenarioError("t-grid lower end exceeds upper end");
  std::vector<Rational> out;
  for (Rational t = lo; t <= hi; t += step) out.push_back(t);
  return out;
}

std::vector<int> parse_m_list(std::string_view spec) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty() || !std::all_of(cur.begin(), cur.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        cur.size() > 6) {
      throw ScenarioError("m-list must be comma-separated positive integers");
    }
    const int m = std::stoi(cur);
    if (m < 1) throw ScenarioError("m-list entries must be positive");
    out.push_back(m);
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

void override_t_values(Scenario& scenario, const std::vector<Rational>& t_values) {
  for_each_model_t_list(scenario, [&](std::vector<Rational>& ts) { ts = t_values; });
  for (auto& task : scenario.tasks) {
    if (auto* b = std::get_if<BlowupTask>(&task); b && !t_values.empty()) b->t = t_values.front();
    if (auto* c = std::get_if<CertifyTask>(&task); c && !t_values.empty()) c->t = t_values.front();
  }
}

void override_m_list(Scenario& scenario, const std::vector<int>& m_list) {
  for (auto& task : scenario.tasks) {
    if (auto* d = std::get_if<DeltaMTask>(&task)) d->m_list = m_list;
    if (auto* c = std::get_if<ConvergenceTask>(&task)) c->m_list = m_list;
  }
}

void validate(const Scenario& scenario) {
  const AmpleRange range = scenario.model.ample_range();
  auto check_ts = [&](const std::vector<Rational>& ts, const std::string& where) {
    for (const auto& t : ts) {
      if (!range.admits(t)) {
        std::string msg = where + ": t = " + t.to_string() + " is outside the ample range " + range.closed.to_string();
        if (range.wall) msg += " (open wall at " + range.wall->to_string() + ")";
        throw ScenarioError(msg);
      }
    }
  };
  auto check_labels = [&](const std::vector<std::string>& labels, const std::string& where) {
    for (const auto& l : labels) {
      try {
        (void)scenario.valuation(l);
      } catch (const ScenarioError& e) {
        throw ScenarioError(where + ": " + e.what());
      }
    }
  };

  for (std::size_t i = 0; i < scenario.tasks.size(); ++i) {
    const std::string where = "tasks[" + std::to_string(i) + "] (" + task_kind(scenario.tasks[i]) + ")";
    std::visit(
        [&](const auto& task) {
          using T = std::decay_t<decltype(task)>;
          if constexpr (requires { task.labels; }) {
            check_labels(task.labels, where);
            if (scenario.valuations.empty()) throw ScenarioError(where + ": scenario defines no valuations");
          }
          if constexpr (requires { task.t_values; }) {
            if (task.t_values.empty()) throw ScenarioError(where + ": no t values given");
            check_ts(task.t_values, where);
          }
          if constexpr (std::is_same_v<T, IntervalTask>) {
            if (!scenario.model.is_proportional() ||
                scenario.model.polarization_rule() != PolarizationRule::kAntiAdjoint) {
              throw ScenarioError(where + ": wall crossing needs a proportional model with the anti-adjoint rule");
            }
          }
          if constexpr (std::is_same_v<T, DeltaMTask>) {
            if (!scenario.model.projective()) throw ScenarioError(where + ": delta-m needs a projective model");
            const auto labels = task.labels.empty() ? std::vector<std::string>{} : task.labels;
            for (const auto& v : scenario.valuations) {
              const bool used = labels.empty() || std::find(labels.begin(), labels.end(), v.record.label) != labels.end();
              if (used && !v.monomial_template) {
                throw ScenarioError(where + ": valuation '" + v.record.label + "' has no monomial template");
              }
            }
          }
          if constexpr (std::is_same_v<T, ConvergenceTask>) {
            check_labels({task.label}, where);
            if (!scenario.model.projective()) throw ScenarioError(where + ": convergence needs a projective model");
            if (!scenario.valuation(task.label).monomial_template) {
              throw ScenarioError(where + ": valuation '" + task.label + "' has no monomial template");
            }
            check_ts({task.t}, where);
          }
          if constexpr (std::is_same_v<T, LctTask>) {
            std::vector<std::string> labels;
            for (const auto& [l, order] : task.orders) {
              if (order.sign() < 0) throw ScenarioError(where + ": order of '" + l + "' is negative");
              labels.push_back(l);
            }
            check_labels(labels, where);
            if (std::none_of(task.orders.begin(), task.orders.end(), [](const auto& p) { return p.second.sign() > 0; })) {
              throw ScenarioError(where + ": lct needs a valuation with positive order");
            }
          }
          if constexpr (std::is_same_v<T, BlowupTask>) {
            const WeightedBlowup& w = task.blowup;
            if (task.t.sign() < 0 || task.t > Rational(1)) throw ScenarioError(where + ": t must lie in [0, 1]");
            if (w.d < 1 || w.r < 1 || w.r > w.d) throw ScenarioError(where + ": need 1 <= r <= d");
            if (w.kind == DivisorKind::kInvariant && w.r == w.d) {
              throw ScenarioError(where + ": an invariant divisor needs r <= d - 1");
            }
            if (w.k.sign() <= 0 || w.b.sign() <= 0) throw ScenarioError(where + ": need k > 0 and b > 0");
            if (task.a && (task.a->sign() < 0 || *task.a > w.b)) throw ScenarioError(where + ": need 0 <= a <= b");
          }
          if constexpr (std::is_same_v<T, CertifyTask>) {
            if (task.t.sign() <= 0 || task.t >= Rational(1)) throw ScenarioError(where + ": t must lie in (0, 1)");
            if (task.volume.sign() <= 0) throw ScenarioError(where + ": V must be positive");
            if (task.delta.sign() <= 0) throw ScenarioError(where + ": delta must be positive");
          }
        },
        scenario.tasks[i]);
  }
}

}  // namespace adjstab::cli
