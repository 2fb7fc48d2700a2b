/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "acn/energy.hpp"
#include "acn/error.hpp"
#include "acn/io.hpp"
#include "acn/montecarlo.hpp"
#include "acn/random.hpp"
#include "acn/threshold_logic.hpp"
#include "acn/tree_sim.hpp"

namespace acn {

namespace {

using fixtures::FixtureSet;

std::string num(double v, int decimals = 3) { return io::fixed(v, decimals); }

class Recorder {
public:
  Recorder(VerifyReport &report, int criterion, std::string table)
      : report_(report), criterion_(criterion), table_(std::move(table)) {}

  void within(const std::string &id, double expected, double actual, double tol,
              int decimals = 3) {
    add(id, num(expected, decimals), num(actual, decimals),
        "+/-" + num(tol, decimals), std::abs(actual - expected) <= tol);
  }
  void at_least(const std::string &id, double bound, double actual,
                int decimals = 3) {
    add(id, ">= " + num(bound, decimals), num(actual, decimals), "-",
        actual >= bound);
  }
  void at_most(const std::string &id, double bound, double actual,
               int decimals = 3) {
    add(id, "<= " + num(bound, decimals), num(actual, decimals), "-",
        actual <= bound);
  }
  void in_range(const std::string &id, double lo, double hi, double actual,
                int decimals = 3) {
    add(id, "[" + num(lo, decimals) + ", " + num(hi, decimals) + "]",
        num(actual, decimals), "-", actual >= lo && actual <= hi);
  }
  void equal(const std::string &id, long long expected, long long actual) {
    add(id, std::to_string(expected), std::to_string(actual), "exact",
        expected == actual);
  }
  void add(const std::string &id, std::string expected, std::string actual,
           std::string tol, bool pass) {
    report_.records.push_back({table_ + "." + id, table_, criterion_,
                               std::move(expected), std::move(actual),
                               std::move(tol), pass});
  }

private:
  VerifyReport &report_;
  int criterion_;
  std::string table_;
};

std::size_t n_inputs(const FixtureSet &set) { return set.table3.weights.size(); }

InputVector vec(const FixtureSet &set, const std::string &bits) {
  return InputVector::parse(bits, n_inputs(set));
}

TechProfile reference_tech(const FixtureSet &set) {
  TechProfile t = TechProfile::reference();
  t.v_max = set.table3.v_max;
  t.v_cut = set.table3.v_cut;
  t.c_min = set.table3.c_min;
  return t;
}

// Mapping the published neuron reproduces the printed capacitors.
void check_mapping(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 1, "table3");
  const auto &t = set.table3;
  const AcnConfig c = map_weights(fixtures::reference_neuron(set),
                                  reference_tech(set), t.stated_total_synapse);
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    const Synapse *s = c.find(i);
    r.within("C" + std::to_string(i + 1), t.synapse_caps[i], s ? s->cap : 0.0,
             1.0, 1);
  }
  r.within("Cb_p", t.bias_p, c.tree(Tree::Positive).bias_cap, 1.0, 1);
  r.within("Cb_m", t.bias_m, c.tree(Tree::Negative).bias_cap, 1.0, 1);
  r.within("Cd_p", t.ballast_p, c.tree(Tree::Positive).ballast_cap, 5.0, 1);
  r.within("Cd_m", t.ballast_m, c.tree(Tree::Negative).ballast_cap, 5.0, 1);
}

// Theoretical voltage columns, with the ideal comparator.
void check_voltages(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 2, "table4");
  const AcnConfig c = fixtures::reference_config(set);
  const TlModel ideal = TlModel::ideal();
  for (const auto &row : set.table4) {
    const auto mv = peak_membrane_voltages(c, vec(set, row.vector));
    r.within(row.name + ".vm_p", row.theo_vp, mv.positive * 1e3, 1.0, 1);
    r.within(row.name + ".vm_m", row.theo_vm, mv.negative * 1e3, 1.0, 1);
    r.equal(row.name + ".ideal",
            row.theo_out,
            tl_decide(ideal, mv.positive * 1e3, mv.negative * 1e3).output);
  }
}

// Hardware output columns, with the calibrated comparator thresholds.
void check_hardware(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 3, "table4");
  const AcnConfig c = fixtures::reference_config(set);
  const TlModel prop = TlModel::proposed();
  const TlModel conv = TlModel::conventional();
  for (const auto &row : set.table4) {
    const auto mv = peak_membrane_voltages(c, vec(set, row.vector));
    const double p = mv.positive * 1e3, m = mv.negative * 1e3;
    r.equal(row.name + ".proposed", row.prop_out, tl_decide(prop, p, m).output);
    r.equal(row.name + ".conventional", row.conv_out,
            tl_decide(conv, p, m).output);
  }
}

void check_loads(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 4, "table5");
  const AcnConfig c = fixtures::reference_config(set);
  for (const auto &row : set.table5)
    r.within(row.name + ".CL", row.load_ff,
             capacitive_load(c, vec(set, row.vector)), 0.5, 2);
}

// Appendix: the load peaks where each tree's switched-on capacitance is the
// achievable value nearest C_A / 2.
void check_maximizer(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 5, "appendix");
  const AcnConfig c = fixtures::reference_config(set);
  const std::size_t n = c.n_inputs();
  if (n > 20) {
    r.add("exhaustive", "n <= 20", std::to_string(n), "-", false);
    return;
  }
  double best = -1.0;
  InputVector arg;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const InputVector x = InputVector::from_mask(mask, n);
    const double l = capacitive_load(c, x);
    if (l > best) {
      best = l;
      arg = x;
    }
  }
  const TreeState st = tree_capacitances(c, arg);
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    // Achievable switched-on values: bias plus any subset of the tree.
    std::set<double> sums{c.tree(t).bias_cap};
    for (const auto &s : c.synapses()) {
      if (s.tree != t)
        continue;
      std::set<double> next = sums;
      for (double v : sums)
        next.insert(v + s.cap);
      sums = std::move(next);
    }
    const double half = c.total(t) / 2.0;
    double nearest = *sums.begin();
    for (double v : sums)
      if (std::abs(v - half) < std::abs(nearest - half))
        nearest = v;
    r.within(std::string("Con_") + (t == Tree::Positive ? "p" : "m"), nearest,
             st.on(t), 1e-9, 1);
  }
  const auto &tv4 = fixtures::energy_row(set, "TV4");
  // Printed loads carry 0.1 fF resolution.
  r.at_least("max_load", tv4.load_ff - 0.05, best, 3);
}

void check_frequency(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 6, "table6");
  const PowerClock pc = reference_power_clock();
  const auto &tv4 = fixtures::energy_row(set, "TV4");
  for (const auto &row : set.table6) {
    if (row.nominal_mhz != 1.0)
      continue;
    const double f = operating_frequency(pc, tv4.load_ff) * 1e-6;
    r.within("f_op_1MHz", row.operating_mhz, f, 0.015 * row.operating_mhz, 4);
  }
  const double droop =
      100.0 * (1.0 - operating_frequency(pc, tv4.load_ff) /
                         operating_frequency(pc, 0.0));
  r.in_range("droop_pct", 1.5, 2.5, droop, 3);
}

void check_energy(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 7, "table5");
  const AcnConfig c = fixtures::reference_config(set);
  const PowerClock pc = reference_power_clock();
  const EnergyParams p = calibrate_energy(set.table5, pc);
  const TlModel tl = TlModel::proposed();
  for (const auto &row : set.table5) {
    const auto e = total_energy(c, vec(set, row.vector), pc, p, tl);
    const bool anchor = row.name == "TV4" || row.name == "TV8";
    if (anchor)
      r.within(row.name + ".E_ACN_anchor", row.acn_fj, e.synapse(), 0.05, 3);
    else
      r.within(row.name + ".E_ACN", row.acn_fj, e.synapse(),
               0.35 * row.acn_fj, 1);
    r.at_least(row.name + ".savings", e.load > 400.0 ? 90.0 : 70.0,
               e.savings_pct, 2);
    r.within(row.name + ".fixture_savings", row.savings_pct,
             savings_percent(row.acn_fj, row.ccn_fj), 0.1, 2);
  }
}

void check_offsets(const FixtureSet &set, VerifyReport &rep) {
  const TlModel prop = TlModel::proposed();
  const TlModel conv = TlModel::conventional();
  std::map<std::tuple<Corner, double>, std::pair<double, double>> rising;
  for (const auto &row : set.offsets) {
    const bool is_prop = row.design == fixtures::TlDesign::Proposed;
    Recorder r(rep, 8, row.direction == Direction::Rising ? "table1" : "table2");
    const double got =
        offset_lookup(is_prop ? prop : conv, row.corner, row.temp_c, row.direction);
    const std::string id = std::string(fixtures::to_string(row.design)) + "." +
                           std::string(fixtures::to_string(row.corner)) + "." +
                           io::fixed(row.temp_c, 0);
    r.add(id, io::fixed(row.offset_mv, 4), io::fixed(got, 4), "bit-exact",
          got == row.offset_mv);
    if (row.direction == Direction::Rising) {
      auto &slot = rising[{row.corner, row.temp_c}];
      (is_prop ? slot.first : slot.second) = row.offset_mv;
    }
  }
  Recorder r(rep, 8, "table1");
  for (const auto &[key, v] : rising) {
    const std::string id = "prop_lt_conv." +
                           std::string(fixtures::to_string(std::get<0>(key))) +
                           "." + io::fixed(std::get<1>(key), 0);
    r.add(id, "< " + io::fixed(v.second, 4), io::fixed(v.first, 4), "-",
          v.first < v.second);
  }
  double max_prop = 0.0;
  for (const auto &row : set.offsets)
    if (row.design == fixtures::TlDesign::Proposed)
      max_prop = std::max(max_prop, std::abs(row.offset_mv));
  r.at_most("prop_max_abs", 9.01, max_prop, 4);
}

// Random small neurons: the ideal-comparator hardware agrees with the
// software neuron wherever the margin exceeds the quantization margin.
void check_equivalence(VerifyReport &rep) {
  Recorder r(rep, 9, "oracle");
  constexpr std::uint64_t kSeed = 20260101;
  const TechProfile tech;
  const TlModel ideal = TlModel::ideal();
  std::size_t checked = 0, skipped = 0, disagreements = 0, neurons = 0;
  for (std::uint64_t draw = 0; neurons < 100; ++draw) {
    const random::CounterStream s(kSeed, draw, 0);
    const std::size_t n = 1 + static_cast<std::size_t>(s.uniform(0) * 8.0);
    std::vector<double> w(n);
    double w_min = 1.0, w_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 2.0 * s.uniform(static_cast<std::uint32_t>(2 + i)) - 1.0;
      w_min = std::min(w_min, std::abs(w[i]));
      w_sum += std::abs(w[i]);
    }
    const double tau = s.uniform(1) - 0.5;
    // Smallest total that keeps every synapse at C_min after rounding.
    const double ct = std::max(2000.0, std::ceil((tech.c_min + 0.5) * w_sum / w_min));
    const NeuronSpec spec(w, tau);
    if (!check_feasibility(spec, tech, ct).feasible())
      continue;
    ++neurons;
    const AcnConfig c = map_weights(spec, tech, ct);
    const double delta = quantization_margin(c, tech);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const InputVector x = InputVector::from_mask(mask, n);
      if (std::abs(software_margin(spec, x)) <= delta) {
        ++skipped;
        continue;
      }
      ++checked;
      const auto mv = peak_membrane_voltages(c, x);
      const int hw = tl_decide(ideal, mv.positive * 1e3, mv.negative * 1e3, {},
                               c.v_max())
                         .output;
      if (hw != eval_software_neuron(spec, x))
        ++disagreements;
    }
  }
  r.equal("neurons", 100, static_cast<long long>(neurons));
  r.add("vectors_checked", "> 0", std::to_string(checked), "-", checked > 0);
  r.add("vectors_within_delta", "-", std::to_string(skipped), "-", true);
  r.equal("disagreements", 0, static_cast<long long>(disagreements));
}

void check_monte_carlo(const FixtureSet &set, unsigned threads,
                       VerifyReport &rep) {
  Recorder r(rep, 10, "mc");
  const AcnConfig c = fixtures::reference_config(set);
  const PowerClock pc = reference_power_clock();
  const EnergyParams p = calibrate_energy(set.table5, pc);
  const auto &tv4 = fixtures::energy_row(set, "TV4");
  const InputVector x = vec(set, tv4.vector);
  const VariationModel model;
  auto report = [&](McTarget t) {
    const auto samples = mc_run(c, x, model, 1000, t, pc, p, threads);
    return std::pair{mc_stats(samples), samples};
  };
  const auto [acn, acn_samples] = report(McTarget::Acn);
  const auto [ccn, ccn_samples] = report(McTarget::Ccn);
  r.at_least("acn_skewness", 0.5, acn.skewness.value_or(0.0), 3);
  r.add("acn_qq_corr", "< 0.990", num(acn.qq_corr.value_or(1.0), 4), "-",
        acn.qq_corr.value_or(1.0) < kNormalQqThreshold);
  r.at_most("ccn_abs_skewness", 0.3, std::abs(ccn.skewness.value_or(1.0)), 3);
  r.add("ccn_qq_corr", "> 0.990", num(ccn.qq_corr.value_or(0.0), 4), "-",
        ccn.qq_corr.value_or(0.0) > kNormalQqThreshold);
  r.add("cv_acn_gt_ccn", "> " + num(ccn.cv, 2), num(acn.cv, 2), "-",
        acn.cv > ccn.cv);
  const double tail = *std::max_element(acn_samples.begin(), acn_samples.end());
  const double ccn_nominal =
      total_energy(c, x, pc, p, TlModel::ideal()).e_ccn;
  r.add("acn_tail_below_ccn", "< " + num(ccn_nominal, 1), num(tail, 1), "-",
        tail < ccn_nominal);
  const auto again = mc_run(c, x, model, 1000, McTarget::Acn, pc, p, 1);
  r.add("rerun_identical", "identical", again == acn_samples ? "identical" : "differs",
        "exact", again == acn_samples);
}

// Supply scaling: savings stay high and the neuron function does not change.
void check_voltage_sweep(const FixtureSet &set, VerifyReport &rep) {
  Recorder r(rep, 11, "table7");
  const AcnConfig c = fixtures::reference_config(set);
  const PowerClock pc = reference_power_clock();
  const EnergyParams p = calibrate_energy(set.table5, pc);
  std::vector<double> volts;
  for (int k = 18; k >= 10; --k)
    volts.push_back(k / 10.0);

  std::vector<InputVector> all;
  for (const auto &row : set.table4)
    all.push_back(vec(set, row.vector));
  const auto rows =
      sweep(c, all, SweepAxis::Voltage, volts, pc, p, TlModel::ideal());
  std::vector<int> nominal(all.size());
  std::size_t changed = 0;
  for (const auto &row : rows) {
    if (row.axis_value == volts.front())
      nominal[row.vector_index] = row.output;
    else if (row.output != nominal[row.vector_index])
      ++changed;
  }
  r.equal("function_changes", 0, static_cast<long long>(changed));

  for (const char *name : {"TV4", "TV8", "TV13"}) {
    const auto &fx = fixtures::energy_row(set, name);
    const InputVector x = vec(set, fx.vector);
    for (double v : volts) {
      const auto e = total_energy(c, x, pc, p, TlModel::proposed(), v);
      const std::string id = std::string(name) + ".savings@" + io::fixed(v, 1);
      if (std::string(name) == "TV8")
        r.in_range(id, 60.0, 80.0, e.savings_pct, 2);
      else
        r.at_least(id, 90.0, e.savings_pct, 2);
    }
  }
}

struct CriterionRunner {
  int criterion;
  std::vector<std::string> tables;
  std::function<void(const FixtureSet &, const VerifyOptions &, VerifyReport &)> run;
};

const std::vector<CriterionRunner> &runners() {
  static const std::vector<CriterionRunner> all = {
      {1, {"table3"}, [](auto &s, auto &, auto &r) { check_mapping(s, r); }},
      {2, {"table4"}, [](auto &s, auto &, auto &r) { check_voltages(s, r); }},
      {3, {"table4"}, [](auto &s, auto &, auto &r) { check_hardware(s, r); }},
      {4, {"table5"}, [](auto &s, auto &, auto &r) { check_loads(s, r); }},
      {5, {"appendix"}, [](auto &s, auto &, auto &r) { check_maximizer(s, r); }},
      {6, {"table6"}, [](auto &s, auto &, auto &r) { check_frequency(s, r); }},
      {7, {"table5"}, [](auto &s, auto &, auto &r) { check_energy(s, r); }},
      {8, {"table1", "table2"}, [](auto &s, auto &, auto &r) { check_offsets(s, r); }},
      {9, {"oracle"}, [](auto &, auto &, auto &r) { check_equivalence(r); }},
      {10, {"mc"}, [](auto &s, auto &o, auto &r) { check_monte_carlo(s, o.threads, r); }},
      {11, {"table7"}, [](auto &s, auto &, auto &r) { check_voltage_sweep(s, r); }},
  };
  return all;
}

} // namespace

const std::vector<std::string> &verify_table_ids() {
  static const std::vector<std::string> ids = {
      "table1", "table2", "table3", "table4", "table5", "table6",
      "table7", "appendix", "oracle", "mc"};
  return ids;
}

fixtures::FixtureSet with_reference_caps(fixtures::FixtureSet set,
                                         const AcnConfig &config) {
  auto &t = set.table3;
  if (config.n_inputs() != t.weights.size())
    fail(ErrorCode::Dimension, "override config has " +
                                   std::to_string(config.n_inputs()) +
                                   " inputs, the reference neuron has " +
                                   std::to_string(t.weights.size()));
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    const Synapse *s = config.find(i);
    t.synapse_caps[i] = s ? s->cap : 0.0;
  }
  t.bias_p = config.tree(Tree::Positive).bias_cap;
  t.bias_m = config.tree(Tree::Negative).bias_cap;
  t.ballast_p = config.tree(Tree::Positive).ballast_cap;
  t.ballast_m = config.tree(Tree::Negative).ballast_cap;
  return set;
}

bool VerifyReport::pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord &r) { return r.pass; });
}

std::vector<std::pair<int, bool>> VerifyReport::criteria() const {
  std::map<int, bool> m;
  for (const auto &r : records) {
    auto [it, inserted] = m.emplace(r.criterion, r.pass);
    if (!inserted)
      it->second = it->second && r.pass;
  }
  return {m.begin(), m.end()};
}

std::string VerifyReport::render_table() const {
  std::size_t w_id = 5, w_exp = 8, w_act = 6, w_tol = 9;
  for (const auto &r : records) {
    w_id = std::max(w_id, r.id.size());
    w_exp = std::max(w_exp, r.expected.size());
    w_act = std::max(w_act, r.actual.size());
    w_tol = std::max(w_tol, r.tolerance.size());
  }
  auto pad = [](const std::string &s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  std::string out = pad("check", w_id) + "  crit  " + pad("expected", w_exp) +
                    "  " + pad("actual", w_act) + "  " + pad("tolerance", w_tol) +
                    "  result\n";
  for (const auto &r : records) {
    char crit[8];
    std::snprintf(crit, sizeof crit, "%4d", r.criterion);
    out += pad(r.id, w_id) + "  " + crit + "  " + pad(r.expected, w_exp) + "  " +
           pad(r.actual, w_act) + "  " + pad(r.tolerance, w_tol) + "  " +
           (r.pass ? "PASS" : "FAIL") + "\n";
  }
  std::size_t failed = 0;
  for (const auto &r : records)
    failed += r.pass ? 0 : 1;
  out += "\n";
  for (const auto &[c, ok] : criteria())
    out += "criterion " + std::to_string(c) + ": " + (ok ? "PASS" : "FAIL") + "\n";
  out += std::to_string(records.size() - failed) + "/" +
         std::to_string(records.size()) + " checks passed\n";
  return out;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto &r : records)
    checks.push_back({{"id", r.id},
                      {"table", r.table},
                      {"criterion", r.criterion},
                      {"expected", r.expected},
                      {"actual", r.actual},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
  nlohmann::ordered_json crit = nlohmann::ordered_json::object();
  for (const auto &[c, ok] : criteria())
    crit[std::to_string(c)] = ok;
  nlohmann::ordered_json j = {{"pass", pass()}, {"criteria", crit}, {"checks", checks}};
  return j.dump(2) + "\n";
}

VerifyReport run_verify(const fixtures::FixtureSet &set,
                        const VerifyOptions &options) {
  const auto &ids = verify_table_ids();
  if (!options.only.empty() &&
      std::find(ids.begin(), ids.end(), options.only) == ids.end())
    fail(ErrorCode::Invalid, "unknown table id '" + options.only + "'");
  const FixtureSet effective =
      options.table3_override ? with_reference_caps(set, *options.table3_override)
                              : set;
  VerifyReport report;
  for (const auto &c : runners()) {
    if (!options.only.empty() &&
        std::find(c.tables.begin(), c.tables.end(), options.only) == c.tables.end())
      continue;
    c.run(effective, options, report);
  }
  if (!options.only.empty())
    std::erase_if(report.records, [&](const CheckRecord &r) {
      return r.table != options.only;
    });
  return report;
}

} // namespace acn
