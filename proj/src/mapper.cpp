/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acn/error.hpp"

namespace acn {

namespace {

constexpr double kCapEps = 1e-9; // fF, absorbs floating-point noise

double grid_round(double value, double grid) {
  return std::floor(value / grid + 0.5) * grid;
}

} // namespace

std::string_view to_string(Tree tree) {
  return tree == Tree::Positive ? "positive" : "negative";
}

AcnConfig::AcnConfig(std::size_t n_inputs, std::vector<Synapse> synapses,
                     TreeParams positive, TreeParams negative, double v_max,
                     double unit_cap)
    : n_inputs_(n_inputs), synapses_(std::move(synapses)),
      positive_(positive), negative_(negative), v_max_(v_max),
      unit_cap_(unit_cap) {
  if (n_inputs_ == 0)
    fail(ErrorCode::Invalid, "configuration needs at least one input");
  if (!(v_max_ > 0.0))
    fail(ErrorCode::Invalid, "V_max must be positive");
  std::sort(synapses_.begin(), synapses_.end(),
            [](const Synapse &a, const Synapse &b) { return a.index < b.index; });
  for (std::size_t k = 0; k < synapses_.size(); ++k) {
    const auto &s = synapses_[k];
    if (s.index >= n_inputs_)
      fail(ErrorCode::Dimension, "synapse index " + std::to_string(s.index) +
                                     " out of range for " +
                                     std::to_string(n_inputs_) + " inputs");
    if (k > 0 && synapses_[k - 1].index == s.index)
      fail(ErrorCode::Invalid,
           "duplicate synapse index " + std::to_string(s.index));
    if (!(s.cap > 0.0) || !std::isfinite(s.cap))
      fail(ErrorCode::Invalid, "synapse " + std::to_string(s.index) +
                                   " capacitance must be positive");
  }
  for (const TreeParams *t : {&positive_, &negative_}) {
    if (!(t->bias_cap > 0.0) || !std::isfinite(t->bias_cap))
      fail(ErrorCode::Invalid, "bias capacitance must be positive");
    if (!(t->ballast_cap >= 0.0) || !std::isfinite(t->ballast_cap))
      fail(ErrorCode::Invalid, "ballast capacitance must be non-negative");
    if (!(t->parasitic_cap >= 0.0) || !std::isfinite(t->parasitic_cap))
      fail(ErrorCode::Invalid, "parasitic capacitance must be non-negative");
    if (!std::isfinite(t->bias_voltage))
      fail(ErrorCode::Invalid, "bias voltage must be finite");
  }
}

double AcnConfig::synapse_total(Tree t) const {
  double sum = 0.0;
  for (const auto &s : synapses_)
    if (s.tree == t)
      sum += s.cap;
  return sum;
}

double AcnConfig::total(Tree t) const {
  const TreeParams &p = tree(t);
  return synapse_total(t) + p.bias_cap + p.ballast_cap + p.parasitic_cap;
}

std::size_t AcnConfig::synapse_count(Tree t) const {
  return static_cast<std::size_t>(std::count_if(
      synapses_.begin(), synapses_.end(),
      [t](const Synapse &s) { return s.tree == t; }));
}

const Synapse *AcnConfig::find(std::size_t index) const {
  auto it = std::lower_bound(
      synapses_.begin(), synapses_.end(), index,
      [](const Synapse &s, std::size_t i) { return s.index < i; });
  return (it != synapses_.end() && it->index == index) ? &*it : nullptr;
}

double quantize_capacitance(double value, const TechProfile &tech,
                            CapRole role) {
  if (!(value >= 0.0) || !std::isfinite(value))
    fail(ErrorCode::Range, "capacitance must be a non-negative number");
  const double q = grid_round(value, tech.cap_grid);
  if (role != CapRole::Ballast && q < tech.c_min - kCapEps) {
    std::ostringstream msg;
    msg << "capacitance " << value << " fF quantizes to " << q
        << " fF, below C_min = " << tech.c_min << " fF";
    fail(ErrorCode::Infeasible, msg.str());
  }
  return q;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::BelowMinimum:
    os << "synapse " << index.value_or(0) << ": " << value
       << " fF below C_min " << limit << " fF (margin " << margin << " fF)";
    break;
  case Kind::SwingAboveCut:
    os << to_string(tree.value_or(Tree::Positive)) << " tree: swing "
       << value << " V exceeds V_cut " << limit << " V (margin " << margin
       << " V)";
    break;
  case Kind::NegativeBallast:
    os << to_string(tree.value_or(Tree::Positive)) << " tree: ballast "
       << value << " fF is negative (margin " << margin << " fF)";
    break;
  case Kind::Unbalanced:
    os << "tree totals differ by " << value << " fF, limit " << limit
       << " fF (margin " << margin << " fF)";
    break;
  }
  return os.str();
}

std::string FeasibilityReport::to_string() const {
  std::ostringstream os;
  for (const auto &v : violations)
    os << v.describe() << '\n';
  return os.str();
}

namespace {

struct Compiled {
  std::optional<AcnConfig> config;
  FeasibilityReport report;
};

void check_swing(const AcnConfig &config, const TechProfile &tech,
                 FeasibilityReport &report) {
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    const double total = config.total(t);
    const double high = config.tree(t).bias_voltage +
                        config.v_max() *
                            (config.synapse_total(t) + config.tree(t).bias_cap) /
                            total;
    // One grid step in the numerator.
    const double eps_quant = config.v_max() * tech.cap_grid / total;
    if (high > tech.v_cut + eps_quant)
      report.violations.push_back({Violation::Kind::SwingAboveCut,
                                   std::nullopt, t, high, tech.v_cut,
                                   tech.v_cut - high});
  }
}

Compiled compile(const NeuronSpec &spec, const TechProfile &tech,
                 double total_synapse_cap) {
  tech.validate();
  if (!(total_synapse_cap > 0.0))
    fail(ErrorCode::Invalid, "total synapse capacitance must be positive");

  Compiled out;
  auto &violations = out.report.violations;
  const double k = total_synapse_cap / spec.weight_sum();

  std::vector<Synapse> synapses;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double w = spec.weight(i);
    if (w == 0.0)
      continue;
    const double raw = std::abs(w) * k;
    double cap = grid_round(raw, tech.cap_grid);
    if (raw < tech.c_min - kCapEps || cap < tech.c_min - kCapEps) {
      violations.push_back({Violation::Kind::BelowMinimum, i, std::nullopt,
                            raw, tech.c_min, raw - tech.c_min});
      cap = std::max(raw, kCapEps);
    }
    synapses.push_back({i, w > 0.0 ? Tree::Positive : Tree::Negative, cap});
  }

  // The tree opposite the bias sign keeps C_min; the other carries k|tau|.
  TreeParams pos, neg;
  const double base = quantize_capacitance(tech.c_min, tech, CapRole::Bias);
  const double carried =
      quantize_capacitance(tech.c_min + k * std::abs(spec.bias()), tech,
                           CapRole::Bias);
  pos.bias_cap = spec.bias() < 0.0 ? carried : base;
  neg.bias_cap = spec.bias() > 0.0 ? carried : base;
  pos.parasitic_cap = neg.parasitic_cap = tech.c_parasitic;

  double ct[2] = {0.0, 0.0};
  for (const auto &s : synapses)
    ct[s.tree == Tree::Positive ? 0 : 1] += s.cap;
  const double on_max_p = ct[0] + pos.bias_cap;
  const double on_max_n = ct[1] + neg.bias_cap;

  // Equalize C_A on both trees and saturate the larger swing at V_cut. The
  // target is put on the grid first so both ballasts inherit the same total.
  const double target = grid_round(
      tech.v_max * std::max(on_max_p, on_max_n) / tech.v_cut, tech.cap_grid);
  const double raw_ballast[2] = {target - on_max_p - tech.c_parasitic,
                                 target - on_max_n - tech.c_parasitic};
  for (int t = 0; t < 2; ++t) {
    if (raw_ballast[t] < -kCapEps)
      violations.push_back({Violation::Kind::NegativeBallast, std::nullopt,
                            t == 0 ? Tree::Positive : Tree::Negative,
                            raw_ballast[t], 0.0, raw_ballast[t]});
  }
  pos.ballast_cap = std::max(0.0, grid_round(raw_ballast[0], tech.cap_grid));
  neg.ballast_cap = std::max(0.0, grid_round(raw_ballast[1], tech.cap_grid));

  AcnConfig config(spec.size(), std::move(synapses), pos, neg, tech.v_max, k);
  check_swing(config, tech, out.report);
  out.config.emplace(std::move(config));
  return out;
}

} // namespace

FeasibilityReport check_feasibility(const NeuronSpec &spec,
                                    const TechProfile &tech,
                                    double total_synapse_cap) {
  return compile(spec, tech, total_synapse_cap).report;
}

FeasibilityReport check_config(const AcnConfig &config,
                               const TechProfile &tech) {
  FeasibilityReport report;
  for (const auto &s : config.synapses())
    if (s.cap < tech.c_min - kCapEps)
      report.violations.push_back({Violation::Kind::BelowMinimum, s.index,
                                   s.tree, s.cap, tech.c_min,
                                   s.cap - tech.c_min});
  const double imbalance =
      std::abs(config.total(Tree::Positive) - config.total(Tree::Negative));
  if (imbalance > 2.0 * tech.cap_grid + kCapEps)
    report.violations.push_back({Violation::Kind::Unbalanced, std::nullopt,
                                 std::nullopt, imbalance, 2.0 * tech.cap_grid,
                                 2.0 * tech.cap_grid - imbalance});
  check_swing(config, tech, report);
  return report;
}

AcnConfig map_weights(const NeuronSpec &spec, const TechProfile &tech,
                      double total_synapse_cap) {
  Compiled c = compile(spec, tech, total_synapse_cap);
  if (!c.report.feasible())
    fail(ErrorCode::Infeasible, "infeasible mapping:\n" + c.report.to_string());
  return std::move(*c.config);
}

double quantization_margin(const AcnConfig &config, const TechProfile &tech) {
  if (!(config.unit_cap() > 0.0))
    fail(ErrorCode::Invalid, "configuration carries no unit capacitance");
  return static_cast<double>(config.n_inputs()) * tech.cap_grid /
         config.unit_cap();
}

} // namespace acn
