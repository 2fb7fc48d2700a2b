/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/tree_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "acn/error.hpp"

namespace acn {

namespace {

void check_dimension(const AcnConfig &config, const InputVector &x) {
  if (x.size() != config.n_inputs())
    fail(ErrorCode::Dimension, "input vector has " + std::to_string(x.size()) +
                                   " bits, configuration has " +
                                   std::to_string(config.n_inputs()) +
                                   " inputs");
}

constexpr std::size_t kMaxEnumeratedTree = 24;

struct TreeBest {
  std::vector<std::size_t> on_indices;
  double on = 0.0;
  double load = -1.0;
  bool exhaustive = true;
};

TreeBest best_tree_subset(const AcnConfig &config, Tree t) {
  std::vector<const Synapse *> syn;
  for (const auto &s : config.synapses())
    if (s.tree == t)
      syn.push_back(&s);
  const double bias = config.tree(t).bias_cap;
  const double total = config.total(t);

  TreeBest best;
  if (syn.size() <= kMaxEnumeratedTree) {
    const std::uint64_t count = std::uint64_t{1} << syn.size();
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      double on = bias;
      for (std::size_t j = 0; j < syn.size(); ++j)
        if ((mask >> j) & 1U)
          on += syn[j]->cap;
      const double load = tree_load(on, total);
      if (load > best.load) {
        best.load = load;
        best.on = on;
        best_mask = mask;
      }
    }
    for (std::size_t j = 0; j < syn.size(); ++j)
      if ((best_mask >> j) & 1U)
        best.on_indices.push_back(syn[j]->index);
    return best;
  }

  // Greedy: largest capacitors first, keep any that moves C_on closer to C_A/2.
  best.exhaustive = false;
  std::sort(syn.begin(), syn.end(),
            [](const Synapse *a, const Synapse *b) { return a->cap > b->cap; });
  const double half = total / 2.0;
  double on = bias;
  for (const Synapse *s : syn) {
    if (std::abs(on + s->cap - half) < std::abs(on - half)) {
      on += s->cap;
      best.on_indices.push_back(s->index);
    }
  }
  best.on = on;
  best.load = tree_load(on, total);
  return best;
}

} // namespace

TreeState tree_capacitances(const AcnConfig &config, const InputVector &x) {
  check_dimension(config, x);
  TreeState st;
  st.on_p = config.tree(Tree::Positive).bias_cap;
  st.on_m = config.tree(Tree::Negative).bias_cap;
  for (const auto &s : config.synapses()) {
    if (!x[s.index])
      continue;
    (s.tree == Tree::Positive ? st.on_p : st.on_m) += s.cap;
  }
  st.off_p = config.total(Tree::Positive) - st.on_p;
  st.off_m = config.total(Tree::Negative) - st.on_m;
  return st;
}

MembraneVoltages membrane_voltages(const AcnConfig &config,
                                   const InputVector &x, double v_pc) {
  if (!(v_pc >= 0.0) || v_pc > config.v_max() * (1.0 + 1e-12))
    fail(ErrorCode::Range, "power-clock voltage must lie in [0, V_max]");
  const TreeState st = tree_capacitances(config, x);
  MembraneVoltages v;
  v.positive = config.tree(Tree::Positive).bias_voltage +
               v_pc * st.on_p / config.total(Tree::Positive);
  v.negative = config.tree(Tree::Negative).bias_voltage +
               v_pc * st.on_m / config.total(Tree::Negative);
  return v;
}

MembraneVoltages peak_membrane_voltages(const AcnConfig &config,
                                        const InputVector &x) {
  return membrane_voltages(config, x, config.v_max());
}

Swing swing_range(const AcnConfig &config) {
  auto range = [&](Tree t) {
    const TreeParams &p = config.tree(t);
    const double total = config.total(t);
    return SwingRange{
        p.bias_voltage + config.v_max() * p.bias_cap / total,
        p.bias_voltage +
            config.v_max() * (config.synapse_total(t) + p.bias_cap) / total};
  };
  return {range(Tree::Positive), range(Tree::Negative)};
}

double tree_load(double on, double total) {
  if (!(total > 0.0))
    return 0.0;
  return std::max(0.0, on * (total - on) / total);
}

double capacitive_load(const AcnConfig &config, const InputVector &x) {
  const TreeState st = tree_capacitances(config, x);
  return tree_load(st.on_p, config.total(Tree::Positive)) +
         tree_load(st.on_m, config.total(Tree::Negative));
}

MaxLoadResult max_load_search(const AcnConfig &config) {
  const TreeBest p = best_tree_subset(config, Tree::Positive);
  const TreeBest m = best_tree_subset(config, Tree::Negative);
  std::vector<std::uint8_t> bits(config.n_inputs(), 0);
  for (std::size_t i : p.on_indices)
    bits[i] = 1;
  for (std::size_t i : m.on_indices)
    bits[i] = 1;
  MaxLoadResult r;
  r.argmax = InputVector(std::move(bits));
  r.load = p.load + m.load;
  r.on_p = p.on;
  r.on_m = m.on;
  r.exhaustive = p.exhaustive && m.exhaustive;
  return r;
}

void PowerClock::validate() const {
  if (!(v_max > 0.0) || !(nominal_freq > 0.0) || !(inductance > 0.0) ||
      !(tank_cap > 0.0) || !(t_on > 0.0) || !(freq_calibration > 0.0))
    fail(ErrorCode::Invalid, "power-clock parameters must be positive");
  if (std::abs(lc_frequency() / nominal_freq - 1.0) > 0.05)
    fail(ErrorCode::Invalid,
         "nominal frequency is not within 5% of the LC resonance");
}

double PowerClock::lc_frequency() const {
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(inductance * tank_cap));
}

double operating_frequency(const PowerClock &pc, double load) {
  if (!(load >= 0.0))
    fail(ErrorCode::Range, "capacitive load must be non-negative");
  return pc.freq_calibration /
         (2.0 * std::numbers::pi *
          std::sqrt(pc.inductance * (pc.tank_cap + load * 1e-15)));
}

double ramp_time(const PowerClock &pc, double load) {
  return 0.5 / operating_frequency(pc, load);
}

} // namespace acn
