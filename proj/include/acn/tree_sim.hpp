/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "acn/core_model.hpp"
#include "acn/mapper.hpp"

namespace acn {

/// Switched-on / switched-off capacitance per tree, fF.
struct TreeState {
  double on_p = 0.0;
  double off_p = 0.0;
  double on_m = 0.0;
  double off_m = 0.0;

  double on(Tree t) const { return t == Tree::Positive ? on_p : on_m; }
  double off(Tree t) const { return t == Tree::Positive ? off_p : off_m; }
};

TreeState tree_capacitances(const AcnConfig &config, const InputVector &x);

/// Volts.
struct MembraneVoltages {
  double positive = 0.0;
  double negative = 0.0;

  double differential() const { return positive - negative; }
};

MembraneVoltages membrane_voltages(const AcnConfig &config,
                                   const InputVector &x, double v_pc);

/// Sampled at the power-clock peak, V_pc = V_max.
MembraneVoltages peak_membrane_voltages(const AcnConfig &config,
                                        const InputVector &x);

struct SwingRange {
  double low = 0.0;  ///< all inputs 0
  double high = 0.0; ///< all inputs 1
};

struct Swing {
  SwingRange positive;
  SwingRange negative;
};

Swing swing_range(const AcnConfig &config);

/// Series load of one tree seen by the power clock: C_on (C_A - C_on) / C_A.
double tree_load(double on, double total);

/// Total power-clock load in fF, both trees.
double capacitive_load(const AcnConfig &config, const InputVector &x);

struct MaxLoadResult {
  InputVector argmax;
  double load = 0.0; ///< fF
  double on_p = 0.0;
  double on_m = 0.0;
  bool exhaustive = true; ///< false when a tree was too large to enumerate
};

/// Maximizes the load. The two trees draw on disjoint inputs, so each tree is
/// enumerated on its own (2^N+ + 2^N- subsets instead of 2^N). Trees with more
/// than 24 synapses fall back to a greedy fill towards C_A/2.
MaxLoadResult max_load_search(const AcnConfig &config);

/// Resonant power-clock generator. SI units.
struct PowerClock {
  double v_max = 1.8;            ///< V
  double nominal_freq = 1.0e6;   ///< Hz
  double inductance = 1.0e-3;    ///< L_PC, H
  double tank_cap = 25.0e-12;    ///< C_E, F
  double t_on = 60.0e-9;         ///< bypass switch on-time, s
  double freq_calibration = 1.0; ///< multiplicative fit constant on f_op

  void validate() const;
  double lc_frequency() const;
};

/// f_op = cal / (2 pi sqrt(L (C_E + C_L))), with C_L in fF.
double operating_frequency(const PowerClock &pc, double load);

/// Ramp time T_r = half the operating period, seconds.
double ramp_time(const PowerClock &pc, double load);

} // namespace acn
