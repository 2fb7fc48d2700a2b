/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "acn/core_model.hpp"
#include "acn/mapper.hpp"

// Published reference data for the 12-input neuron, embedded verbatim,
// including its internal rounding (printed capacitors sum to 2119 fF against
// a stated C_T of 2115 fF). Checks use tolerances; values are never corrected.
namespace acn::fixtures {

enum class TlDesign { Proposed, Conventional };
enum class Corner { FF, TT, SS };
enum class Direction { Rising, Falling };

struct OffsetRow {
  TlDesign design;
  Corner corner;
  double temp_c;
  Direction direction;
  double offset_mv;
};

/// Published neuron: weights, bias and mapped capacitors (fF).
struct ReferenceConfig {
  std::vector<double> weights;
  double bias = 0.0;
  double stated_total_synapse = 0.0; ///< C_T as printed
  double stated_total = 0.0;         ///< total ACN capacitance as printed
  std::vector<double> synapse_caps;  ///< by input index
  double bias_p = 0.0, bias_m = 0.0;
  double ballast_p = 0.0, ballast_m = 0.0;
  double v_max = 0.0, v_cut = 0.0, c_min = 0.0;
};

/// Published voltage row. Voltages in mV.
struct VoltageRow {
  std::string name;
  std::string vector;
  double theo_vp, theo_vm, theo_vmd;
  int theo_out;
  double prop_vp, prop_vm;
  int prop_out;
  double conv_vp, conv_vm;
  int conv_out;
};

/// Published load and energy row.
struct EnergyRow {
  std::string name;
  std::string vector;
  double load_ff;
  double acn_fj;
  double ccn_fj;
  double savings_pct;
};

/// PCG schedule row at maximum loading.
struct PcgRow {
  double nominal_mhz;
  double operating_mhz;
  double t_on_ns;
  double l_pc_mh;
};

/// Savings row (%) under supply scaling.
struct ScalingRow {
  double v_dd;
  double tv4, tv8, tv13;
};

struct FixtureSet {
  std::vector<OffsetRow> offsets; ///< Tables I (rising) and II (falling)
  ReferenceConfig table3;
  std::vector<VoltageRow> table4;
  std::vector<EnergyRow> table5;
  std::vector<PcgRow> table6;
  std::vector<ScalingRow> table7;
};

const FixtureSet &embedded();

std::vector<OffsetRow> offsets_for(const FixtureSet &set, TlDesign design);

NeuronSpec reference_neuron(const FixtureSet &set = embedded());

/// Published mapping as a configuration (parasitic 0, V_B = 0).
AcnConfig reference_config(const FixtureSet &set = embedded());

/// Voltage or energy row for a test-vector name such as "TV4".
const VoltageRow &voltage_row(const FixtureSet &set, const std::string &name);
const EnergyRow &energy_row(const FixtureSet &set, const std::string &name);

std::string_view to_string(TlDesign d);
std::string_view to_string(Corner c);
std::string_view to_string(Direction d);
TlDesign parse_design(std::string_view s);
Corner parse_corner(std::string_view s);
Direction parse_direction(std::string_view s);

} // namespace acn::fixtures
