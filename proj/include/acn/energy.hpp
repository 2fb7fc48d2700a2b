/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "acn/fixtures.hpp"
#include "acn/threshold_logic.hpp"
#include "acn/tree_sim.hpp"

namespace acn {

/// Free parameters of the energy model. Resistances in ohm, C_PC in F,
/// energies in fJ, voltages in V.
struct EnergyParams {
  double r_syn = 13.0e3;       ///< synapse switch on-resistance at v_dd_nominal
  double r_pc = 1.0e3;         ///< PCG bypass switch on-resistance
  double c_pc = 25.0e-12;      ///< PC-node capacitance in the PCG loss term
  double v_x = 0.086;          ///< residual PC voltage at bypass turn-on
  double e_pcg0 = 91.8;        ///< calibrated PCG loss at nominal conditions
  double ccn_overhead = 53.5;  ///< fixed CCN overhead per operation
  double v_th = 0.5;           ///< threshold in the R(V) ~ 1/(V - V_th) law
  double v_dd_nominal = 1.8;

  void validate() const;

  /// R_syn at supply v_dd: R_syn (V_nom - V_th) / (V - V_th).
  double r_syn_at(double v_dd) const;
};

/// One evaluation cycle, fJ unless noted.
struct EnergyBreakdown {
  double load = 0.0;   ///< C_L, fF
  double f_op = 0.0;   ///< Hz
  double ramp = 0.0;   ///< T_r, s
  double e_pcg = 0.0;
  double e_tl = 0.0;
  double e_al = 0.0;
  double e_total = 0.0; ///< e_pcg + e_tl + e_al
  double e_ccn = 0.0;   ///< conventional CMOS synapse energy
  double savings_pct = 0.0;

  /// Adiabatic synapse energy (the threshold logic is common to both designs
  /// and excluded from the comparison).
  double synapse() const { return e_pcg + e_al; }
};

/// E_PCG = 1/2 C_PC V_x^2 (1 - exp(-2 t_on / (R_PC C_PC))), using
/// params.v_x and params.r_pc.
double energy_pcg(const EnergyParams &params, double c_pc, double t_on);

/// E_AL = C_L V^2 (pi^2/8) (R_syn C_L / T_r), load in fF.
double energy_adiabatic(double load, double v_dd, double r_syn, double t_r);

/// First-order CMOS benchmark: C_L V^2 + overhead (V/V_nom)^2.
double energy_ccn(double load, double v_dd, const EnergyParams &params);

/// Savings of the adiabatic synapse energy against a CMOS energy, percent.
double savings_percent(double acn_synapse, double ccn);

EnergyBreakdown total_energy(const AcnConfig &config, const InputVector &x,
                             const PowerClock &pc, const EnergyParams &params,
                             const TlModel &tl);

/// Same at a scaled supply: V_x and the overhead scale with V, R_syn follows
/// r_syn_at(v_dd).
EnergyBreakdown total_energy(const AcnConfig &config, const InputVector &x,
                             const PowerClock &pc, const EnergyParams &params,
                             const TlModel &tl, double v_dd);

/// Energy at a known load without a configuration (used by calibration and
/// Monte Carlo).
EnergyBreakdown energy_at_load(double load, const PowerClock &pc,
                               const EnergyParams &params, const TlModel &tl,
                               double v_dd);

/// Fits E_pcg0 and R_syn to the all-zero and maximum-load rows so both are
/// reproduced, and the CCN overhead to the all-zero row. V_x is then chosen
/// so that the PCG term equals E_pcg0 at pc.t_on. Throws Error(Calibration)
/// when an anchor is missing or the fit is degenerate.
EnergyParams calibrate_energy(std::span<const fixtures::EnergyRow> rows,
                              const PowerClock &pc,
                              const EnergyParams &base = {});

/// Reference 1 MHz clock: L = 1 mH, C_E = 25 pF, t_on = 60 ns.
PowerClock reference_power_clock();

/// PCG schedule for a nominal frequency. Published grid points use the
/// tabulated L_PC and t_on; other frequencies scale L = 1/((2 pi f)^2 C_E) and
/// t_on proportional to the period.
PowerClock pcg_schedule(double nominal_freq, const PowerClock &base);

enum class SweepAxis { Frequency, Voltage };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view s);

struct SweepRow {
  double axis_value = 0.0; ///< Hz or V
  std::size_t vector_index = 0;
  EnergyBreakdown energy;
  int output = 0; ///< threshold-logic output at this point
};

/// Rows ordered by axis point, then vector.
std::vector<SweepRow> sweep(const AcnConfig &config,
                            std::span<const InputVector> vectors,
                            SweepAxis axis, std::span<const double> points,
                            const PowerClock &pc, const EnergyParams &params,
                            const TlModel &tl);

} // namespace acn
