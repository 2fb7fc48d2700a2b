/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/energy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "acn/error.hpp"

namespace acn {

namespace {

constexpr double kFemto = 1e-15;
constexpr double kPi2Over8 = std::numbers::pi * std::numbers::pi / 8.0;

// Coefficient of R_syn in E_AL at a given load, fJ per ohm.
double adiabatic_coefficient(double load, double v_dd, const PowerClock &pc) {
  return energy_adiabatic(load, v_dd, 1.0, ramp_time(pc, load));
}

} // namespace

void EnergyParams::validate() const {
  if (!(r_syn > 0.0) || !(r_pc > 0.0) || !(c_pc > 0.0))
    fail(ErrorCode::Invalid, "resistances and C_PC must be positive");
  if (!(v_x >= 0.0) || v_x > v_dd_nominal)
    fail(ErrorCode::Invalid, "V_x must lie in [0, V_DD]");
  if (!(ccn_overhead >= 0.0))
    fail(ErrorCode::Invalid, "CCN overhead must be non-negative");
  if (!(v_dd_nominal > v_th))
    fail(ErrorCode::Invalid, "nominal supply must exceed V_th");
}

double EnergyParams::r_syn_at(double v_dd) const {
  if (!(v_dd > v_th))
    fail(ErrorCode::Range, "supply must exceed V_th for the resistance law");
  return r_syn * (v_dd_nominal - v_th) / (v_dd - v_th);
}

double energy_pcg(const EnergyParams &params, double c_pc, double t_on) {
  if (!(c_pc > 0.0) || !(t_on > 0.0))
    fail(ErrorCode::Range, "C_PC and t_on must be positive");
  return 0.5 * c_pc * params.v_x * params.v_x *
         (1.0 - std::exp(-2.0 * t_on / (params.r_pc * c_pc))) / kFemto;
}

double energy_adiabatic(double load, double v_dd, double r_syn, double t_r) {
  if (!(load >= 0.0) || !(v_dd > 0.0) || !(r_syn >= 0.0) || !(t_r > 0.0))
    fail(ErrorCode::Range, "invalid adiabatic-loss arguments");
  const double c = load * kFemto;
  return c * v_dd * v_dd * kPi2Over8 * (r_syn * c / t_r) / kFemto;
}

double energy_ccn(double load, double v_dd, const EnergyParams &params) {
  if (!(load >= 0.0))
    fail(ErrorCode::Range, "capacitive load must be non-negative");
  const double s = v_dd / params.v_dd_nominal;
  return load * v_dd * v_dd + params.ccn_overhead * s * s;
}

double savings_percent(double acn_synapse, double ccn) {
  if (!(ccn > 0.0))
    fail(ErrorCode::Degenerate, "CMOS energy must be positive");
  return 100.0 * (ccn - acn_synapse) / ccn;
}

EnergyBreakdown energy_at_load(double load, const PowerClock &pc,
                               const EnergyParams &params, const TlModel &tl,
                               double v_dd) {
  EnergyBreakdown e;
  e.load = load;
  e.f_op = operating_frequency(pc, load);
  e.ramp = 0.5 / e.f_op;

  EnergyParams scaled = params;
  scaled.v_x = params.v_x * v_dd / params.v_dd_nominal;
  e.e_pcg = energy_pcg(scaled, params.c_pc, pc.t_on);
  e.e_al = energy_adiabatic(load, v_dd, params.r_syn_at(v_dd), e.ramp);
  e.e_tl = tl_energy(tl, v_dd);
  e.e_total = e.e_pcg + e.e_tl + e.e_al;
  e.e_ccn = energy_ccn(load, v_dd, params);
  e.savings_pct = savings_percent(e.synapse(), e.e_ccn);
  return e;
}

EnergyBreakdown total_energy(const AcnConfig &config, const InputVector &x,
                             const PowerClock &pc, const EnergyParams &params,
                             const TlModel &tl) {
  return total_energy(config, x, pc, params, tl, params.v_dd_nominal);
}

EnergyBreakdown total_energy(const AcnConfig &config, const InputVector &x,
                             const PowerClock &pc, const EnergyParams &params,
                             const TlModel &tl, double v_dd) {
  return energy_at_load(capacitive_load(config, x), pc, params, tl, v_dd);
}

EnergyParams calibrate_energy(std::span<const fixtures::EnergyRow> rows,
                              const PowerClock &pc, const EnergyParams &base) {
  const fixtures::EnergyRow *zero = nullptr;
  const fixtures::EnergyRow *peak = nullptr;
  for (const auto &r : rows) {
    if (r.vector.find('1') == std::string::npos)
      zero = &r;
    if (!peak || r.load_ff > peak->load_ff)
      peak = &r;
  }
  if (!zero)
    fail(ErrorCode::Calibration, "calibration needs the all-zero input row");
  if (!peak || peak == zero)
    fail(ErrorCode::Calibration, "calibration needs a maximum-load row");

  const double v = base.v_dd_nominal;
  const double a_zero = adiabatic_coefficient(zero->load_ff, v, pc);
  const double a_peak = adiabatic_coefficient(peak->load_ff, v, pc);
  if (!(a_peak > a_zero))
    fail(ErrorCode::Calibration, "anchor rows have equal loads");

  EnergyParams p = base;
  // E = E_pcg0 + R_syn * a(C_L) on both anchors.
  p.r_syn = (peak->acn_fj - zero->acn_fj) / (a_peak - a_zero);
  if (!(p.r_syn > 0.0))
    fail(ErrorCode::Calibration,
         "degenerate fit: maximum-load energy does not exceed the all-zero "
         "energy");
  p.e_pcg0 = zero->acn_fj - p.r_syn * a_zero;
  if (!(p.e_pcg0 > 0.0))
    fail(ErrorCode::Calibration, "degenerate fit: negative PCG loss");
  p.ccn_overhead = zero->ccn_fj - zero->load_ff * v * v;
  if (p.ccn_overhead < 0.0)
    fail(ErrorCode::Calibration, "degenerate fit: negative CMOS overhead");

  const double settle =
      1.0 - std::exp(-2.0 * pc.t_on / (p.r_pc * p.c_pc));
  p.v_x = std::sqrt(2.0 * p.e_pcg0 * kFemto / (p.c_pc * settle));
  p.validate();
  return p;
}

PowerClock reference_power_clock() { return PowerClock{}; }

PowerClock pcg_schedule(double nominal_freq, const PowerClock &base) {
  if (!(nominal_freq > 0.0))
    fail(ErrorCode::Range, "frequency must be positive");
  PowerClock pc = base;
  pc.nominal_freq = nominal_freq;
  for (const auto &row : fixtures::embedded().table6) {
    if (std::abs(row.nominal_mhz * 1e6 - nominal_freq) <= 1e-9 * nominal_freq) {
      pc.inductance = row.l_pc_mh * 1e-3;
      pc.t_on = row.t_on_ns * 1e-9;
      return pc;
    }
  }
  const double w = 2.0 * std::numbers::pi * nominal_freq;
  pc.inductance = 1.0 / (w * w * base.tank_cap);
  pc.t_on = 60e-9 * (1e6 / nominal_freq);
  return pc;
}

std::string_view to_string(SweepAxis axis) {
  return axis == SweepAxis::Frequency ? "freq" : "vdd";
}

SweepAxis parse_sweep_axis(std::string_view s) {
  std::string l(s);
  std::transform(l.begin(), l.end(), l.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (l == "freq" || l == "frequency")
    return SweepAxis::Frequency;
  if (l == "vdd" || l == "voltage")
    return SweepAxis::Voltage;
  fail(ErrorCode::Parse, "unknown sweep axis '" + std::string(s) + "'");
}

std::vector<SweepRow> sweep(const AcnConfig &config,
                            std::span<const InputVector> vectors,
                            SweepAxis axis, std::span<const double> points,
                            const PowerClock &pc, const EnergyParams &params,
                            const TlModel &tl) {
  for (double p : points) {
    if (axis == SweepAxis::Frequency && !(p >= 1e5 && p <= 1e8))
      fail(ErrorCode::Range, "frequency points must lie in [100 kHz, 100 MHz]");
    if (axis == SweepAxis::Voltage && !(p >= 1.0 - 1e-9 && p <= 1.8 + 1e-9))
      fail(ErrorCode::Range, "voltage points must lie in [1.0, 1.8] V");
  }
  std::vector<SweepRow> rows;
  rows.reserve(points.size() * vectors.size());
  for (double p : points) {
    const PowerClock clock =
        axis == SweepAxis::Frequency ? pcg_schedule(p, pc) : pc;
    const double v_dd = axis == SweepAxis::Voltage ? p : params.v_dd_nominal;
    // The power clock swings to the supply, so the decision is sampled at
    // V_pc = v_dd.
    const double v_pc = std::min(v_dd, config.v_max());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      SweepRow row;
      row.axis_value = p;
      row.vector_index = k;
      row.energy = total_energy(config, vectors[k], clock, params, tl, v_dd);
      const MembraneVoltages mv = membrane_voltages(config, vectors[k], v_pc);
      row.output =
          tl_decide(tl, mv.positive * 1e3, mv.negative * 1e3, {}, v_dd).output;
      rows.push_back(row);
    }
  }
  return rows;
}

} // namespace acn
