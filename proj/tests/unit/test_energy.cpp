/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>

#include "acn/energy.hpp"
#include "acn/error.hpp"
#include "acn/fixtures.hpp"

using namespace acn;

namespace {

const EnergyParams &calibrated() {
  static const EnergyParams p =
      calibrate_energy(fixtures::embedded().table5, reference_power_clock());
  return p;
}

InputVector tv(const std::string &name) {
  return InputVector::parse(fixtures::energy_row(fixtures::embedded(), name).vector, 12);
}

} // namespace

TEST_CASE("precharge loss") {
  EnergyParams p;
  p.v_x = 0.2;
  p.r_pc = 1e3;
  // 0.5 * 26 pF * 0.04 V^2 * (1 - exp(-120 ns / 26 ns)), evaluated by hand.
  CHECK(energy_pcg(p, 26e-12, 60e-9) == doctest::Approx(514.853).epsilon(1e-5));
  CHECK(energy_pcg(p, 26e-12, 1.0) == doctest::Approx(520.0).epsilon(1e-9));
  p.v_x = 0.0;
  CHECK(energy_pcg(p, 26e-12, 60e-9) == 0.0);
}

TEST_CASE("adiabatic loss") {
  CHECK(energy_adiabatic(961.0, 1.8, 13e3, 500e-9) == doctest::Approx(95.979).epsilon(1e-4));
  CHECK(energy_adiabatic(0.0, 1.8, 13e3, 500e-9) == 0.0);
  CHECK(energy_adiabatic(961.0, 1.8, 13e3, 250e-9) ==
        doctest::Approx(2.0 * energy_adiabatic(961.0, 1.8, 13e3, 500e-9)));
}

TEST_CASE("CMOS benchmark") {
  EnergyParams p;
  p.ccn_overhead = 53.5;
  CHECK(energy_ccn(88.8, 1.8, p) == doctest::Approx(341.2).epsilon(1e-3));
  CHECK(energy_ccn(864.2, 1.8, p) == doctest::Approx(2853.508).epsilon(1e-6));
  CHECK(energy_ccn(0.0, 1.8, p) == 53.5);
}

TEST_CASE("calibration reproduces both anchor rows") {
  const EnergyParams &p = calibrated();
  CHECK(p.r_syn == doctest::Approx(13265.27).epsilon(1e-5));
  CHECK(p.e_pcg0 == doctest::Approx(91.7598).epsilon(1e-5));
  CHECK(p.ccn_overhead == doctest::Approx(53.488).epsilon(1e-4));
  CHECK(p.v_x == doctest::Approx(0.086033).epsilon(1e-4));
  const AcnConfig c = fixtures::reference_config();
  const PowerClock pc = reference_power_clock();
  const TlModel tl = TlModel::proposed();
  CHECK(std::abs(total_energy(c, tv("TV4"), pc, p, tl).synapse() - 188.5) < 0.05);
  CHECK(std::abs(total_energy(c, tv("TV8"), pc, p, tl).synapse() - 92.6) < 0.05);
}

TEST_CASE("calibration needs both anchors") {
  auto rows = fixtures::embedded().table5;
  std::erase_if(rows, [](const auto &r) { return r.name == "TV8"; });
  try {
    calibrate_energy(rows, reference_power_clock());
    FAIL("expected a calibration error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::Calibration);
  }
  auto flat = fixtures::embedded().table5;
  for (auto &r : flat)
    r.acn_fj = 92.6;
  CHECK_THROWS_AS(calibrate_energy(flat, reference_power_clock()), Error);
}

TEST_CASE("energy identity and monotonicity") {
  const AcnConfig c = fixtures::reference_config();
  const PowerClock pc = reference_power_clock();
  const auto e4 = total_energy(c, tv("TV4"), pc, calibrated(), TlModel::proposed());
  const auto e8 = total_energy(c, tv("TV8"), pc, calibrated(), TlModel::proposed());
  CHECK(e4.e_total == e4.e_pcg + e4.e_tl + e4.e_al);
  CHECK(e4.e_al > e8.e_al);
  CHECK(e4.e_al * e4.ramp / (e4.load * e4.load) ==
        doctest::Approx(e8.e_al * e8.ramp / (e8.load * e8.load)));
}

TEST_CASE("supply scaling law") {
  const EnergyParams &p = calibrated();
  CHECK(p.r_syn_at(1.8) == doctest::Approx(p.r_syn));
  CHECK(p.r_syn_at(1.0) == doctest::Approx(p.r_syn * 2.6));
  CHECK_THROWS_AS(p.r_syn_at(0.5), Error);
  // V^2 / (V - V_th) grows with V above 2 V_th, so E_AL falls with the supply.
  const AcnConfig c = fixtures::reference_config();
  const PowerClock pc = reference_power_clock();
  double prev = 1e300;
  for (int k = 18; k >= 10; --k) {
    const auto e = total_energy(c, tv("TV4"), pc, p, TlModel::proposed(), k / 10.0);
    CHECK(e.e_al < prev);
    prev = e.e_al;
  }
}

TEST_CASE("PCG schedule follows the published grid") {
  const PowerClock base = reference_power_clock();
  const PowerClock half = pcg_schedule(0.5e6, base);
  CHECK(half.inductance == doctest::Approx(4e-3));
  CHECK(half.t_on == doctest::Approx(120e-9));
  CHECK(operating_frequency(half, 961.0) * 1e-6 == doctest::Approx(0.4902).epsilon(0.01));
  const PowerClock off_grid = pcg_schedule(3e6, base);
  CHECK(off_grid.t_on == doctest::Approx(20e-9));
}

TEST_CASE("synapse energy rises with operating frequency") {
  const AcnConfig c = fixtures::reference_config();
  std::vector<InputVector> v{tv("TV4")};
  const double pts[] = {0.5e6, 1e6, 2e6, 5e6, 10e6};
  const auto rows = sweep(c, v, SweepAxis::Frequency, pts, reference_power_clock(),
                          calibrated(), TlModel::proposed());
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].energy.synapse() > rows[i - 1].energy.synapse());
}

TEST_CASE("sweep ordering and range checks") {
  const AcnConfig c = fixtures::reference_config();
  std::vector<InputVector> v{tv("TV4"), tv("TV8")};
  const double volts[] = {1.8, 1.0};
  const auto rows = sweep(c, v, SweepAxis::Voltage, volts, reference_power_clock(),
                          calibrated(), TlModel::ideal());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].axis_value == 1.8);
  CHECK(rows[1].vector_index == 1);
  CHECK(rows[2].axis_value == 1.0);
  const double bad[] = {0.9};
  CHECK_THROWS_AS(sweep(c, v, SweepAxis::Voltage, bad, reference_power_clock(),
                        calibrated(), TlModel::ideal()),
                  Error);
}
