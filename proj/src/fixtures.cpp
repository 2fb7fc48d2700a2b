/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/fixtures.hpp"

#include <cmath>
#include <iterator>
#include <algorithm>
#include <cctype>

#include "acn/error.hpp"

namespace acn::fixtures {

namespace {

std::vector<OffsetRow> offset_tables() {
  using enum TlDesign;
  using enum Corner;
  using enum Direction;
  struct Line {
    double temp;
    double ff_conv, ff_prop, tt_conv, tt_prop, ss_conv, ss_prop;
  };
  // Rising offsets (mV).
  const Line rising[] = {
      {-55, 23.00, 9.003, 17.00, 7.005, 13.01, 5.007},
      {0, 23.00, 9.004, 19.00, 9.005, 15.01, 7.007},
      {27, 25.00, 9.004, 21.00, 9.005, 15.01, 7.007},
      {100, 27.00, 9.004, 23.01, 9.006, 19.01, 9.008},
      {125, 27.00, 9.004, 23.01, 9.006, 19.01, 9.008},
  };
  // Falling offsets (mV).
  const Line falling[] = {
      {-55, 2.997, 8.996, 0.9956, 4.995, -1.006, 2.993},
      {0, 4.996, 8.996, 2.995, 6.995, 0.9927, 4.993},
      {27, 4.996, 8.996, 2.995, 6.995, 0.9928, 4.993},
      {100, 4.996, 8.995, 2.995, 8.994, 0.9927, 6.992},
      {125, 4.996, 6.996, 2.995, 8.994, 0.9926, 6.992},
  };
  std::vector<OffsetRow> out;
  for (auto [lines, dir] : {std::pair{rising, Rising}, std::pair{falling, Falling}}) {
    for (std::size_t r = 0; r < 5; ++r) {
      const Line &l = lines[r];
      out.push_back({Conventional, FF, l.temp, dir, l.ff_conv});
      out.push_back({Proposed, FF, l.temp, dir, l.ff_prop});
      out.push_back({Conventional, TT, l.temp, dir, l.tt_conv});
      out.push_back({Proposed, TT, l.temp, dir, l.tt_prop});
      out.push_back({Conventional, SS, l.temp, dir, l.ss_conv});
      out.push_back({Proposed, SS, l.temp, dir, l.ss_prop});
    }
  }
  return out;
}

FixtureSet build() {
  FixtureSet s;
  s.offsets = offset_tables();

  s.table3.weights = {0.937, -1.000, -1.000, -1.000, -1.000, 0.169,
                      0.600, -1.000, -0.529, 0.992,  0.961,  -1.000};
  s.table3.bias = 0.1;
  s.table3.stated_total_synapse = 2115.0;
  s.table3.stated_total = 3907.0;
  s.table3.synapse_caps = {195, 208, 208, 208, 208, 35,
                           125, 208, 110, 206, 200, 208};
  s.table3.bias_p = 35;
  s.table3.bias_m = 56;
  s.table3.ballast_p = 1159;
  s.table3.ballast_m = 543;
  s.table3.v_max = 1.8;
  s.table3.v_cut = 1.3;
  s.table3.c_min = 35;

  s.table4 = {
      {"TV1", "0111_1001_1001", 32.0, 1301.0, -1268.0, 0, 34.8, 1258.4, 0, 34.6, 1257.1, 0},
      {"TV2", "1111_1111_1111", 733.0, 1301.0, -568.0, 0, 707.8, 1261.0, 0, 705.8, 1257.4, 0},
      {"TV3", "0001_1010_0000", 147.0, 434.0, -287.0, 0, 145.0, 426.3, 0, 146.4, 427.3, 0},
      {"TV4", "1111_1110_1110", 733.0, 918.0, -185.0, 0, 700.2, 875.9, 0, 699.6, 875.1, 0},
      {"TV5", "0000_0000_1000", 32.0, 153.0, -120.0, 0, 32.2, 149.1, 0, 32.1, 149.1, 0},
      {"TV6", "1011_0110_0101", 549.0, 625.0, -77.0, 0, 534.4, 607.3, 0, 533.8, 606.6, 0},
      {"TV7", "1011_1010_1110", 701.0, 727.0, -26.0, 0, 674.2, 699.5, 0, 672.4, 697.6, 0},
      {"TV8", "0000_0000_0000", 32.2, 51.5, -19.3, 0, 31.3, 49.4, 0, 31.0, 49.2, 0},
      {"TV9", "0000_0010_1000", 147.0, 153.0, -5.0, 0, 143.3, 149.2, 0, 143.4, 149.2, 0},
      {"TV10", "1000_0101_0000", 244.0, 243.0, 1.0, 1, 239.2, 238.4, 0, 239.1, 238.3, 0},
      {"TV11", "1011_0111_1110", 733.0, 727.0, 6.0, 1, 707.6, 701.3, 1, 707.3, 700.8, 0},
      {"TV12", "0011_0110_1110", 553.0, 535.0, 18.0, 1, 537.8, 520.5, 1, 537.4, 520.6, 0},
      {"TV13", "1001_0000_1111", 586.0, 535.0, 50.0, 1, 573.4, 525.6, 1, 574.6, 526.5, 1},
      {"TV14", "1100_0110_0000", 359.0, 243.0, 116.0, 1, 353.6, 240.2, 1, 353.6, 240.2, 1},
      {"TV15", "1000_0010_0000", 327.0, 52.0, 275.0, 1, 316.7, 52.3, 1, 317.5, 52.2, 1},
      {"TV16", "1000_0110_0110", 733.0, 52.0, 681.0, 1, 716.5, 55.5, 1, 715.9, 55.3, 1},
  };

  const double table5[16][4] = {
      {426.7, 127.2, 1439.1, 91.2}, {864.2, 151.4, 3006.7, 94.9},
      {505.1, 130.7, 1498.2, 91.3}, {961.0, 188.5, 3456.1, 94.2},
      {186.3, 95.1, 365.3, 73.9},   {858.0, 130.0, 2805.2, 95.4},
      {935.9, 154.4, 3109.3, 95.0}, {88.8, 92.6, 341.2, 72.9},
      {298.8, 116.0, 769.7, 84.9},  {457.5, 114.4, 1308.1, 91.3},
      {943.0, 159.7, 3143.4, 94.9}, {825.2, 137.9, 2693.6, 94.9},
      {838.0, 143.9, 2714.3, 94.7}, {540.6, 119.5, 1605.7, 92.6},
      {344.9, 118.5, 905.4, 86.9},  {526.3, 111.7, 1588.5, 92.9},
  };
  for (std::size_t i = 0; i < 16; ++i)
    s.table5.push_back({s.table4[i].name, s.table4[i].vector, table5[i][0],
                        table5[i][1], table5[i][2], table5[i][3]});

  s.table6 = {
      {0.10, 0.0986, 600.0, 100.0},
      {0.50, 0.4902, 120.0, 4.0},
      {1.0, 0.9794, 60.0, 1.0},
      {10.0, 9.8100, 6.0, 0.010},
      {100.0, 98.0400, 0.6, 0.0001},
  };

  s.table7 = {
      {1.8, 94.2, 72.9, 94.7}, {1.7, 94.1, 71.4, 94.6},
      {1.6, 94.0, 71.6, 94.6}, {1.5, 94.0, 71.3, 94.2},
      {1.4, 94.2, 71.5, 94.1}, {1.3, 94.3, 69.5, 94.5},
      {1.2, 94.9, 71.4, 94.4}, {1.1, 95.8, 71.5, 95.7},
      {1.0, 96.4, 69.2, 95.2},
  };
  return s;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

} // namespace

const FixtureSet &embedded() {
  static const FixtureSet set = build();
  return set;
}

std::vector<OffsetRow> offsets_for(const FixtureSet &set, TlDesign design) {
  std::vector<OffsetRow> out;
  std::copy_if(set.offsets.begin(), set.offsets.end(), std::back_inserter(out),
               [design](const OffsetRow &r) { return r.design == design; });
  return out;
}

NeuronSpec reference_neuron(const FixtureSet &set) {
  return NeuronSpec(set.table3.weights, set.table3.bias);
}

AcnConfig reference_config(const FixtureSet &set) {
  const ReferenceConfig &t = set.table3;
  if (t.synapse_caps.size() != t.weights.size())
    fail(ErrorCode::Invalid, "reference capacitor list does not match weights");
  std::vector<Synapse> syn;
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    if (t.weights[i] == 0.0)
      continue;
    syn.push_back({i, t.weights[i] > 0.0 ? Tree::Positive : Tree::Negative,
                   t.synapse_caps[i]});
  }
  TreeParams p, m;
  p.bias_cap = t.bias_p;
  p.ballast_cap = t.ballast_p;
  m.bias_cap = t.bias_m;
  m.ballast_cap = t.ballast_m;
  double w_sum = 0.0;
  for (double w : t.weights)
    w_sum += std::abs(w);
  return AcnConfig(t.weights.size(), std::move(syn), p, m, t.v_max,
                   t.stated_total_synapse / w_sum);
}

const VoltageRow &voltage_row(const FixtureSet &set, const std::string &name) {
  for (const auto &r : set.table4)
    if (r.name == name)
      return r;
  fail(ErrorCode::Invalid, "no voltage fixture row named " + name);
}

const EnergyRow &energy_row(const FixtureSet &set, const std::string &name) {
  for (const auto &r : set.table5)
    if (r.name == name)
      return r;
  fail(ErrorCode::Invalid, "no energy fixture row named " + name);
}

std::string_view to_string(TlDesign d) {
  return d == TlDesign::Proposed ? "proposed" : "conventional";
}

std::string_view to_string(Corner c) {
  switch (c) {
  case Corner::FF:
    return "FF";
  case Corner::TT:
    return "TT";
  case Corner::SS:
    return "SS";
  }
  return "TT";
}

std::string_view to_string(Direction d) {
  return d == Direction::Rising ? "rising" : "falling";
}

TlDesign parse_design(std::string_view s) {
  const std::string u = upper(s);
  if (u == "PROPOSED" || u == "PROP")
    return TlDesign::Proposed;
  if (u == "CONVENTIONAL" || u == "CONV")
    return TlDesign::Conventional;
  fail(ErrorCode::Parse, "unknown threshold-logic design '" + std::string(s) + "'");
}

Corner parse_corner(std::string_view s) {
  const std::string u = upper(s);
  if (u == "FF")
    return Corner::FF;
  if (u == "TT")
    return Corner::TT;
  if (u == "SS")
    return Corner::SS;
  fail(ErrorCode::Parse, "unknown process corner '" + std::string(s) + "'");
}

Direction parse_direction(std::string_view s) {
  const std::string u = upper(s);
  if (u == "RISING")
    return Direction::Rising;
  if (u == "FALLING")
    return Direction::Falling;
  fail(ErrorCode::Parse, "unknown offset direction '" + std::string(s) + "'");
}

} // namespace acn::fixtures
