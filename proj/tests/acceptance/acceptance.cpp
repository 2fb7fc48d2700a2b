/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Acceptance suite: one PASS/FAIL line per criterion. Published numbers are
// pinned here; model quantities are recomputed with small local oracles
// (capacitive divider, series load, LC resonance, brute-force enumeration)
// rather than trusted from the library.
//
// Usage: acn_acceptance <path to acn CLI>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "acn/energy.hpp"
#include "acn/fixtures.hpp"
#include "acn/io.hpp"
#include "acn/mapper.hpp"
#include "acn/montecarlo.hpp"
#include "acn/random.hpp"
#include "acn/threshold_logic.hpp"
#include "acn/tree_sim.hpp"

using namespace acn;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (!pass)
        detail << "; ";
      detail << what;
    }
    pass = pass && ok;
  }
};

std::string fmt(double v, int decimals = 3) { return io::fixed(v, decimals); }

const fixtures::FixtureSet &fx() { return fixtures::embedded(); }

InputVector bits(const std::string &s) { return InputVector::parse(s, 12); }

// Published 12-input configuration.
constexpr double kCaps[12] = {195, 208, 208, 208, 208, 35, 125, 208, 110, 206, 200, 208};
constexpr double kBiasP = 35, kBiasM = 56, kBallastP = 1159, kBallastM = 543;

// Oracle: series load C_on (C_A - C_on) / C_A summed over both trees.
struct Divider {
  double on_p, on_m, total_p, total_m;
};

Divider divider(const AcnConfig &c, const InputVector &x) {
  Divider d{c.tree(Tree::Positive).bias_cap, c.tree(Tree::Negative).bias_cap, 0, 0};
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    const auto &p = c.tree(t);
    double total = p.bias_cap + p.ballast_cap + p.parasitic_cap;
    for (const auto &s : c.synapses())
      if (s.tree == t)
        total += s.cap;
    (t == Tree::Positive ? d.total_p : d.total_m) = total;
  }
  for (const auto &s : c.synapses())
    if (x[s.index])
      (s.tree == Tree::Positive ? d.on_p : d.on_m) += s.cap;
  return d;
}

double oracle_load(const AcnConfig &c, const InputVector &x) {
  const Divider d = divider(c, x);
  return d.on_p * (d.total_p - d.on_p) / d.total_p +
         d.on_m * (d.total_m - d.on_m) / d.total_m;
}

double oracle_frequency(double load_ff) {
  return 1.0 / (2.0 * M_PI * std::sqrt(1e-3 * (25e-12 + load_ff * 1e-15)));
}

Outcome criterion1() {
  Outcome o;
  TechProfile tech = TechProfile::reference();
  tech.v_max = 1.8;
  tech.v_cut = 1.3;
  tech.c_min = 35;
  tech.cap_grid = 1;
  const AcnConfig c = map_weights(fixtures::reference_neuron(), tech, 2115.0);
  for (std::size_t i = 0; i < 12; ++i) {
    const double got = c.find(i)->cap;
    o.require(std::abs(got - kCaps[i]) <= 1.0,
              "C" + std::to_string(i + 1) + "=" + fmt(got, 0));
  }
  const double bp = c.tree(Tree::Positive).bias_cap, bm = c.tree(Tree::Negative).bias_cap;
  const double dp = c.tree(Tree::Positive).ballast_cap, dm = c.tree(Tree::Negative).ballast_cap;
  o.require(std::abs(bp - kBiasP) <= 1.0, "Cb+=" + fmt(bp, 0));
  o.require(std::abs(bm - kBiasM) <= 1.0, "Cb-=" + fmt(bm, 0));
  o.require(std::abs(dp - kBallastP) <= 5.0, "Cd+=" + fmt(dp, 0));
  o.require(std::abs(dm - kBallastM) <= 5.0, "Cd-=" + fmt(dm, 0));
  if (o.pass)
    o.detail << "12 synapses exact, Cb " << fmt(bp, 0) << "/" << fmt(bm, 0) << ", Cd "
             << fmt(dp, 0) << "/" << fmt(dm, 0);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  double worst = 0.0;
  int outputs = 0;
  for (const auto &row : fx().table4) {
    const InputVector x = bits(row.vector);
    const Divider d = divider(c, x);
    const double vp = 1800.0 * d.on_p / d.total_p, vm = 1800.0 * d.on_m / d.total_m;
    const auto lib = peak_membrane_voltages(c, x);
    o.require(std::abs(lib.positive * 1e3 - vp) < 1e-9 && std::abs(lib.negative * 1e3 - vm) < 1e-9,
              row.name + " library/oracle mismatch");
    worst = std::max({worst, std::abs(vp - row.theo_vp), std::abs(vm - row.theo_vm)});
    const int y = tl_decide(TlModel::ideal(), lib.positive * 1e3, lib.negative * 1e3).output;
    outputs += y == row.theo_out ? 1 : 0;
  }
  o.require(worst <= 1.0, "worst voltage error " + fmt(worst, 2) + " mV");
  o.require(outputs == 16, "ideal outputs " + std::to_string(outputs) + "/16");
  if (o.pass)
    o.detail << "worst |dv| " << fmt(worst, 2) << " mV, outputs 16/16";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  int prop = 0, conv = 0;
  for (const auto &row : fx().table4) {
    const auto mv = peak_membrane_voltages(c, bits(row.vector));
    prop += tl_decide(TlModel::proposed().with_threshold(5.0), mv.positive * 1e3,
                      mv.negative * 1e3)
                        .output == row.prop_out;
    conv += tl_decide(TlModel::conventional().with_threshold(20.0), mv.positive * 1e3,
                      mv.negative * 1e3)
                        .output == row.conv_out;
  }
  o.require(prop == 16, "proposed " + std::to_string(prop) + "/16");
  o.require(conv == 16, "conventional " + std::to_string(conv) + "/16");
  if (o.pass)
    o.detail << "proposed 16/16, conventional 16/16";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  double worst = 0.0;
  for (const auto &row : fx().table5) {
    const InputVector x = bits(row.vector);
    const double l = oracle_load(c, x);
    o.require(std::abs(capacitive_load(c, x) - l) < 1e-9, row.name + " library/oracle mismatch");
    worst = std::max(worst, std::abs(l - row.load_ff));
  }
  o.require(worst <= 0.5, "worst load error " + fmt(worst, 3) + " fF");
  if (o.pass)
    o.detail << "worst |dC_L| " << fmt(worst, 3) << " fF";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  double best = -1.0;
  InputVector arg;
  for (std::uint64_t m = 0; m < 4096; ++m) {
    const InputVector x = InputVector::from_mask(m, 12);
    const double l = oracle_load(c, x);
    if (l > best) {
      best = l;
      arg = x;
    }
  }
  const Divider d = divider(c, arg);
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    std::set<double> sums{c.tree(t).bias_cap};
    for (const auto &s : c.synapses()) {
      if (s.tree != t)
        continue;
      std::set<double> next = sums;
      for (double v : sums)
        next.insert(v + s.cap);
      sums.swap(next);
    }
    const double half = (t == Tree::Positive ? d.total_p : d.total_m) / 2.0;
    const double nearest = *std::min_element(sums.begin(), sums.end(), [&](double a, double b) {
      return std::abs(a - half) < std::abs(b - half);
    });
    const double on = t == Tree::Positive ? d.on_p : d.on_m;
    o.require(on == nearest, std::string("tree ") + (t == Tree::Positive ? "+" : "-") +
                                 " C_on " + fmt(on, 0) + " vs nearest " + fmt(nearest, 0));
  }
  // 961.0 is printed at 0.1 fF resolution.
  o.require(best >= 961.0 - 0.05, "max load " + fmt(best, 3));
  const auto lib = max_load_search(c);
  o.require(std::abs(lib.load - best) < 1e-9, "library search disagrees");
  if (o.pass)
    o.detail << "max C_L " << fmt(best, 3) << " fF at " << arg.to_string();
  return o;
}

Outcome criterion6() {
  Outcome o;
  const PowerClock pc = reference_power_clock();
  const double f = operating_frequency(pc, 961.0);
  const double f0 = operating_frequency(pc, 0.0);
  o.require(std::abs(f - oracle_frequency(961.0)) < 1e-6, "library/oracle mismatch");
  const double err = std::abs(f - 979e3) / 979e3 * 100.0;
  const double droop = (1.0 - f / f0) * 100.0;
  o.require(err <= 1.5, "f_op " + fmt(f * 1e-3, 2) + " kHz off by " + fmt(err, 2) + "%");
  o.require(droop >= 1.5 && droop <= 2.5, "droop " + fmt(droop, 2) + "%");
  if (o.pass)
    o.detail << "f_op " << fmt(f * 1e-3, 2) << " kHz (" << fmt(err, 2) << "% from 979), droop "
             << fmt(droop, 2) << "%";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  const PowerClock pc = reference_power_clock();
  const EnergyParams p = calibrate_energy(fx().table5, pc);
  double worst_rel = 0.0, min_sav = 100.0, min_sav_heavy = 100.0, worst_fix = 0.0;
  std::string worst_fix_row;
  for (const auto &row : fx().table5) {
    const auto e = total_energy(c, bits(row.vector), pc, p, TlModel::proposed());
    if (row.name == "TV4" || row.name == "TV8") {
      o.require(std::abs(e.synapse() - row.acn_fj) < 0.05,
                row.name + " anchor " + fmt(e.synapse(), 2));
    } else {
      worst_rel = std::max(worst_rel, std::abs(e.synapse() - row.acn_fj) / row.acn_fj);
    }
    min_sav = std::min(min_sav, e.savings_pct);
    if (e.load > 400.0)
      min_sav_heavy = std::min(min_sav_heavy, e.savings_pct);
    const double fixture_savings =
        100.0 * (row.ccn_fj - row.acn_fj) / row.ccn_fj; // recomputed by hand
    const double dev = std::abs(fixture_savings - row.savings_pct);
    if (dev > worst_fix) {
      worst_fix = dev;
      worst_fix_row = row.name + " " + fmt(fixture_savings, 2) + " vs printed " +
                      fmt(row.savings_pct, 1);
    }
  }
  o.require(worst_rel <= 0.35, "worst ACN deviation " + fmt(100 * worst_rel, 1) + "%");
  o.require(min_sav >= 70.0, "min savings " + fmt(min_sav, 2));
  o.require(min_sav_heavy >= 90.0, "min savings above 400 fF " + fmt(min_sav_heavy, 2));
  o.require(worst_fix <= 0.1, "fixture savings recomputation: " + worst_fix_row);
  if (o.pass)
    o.detail << "anchors exact, worst ACN dev " << fmt(100 * worst_rel, 1) << "%";
  else
    o.detail << " (anchors, +/-35%, savings bounds "
             << (worst_rel <= 0.35 && min_sav >= 70 && min_sav_heavy >= 90 ? "hold" : "broken")
             << ")";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const TlModel prop = TlModel::proposed(), conv = TlModel::conventional();
  const auto shipped = io::parse_offsets(io::read_file(ACN_DATA_DIR "/offset_tables.csv"));
  int exact = 0;
  for (const auto &r : shipped) {
    const TlModel &m = r.design == fixtures::TlDesign::Proposed ? prop : conv;
    exact += offset_lookup(m, r.corner, r.temp_c, r.direction) == r.offset_mv;
  }
  o.require(shipped.size() == 60 && exact == 60, "bit-exact " + std::to_string(exact) + "/60");
  int ordered = 0;
  double max_prop = 0.0;
  for (auto corner : {Corner::FF, Corner::TT, Corner::SS})
    for (double t : {-55.0, 0.0, 27.0, 100.0, 125.0}) {
      const double a = offset_lookup(prop, corner, t, Direction::Rising);
      const double b = offset_lookup(conv, corner, t, Direction::Rising);
      ordered += a < b;
      for (auto dir : {Direction::Rising, Direction::Falling})
        max_prop = std::max(max_prop, std::abs(offset_lookup(prop, corner, t, dir)));
    }
  o.require(ordered == 15, "proposed < conventional at " + std::to_string(ordered) + "/15");
  o.require(max_prop <= 9.01, "proposed max |offset| " + fmt(max_prop, 4));
  if (o.pass)
    o.detail << "60/60 exact, 15/15 ordered, max " << fmt(max_prop, 3) << " mV";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const TechProfile tech;
  std::size_t neurons = 0, checked = 0, disagreements = 0;
  for (std::uint64_t draw = 0; neurons < 100 && draw < 10000; ++draw) {
    const random::CounterStream s(777, draw, 0);
    const std::size_t n = 1 + static_cast<std::size_t>(s.uniform(0) * 8.0);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i)
      w[i] = 2.0 * s.uniform(static_cast<std::uint32_t>(2 + i)) - 1.0;
    const double tau = s.uniform(1) - 0.5;
    double wsum = 0.0, wmin = 1.0;
    for (double v : w) {
      wsum += std::abs(v);
      wmin = std::min(wmin, std::abs(v));
    }
    const NeuronSpec spec(w, tau);
    const double ct = std::max(2000.0, std::ceil((tech.c_min + 0.5) * wsum / wmin));
    if (!check_feasibility(spec, tech, ct).feasible())
      continue;
    ++neurons;
    const AcnConfig c = map_weights(spec, tech, ct);
    const double delta = quantization_margin(c, tech);
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      double margin = -tau;
      for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1U)
          margin += w[i];
      if (std::abs(margin) <= delta)
        continue;
      ++checked;
      const auto mv = peak_membrane_voltages(c, InputVector::from_mask(m, n));
      const int hw = tl_decide(TlModel::ideal(), mv.positive * 1e3, mv.negative * 1e3, {},
                               c.v_max())
                         .output;
      disagreements += hw != (margin >= 0.0 ? 1 : 0);
    }
  }
  o.require(neurons == 100, "only " + std::to_string(neurons) + " feasible neurons");
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.pass)
    o.detail << "100 neurons, " << checked << " vectors above delta, 0 disagreements";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  const PowerClock pc = reference_power_clock();
  const EnergyParams p = calibrate_energy(fx().table5, pc);
  const InputVector x = bits("1111_1110_1110");
  VariationModel m;
  m.seed = 42;
  auto json = [&](McTarget t, unsigned threads) {
    io::McReport r;
    r.summary = mc_stats(mc_run(c, x, m, 1000, t, pc, p, threads));
    r.seed = m.seed;
    r.target = t;
    r.vector = "TV4";
    return std::pair{r.summary, io::format_mc_json(r)};
  };
  const auto [acn, acn_json] = json(McTarget::Acn, 0);
  const auto [ccn, ccn_json] = json(McTarget::Ccn, 0);
  o.require(*acn.skewness > 0.5, "ACN skewness " + fmt(*acn.skewness));
  o.require(*acn.qq_corr < 0.99, "ACN qq " + fmt(*acn.qq_corr, 4));
  o.require(std::abs(*ccn.skewness) < 0.3, "CCN skewness " + fmt(*ccn.skewness));
  o.require(*ccn.qq_corr > 0.99, "CCN qq " + fmt(*ccn.qq_corr, 4));
  o.require(acn.cv > ccn.cv, "cv ACN " + fmt(acn.cv, 2) + " <= CCN " + fmt(ccn.cv, 2));
  o.require(json(McTarget::Acn, 1).second == acn_json, "ACN rerun differs");
  o.require(json(McTarget::Ccn, 3).second == ccn_json, "CCN rerun differs");
  if (o.pass)
    o.detail << "ACN skew " << fmt(*acn.skewness) << " qq " << fmt(*acn.qq_corr, 4) << " cv "
             << fmt(acn.cv, 2) << "; CCN skew " << fmt(*ccn.skewness) << " qq "
             << fmt(*ccn.qq_corr, 4) << " cv " << fmt(ccn.cv, 2) << "; reruns identical";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const AcnConfig c = fixtures::reference_config();
  const PowerClock pc = reference_power_clock();
  const EnergyParams p = calibrate_energy(fx().table5, pc);
  double min4 = 100, min13 = 100, min8 = 100, max8 = 0;
  int changes = 0;
  for (int k = 18; k >= 10; --k) {
    const double v = k / 10.0;
    for (const auto &row : fx().table4) {
      const InputVector x = bits(row.vector);
      const auto nominal = peak_membrane_voltages(c, x);
      const auto scaled = membrane_voltages(c, x, v);
      const int y0 = tl_decide(TlModel::ideal(), nominal.positive * 1e3, nominal.negative * 1e3).output;
      const int y = tl_decide(TlModel::ideal(), scaled.positive * 1e3, scaled.negative * 1e3, {}, v).output;
      changes += y != y0;
    }
    min4 = std::min(min4, total_energy(c, bits("1111_1110_1110"), pc, p, TlModel::proposed(), v).savings_pct);
    min13 = std::min(min13, total_energy(c, bits("1001_0000_1111"), pc, p, TlModel::proposed(), v).savings_pct);
    const double s8 = total_energy(c, bits("0000_0000_0000"), pc, p, TlModel::proposed(), v).savings_pct;
    min8 = std::min(min8, s8);
    max8 = std::max(max8, s8);
  }
  o.require(min4 >= 90.0, "TV4 min savings " + fmt(min4, 2) + "%");
  o.require(min13 >= 90.0, "TV13 min savings " + fmt(min13, 2) + "%");
  o.require(min8 >= 60.0 && max8 <= 80.0, "TV8 savings " + fmt(min8, 2) + ".." + fmt(max8, 2));
  o.require(changes == 0, std::to_string(changes) + " output changes");
  if (o.pass)
    o.detail << "TV4 >= " << fmt(min4, 2) << ", TV13 >= " << fmt(min13, 2) << ", TV8 "
             << fmt(min8, 2) << ".." << fmt(max8, 2);
  else
    o.detail << " (TV8 " << fmt(min8, 2) << ".." << fmt(max8, 2) << ", output changes "
             << changes << ")";
  return o;
}

Outcome criterion12(const std::string &cli) {
  Outcome o;
  const std::string cmd = "\"" + cli + "\" verify > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.require(code == 0, "acn verify exited " + std::to_string(code));
  if (o.pass)
    o.detail << "acn verify exited 0";
  return o;
}

} // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path to acn CLI>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"mapping reproduces the published capacitors", criterion1},
      {"theoretical membrane voltages and outputs", criterion2},
      {"hardware comparator outputs", criterion3},
      {"capacitive loads", criterion4},
      {"maximum-load search", criterion5},
      {"operating frequency and droop", criterion6},
      {"energy calibration and savings", criterion7},
      {"comparator offset tables", criterion8},
      {"software/hardware equivalence", criterion9},
      {"Monte Carlo distribution shape", criterion10},
      {"supply-voltage sweep", criterion11},
      {"verify command exits cleanly", [&] { return criterion12(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
