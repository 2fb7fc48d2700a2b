/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Command-line front end. Talks to the library only through acn/acn.h.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acn/acn.h"

namespace {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitDimension = 3;
constexpr int kExitCalibration = 4;
constexpr int kExitVerify = 5;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(acn_status s) {
  switch (s) {
  case ACN_OK:
    return kExitOk;
  case ACN_ERR_INFEASIBLE:
    return kExitInfeasible;
  case ACN_ERR_DIMENSION:
    return kExitDimension;
  case ACN_ERR_CALIBRATION:
    return kExitCalibration;
  case ACN_ERR_VERIFY_FAILED:
    return kExitVerify;
  default:
    return kExitParse;
  }
}

void check(acn_status s) {
  if (s != ACN_OK)
    throw Failure{exit_code_for(s), acn_last_error()};
}

struct StringDeleter {
  void operator()(char *p) const { acn_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T *)> struct HandleDeleter {
  void operator()(T *p) const { Free(p); }
};
using Neuron = std::unique_ptr<acn_neuron, HandleDeleter<acn_neuron, acn_neuron_free>>;
using Config = std::unique_ptr<acn_config, HandleDeleter<acn_config, acn_config_free>>;
using Vectors =
    std::unique_ptr<acn_vectors, HandleDeleter<acn_vectors, acn_vectors_free>>;
using Report = std::unique_ptr<acn_verify_report,
                               HandleDeleter<acn_verify_report, acn_verify_report_free>>;

std::string take(char *raw) {
  OwnedString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{kExitParse, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Temporary sibling file plus rename, so readers never see a partial file.
void write_text(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path tmp = fs::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out)
      throw Failure{kExitParse, "cannot write '" + tmp.string() + "'"};
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{kExitParse, "cannot replace '" + path + "'"};
  }
}

Config load_config(const std::string &path) {
  acn_config *raw = nullptr;
  if (path.empty())
    check(acn_config_reference(&raw));
  else
    check(acn_config_from_json(read_text(path).c_str(), &raw));
  return Config(raw);
}

Vectors load_vectors(const std::string &path, const acn_config *config) {
  acn_vectors *raw = nullptr;
  if (path.empty())
    check(acn_vectors_reference(&raw));
  else
    check(acn_vectors_from_csv(read_text(path).c_str(), acn_config_inputs(config),
                               &raw));
  Vectors v(raw);
  if (path.empty() && acn_config_inputs(config) != 12)
    throw Failure{kExitDimension,
                  "the built-in vectors have 12 bits; pass --vectors for this config"};
  return v;
}

struct EnergyInputs {
  std::string params_path;
  std::string calibrate_path;
  std::string clock_path;
};

void add_energy_options(CLI::App *cmd, EnergyInputs &in) {
  cmd->add_option("--params", in.params_path, "energy parameters (JSON)");
  cmd->add_option("--calibrate", in.calibrate_path,
                  "energy table CSV to calibrate against (default: built-in)");
  cmd->add_option("--clock", in.clock_path, "power-clock parameters (JSON)");
}

acn_power_clock load_clock(const EnergyInputs &in) {
  acn_power_clock pc;
  acn_power_clock_default(&pc);
  if (!in.clock_path.empty())
    check(acn_power_clock_from_json(read_text(in.clock_path).c_str(), &pc));
  return pc;
}

acn_energy_params load_params(const EnergyInputs &in, const acn_power_clock &pc) {
  acn_energy_params p;
  if (!in.params_path.empty()) {
    check(acn_energy_params_from_json(read_text(in.params_path).c_str(), &p));
    return p;
  }
  if (!in.calibrate_path.empty()) {
    const std::string csv = read_text(in.calibrate_path);
    check(acn_energy_calibrate(csv.c_str(), &pc, &p));
  } else {
    check(acn_energy_calibrate(nullptr, &pc, &p));
  }
  return p;
}

std::vector<double> sweep_points(const std::string &axis, std::optional<double> from,
                                 std::optional<double> to, std::optional<double> step,
                                 const std::vector<double> &explicit_points) {
  if (!explicit_points.empty())
    return explicit_points;
  const bool vdd = axis == "vdd";
  if (!from && !to && !step) {
    if (vdd) {
      std::vector<double> v;
      for (int k = 18; k >= 10; --k)
        v.push_back(k / 10.0);
      return v;
    }
    // Nominal frequencies of the published PCG schedule, in Hz.
    const std::string table = take([] {
      char *out = nullptr;
      check(acn_fixture_render("table6", &out));
      return out;
    }());
    std::vector<double> v;
    std::istringstream ss(table);
    std::string line;
    std::getline(ss, line); // header
    while (std::getline(ss, line))
      if (!line.empty())
        v.push_back(std::stod(line.substr(0, line.find(','))) * 1e6);
    return v;
  }
  if (!from || !to || !step || *step == 0.0)
    throw Failure{kExitParse, "--from, --to and a non-zero --step go together"};
  const double span = *to - *from;
  if (span * *step < 0.0)
    throw Failure{kExitParse, "--step points away from --to"};
  const long count = std::lround(span / *step) + 1;
  std::vector<double> v;
  for (long k = 0; k < count; ++k) {
    // Snap to 1e-9 so decimal steps print cleanly.
    v.push_back(std::round((*from + static_cast<double>(k) * *step) * 1e9) / 1e9);
  }
  return v;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Adiabatic capacitive neuron model: mapping, simulation, energy, "
               "Monte Carlo and verification"};
  app.set_version_flag("--version", std::string(acn_version()));
  app.require_subcommand(1);

  std::string out_path;

  // map
  auto *map = app.add_subcommand("map", "map neuron weights onto capacitors");
  std::string weights_path, tech_path;
  double total_cap = 0.0;
  bool reference_tech = false;
  map->add_option("--weights", weights_path, "neuron JSON {weights, bias}")->required();
  map->add_option("--tech", tech_path, "technology JSON");
  map->add_flag("--reference-tech", reference_tech,
                "use the reference technology (no membrane parasitic)");
  map->add_option("--ct", total_cap, "total synapse capacitance, fF")->required();
  map->add_option("-o,--output", out_path, "output config JSON (default stdout)");

  // sim
  auto *sim = app.add_subcommand("sim", "membrane voltages and decisions per vector");
  std::string config_path, vectors_path, tl = "ideal", corner = "TT";
  double temp = 27.0;
  for (auto *cmd : {sim}) {
    cmd->add_option("--config", config_path, "config JSON (default: reference)");
    cmd->add_option("--vectors", vectors_path, "vectors CSV (default: reference)");
  }
  sim->add_option("--tl", tl, "threshold logic")
      ->check(CLI::IsMember({"ideal", "proposed", "conventional"}));
  sim->add_option("--corner", corner, "process corner")
      ->check(CLI::IsMember({"FF", "TT", "SS"}));
  sim->add_option("--temp", temp, "temperature, C");
  sim->add_option("-o,--output", out_path, "output CSV");

  // energy
  auto *energy = app.add_subcommand("energy", "per-vector energy breakdown");
  EnergyInputs energy_in;
  bool fixture_energies = false;
  energy->add_option("--config", config_path, "config JSON (default: reference)");
  energy->add_option("--vectors", vectors_path, "vectors CSV (default: reference)");
  add_energy_options(energy, energy_in);
  energy->add_flag("--fixture-energies", fixture_energies,
                   "use the published ACN/CCN energies where a vector matches");
  energy->add_option("-o,--output", out_path, "output CSV");

  // sweep
  auto *sweep = app.add_subcommand("sweep", "frequency or supply sweep");
  std::string axis = "vdd";
  std::optional<double> from, to, step;
  std::vector<double> points;
  sweep->add_option("--config", config_path, "config JSON (default: reference)");
  sweep->add_option("--vectors", vectors_path, "vectors CSV (default: reference)");
  sweep->add_option("--axis", axis, "sweep axis")->check(CLI::IsMember({"freq", "vdd"}));
  sweep->add_option("--from", from, "first point (Hz or V)");
  sweep->add_option("--to", to, "last point (Hz or V)");
  sweep->add_option("--step", step, "increment (Hz or V)");
  sweep->add_option("--points", points, "explicit points (Hz or V)")->delimiter(',');
  add_energy_options(sweep, energy_in);
  sweep->add_option("-o,--output", out_path, "output CSV");

  // mc
  auto *mc = app.add_subcommand("mc", "Monte Carlo energy statistics");
  std::size_t n = 1000;
  std::string vector_name = "TV4", target = "acn", sampler = "prng";
  std::string samples_path, qq_path;
  acn_variation variation;
  acn_variation_default(&variation);
  unsigned threads = 0;
  mc->add_option("--config", config_path, "config JSON (default: reference)");
  mc->add_option("--vectors", vectors_path, "vectors CSV (default: reference)");
  mc->add_option("--vector", vector_name, "vector name (default TV4, else the first)");
  mc->add_option("--n", n, "number of draws")->check(CLI::PositiveNumber);
  mc->add_option("--seed", variation.seed, "seed");
  mc->add_option("--target", target, "energy target")->check(CLI::IsMember({"acn", "ccn"}));
  mc->add_option("--sampler", sampler, "sampler")
      ->check(CLI::IsMember({"prng", "lds"}));
  mc->add_option("--sigma-mismatch", variation.sigma_cap_mismatch,
                 "relative per-capacitor sigma");
  mc->add_option("--sigma-global", variation.sigma_cap_global,
                 "relative per-run capacitor sigma");
  mc->add_option("--sigma-rsyn", variation.sigma_rsyn, "lognormal R_syn sigma");
  mc->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_energy_options(mc, energy_in);
  mc->add_option("-o,--output", out_path, "summary JSON");
  mc->add_option("--samples", samples_path, "raw samples CSV");
  mc->add_option("--qq", qq_path, "Q-Q pairs CSV");

  // verify
  auto *verify = app.add_subcommand("verify", "check the model against the reference data");
  std::string only, caps_path, json_path;
  verify->add_option("--only", only, "restrict to one table id");
  verify->add_option("--reference-caps", caps_path,
                     "config JSON replacing the published capacitor values");
  verify->add_option("--json", json_path, "write the report as JSON");
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");

  // export
  auto *exp = app.add_subcommand("export", "behavioural netlist");
  EnergyInputs export_in;
  exp->add_option("--config", config_path, "config JSON (default: reference)");
  exp->add_option("--clock", export_in.clock_path, "power-clock parameters (JSON)");
  exp->add_option("-o,--output", out_path, "output netlist");

  // fixtures
  auto *fix = app.add_subcommand("fixtures", "print embedded reference data");
  std::string fixture_name;
  fix->add_option("name", fixture_name,
                  "offsets | vectors | table3 | table4 | table5 | table6 | table7")
      ->required();
  fix->add_option("-o,--output", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*map) {
      acn_tech tech;
      if (reference_tech)
        acn_tech_reference(&tech);
      else
        acn_tech_default(&tech);
      if (!tech_path.empty())
        check(acn_tech_from_json(read_text(tech_path).c_str(), &tech));
      acn_neuron *raw_neuron = nullptr;
      check(acn_neuron_from_json(read_text(weights_path).c_str(), &raw_neuron));
      Neuron neuron(raw_neuron);
      acn_config *raw = nullptr;
      check(acn_map(neuron.get(), &tech, total_cap, &raw));
      Config config(raw);
      char *json = nullptr;
      check(acn_config_to_json(config.get(), &json));
      write_text(out_path, take(json));
    } else if (*sim) {
      Config config = load_config(config_path);
      Vectors vectors = load_vectors(vectors_path, config.get());
      const acn_tl_variant v = tl == "proposed"       ? ACN_TL_PROPOSED
                               : tl == "conventional" ? ACN_TL_CONVENTIONAL
                                                      : ACN_TL_IDEAL;
      const acn_corner c = corner == "FF"   ? ACN_CORNER_FF
                           : corner == "SS" ? ACN_CORNER_SS
                                            : ACN_CORNER_TT;
      char *csv = nullptr;
      check(acn_simulate_csv(config.get(), vectors.get(), v, c, temp, &csv));
      write_text(out_path, take(csv));
    } else if (*energy) {
      Config config = load_config(config_path);
      Vectors vectors = load_vectors(vectors_path, config.get());
      const acn_power_clock pc = load_clock(energy_in);
      const acn_energy_params p = load_params(energy_in, pc);
      char *csv = nullptr;
      check(acn_energy_csv(config.get(), vectors.get(), &pc, &p,
                           fixture_energies ? 1 : 0, &csv));
      write_text(out_path, take(csv));
    } else if (*sweep) {
      Config config = load_config(config_path);
      Vectors vectors = load_vectors(vectors_path, config.get());
      const acn_power_clock pc = load_clock(energy_in);
      const acn_energy_params p = load_params(energy_in, pc);
      const auto pts = sweep_points(axis, from, to, step, points);
      char *csv = nullptr;
      check(acn_sweep_csv(config.get(), vectors.get(),
                          axis == "vdd" ? ACN_SWEEP_VOLTAGE : ACN_SWEEP_FREQUENCY,
                          pts.data(), pts.size(), &pc, &p, &csv));
      write_text(out_path, take(csv));
    } else if (*mc) {
      Config config = load_config(config_path);
      Vectors vectors = load_vectors(vectors_path, config.get());
      const std::size_t count = acn_vectors_count(vectors.get());
      if (count == 0)
        throw Failure{kExitParse, "no input vectors"};
      std::size_t index = 0;
      bool found = false;
      for (std::size_t i = 0; i < count; ++i)
        if (vector_name == acn_vectors_name(vectors.get(), i)) {
          index = i;
          found = true;
        }
      if (!found && mc->count("--vector") > 0)
        throw Failure{kExitParse, "no vector named '" + vector_name + "'"};
      variation.sampler =
          sampler == "lds" ? ACN_SAMPLER_LOW_DISCREPANCY : ACN_SAMPLER_PSEUDORANDOM;
      const acn_power_clock pc = load_clock(energy_in);
      const acn_energy_params p = load_params(energy_in, pc);
      char *json = nullptr, *samples = nullptr, *qq = nullptr;
      check(acn_mc_run(config.get(), vectors.get(), index, &variation, n,
                       target == "ccn" ? ACN_MC_CCN : ACN_MC_ACN, &pc, &p, threads,
                       &json, samples_path.empty() ? nullptr : &samples,
                       qq_path.empty() ? nullptr : &qq));
      const std::string summary = take(json);
      const std::string sample_csv = take(samples);
      const std::string qq_csv = take(qq);
      if (!samples_path.empty())
        write_text(samples_path, sample_csv);
      if (!qq_path.empty())
        write_text(qq_path, qq_csv);
      write_text(out_path, summary);
    } else if (*verify) {
      Config caps;
      if (!caps_path.empty())
        caps = load_config(caps_path);
      acn_verify_report *raw = nullptr;
      check(acn_verify_run(only.c_str(), caps.get(), threads, &raw));
      Report report(raw);
      char *table = nullptr;
      check(acn_verify_render_table(report.get(), &table));
      std::cout << take(table);
      if (!json_path.empty()) {
        char *json = nullptr;
        check(acn_verify_to_json(report.get(), &json));
        write_text(json_path, take(json));
      }
      return acn_verify_passed(report.get()) ? kExitOk : kExitVerify;
    } else if (*exp) {
      Config config = load_config(config_path);
      const acn_power_clock pc = load_clock(export_in);
      char *text = nullptr;
      check(acn_export_netlist(config.get(), &pc, &text));
      write_text(out_path, take(text));
    } else if (*fix) {
      char *text = nullptr;
      check(acn_fixture_render(fixture_name.c_str(), &text));
      write_text(out_path, take(text));
    }
  } catch (const Failure &f) {
    std::cerr << "acn: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception &e) {
    std::cerr << "acn: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
