/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acn/energy.hpp"
#include "acn/fixtures.hpp"
#include "acn/montecarlo.hpp"

// File formats. JSON for neurons, technology, configurations and parameters;
// CSV with unit-suffixed headers for vectors and reports. Every emitted
// number has a fixed resolution so reruns are byte-identical.
namespace acn::io {

std::string read_file(const std::string &path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string &path, std::string_view content);

/// Fixed-point text with `decimals` digits; never prints "-0".
std::string fixed(double value, int decimals);

NeuronSpec parse_neuron(std::string_view json);
std::string neuron_to_json(const NeuronSpec &spec);

/// Missing keys keep their TechProfile defaults.
TechProfile parse_tech(std::string_view json);
std::string tech_to_json(const TechProfile &tech);

struct ConfigDocument {
  AcnConfig config;
  std::optional<NeuronSpec> neuron; ///< source neuron, when recorded
};

/// The "derived" block of a configuration file is informational and ignored.
ConfigDocument parse_config(std::string_view json);
std::string config_to_json(const AcnConfig &config,
                           const NeuronSpec *neuron = nullptr);

EnergyParams parse_params(std::string_view json);
std::string params_to_json(const EnergyParams &params);
PowerClock parse_power_clock(std::string_view json);
std::string power_clock_to_json(const PowerClock &pc);

/// Plain comma-separated fields; '#' starts a comment line, blank lines are
/// skipped, surrounding whitespace is trimmed.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

struct NamedVector {
  std::string name;
  InputVector x;
};

/// One vector per row, either "bits" or "name,bits". A leading header row
/// naming a "vector" column is skipped. Unnamed rows are called V1, V2, ...
/// Throws Error(Dimension) on a length mismatch, Error(Parse) otherwise.
std::vector<NamedVector> parse_vectors(std::string_view csv, std::size_t n);
std::string format_vectors(std::span<const NamedVector> vectors);

/// The sixteen published test vectors, TV1..TV16.
std::vector<NamedVector> reference_vectors();

struct SimRow {
  std::string name;
  InputVector x;
  TreeState state;
  double load = 0.0; ///< fF
  MembraneVoltages mv;
  std::optional<int> y_software;
  TlDecision tl;
};

std::vector<SimRow> simulate(const AcnConfig &config, const NeuronSpec *neuron,
                             std::span<const NamedVector> vectors,
                             const TlModel &tl,
                             const OperatingCondition &cond = {});
std::string format_sim_csv(std::span<const SimRow> rows);

struct EnergyRow {
  std::string name;
  InputVector x;
  EnergyBreakdown energy;
  bool from_fixture = false; ///< ACN/CCN energies taken from the fixture
};

/// Replaces the synapse and CMOS energies of rows whose vector appears in the
/// published energy table by the printed values and recomputes savings.
void apply_fixture_energies(std::span<EnergyRow> rows,
                            std::span<const fixtures::EnergyRow> table);
std::string format_energy_csv(std::span<const EnergyRow> rows);

std::string format_sweep_csv(std::span<const SweepRow> rows,
                             std::span<const NamedVector> vectors,
                             SweepAxis axis);

struct McReport {
  McSummary summary;
  std::uint64_t seed = 0;
  McTarget target = McTarget::Acn;
  Sampler sampler = Sampler::Pseudorandom;
  std::string vector;
};

std::string format_mc_json(const McReport &report);
/// Columns: rank, sample_fJ, normal_quantile.
std::string format_qq_csv(std::span<const double> samples);
/// Columns: draw, E_fJ in draw order.
std::string format_samples_csv(std::span<const double> samples);

/// Published energy table: name,vector,CL_fF,E_ACN_fJ,E_CCN_fJ,savings_pct.
std::vector<fixtures::EnergyRow> parse_energy_table(std::string_view csv);
std::string format_energy_table(std::span<const fixtures::EnergyRow> rows);

/// Embedded fixture as text: "offsets", "vectors", "table3" (JSON),
/// "table4", "table5", "table6" or "table7". Throws Error(Invalid) otherwise.
std::string format_fixture(std::string_view name);
const std::vector<std::string> &fixture_names();

std::vector<fixtures::OffsetRow> parse_offsets(std::string_view csv);
std::string format_offsets(std::span<const fixtures::OffsetRow> rows);

} // namespace acn::io
