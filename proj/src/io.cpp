/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "acn/error.hpp"

namespace acn::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, const char *what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    fail(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

template <class T>
T get_or(const json &j, const char *key, T fallback) {
  if (!j.contains(key))
    return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    fail(ErrorCode::Parse, std::string("key '") + key + "' has the wrong type");
  }
}

template <class T> T require(const json &j, const char *key, const char *what) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::Parse, std::string(what) + ": missing key '" + key + "'");
  return get_or<T>(j, key, T{});
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string &field, std::size_t line) {
  char *end = nullptr;
  errno = 0;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || *end != '\0' || errno == ERANGE)
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": '" + field +
                               "' is not a number");
  return v;
}

Tree parse_tree(const std::string &s) {
  if (s == "positive" || s == "+")
    return Tree::Positive;
  if (s == "negative" || s == "-")
    return Tree::Negative;
  fail(ErrorCode::Parse, "unknown tree '" + s + "'");
}

TreeParams tree_from_json(const json &j) {
  TreeParams t;
  t.bias_cap = require<double>(j, "bias_fF", "tree");
  t.ballast_cap = require<double>(j, "ballast_fF", "tree");
  t.parasitic_cap = get_or<double>(j, "parasitic_fF", 0.0);
  t.bias_voltage = get_or<double>(j, "bias_voltage_V", 0.0);
  return t;
}

ordered_json tree_to_json(const TreeParams &t) {
  return {{"bias_fF", t.bias_cap},
          {"ballast_fF", t.ballast_cap},
          {"parasitic_fF", t.parasitic_cap},
          {"bias_voltage_V", t.bias_voltage}};
}

ordered_json neuron_json(const NeuronSpec &spec) {
  return {{"weights", std::vector<double>(spec.weights().begin(),
                                          spec.weights().end())},
          {"bias", spec.bias()}};
}

NeuronSpec neuron_from(const json &j) {
  const auto w = require<std::vector<double>>(j, "weights", "neuron");
  return NeuronSpec(w, require<double>(j, "bias", "neuron"));
}

} // namespace

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::Io, "cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    fail(ErrorCode::Io, "cannot read '" + path + "'");
  return ss.str();
}

void write_file_atomic(const std::string &path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      fail(ErrorCode::Io, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
      fail(ErrorCode::Io, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorCode::Io, "cannot replace '" + path + "'");
  }
}

std::string fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  double r = std::round(value * scale) / scale;
  if (r == 0.0)
    r = 0.0; // drops the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, r);
  return buf;
}

NeuronSpec parse_neuron(std::string_view text) {
  return neuron_from(parse_json(text, "neuron"));
}

std::string neuron_to_json(const NeuronSpec &spec) { return dump(neuron_json(spec)); }

TechProfile parse_tech(std::string_view text) {
  const json j = parse_json(text, "tech");
  if (!j.is_object())
    fail(ErrorCode::Parse, "tech: expected an object");
  TechProfile t;
  t.v_dd = get_or(j, "v_dd_V", t.v_dd);
  t.v_max = get_or(j, "v_max_V", t.v_max);
  t.v_cut = get_or(j, "v_cut_V", t.v_cut);
  t.v_thp = get_or(j, "v_thp_V", t.v_thp);
  t.c_min = get_or(j, "c_min_fF", t.c_min);
  t.cap_grid = get_or(j, "cap_grid_fF", t.cap_grid);
  t.c_parasitic = get_or(j, "c_parasitic_fF", t.c_parasitic);
  t.validate();
  return t;
}

std::string tech_to_json(const TechProfile &t) {
  return dump({{"v_dd_V", t.v_dd},
               {"v_max_V", t.v_max},
               {"v_cut_V", t.v_cut},
               {"v_thp_V", t.v_thp},
               {"c_min_fF", t.c_min},
               {"cap_grid_fF", t.cap_grid},
               {"c_parasitic_fF", t.c_parasitic}});
}

ConfigDocument parse_config(std::string_view text) {
  const json j = parse_json(text, "config");
  const auto n = require<std::size_t>(j, "n_inputs", "config");
  std::vector<Synapse> syn;
  for (const auto &s : require<json>(j, "synapses", "config")) {
    syn.push_back({require<std::size_t>(s, "index", "synapse"),
                   parse_tree(require<std::string>(s, "tree", "synapse")),
                   require<double>(s, "cap_fF", "synapse")});
  }
  AcnConfig config(n, std::move(syn),
                   tree_from_json(require<json>(j, "positive", "config")),
                   tree_from_json(require<json>(j, "negative", "config")),
                   require<double>(j, "v_max_V", "config"),
                   get_or<double>(j, "unit_cap_fF", 0.0));
  std::optional<NeuronSpec> neuron;
  if (j.contains("neuron")) {
    neuron = neuron_from(j.at("neuron"));
    if (neuron->size() != n)
      fail(ErrorCode::Dimension, "config: neuron has " +
                                     std::to_string(neuron->size()) +
                                     " weights for " + std::to_string(n) +
                                     " inputs");
  }
  return {std::move(config), std::move(neuron)};
}

std::string config_to_json(const AcnConfig &c, const NeuronSpec *neuron) {
  ordered_json syn = ordered_json::array();
  for (const auto &s : c.synapses())
    syn.push_back({{"index", s.index},
                   {"tree", to_string(s.tree)},
                   {"cap_fF", s.cap}});
  ordered_json j = {{"n_inputs", c.n_inputs()},
                    {"v_max_V", c.v_max()},
                    {"unit_cap_fF", c.unit_cap()},
                    {"synapses", syn},
                    {"positive", tree_to_json(c.tree(Tree::Positive))},
                    {"negative", tree_to_json(c.tree(Tree::Negative))}};
  if (neuron)
    j["neuron"] = neuron_json(*neuron);
  j["derived"] = {{"CT_p_fF", c.synapse_total(Tree::Positive)},
                  {"CT_m_fF", c.synapse_total(Tree::Negative)},
                  {"CA_p_fF", c.total(Tree::Positive)},
                  {"CA_m_fF", c.total(Tree::Negative)}};
  return dump(j);
}

EnergyParams parse_params(std::string_view text) {
  const json j = parse_json(text, "params");
  if (!j.is_object())
    fail(ErrorCode::Parse, "params: expected an object");
  EnergyParams p;
  p.r_syn = get_or(j, "r_syn_ohm", p.r_syn);
  p.r_pc = get_or(j, "r_pc_ohm", p.r_pc);
  p.c_pc = get_or(j, "c_pc_pF", p.c_pc * 1e12) * 1e-12;
  p.v_x = get_or(j, "v_x_V", p.v_x);
  p.e_pcg0 = get_or(j, "e_pcg0_fJ", p.e_pcg0);
  p.ccn_overhead = get_or(j, "ccn_overhead_fJ", p.ccn_overhead);
  p.v_th = get_or(j, "v_th_V", p.v_th);
  p.v_dd_nominal = get_or(j, "v_dd_nominal_V", p.v_dd_nominal);
  p.validate();
  return p;
}

std::string params_to_json(const EnergyParams &p) {
  return dump({{"r_syn_ohm", p.r_syn},
               {"r_pc_ohm", p.r_pc},
               {"c_pc_pF", p.c_pc * 1e12},
               {"v_x_V", p.v_x},
               {"e_pcg0_fJ", p.e_pcg0},
               {"ccn_overhead_fJ", p.ccn_overhead},
               {"v_th_V", p.v_th},
               {"v_dd_nominal_V", p.v_dd_nominal}});
}

PowerClock parse_power_clock(std::string_view text) {
  const json j = parse_json(text, "power clock");
  if (!j.is_object())
    fail(ErrorCode::Parse, "power clock: expected an object");
  PowerClock pc;
  pc.v_max = get_or(j, "v_max_V", pc.v_max);
  pc.nominal_freq = get_or(j, "nominal_freq_Hz", pc.nominal_freq);
  pc.inductance = get_or(j, "inductance_H", pc.inductance);
  pc.tank_cap = get_or(j, "tank_cap_pF", pc.tank_cap * 1e12) * 1e-12;
  pc.t_on = get_or(j, "t_on_ns", pc.t_on * 1e9) * 1e-9;
  pc.freq_calibration = get_or(j, "freq_calibration", pc.freq_calibration);
  pc.validate();
  return pc;
}

std::string power_clock_to_json(const PowerClock &pc) {
  return dump({{"v_max_V", pc.v_max},
               {"nominal_freq_Hz", pc.nominal_freq},
               {"inductance_H", pc.inductance},
               {"tank_cap_pF", pc.tank_cap * 1e12},
               {"t_on_ns", pc.t_on * 1e9},
               {"freq_calibration", pc.freq_calibration}});
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    const std::string line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.front() == '#')
      continue;
    std::vector<std::string> fields;
    std::size_t b = 0;
    for (;;) {
      const auto c = line.find(',', b);
      fields.push_back(trim(std::string_view(line).substr(
          b, c == std::string::npos ? std::string::npos : c - b)));
      if (c == std::string::npos)
        break;
      b = c + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::vector<NamedVector> parse_vectors(std::string_view csv, std::size_t n) {
  auto rows = parse_csv(csv);
  std::vector<NamedVector> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto &f = rows[r];
    if (r == 0 && std::find(f.begin(), f.end(), "vector") != f.end())
      continue;
    if (f.empty() || f.size() > 2)
      fail(ErrorCode::Parse, "vectors row " + std::to_string(r + 1) +
                                 ": expected 'bits' or 'name,bits'");
    std::string name = f.size() == 2 ? f[0]
                                     : "V" + std::to_string(out.size() + 1);
    try {
      out.push_back({std::move(name), InputVector::parse(f.back(), n)});
    } catch (const Error &e) {
      throw Error(e.code(), "vectors row " + std::to_string(r + 1) + ": " +
                                e.what());
    }
  }
  return out;
}

std::string format_vectors(std::span<const NamedVector> vectors) {
  std::string s = "name,vector\n";
  for (const auto &v : vectors)
    s += v.name + "," + v.x.to_string() + "\n";
  return s;
}

std::vector<NamedVector> reference_vectors() {
  const auto &set = fixtures::embedded();
  const std::size_t n = set.table3.weights.size();
  std::vector<NamedVector> out;
  for (const auto &r : set.table4)
    out.push_back({r.name, InputVector::parse(r.vector, n)});
  return out;
}

std::vector<SimRow> simulate(const AcnConfig &config, const NeuronSpec *neuron,
                             std::span<const NamedVector> vectors,
                             const TlModel &tl, const OperatingCondition &cond) {
  std::vector<SimRow> rows;
  rows.reserve(vectors.size());
  for (const auto &v : vectors) {
    if (v.x.size() != config.n_inputs())
      fail(ErrorCode::Dimension, v.name + ": vector has " +
                                     std::to_string(v.x.size()) +
                                     " bits, config expects " +
                                     std::to_string(config.n_inputs()));
    SimRow r;
    r.name = v.name;
    r.x = v.x;
    r.state = tree_capacitances(config, v.x);
    r.load = capacitive_load(config, v.x);
    r.mv = peak_membrane_voltages(config, v.x);
    if (neuron)
      r.y_software = eval_software_neuron(*neuron, v.x);
    r.tl = tl_decide(tl, r.mv.positive * 1e3, r.mv.negative * 1e3, cond,
                     config.v_max());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_sim_csv(std::span<const SimRow> rows) {
  std::string s = "name,vector,Con_p_fF,Con_m_fF,CL_fF,vm_p_mV,vm_m_mV,vmd_mV,"
                  "y_software,y_tl\n";
  for (const auto &r : rows) {
    s += r.name + "," + r.x.to_string() + "," + fixed(r.state.on_p, 3) + "," +
         fixed(r.state.on_m, 3) + "," + fixed(r.load, 3) + "," +
         fixed(r.mv.positive * 1e3, 3) + "," + fixed(r.mv.negative * 1e3, 3) +
         "," + fixed(r.mv.differential() * 1e3, 3) + "," +
         (r.y_software ? std::to_string(*r.y_software) : std::string()) + "," +
         std::to_string(r.tl.output) + "\n";
  }
  return s;
}

void apply_fixture_energies(std::span<EnergyRow> rows,
                            std::span<const fixtures::EnergyRow> table) {
  for (auto &r : rows) {
    for (const auto &f : table) {
      if (InputVector::parse(f.vector, r.x.size()) != r.x)
        continue;
      // The printed ACN energy is the synapse part; keep the PCG term and
      // attribute the remainder to the adiabatic load.
      r.energy.e_al = f.acn_fj - r.energy.e_pcg;
      r.energy.e_total = r.energy.e_pcg + r.energy.e_al + r.energy.e_tl;
      r.energy.e_ccn = f.ccn_fj;
      r.energy.savings_pct = savings_percent(f.acn_fj, f.ccn_fj);
      r.from_fixture = true;
      break;
    }
  }
}

namespace {

std::string energy_fields(const EnergyBreakdown &e) {
  return fixed(e.load, 3) + "," + fixed(e.f_op * 1e-3, 3) + "," +
         fixed(e.e_pcg, 2) + "," + fixed(e.e_al, 2) + "," + fixed(e.e_tl, 2) +
         "," + fixed(e.synapse(), 2) + "," + fixed(e.e_ccn, 2) + "," +
         fixed(e.savings_pct, 2);
}

constexpr const char *kEnergyColumns = "CL_fF,f_op_kHz,E_PCG_fJ,E_AL_fJ,E_TL_fJ,"
                                       "E_ACN_syn_fJ,E_CCN_fJ,savings_pct";

} // namespace

std::string format_energy_csv(std::span<const EnergyRow> rows) {
  std::string s = std::string("name,vector,") + kEnergyColumns + ",source\n";
  for (const auto &r : rows)
    s += r.name + "," + r.x.to_string() + "," + energy_fields(r.energy) + "," +
         (r.from_fixture ? "fixture" : "model") + "\n";
  return s;
}

std::string format_sweep_csv(std::span<const SweepRow> rows,
                             std::span<const NamedVector> vectors,
                             SweepAxis axis) {
  const bool freq = axis == SweepAxis::Frequency;
  std::string s = std::string(freq ? "freq_kHz" : "vdd_V") + ",name,vector," +
                  kEnergyColumns + ",y_tl\n";
  for (const auto &r : rows) {
    const auto &v = vectors[r.vector_index];
    s += fixed(freq ? r.axis_value * 1e-3 : r.axis_value, 3) + "," + v.name +
         "," + v.x.to_string() + "," + energy_fields(r.energy) + "," +
         std::to_string(r.output) + "\n";
  }
  return s;
}

std::string format_mc_json(const McReport &r) {
  const McSummary &s = r.summary;
  ordered_json j = {{"n", s.n},
                    {"seed", r.seed},
                    {"target", to_string(r.target)},
                    {"sampler", to_string(r.sampler)},
                    {"vector", r.vector},
                    {"mean_fJ", s.mean},
                    {"std_fJ", s.std},
                    {"cv", s.cv}};
  j["skewness"] = s.skewness ? ordered_json(*s.skewness) : ordered_json(nullptr);
  j["qq_corr"] = s.qq_corr ? ordered_json(*s.qq_corr) : ordered_json(nullptr);
  j["classified_normal"] = s.classified_normal;
  j["degenerate"] = s.degenerate;
  return dump(j);
}

std::string format_qq_csv(std::span<const double> samples) {
  std::string s = "rank,sample_fJ,normal_quantile\n";
  std::size_t k = 1;
  for (const auto &[v, q] : qq_pairs(samples))
    s += std::to_string(k++) + "," + fixed(v, 4) + "," + fixed(q, 6) + "\n";
  return s;
}

std::string format_samples_csv(std::span<const double> samples) {
  std::string s = "draw,E_fJ\n";
  for (std::size_t i = 0; i < samples.size(); ++i)
    s += std::to_string(i) + "," + fixed(samples[i], 4) + "\n";
  return s;
}

std::vector<fixtures::OffsetRow> parse_offsets(std::string_view csv) {
  const auto rows = parse_csv(csv);
  std::vector<fixtures::OffsetRow> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto &f = rows[r];
    if (r == 0 && !f.empty() && f[0] == "design")
      continue;
    if (f.size() != 5)
      fail(ErrorCode::Parse, "offsets row " + std::to_string(r + 1) +
                                 ": expected 5 fields");
    out.push_back({fixtures::parse_design(f[0]), fixtures::parse_corner(f[1]),
                   to_double(f[2], r + 1), fixtures::parse_direction(f[3]),
                   to_double(f[4], r + 1)});
  }
  return out;
}

std::string format_offsets(std::span<const fixtures::OffsetRow> rows) {
  std::string s = "design,corner,temp_C,direction,offset_mV\n";
  for (const auto &r : rows)
    s += std::string(fixtures::to_string(r.design)) + "," +
         std::string(fixtures::to_string(r.corner)) + "," + fixed(r.temp_c, 0) +
         "," + std::string(fixtures::to_string(r.direction)) + "," +
         fixed(r.offset_mv, 4) + "\n";
  return s;
}

std::vector<fixtures::EnergyRow> parse_energy_table(std::string_view csv) {
  const auto rows = parse_csv(csv);
  std::vector<fixtures::EnergyRow> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto &f = rows[r];
    if (r == 0 && !f.empty() && f[0] == "name")
      continue;
    if (f.size() != 6)
      fail(ErrorCode::Parse, "energy table row " + std::to_string(r + 1) +
                                 ": expected 6 fields");
    out.push_back({f[0], f[1], to_double(f[2], r + 1), to_double(f[3], r + 1),
                   to_double(f[4], r + 1), to_double(f[5], r + 1)});
  }
  return out;
}

std::string format_energy_table(std::span<const fixtures::EnergyRow> rows) {
  std::string s = "name,vector,CL_fF,E_ACN_fJ,E_CCN_fJ,savings_pct\n";
  for (const auto &r : rows)
    s += r.name + "," + r.vector + "," + fixed(r.load_ff, 1) + "," +
         fixed(r.acn_fj, 1) + "," + fixed(r.ccn_fj, 1) + "," +
         fixed(r.savings_pct, 1) + "\n";
  return s;
}

const std::vector<std::string> &fixture_names() {
  static const std::vector<std::string> names = {
      "offsets", "vectors", "table3", "table4", "table5", "table6", "table7"};
  return names;
}

std::string format_fixture(std::string_view name) {
  const auto &set = fixtures::embedded();
  if (name == "offsets")
    return format_offsets(set.offsets);
  if (name == "vectors")
    return format_vectors(reference_vectors());
  if (name == "table3") {
    const NeuronSpec spec = fixtures::reference_neuron(set);
    return config_to_json(fixtures::reference_config(set), &spec);
  }
  if (name == "table4") {
    std::string s = "name,vector,theo_vp_mV,theo_vm_mV,theo_vmd_mV,theo_out,"
                    "prop_vp_mV,prop_vm_mV,prop_out,conv_vp_mV,conv_vm_mV,"
                    "conv_out\n";
    for (const auto &r : set.table4)
      s += r.name + "," + r.vector + "," + fixed(r.theo_vp, 1) + "," +
           fixed(r.theo_vm, 1) + "," + fixed(r.theo_vmd, 1) + "," +
           std::to_string(r.theo_out) + "," + fixed(r.prop_vp, 1) + "," +
           fixed(r.prop_vm, 1) + "," + std::to_string(r.prop_out) + "," +
           fixed(r.conv_vp, 1) + "," + fixed(r.conv_vm, 1) + "," +
           std::to_string(r.conv_out) + "\n";
    return s;
  }
  if (name == "table5")
    return format_energy_table(set.table5);
  if (name == "table6") {
    std::string s = "nominal_MHz,operating_MHz,t_on_ns,L_pc_mH\n";
    for (const auto &r : set.table6)
      s += fixed(r.nominal_mhz, 2) + "," + fixed(r.operating_mhz, 4) + "," +
           fixed(r.t_on_ns, 1) + "," + fixed(r.l_pc_mh, 4) + "\n";
    return s;
  }
  if (name == "table7") {
    std::string s = "vdd_V,TV4_pct,TV8_pct,TV13_pct\n";
    for (const auto &r : set.table7)
      s += fixed(r.v_dd, 1) + "," + fixed(r.tv4, 1) + "," + fixed(r.tv8, 1) +
           "," + fixed(r.tv13, 1) + "\n";
    return s;
  }
  fail(ErrorCode::Invalid, "unknown fixture '" + std::string(name) + "'");
}

} // namespace acn::io
