/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/acn.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numeric>
#include <optional>
#include <string>

#include "acn/energy.hpp"
#include "acn/error.hpp"
#include "acn/fixtures.hpp"
#include "acn/io.hpp"
#include "acn/montecarlo.hpp"
#include "acn/netlist.hpp"
#include "acn/verify.hpp"

struct acn_neuron {
  acn::NeuronSpec spec;
};

struct acn_config {
  acn::AcnConfig config;
  std::optional<acn::NeuronSpec> neuron;
};

struct acn_vectors {
  std::vector<acn::io::NamedVector> items;
};

struct acn_verify_report {
  acn::VerifyReport report;
  std::vector<std::pair<int, bool>> criteria;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument {};

template <class T> const T &deref(const T *p) {
  if (!p)
    throw NullArgument{};
  return *p;
}

const char *text(const char *p) {
  if (!p)
    throw NullArgument{};
  return p;
}

template <class F> acn_status guard(F &&f) noexcept {
  try {
    f();
    return ACN_OK;
  } catch (const acn::Error &e) {
    g_last_error = e.what();
    return static_cast<acn_status>(e.code());
  } catch (const NullArgument &) {
    g_last_error = "required argument is NULL";
    return ACN_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return ACN_ERR_INTERNAL;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return ACN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ACN_ERR_INTERNAL;
  }
}

void emit(char **out, const std::string &s) {
  if (!out)
    throw NullArgument{};
  char *buf = static_cast<char *>(std::malloc(s.size() + 1));
  if (!buf)
    throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

template <class T> void require_out(T **out) {
  if (!out)
    throw NullArgument{};
  *out = nullptr;
}

acn::TechProfile to_core(const acn_tech &t) {
  acn::TechProfile p;
  p.v_dd = t.v_dd;
  p.v_max = t.v_max;
  p.v_cut = t.v_cut;
  p.v_thp = t.v_thp;
  p.c_min = t.c_min_ff;
  p.cap_grid = t.cap_grid_ff;
  p.c_parasitic = t.c_parasitic_ff;
  return p;
}

acn_tech from_core(const acn::TechProfile &p) {
  return {p.v_dd, p.v_max, p.v_cut, p.v_thp, p.c_min, p.cap_grid, p.c_parasitic};
}

acn::PowerClock to_core(const acn_power_clock &c) {
  acn::PowerClock pc;
  pc.v_max = c.v_max;
  pc.nominal_freq = c.nominal_freq_hz;
  pc.inductance = c.inductance_h;
  pc.tank_cap = c.tank_cap_f;
  pc.t_on = c.t_on_s;
  pc.freq_calibration = c.freq_calibration;
  return pc;
}

acn_power_clock from_core(const acn::PowerClock &pc) {
  return {pc.v_max, pc.nominal_freq, pc.inductance, pc.tank_cap, pc.t_on,
          pc.freq_calibration};
}

acn::EnergyParams to_core(const acn_energy_params &e) {
  acn::EnergyParams p;
  p.r_syn = e.r_syn_ohm;
  p.r_pc = e.r_pc_ohm;
  p.c_pc = e.c_pc_f;
  p.v_x = e.v_x;
  p.e_pcg0 = e.e_pcg0_fj;
  p.ccn_overhead = e.ccn_overhead_fj;
  p.v_th = e.v_th;
  p.v_dd_nominal = e.v_dd_nominal;
  return p;
}

acn_energy_params from_core(const acn::EnergyParams &p) {
  return {p.r_syn, p.r_pc, p.c_pc, p.v_x, p.e_pcg0, p.ccn_overhead, p.v_th,
          p.v_dd_nominal};
}

acn::VariationModel to_core(const acn_variation &v) {
  acn::VariationModel m;
  m.sigma_cap_mismatch = v.sigma_cap_mismatch;
  m.sigma_cap_global = v.sigma_cap_global;
  m.sigma_rsyn = v.sigma_rsyn;
  m.sampler = v.sampler == ACN_SAMPLER_LOW_DISCREPANCY
                  ? acn::Sampler::LowDiscrepancy
                  : acn::Sampler::Pseudorandom;
  m.seed = v.seed;
  return m;
}

acn::TlModel tl_model(acn_tl_variant v) {
  switch (v) {
  case ACN_TL_IDEAL:
    return acn::TlModel::ideal();
  case ACN_TL_PROPOSED:
    return acn::TlModel::proposed();
  case ACN_TL_CONVENTIONAL:
    return acn::TlModel::conventional();
  }
  acn::fail(acn::ErrorCode::Invalid, "unknown threshold-logic variant");
}

acn::fixtures::Corner corner(acn_corner c) {
  switch (c) {
  case ACN_CORNER_FF:
    return acn::fixtures::Corner::FF;
  case ACN_CORNER_TT:
    return acn::fixtures::Corner::TT;
  case ACN_CORNER_SS:
    return acn::fixtures::Corner::SS;
  }
  acn::fail(acn::ErrorCode::Invalid, "unknown process corner");
}

std::vector<acn::InputVector> bits_of(const acn_vectors &v, std::size_t n) {
  std::vector<acn::InputVector> out;
  for (const auto &item : v.items) {
    if (item.x.size() != n)
      acn::fail(acn::ErrorCode::Dimension,
                item.name + ": vector has " + std::to_string(item.x.size()) +
                    " bits, config expects " + std::to_string(n));
    out.push_back(item.x);
  }
  return out;
}

// Summary for runs too short for the shape statistics.
acn::McSummary basic_summary(const std::vector<double> &s) {
  acn::McSummary m;
  m.n = s.size();
  m.mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
  if (s.size() > 1) {
    double ss = 0.0;
    for (double v : s)
      ss += (v - m.mean) * (v - m.mean);
    m.std = std::sqrt(ss / static_cast<double>(s.size() - 1));
    m.cv = m.mean != 0.0 ? m.std / m.mean * 100.0 : 0.0;
  }
  return m;
}

} // namespace

extern "C" {

const char *acn_version(void) { return "0.1.0"; }

const char *acn_last_error(void) { return g_last_error.c_str(); }

void acn_string_free(char *s) { std::free(s); }

acn_status acn_neuron_from_json(const char *json, acn_neuron **out) {
  return guard([&] {
    require_out(out);
    *out = new acn_neuron{acn::io::parse_neuron(text(json))};
  });
}

acn_status acn_neuron_reference(acn_neuron **out) {
  return guard([&] {
    require_out(out);
    *out = new acn_neuron{acn::fixtures::reference_neuron()};
  });
}

size_t acn_neuron_size(const acn_neuron *neuron) {
  return neuron ? neuron->spec.size() : 0;
}

void acn_neuron_free(acn_neuron *neuron) { delete neuron; }

void acn_tech_default(acn_tech *out) {
  if (out)
    *out = from_core(acn::TechProfile{});
}

void acn_tech_reference(acn_tech *out) {
  if (out)
    *out = from_core(acn::TechProfile::reference());
}

acn_status acn_tech_from_json(const char *json, acn_tech *out) {
  return guard([&] {
    deref(out);
    *out = from_core(acn::io::parse_tech(text(json)));
  });
}

acn_status acn_map(const acn_neuron *neuron, const acn_tech *tech,
                   double total_synapse_cap_ff, acn_config **out) {
  return guard([&] {
    require_out(out);
    const acn::NeuronSpec &spec = deref(neuron).spec;
    const acn::TechProfile t = to_core(deref(tech));
    *out = new acn_config{acn::map_weights(spec, t, total_synapse_cap_ff), spec};
  });
}

acn_status acn_config_reference(acn_config **out) {
  return guard([&] {
    require_out(out);
    *out = new acn_config{acn::fixtures::reference_config(),
                          acn::fixtures::reference_neuron()};
  });
}

acn_status acn_config_from_json(const char *json, acn_config **out) {
  return guard([&] {
    require_out(out);
    auto doc = acn::io::parse_config(text(json));
    *out = new acn_config{std::move(doc.config), std::move(doc.neuron)};
  });
}

acn_status acn_config_to_json(const acn_config *config, char **out) {
  return guard([&] {
    const acn_config &c = deref(config);
    emit(out, acn::io::config_to_json(c.config, c.neuron ? &*c.neuron : nullptr));
  });
}

size_t acn_config_inputs(const acn_config *config) {
  return config ? config->config.n_inputs() : 0;
}

acn_status acn_config_check(const acn_config *config, const acn_tech *tech,
                            char **report_out) {
  return guard([&] {
    const auto report = acn::check_config(deref(config).config, to_core(deref(tech)));
    if (report_out)
      emit(report_out, report.to_string());
    if (!report.feasible())
      acn::fail(acn::ErrorCode::Infeasible, report.to_string());
  });
}

void acn_config_free(acn_config *config) { delete config; }

acn_status acn_vectors_from_csv(const char *csv, size_t n_inputs, acn_vectors **out) {
  return guard([&] {
    require_out(out);
    *out = new acn_vectors{acn::io::parse_vectors(text(csv), n_inputs)};
  });
}

acn_status acn_vectors_reference(acn_vectors **out) {
  return guard([&] {
    require_out(out);
    *out = new acn_vectors{acn::io::reference_vectors()};
  });
}

size_t acn_vectors_count(const acn_vectors *vectors) {
  return vectors ? vectors->items.size() : 0;
}

const char *acn_vectors_name(const acn_vectors *vectors, size_t index) {
  if (!vectors || index >= vectors->items.size())
    return nullptr;
  return vectors->items[index].name.c_str();
}

void acn_vectors_free(acn_vectors *vectors) { delete vectors; }

void acn_power_clock_default(acn_power_clock *out) {
  if (out)
    *out = from_core(acn::reference_power_clock());
}

acn_status acn_power_clock_from_json(const char *json, acn_power_clock *out) {
  return guard([&] {
    deref(out);
    *out = from_core(acn::io::parse_power_clock(text(json)));
  });
}

void acn_energy_params_default(acn_energy_params *out) {
  if (out)
    *out = from_core(acn::EnergyParams{});
}

acn_status acn_energy_params_from_json(const char *json, acn_energy_params *out) {
  return guard([&] {
    deref(out);
    *out = from_core(acn::io::parse_params(text(json)));
  });
}

acn_status acn_energy_params_to_json(const acn_energy_params *params, char **out) {
  return guard([&] { emit(out, acn::io::params_to_json(to_core(deref(params)))); });
}

acn_status acn_energy_calibrate(const char *csv, const acn_power_clock *pc,
                                acn_energy_params *out) {
  return guard([&] {
    deref(out);
    const acn::PowerClock clock = to_core(deref(pc));
    if (csv) {
      const auto rows = acn::io::parse_energy_table(csv);
      *out = from_core(acn::calibrate_energy(rows, clock));
    } else {
      *out = from_core(
          acn::calibrate_energy(acn::fixtures::embedded().table5, clock));
    }
  });
}

acn_status acn_simulate_csv(const acn_config *config, const acn_vectors *vectors,
                            acn_tl_variant tl, acn_corner c, double temp_c,
                            char **out) {
  return guard([&] {
    const acn_config &cfg = deref(config);
    const auto rows = acn::io::simulate(cfg.config,
                                        cfg.neuron ? &*cfg.neuron : nullptr,
                                        deref(vectors).items, tl_model(tl),
                                        {corner(c), temp_c});
    emit(out, acn::io::format_sim_csv(rows));
  });
}

acn_status acn_energy_csv(const acn_config *config, const acn_vectors *vectors,
                          const acn_power_clock *pc, const acn_energy_params *params,
                          int use_fixture_energies, char **out) {
  return guard([&] {
    const acn::AcnConfig &cfg = deref(config).config;
    const acn::PowerClock clock = to_core(deref(pc));
    const acn::EnergyParams p = to_core(deref(params));
    clock.validate();
    p.validate();
    const acn::TlModel tl = acn::TlModel::proposed();
    std::vector<acn::io::EnergyRow> rows;
    for (const auto &v : deref(vectors).items) {
      if (v.x.size() != cfg.n_inputs())
        acn::fail(acn::ErrorCode::Dimension,
                  v.name + ": vector has " + std::to_string(v.x.size()) +
                      " bits, config expects " + std::to_string(cfg.n_inputs()));
      rows.push_back({v.name, v.x, acn::total_energy(cfg, v.x, clock, p, tl), false});
    }
    if (use_fixture_energies)
      acn::io::apply_fixture_energies(rows, acn::fixtures::embedded().table5);
    emit(out, acn::io::format_energy_csv(rows));
  });
}

acn_status acn_sweep_csv(const acn_config *config, const acn_vectors *vectors,
                         acn_sweep_axis axis, const double *points, size_t n_points,
                         const acn_power_clock *pc, const acn_energy_params *params,
                         char **out) {
  return guard([&] {
    const acn::AcnConfig &cfg = deref(config).config;
    const acn_vectors &vs = deref(vectors);
    if (n_points > 0)
      deref(points);
    const auto a = axis == ACN_SWEEP_VOLTAGE ? acn::SweepAxis::Voltage
                                             : acn::SweepAxis::Frequency;
    const auto bits = bits_of(vs, cfg.n_inputs());
    const auto rows = acn::sweep(cfg, bits, a, {points, n_points},
                                 to_core(deref(pc)), to_core(deref(params)),
                                 acn::TlModel::proposed());
    emit(out, acn::io::format_sweep_csv(rows, vs.items, a));
  });
}

void acn_variation_default(acn_variation *out) {
  if (!out)
    return;
  const acn::VariationModel m;
  *out = {m.sigma_cap_mismatch, m.sigma_cap_global, m.sigma_rsyn,
          ACN_SAMPLER_PSEUDORANDOM, m.seed};
}

acn_status acn_mc_run(const acn_config *config, const acn_vectors *vectors,
                      size_t vector_index, const acn_variation *variation, size_t n,
                      acn_mc_target target, const acn_power_clock *pc,
                      const acn_energy_params *params, unsigned threads,
                      char **summary_json, char **samples_csv, char **qq_csv) {
  return guard([&] {
    const acn_vectors &vs = deref(vectors);
    if (vector_index >= vs.items.size())
      acn::fail(acn::ErrorCode::Range, "vector index " +
                                           std::to_string(vector_index) +
                                           " out of range");
    const auto &v = vs.items[vector_index];
    const acn::VariationModel model = to_core(deref(variation));
    const auto t = target == ACN_MC_CCN ? acn::McTarget::Ccn : acn::McTarget::Acn;
    const auto samples = acn::mc_run(deref(config).config, v.x, model, n, t,
                                     to_core(deref(pc)), to_core(deref(params)),
                                     threads);
    acn::io::McReport report;
    report.summary = samples.size() >= 8 ? acn::mc_stats(samples)
                                         : basic_summary(samples);
    report.seed = model.seed;
    report.target = t;
    report.sampler = model.sampler;
    report.vector = v.name;
    emit(summary_json, acn::io::format_mc_json(report));
    if (samples_csv)
      emit(samples_csv, acn::io::format_samples_csv(samples));
    if (qq_csv)
      emit(qq_csv, acn::io::format_qq_csv(samples));
  });
}

acn_status acn_export_netlist(const acn_config *config, const acn_power_clock *pc,
                              char **out) {
  return guard([&] {
    emit(out, acn::export_netlist(deref(config).config, to_core(deref(pc))));
  });
}

acn_status acn_fixture_render(const char *name, char **out) {
  return guard([&] { emit(out, acn::io::format_fixture(text(name))); });
}

acn_status acn_verify_run(const char *only, const acn_config *reference_caps,
                          unsigned threads, acn_verify_report **out) {
  return guard([&] {
    require_out(out);
    acn::VerifyOptions opt;
    if (only)
      opt.only = only;
    if (reference_caps)
      opt.table3_override = reference_caps->config;
    opt.threads = threads;
    auto report = acn::run_verify(acn::fixtures::embedded(), opt);
    auto crit = report.criteria();
    *out = new acn_verify_report{std::move(report), std::move(crit)};
  });
}

int acn_verify_passed(const acn_verify_report *report) {
  return report && report->report.pass() ? 1 : 0;
}

size_t acn_verify_criteria_count(const acn_verify_report *report) {
  return report ? report->criteria.size() : 0;
}

acn_status acn_verify_criterion(const acn_verify_report *report, size_t index,
                                int *criterion, int *passed) {
  return guard([&] {
    const auto &r = deref(report);
    if (index >= r.criteria.size())
      acn::fail(acn::ErrorCode::Range, "criterion index out of range");
    deref(criterion);
    deref(passed);
    *criterion = r.criteria[index].first;
    *passed = r.criteria[index].second ? 1 : 0;
  });
}

acn_status acn_verify_render_table(const acn_verify_report *report, char **out) {
  return guard([&] { emit(out, deref(report).report.render_table()); });
}

acn_status acn_verify_to_json(const acn_verify_report *report, char **out) {
  return guard([&] { emit(out, deref(report).report.to_json()); });
}

void acn_verify_report_free(acn_verify_report *report) { delete report; }

} // extern "C"
