/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef ACN_ACN_H
#define ACN_ACN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ACN_BUILDING_LIBRARY)
#define ACN_API __declspec(dllexport)
#else
#define ACN_API __declspec(dllimport)
#endif
#else
#define ACN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Stable C interface of the adiabatic capacitive neuron library.
 *
 * Every fallible call returns an acn_status. On failure a message describing
 * the problem is kept per thread and can be read with acn_last_error() until
 * the next failing call on that thread. Strings returned through char** out
 * parameters are owned by the caller and released with acn_string_free().
 * Units: capacitance fF (or F where the field name says so), voltage V,
 * frequency Hz, time s, energy fJ.
 */

typedef enum acn_status {
  ACN_OK = 0,
  ACN_ERR_PARSE = 1,
  ACN_ERR_INFEASIBLE = 2,
  ACN_ERR_DIMENSION = 3,
  ACN_ERR_CALIBRATION = 4,
  ACN_ERR_VERIFY_FAILED = 5,
  ACN_ERR_IO = 6,
  ACN_ERR_RANGE = 7,
  ACN_ERR_INVALID = 8,
  ACN_ERR_DEGENERATE = 9,
  ACN_ERR_NULL_ARGUMENT = 10,
  ACN_ERR_INTERNAL = 11
} acn_status;

typedef enum acn_tl_variant {
  ACN_TL_IDEAL = 0,
  ACN_TL_PROPOSED = 1,
  ACN_TL_CONVENTIONAL = 2
} acn_tl_variant;

typedef enum acn_corner { ACN_CORNER_FF = 0, ACN_CORNER_TT = 1, ACN_CORNER_SS = 2 } acn_corner;

typedef enum acn_sweep_axis { ACN_SWEEP_FREQUENCY = 0, ACN_SWEEP_VOLTAGE = 1 } acn_sweep_axis;

typedef enum acn_mc_target { ACN_MC_ACN = 0, ACN_MC_CCN = 1 } acn_mc_target;

typedef enum acn_sampler {
  ACN_SAMPLER_PSEUDORANDOM = 0,
  ACN_SAMPLER_LOW_DISCREPANCY = 1
} acn_sampler;

typedef struct acn_tech {
  double v_dd;
  double v_max;
  double v_cut;
  double v_thp;
  double c_min_ff;
  double cap_grid_ff;
  double c_parasitic_ff;
} acn_tech;

typedef struct acn_power_clock {
  double v_max;
  double nominal_freq_hz;
  double inductance_h;
  double tank_cap_f;
  double t_on_s;
  double freq_calibration;
} acn_power_clock;

typedef struct acn_energy_params {
  double r_syn_ohm;
  double r_pc_ohm;
  double c_pc_f;
  double v_x;
  double e_pcg0_fj;
  double ccn_overhead_fj;
  double v_th;
  double v_dd_nominal;
} acn_energy_params;

typedef struct acn_variation {
  double sigma_cap_mismatch;
  double sigma_cap_global;
  double sigma_rsyn;
  acn_sampler sampler;
  uint64_t seed;
} acn_variation;

typedef struct acn_neuron acn_neuron;
typedef struct acn_config acn_config;
typedef struct acn_vectors acn_vectors;
typedef struct acn_verify_report acn_verify_report;

ACN_API const char *acn_version(void);
ACN_API const char *acn_last_error(void);
ACN_API void acn_string_free(char *s);

/* Neurons: {"weights": [...], "bias": tau}. */
ACN_API acn_status acn_neuron_from_json(const char *json, acn_neuron **out);
ACN_API acn_status acn_neuron_reference(acn_neuron **out);
ACN_API size_t acn_neuron_size(const acn_neuron *neuron);
ACN_API void acn_neuron_free(acn_neuron *neuron);

ACN_API void acn_tech_default(acn_tech *out);
/* The reference 12-input technology (no membrane parasitic). */
ACN_API void acn_tech_reference(acn_tech *out);
ACN_API acn_status acn_tech_from_json(const char *json, acn_tech *out);

/* Configurations. Mapping failures return ACN_ERR_INFEASIBLE with the
 * feasibility report in acn_last_error(). */
ACN_API acn_status acn_map(const acn_neuron *neuron, const acn_tech *tech,
                           double total_synapse_cap_ff, acn_config **out);
ACN_API acn_status acn_config_reference(acn_config **out);
ACN_API acn_status acn_config_from_json(const char *json, acn_config **out);
ACN_API acn_status acn_config_to_json(const acn_config *config, char **out);
ACN_API size_t acn_config_inputs(const acn_config *config);
ACN_API acn_status acn_config_check(const acn_config *config, const acn_tech *tech,
                                    char **report_out);
ACN_API void acn_config_free(acn_config *config);

/* Input vectors: CSV rows "bits" or "name,bits". */
ACN_API acn_status acn_vectors_from_csv(const char *csv, size_t n_inputs,
                                        acn_vectors **out);
ACN_API acn_status acn_vectors_reference(acn_vectors **out);
ACN_API size_t acn_vectors_count(const acn_vectors *vectors);
/* Borrowed; valid while the collection lives. NULL when out of range. */
ACN_API const char *acn_vectors_name(const acn_vectors *vectors, size_t index);
ACN_API void acn_vectors_free(acn_vectors *vectors);

ACN_API void acn_power_clock_default(acn_power_clock *out);
ACN_API acn_status acn_power_clock_from_json(const char *json, acn_power_clock *out);
ACN_API void acn_energy_params_default(acn_energy_params *out);
ACN_API acn_status acn_energy_params_from_json(const char *json, acn_energy_params *out);
ACN_API acn_status acn_energy_params_to_json(const acn_energy_params *params, char **out);
/* Fits the energy parameters to a published-style energy table given as CSV
 * (name,vector,CL_fF,E_ACN_fJ,E_CCN_fJ,savings_pct), or to the embedded table
 * when csv is NULL. ACN_ERR_CALIBRATION when an anchor row is missing. */
ACN_API acn_status acn_energy_calibrate(const char *csv, const acn_power_clock *pc,
                                        acn_energy_params *out);

/* Reports. Each renders CSV (or JSON) into *out. */
ACN_API acn_status acn_simulate_csv(const acn_config *config, const acn_vectors *vectors,
                                    acn_tl_variant tl, acn_corner corner,
                                    double temp_c, char **out);
ACN_API acn_status acn_energy_csv(const acn_config *config, const acn_vectors *vectors,
                                  const acn_power_clock *pc,
                                  const acn_energy_params *params,
                                  int use_fixture_energies, char **out);
ACN_API acn_status acn_sweep_csv(const acn_config *config, const acn_vectors *vectors,
                                 acn_sweep_axis axis, const double *points,
                                 size_t n_points, const acn_power_clock *pc,
                                 const acn_energy_params *params, char **out);

ACN_API void acn_variation_default(acn_variation *out);
/* Monte Carlo over vector `vector_index`. samples_csv and qq_csv may be NULL.
 * threads = 0 uses every core; results do not depend on it. */
ACN_API acn_status acn_mc_run(const acn_config *config, const acn_vectors *vectors,
                              size_t vector_index, const acn_variation *variation,
                              size_t n, acn_mc_target target,
                              const acn_power_clock *pc,
                              const acn_energy_params *params, unsigned threads,
                              char **summary_json, char **samples_csv,
                              char **qq_csv);

ACN_API acn_status acn_export_netlist(const acn_config *config,
                                      const acn_power_clock *pc, char **out);

/* Embedded reference data: "offsets", "vectors", "table3" .. "table7". */
ACN_API acn_status acn_fixture_render(const char *name, char **out);

/* Acceptance checks against the embedded reference data. `only` selects a
 * table id (NULL or "" for all); `reference_caps` replaces the published
 * capacitor values when non-NULL. */
ACN_API acn_status acn_verify_run(const char *only, const acn_config *reference_caps,
                                  unsigned threads, acn_verify_report **out);
ACN_API int acn_verify_passed(const acn_verify_report *report);
ACN_API size_t acn_verify_criteria_count(const acn_verify_report *report);
ACN_API acn_status acn_verify_criterion(const acn_verify_report *report, size_t index,
                                        int *criterion, int *passed);
ACN_API acn_status acn_verify_render_table(const acn_verify_report *report, char **out);
ACN_API acn_status acn_verify_to_json(const acn_verify_report *report, char **out);
ACN_API void acn_verify_report_free(acn_verify_report *report);

#ifdef __cplusplus
}
#endif

#endif /* ACN_ACN_H */
