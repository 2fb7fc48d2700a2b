/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "acn/energy.hpp"

namespace acn {

enum class Sampler { Pseudorandom, LowDiscrepancy };
std::string_view to_string(Sampler s);
Sampler parse_sampler(std::string_view s);

/// Relative process variation. Capacitors see (1 + g)(1 + m_i) with g shared
/// per draw; R_syn sees a median-one lognormal factor exp(sigma_rsyn z).
struct VariationModel {
  double sigma_cap_mismatch = 0.01;
  double sigma_cap_global = 0.03;
  double sigma_rsyn = 0.30;
  Sampler sampler = Sampler::Pseudorandom;
  std::uint64_t seed = 42;

  void validate() const;
};

struct Perturbed {
  AcnConfig config;
  EnergyParams params;
};

/// Perturbed instance for one draw. A draw with a non-positive capacitor is
/// redrawn (up to 100 attempts) from the counter stream; nominally zero
/// ballast capacitors stay zero.
Perturbed sample_variation(const AcnConfig &config, const EnergyParams &params,
                           const VariationModel &model, std::uint64_t draw);

enum class McTarget { Acn, Ccn };
std::string_view to_string(McTarget t);
McTarget parse_mc_target(std::string_view s);

/// Synapse energies in fJ, in draw order. ACN samples are E_PCG + E_AL and
/// CCN samples the CMOS benchmark, each at the perturbed load. `threads` = 0
/// picks the hardware concurrency; the result does not depend on it.
std::vector<double> mc_run(const AcnConfig &config, const InputVector &x,
                           const VariationModel &model, std::size_t n,
                           McTarget target, const PowerClock &pc,
                           const EnergyParams &params, unsigned threads = 1);

struct McSummary {
  std::size_t n = 0;
  double mean = 0.0; ///< fJ
  double std = 0.0;  ///< fJ, sample (n - 1) estimator
  double cv = 0.0;   ///< percent
  std::optional<double> skewness; ///< bias-corrected G1; empty if degenerate
  std::optional<double> qq_corr;
  bool classified_normal = false;
  bool degenerate = false; ///< zero spread, shape statistics undefined
};

inline constexpr double kNormalQqThreshold = 0.99;

/// Throws Error(Range) when fewer than 8 samples are given.
McSummary mc_stats(std::span<const double> samples);

/// (sorted sample, normal quantile at (i - 0.5) / n) pairs for Q-Q plots.
std::vector<std::pair<double, double>> qq_pairs(std::span<const double> samples);

} // namespace acn
