/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "acn/error.hpp"
#include "acn/random.hpp"

namespace acn {

namespace {

constexpr std::uint32_t kMaxAttempts = 100;

// Slot layout of one draw: global factor, R_syn factor, then one mismatch
// slot per capacitor in AcnConfig::transformed() visiting order.
constexpr std::uint32_t kSlotGlobal = 0;
constexpr std::uint32_t kSlotRsyn = 1;
constexpr std::uint32_t kSlotFirstCap = 2;

class DrawSource {
public:
  DrawSource(const VariationModel &model, std::uint64_t draw)
      : model_(model), draw_(draw), sobol_(model.seed) {}

  double normal(std::uint32_t attempt, std::uint32_t slot) const {
    if (model_.sampler == Sampler::LowDiscrepancy && attempt == 0)
      return sobol_.normal(draw_, slot);
    return random::CounterStream(model_.seed, draw_, attempt).normal(slot);
  }

private:
  const VariationModel &model_;
  std::uint64_t draw_;
  random::ScrambledSobol sobol_;
};

} // namespace

std::string_view to_string(Sampler s) {
  return s == Sampler::Pseudorandom ? "pseudorandom" : "low-discrepancy";
}

Sampler parse_sampler(std::string_view s) {
  if (s == "pseudorandom" || s == "prng")
    return Sampler::Pseudorandom;
  if (s == "low-discrepancy" || s == "lds" || s == "sobol")
    return Sampler::LowDiscrepancy;
  fail(ErrorCode::Parse, "unknown sampler '" + std::string(s) + "'");
}

void VariationModel::validate() const {
  for (double s : {sigma_cap_mismatch, sigma_cap_global, sigma_rsyn})
    if (!(s >= 0.0) || !std::isfinite(s))
      fail(ErrorCode::Range, "variation sigmas must be finite and non-negative");
}

Perturbed sample_variation(const AcnConfig &config, const EnergyParams &params,
                           const VariationModel &model, std::uint64_t draw) {
  model.validate();
  const std::uint32_t n_caps =
      static_cast<std::uint32_t>(config.synapses().size()) + 4;
  if (model.sampler == Sampler::LowDiscrepancy &&
      kSlotFirstCap + n_caps > random::Sobol::kMaxDimensions)
    fail(ErrorCode::Range,
         "low-discrepancy sampler supports at most " +
             std::to_string(random::Sobol::kMaxDimensions - kSlotFirstCap - 4) +
             " synapses");

  const DrawSource src(model, draw);
  for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double g = model.sigma_cap_global * src.normal(attempt, kSlotGlobal);
    std::uint32_t slot = kSlotFirstCap;
    bool ok = true;
    auto perturb = [&](CapRole, Tree, double value) {
      const double m = model.sigma_cap_mismatch * src.normal(attempt, slot++);
      if (value == 0.0)
        return 0.0;
      const double v = value * (1.0 + g) * (1.0 + m);
      if (!(v > 0.0)) {
        ok = false;
        return value; // keeps the construction valid; the draw is discarded
      }
      return v;
    };
    AcnConfig perturbed = config.transformed(perturb);
    if (!ok)
      continue;
    EnergyParams p = params;
    p.r_syn *= std::exp(model.sigma_rsyn * src.normal(attempt, kSlotRsyn));
    return {std::move(perturbed), p};
  }
  fail(ErrorCode::Range, "draw " + std::to_string(draw) +
                             " produced a non-positive capacitor in " +
                             std::to_string(kMaxAttempts) + " attempts");
}

std::string_view to_string(McTarget t) { return t == McTarget::Acn ? "acn" : "ccn"; }

McTarget parse_mc_target(std::string_view s) {
  if (s == "acn")
    return McTarget::Acn;
  if (s == "ccn")
    return McTarget::Ccn;
  fail(ErrorCode::Parse, "unknown Monte Carlo target '" + std::string(s) + "'");
}

std::vector<double> mc_run(const AcnConfig &config, const InputVector &x,
                           const VariationModel &model, std::size_t n,
                           McTarget target, const PowerClock &pc,
                           const EnergyParams &params, unsigned threads) {
  if (n == 0)
    fail(ErrorCode::Range, "Monte Carlo needs at least one draw");
  if (x.size() != config.n_inputs())
    fail(ErrorCode::Dimension, "input vector has " + std::to_string(x.size()) +
                                   " bits, config expects " +
                                   std::to_string(config.n_inputs()));
  model.validate();
  params.validate();
  pc.validate();

  const TlModel tl = TlModel::ideal();
  std::vector<double> out(n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t d = begin; d < end; ++d) {
      const Perturbed s = sample_variation(config, params, model, d);
      const EnergyBreakdown e = energy_at_load(capacitive_load(s.config, x), pc,
                                               s.params, tl, params.v_dd_nominal);
      out[d] = target == McTarget::Acn ? e.synapse() : e.e_ccn;
    }
  };

  if (threads == 0)
    threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    work(0, n);
    return out;
  }
  // Errors from worker threads are captured and rethrown in draw order.
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t b = t * chunk, e = std::min(n, b + chunk);
    pool.emplace_back([&, t, b, e] {
      try {
        work(b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &th : pool)
    th.join();
  for (auto &err : errors)
    if (err)
      std::rethrow_exception(err);
  return out;
}

McSummary mc_stats(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 8)
    fail(ErrorCode::Range, "summary statistics need at least 8 samples, got " +
                               std::to_string(n));
  McSummary s;
  s.n = n;
  const double nd = static_cast<double>(n);
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / nd;
  double m2 = 0.0, m3 = 0.0;
  for (double v : samples) {
    const double d = v - s.mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  s.std = std::sqrt(m2 / (nd - 1.0));
  s.cv = s.mean != 0.0 ? s.std / s.mean * 100.0 : 0.0;

  // Relative spread below rounding noise counts as constant.
  if (!(s.std > 1e-12 * std::abs(s.mean))) {
    s.std = 0.0;
    s.cv = 0.0;
    s.degenerate = true;
    return s;
  }
  m2 /= nd;
  m3 /= nd;
  s.skewness = std::sqrt(nd * (nd - 1.0)) / (nd - 2.0) * m3 / std::pow(m2, 1.5);

  const auto pairs = qq_pairs(samples);
  double mx = 0.0, mq = 0.0;
  for (const auto &[v, q] : pairs) {
    mx += v;
    mq += q;
  }
  mx /= nd;
  mq /= nd;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto &[v, q] : pairs) {
    sxy += (v - mx) * (q - mq);
    sxx += (v - mx) * (v - mx);
    syy += (q - mq) * (q - mq);
  }
  s.qq_corr = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  s.classified_normal = *s.qq_corr >= kNormalQqThreshold;
  return s;
}

std::vector<std::pair<double, double>> qq_pairs(std::span<const double> samples) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(sorted.size());
  std::vector<std::pair<double, double>> out;
  out.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out.emplace_back(sorted[i], random::inverse_normal_cdf(
                                    (static_cast<double>(i) + 0.5) / nd));
  return out;
}

} // namespace acn
