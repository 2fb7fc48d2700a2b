/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>

#include "acn/error.hpp"
#include "acn/fixtures.hpp"
#include "acn/montecarlo.hpp"
#include "acn/random.hpp"

using namespace acn;

namespace {

const AcnConfig &ref() {
  static const AcnConfig c = fixtures::reference_config();
  return c;
}

const EnergyParams &params() {
  static const EnergyParams p =
      calibrate_energy(fixtures::embedded().table5, reference_power_clock());
  return p;
}

const InputVector tv4 = InputVector::parse("1111_1110_1110", 12);

} // namespace

TEST_CASE("zero variation leaves the instance untouched") {
  VariationModel m;
  m.sigma_cap_global = m.sigma_cap_mismatch = m.sigma_rsyn = 0.0;
  const auto s = sample_variation(ref(), params(), m, 3);
  for (std::size_t i = 0; i < 12; ++i)
    CHECK(s.config.find(i)->cap == ref().find(i)->cap);
  CHECK(s.config.total(Tree::Positive) == ref().total(Tree::Positive));
  CHECK(s.params.r_syn == params().r_syn);
}

TEST_CASE("draws are reproducible") {
  const VariationModel m;
  const auto a = sample_variation(ref(), params(), m, 17);
  const auto b = sample_variation(ref(), params(), m, 17);
  CHECK(a.config.find(4)->cap == b.config.find(4)->cap);
  CHECK(a.params.r_syn == b.params.r_syn);
  const auto c = sample_variation(ref(), params(), m, 18);
  CHECK(a.config.find(4)->cap != c.config.find(4)->cap);
}

TEST_CASE("global factor is shared across capacitors") {
  VariationModel m;
  m.sigma_cap_mismatch = 0.0;
  const auto s = sample_variation(ref(), params(), m, 5);
  const double g = s.config.find(0)->cap / ref().find(0)->cap;
  for (std::size_t i = 1; i < 12; ++i)
    CHECK(s.config.find(i)->cap / ref().find(i)->cap == doctest::Approx(g));
}

TEST_CASE("mismatch averages out around the global factor") {
  VariationModel m;
  m.sigma_cap_global = 0.0;
  double mean = 0.0;
  const int n = 10000;
  for (int d = 0; d < n; ++d) {
    const auto s = sample_variation(ref(), params(), m, static_cast<std::uint64_t>(d));
    mean += s.config.find(7)->cap / ref().find(7)->cap;
  }
  CHECK(mean / n == doctest::Approx(1.0).epsilon(5e-4));
}

TEST_CASE("extreme variation is resampled, then rejected") {
  VariationModel m;
  m.sigma_cap_global = 0.6; // about 5% of draws go non-positive
  for (std::uint64_t d = 0; d < 200; ++d) {
    const auto s = sample_variation(ref(), params(), m, d);
    CHECK(s.config.find(0)->cap > 0.0);
  }
  m.sigma_cap_global = 1e6;
  m.sigma_cap_mismatch = 1e6;
  CHECK_THROWS_AS(sample_variation(ref(), params(), m, 0), Error);
}

TEST_CASE("single-draw run equals one perturbed evaluation") {
  const VariationModel m;
  const auto pc = reference_power_clock();
  const auto out = mc_run(ref(), tv4, m, 1, McTarget::Acn, pc, params());
  const auto s = sample_variation(ref(), params(), m, 0);
  const auto e = total_energy(s.config, tv4, pc, s.params, TlModel::ideal());
  CHECK(out.at(0) == e.synapse());
}

TEST_CASE("parallel runs equal the serial run") {
  for (auto sampler : {Sampler::Pseudorandom, Sampler::LowDiscrepancy}) {
    VariationModel m;
    m.sampler = sampler;
    const auto pc = reference_power_clock();
    const auto serial = mc_run(ref(), tv4, m, 300, McTarget::Acn, pc, params(), 1);
    const auto parallel = mc_run(ref(), tv4, m, 300, McTarget::Acn, pc, params(), 7);
    CHECK(serial == parallel);
  }
}

TEST_CASE("ACN energy is right-skewed, CMOS energy is not") {
  const VariationModel m;
  const auto pc = reference_power_clock();
  const auto acn = mc_stats(mc_run(ref(), tv4, m, 1000, McTarget::Acn, pc, params(), 0));
  const auto ccn = mc_stats(mc_run(ref(), tv4, m, 1000, McTarget::Ccn, pc, params(), 0));
  CHECK(*acn.skewness > 0.5);
  CHECK_FALSE(acn.classified_normal);
  CHECK(std::abs(*ccn.skewness) < 0.3);
  CHECK(ccn.classified_normal);
  CHECK(acn.cv > ccn.cv);
}

TEST_CASE("summary statistics of a small known sample") {
  // numpy / scipy: mean, std(ddof=1), skew(bias=False), Q-Q correlation.
  const std::vector<double> s{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto r = mc_stats(s);
  CHECK(r.mean == 5.5);
  CHECK(r.std == doctest::Approx(3.0276503540974917).epsilon(1e-12));
  CHECK(std::abs(*r.skewness) < 1e-12);
  CHECK(*r.qq_corr == doctest::Approx(0.9915243581022838).epsilon(1e-9));

  const std::vector<double> spike{1, 1, 1, 1, 1, 1, 1, 10};
  const auto t = mc_stats(spike);
  CHECK(*t.skewness == doctest::Approx(2.82842712474619).epsilon(1e-10));
  CHECK(*t.qq_corr == doctest::Approx(0.6285396501851268).epsilon(1e-9));
}

TEST_CASE("normal samples classify as normal") {
  std::vector<double> z;
  for (std::uint64_t d = 0; d < 10000; ++d)
    z.push_back(random::CounterStream(9, d, 0).normal(0));
  const auto r = mc_stats(z);
  CHECK(*r.qq_corr >= 0.999);
  CHECK(std::abs(*r.skewness) <= 0.05);
  CHECK(r.classified_normal);
}

TEST_CASE("exponential samples are skewed and non-normal") {
  std::vector<double> e;
  for (std::uint64_t d = 0; d < 10000; ++d)
    e.push_back(-std::log(random::CounterStream(9, d, 0).uniform(0)));
  const auto r = mc_stats(e);
  CHECK(*r.skewness > 1.5);
  CHECK(*r.qq_corr < 0.99);
  CHECK_FALSE(r.classified_normal);
}

TEST_CASE("degenerate and short samples") {
  const std::vector<double> flat(20, 3.0);
  const auto r = mc_stats(flat);
  CHECK(r.degenerate);
  CHECK(r.std == 0.0);
  CHECK(r.cv == 0.0);
  CHECK_FALSE(r.skewness.has_value());
  CHECK_THROWS_AS(mc_stats(std::vector<double>(7, 1.0)), Error);
}

TEST_CASE("Q-Q pairs use plotting positions") {
  const std::vector<double> s{3, 1, 2};
  const auto q = qq_pairs(s);
  CHECK(q[0].first == 1.0);
  CHECK(q[2].first == 3.0);
  CHECK(q[1].second == 0.0);
  CHECK(q[0].second == doctest::Approx(-0.9674215661017));
}
