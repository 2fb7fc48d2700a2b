/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "acn/error.hpp"
#include "acn/io.hpp"

using namespace acn;

#ifndef ACN_DATA_DIR
#error "ACN_DATA_DIR must point at the shipped data directory"
#endif

TEST_CASE("fixed-point formatting") {
  CHECK(io::fixed(1.25, 1) == "1.3");
  CHECK(io::fixed(-0.0001, 2) == "0.00");
  CHECK(io::fixed(960.9554, 3) == "960.955");
}

TEST_CASE("neuron JSON round-trip") {
  const NeuronSpec spec({0.5, -0.25}, 0.1);
  const NeuronSpec back = io::parse_neuron(io::neuron_to_json(spec));
  CHECK(back.weight(1) == -0.25);
  CHECK(back.bias() == 0.1);
  CHECK_THROWS_AS(io::parse_neuron("{\"weights\": [1]}"), Error);
  CHECK_THROWS_AS(io::parse_neuron("{not json"), Error);
}

TEST_CASE("configuration JSON round-trip keeps every capacitor") {
  const AcnConfig c = fixtures::reference_config();
  const NeuronSpec spec = fixtures::reference_neuron();
  const std::string text = io::config_to_json(c, &spec);
  const auto doc = io::parse_config(text);
  REQUIRE(doc.neuron.has_value());
  CHECK(doc.neuron->size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(doc.config.find(i)->cap == c.find(i)->cap);
    CHECK(doc.config.find(i)->tree == c.find(i)->tree);
  }
  CHECK(doc.config.tree(Tree::Negative).ballast_cap == 543.0);
  CHECK(io::config_to_json(doc.config, &*doc.neuron) == text);
}

TEST_CASE("tech and parameter files fill in defaults") {
  const TechProfile t = io::parse_tech("{\"c_parasitic_fF\": 0}");
  CHECK(t.c_parasitic == 0.0);
  CHECK(t.c_min == 35.0);
  const EnergyParams p = io::parse_params(io::params_to_json(EnergyParams{}));
  CHECK(p.c_pc == doctest::Approx(25e-12));
  const PowerClock pc = io::parse_power_clock(io::power_clock_to_json(PowerClock{}));
  CHECK(pc.t_on == doctest::Approx(60e-9));
}

TEST_CASE("vector CSV with and without names") {
  const auto v = io::parse_vectors("# comment\nname,vector\nA,0101\n\n1100\n", 4);
  REQUIRE(v.size() == 2);
  CHECK(v[0].name == "A");
  CHECK(v[1].name == "V2");
  CHECK(v[1].x.to_string() == "1100");
  try {
    io::parse_vectors("011\n", 4);
    FAIL("expected a dimension error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::Dimension);
  }
}

TEST_CASE("simulation CSV reproduces the published outputs") {
  const AcnConfig c = fixtures::reference_config();
  const NeuronSpec spec = fixtures::reference_neuron();
  const auto vectors = io::reference_vectors();
  const auto rows = io::simulate(c, &spec, vectors, TlModel::proposed());
  REQUIRE(rows.size() == 16);
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(rows[i].tl.output == fixtures::embedded().table4[i].prop_out);
  const auto csv = io::parse_csv(io::format_sim_csv(rows));
  REQUIRE(csv.size() == 17);
  CHECK(csv[0][2] == "Con_p_fF");
  // Re-parsed values agree with the in-memory ones at the printed resolution.
  CHECK(std::abs(std::stod(csv[10][7]) - rows[9].mv.differential() * 1e3) <= 5e-4);
}

TEST_CASE("energy CSV with published energies") {
  const AcnConfig c = fixtures::reference_config();
  const auto p = calibrate_energy(fixtures::embedded().table5, reference_power_clock());
  std::vector<io::EnergyRow> rows;
  for (const auto &v : io::reference_vectors())
    rows.push_back({v.name, v.x,
                    total_energy(c, v.x, reference_power_clock(), p, TlModel::proposed())});
  io::apply_fixture_energies(rows, fixtures::embedded().table5);
  CHECK(rows[1].from_fixture);
  CHECK(rows[1].energy.savings_pct == doctest::Approx(94.9).epsilon(0.001));
  const auto csv = io::parse_csv(io::format_energy_csv(rows));
  CHECK(csv[0][9] == "savings_pct");
  CHECK(std::abs(std::stod(csv[2][9]) - 94.9) <= 0.1);
}

TEST_CASE("shipped offset table matches the embedded one") {
  const auto text = io::read_file(std::string(ACN_DATA_DIR) + "/offset_tables.csv");
  const auto rows = io::parse_offsets(text);
  const auto &embedded = fixtures::embedded().offsets;
  REQUIRE(rows.size() == embedded.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].design == embedded[i].design);
    CHECK(rows[i].corner == embedded[i].corner);
    CHECK(rows[i].temp_c == embedded[i].temp_c);
    CHECK(rows[i].direction == embedded[i].direction);
    CHECK(rows[i].offset_mv == embedded[i].offset_mv);
  }
  CHECK(io::format_offsets(rows) == text);
}

TEST_CASE("shipped energy table calibrates like the embedded one") {
  const auto rows = io::parse_energy_table(
      io::read_file(std::string(ACN_DATA_DIR) + "/energy_table.csv"));
  const auto a = calibrate_energy(rows, reference_power_clock());
  const auto b = calibrate_energy(fixtures::embedded().table5, reference_power_clock());
  CHECK(a.r_syn == b.r_syn);
  CHECK(a.ccn_overhead == b.ccn_overhead);
}

TEST_CASE("Monte Carlo JSON is stable") {
  McSummary s;
  s.n = 10;
  s.mean = 1.5;
  s.skewness = 0.25;
  s.qq_corr = 0.99;
  s.classified_normal = true;
  io::McReport r{s, 42, McTarget::Ccn, Sampler::Pseudorandom, "TV4"};
  const std::string j = io::format_mc_json(r);
  CHECK(j == io::format_mc_json(r));
  CHECK(j.find("\"target\": \"ccn\"") != std::string::npos);
  CHECK(j.find("\"classified_normal\": true") != std::string::npos);
}

TEST_CASE("atomic writes replace the file") {
  const auto path = (std::filesystem::temp_directory_path() / "acn_io_test.txt").string();
  io::write_file_atomic(path, "one");
  io::write_file_atomic(path, "two");
  CHECK(io::read_file(path) == "two");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::read_file(path), Error);
}

TEST_CASE("every fixture renders") {
  for (const auto &name : io::fixture_names())
    CHECK_FALSE(io::format_fixture(name).empty());
  CHECK_THROWS_AS(io::format_fixture("table8"), Error);
}
