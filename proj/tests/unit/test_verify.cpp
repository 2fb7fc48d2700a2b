/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include "acn/error.hpp"
#include "acn/verify.hpp"

using namespace acn;

TEST_CASE("table filter keeps only the requested table") {
  VerifyOptions opt;
  opt.only = "table4";
  const auto r = run_verify(fixtures::embedded(), opt);
  CHECK(r.records.size() == 80);
  for (const auto &rec : r.records)
    CHECK(rec.table == "table4");
  CHECK(r.pass());
}

TEST_CASE("tampered capacitor fails the mapping check") {
  auto set = fixtures::embedded();
  set.table3.synapse_caps[0] += 10.0;
  VerifyOptions opt;
  opt.only = "table3";
  const auto r = run_verify(set, opt);
  CHECK_FALSE(r.pass());
  int failed = 0;
  for (const auto &rec : r.records)
    failed += rec.pass ? 0 : 1;
  CHECK(failed == 1);
  CHECK(run_verify(fixtures::embedded(), opt).pass());
}

TEST_CASE("override configuration replaces the published capacitors") {
  const AcnConfig c = fixtures::reference_config();
  const AcnConfig bumped = c.transformed([](CapRole role, Tree t, double v) {
    return role == CapRole::Ballast && t == Tree::Negative ? v + 20.0 : v;
  });
  VerifyOptions opt;
  opt.only = "table3";
  opt.table3_override = bumped;
  CHECK_FALSE(run_verify(fixtures::embedded(), opt).pass());
  opt.table3_override = c;
  CHECK(run_verify(fixtures::embedded(), opt).pass());
}

TEST_CASE("report rendering") {
  VerifyOptions opt;
  opt.only = "table6";
  const auto r = run_verify(fixtures::embedded(), opt);
  const std::string table = r.render_table();
  CHECK(table.find("criterion 6: PASS") != std::string::npos);
  CHECK(r.to_json().find("\"pass\": true") != std::string::npos);
  CHECK(r.criteria().size() == 1);
}

TEST_CASE("unknown table id") {
  VerifyOptions opt;
  opt.only = "table9";
  CHECK_THROWS_AS(run_verify(fixtures::embedded(), opt), Error);
}
