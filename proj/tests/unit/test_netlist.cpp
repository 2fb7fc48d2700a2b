/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <sstream>

#include "acn/fixtures.hpp"
#include "acn/netlist.hpp"

using namespace acn;

namespace {

int count_prefix(const std::string &text, const std::string &prefix) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0)
      ++n;
  return n;
}

} // namespace

TEST_CASE("reference netlist has sixteen capacitors") {
  const std::string net = export_netlist(fixtures::reference_config(), PowerClock{});
  CHECK(count_prefix(net, "C") == 16);
  CHECK(count_prefix(net, "SH") == 12);
  CHECK(count_prefix(net, "SL") == 12);
  CHECK(count_prefix(net, "VPC ") == 1);
  CHECK(net.rfind("* ", 0) == 0);
  CHECK(net.find("config-hash fnv1a64:") != std::string::npos);
  CHECK(net.find("SIN(0.9 0.9 1.00658e+06)") != std::string::npos);
}

TEST_CASE("netlist output is deterministic and hash-sensitive") {
  const AcnConfig c = fixtures::reference_config();
  CHECK(export_netlist(c, PowerClock{}) == export_netlist(c, PowerClock{}));
  const AcnConfig bumped = c.transformed([](CapRole role, Tree, double v) {
    return role == CapRole::Bias ? v + 1.0 : v;
  });
  CHECK(config_hash(c) != config_hash(bumped));
}

TEST_CASE("empty negative tree keeps its bias and ballast") {
  const AcnConfig c(2, {{0, Tree::Positive, 100}, {1, Tree::Positive, 50}},
                    {35, 200, 0, 0}, {35, 300, 0, 0}, 1.8);
  const std::string net = export_netlist(c, PowerClock{});
  CHECK(net.find("vmN sN") == std::string::npos);
  CHECK(count_prefix(net, "CBN vmN pc") == 1);
  CHECK(count_prefix(net, "CDN vmN 0") == 1);
}
