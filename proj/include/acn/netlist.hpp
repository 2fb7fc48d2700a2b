/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <string>

#include "acn/mapper.hpp"
#include "acn/tree_sim.hpp"

namespace acn {

/// 64-bit FNV-1a over the configuration's canonical text.
std::uint64_t config_hash(const AcnConfig &config);

/// Behavioural SPICE-style netlist of the neuron.
///
/// Nodes: pc (power clock), vmP/vmN (membrane nodes), 0 (ground) and one
/// control node xI per input. Each synapse capacitor sits between its
/// membrane node and a switch common node sP_I/sN_I; an ideal SPDT pair
/// connects that node to pc when x_I = 1 and to ground otherwise. Bias
/// capacitors tie the membrane nodes to pc, ballast (including parasitics)
/// to ground. The clock is a sine of amplitude V_max/2 around V_max/2 at the
/// unloaded operating frequency, so it swings 0..V_max.
std::string export_netlist(const AcnConfig &config, const PowerClock &pc);

} // namespace acn
