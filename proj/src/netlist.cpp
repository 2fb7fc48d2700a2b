/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/netlist.hpp"

#include <cstdio>

namespace acn {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

char tree_tag(Tree t) { return t == Tree::Positive ? 'P' : 'N'; }

std::string canonical(const AcnConfig &c) {
  std::string s = "n=" + std::to_string(c.n_inputs()) + ";vmax=" + num(c.v_max());
  for (const auto &syn : c.synapses())
    s += ";s" + std::to_string(syn.index) + tree_tag(syn.tree) + "=" + num(syn.cap);
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    const TreeParams &p = c.tree(t);
    s += std::string(";") + tree_tag(t) + ":" + num(p.bias_cap) + "," +
         num(p.ballast_cap) + "," + num(p.parasitic_cap) + "," +
         num(p.bias_voltage);
  }
  return s;
}

} // namespace

std::uint64_t config_hash(const AcnConfig &config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string export_netlist(const AcnConfig &config, const PowerClock &pc) {
  pc.validate();
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(config_hash(config)));

  const double f = operating_frequency(pc, 0.0);
  std::string s;
  s += "* ACN behavioural netlist\n";
  s += std::string("* config-hash fnv1a64:") + hash + "\n";
  s += "* inputs " + std::to_string(config.n_inputs()) + ", synapses " +
       std::to_string(config.synapses().size()) + "\n";
  s += "* capacitances in fF, clock frequency unloaded\n";

  for (const auto &syn : config.synapses()) {
    const std::string i = std::to_string(syn.index);
    const char t = tree_tag(syn.tree);
    s += "C" + i + " vm" + t + " s" + t + i + " " + num(syn.cap) + "f\n";
  }
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    const TreeParams &p = config.tree(t);
    const char tag = tree_tag(t);
    s += std::string("CB") + tag + " vm" + tag + " pc " + num(p.bias_cap) + "f\n";
  }
  for (Tree t : {Tree::Positive, Tree::Negative}) {
    const TreeParams &p = config.tree(t);
    const char tag = tree_tag(t);
    s += std::string("CD") + tag + " vm" + tag + " 0 " +
         num(p.ballast_cap + p.parasitic_cap) + "f\n";
  }
  for (const auto &syn : config.synapses()) {
    const std::string i = std::to_string(syn.index);
    const std::string node = std::string("s") + tree_tag(syn.tree) + i;
    s += "SH" + i + " " + node + " pc x" + i + " 0 swon\n";
    s += "SL" + i + " " + node + " 0 x" + i + " 0 swoff\n";
  }
  s += "VPC pc 0 SIN(" + num(config.v_max() / 2) + " " +
       num(config.v_max() / 2) + " " + num(f) + ")\n";
  s += ".model swon sw(vt=0.5 ron=1 roff=1e12)\n";
  s += ".model swoff sw(vt=0.5 ron=1e12 roff=1)\n";
  s += ".end\n";
  return s;
}

} // namespace acn
