/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acn/core_model.hpp"

namespace acn {

enum class Tree { Positive, Negative };

std::string_view to_string(Tree tree);

enum class CapRole { Synapse, Bias, Ballast };

struct Synapse {
  std::size_t index; ///< input index i
  Tree tree;
  double cap; ///< fF
};

/// Per-tree auxiliary elements. All capacitances in fF.
struct TreeParams {
  double bias_cap = 0.0;
  double ballast_cap = 0.0;
  double parasitic_cap = 0.0; ///< membrane-node parasitic, parallel to C_d
  double bias_voltage = 0.0;  ///< V_B in volts
};

/// Physical dual-tree neuron.
///
/// The structural invariants (unique in-range indices, positive synapse and
/// bias capacitors, non-negative ballast) are enforced on construction.
/// Technology-dependent limits (C_min, V_cut swing) are checked separately by
/// check_config() because perturbed Monte Carlo instances deliberately leave
/// the quantization grid.
class AcnConfig {
public:
  AcnConfig(std::size_t n_inputs, std::vector<Synapse> synapses,
            TreeParams positive, TreeParams negative, double v_max,
            double unit_cap = 0.0);

  std::size_t n_inputs() const noexcept { return n_inputs_; }
  /// Sorted by input index.
  std::span<const Synapse> synapses() const noexcept { return synapses_; }
  const TreeParams &tree(Tree t) const noexcept {
    return t == Tree::Positive ? positive_ : negative_;
  }
  double v_max() const noexcept { return v_max_; }
  /// fF per unit weight (k = C_T / w_T); zero when the config was not
  /// produced by the mapper.
  double unit_cap() const noexcept { return unit_cap_; }

  /// C_T: sum of synapse capacitors on a tree.
  double synapse_total(Tree t) const;
  /// C_A = C_T + C_b + C_d + parasitic.
  double total(Tree t) const;
  std::size_t synapse_count(Tree t) const;

  const Synapse *find(std::size_t index) const;

  /// Copy with every capacitor replaced by f(role, tree, value). Parasitics
  /// are left untouched.
  template <class F> AcnConfig transformed(F &&f) const {
    std::vector<Synapse> syn = synapses_;
    for (auto &s : syn)
      s.cap = f(CapRole::Synapse, s.tree, s.cap);
    TreeParams p = positive_, n = negative_;
    p.bias_cap = f(CapRole::Bias, Tree::Positive, p.bias_cap);
    n.bias_cap = f(CapRole::Bias, Tree::Negative, n.bias_cap);
    p.ballast_cap = f(CapRole::Ballast, Tree::Positive, p.ballast_cap);
    n.ballast_cap = f(CapRole::Ballast, Tree::Negative, n.ballast_cap);
    return AcnConfig(n_inputs_, std::move(syn), p, n, v_max_, unit_cap_);
  }

private:
  std::size_t n_inputs_;
  std::vector<Synapse> synapses_;
  TreeParams positive_;
  TreeParams negative_;
  double v_max_;
  double unit_cap_;
};

/// Nearest multiple of the capacitor grid, half-grid ties rounding up.
/// Synapse and bias roles must land at or above C_min; ballast may be zero.
double quantize_capacitance(double value, const TechProfile &tech,
                            CapRole role = CapRole::Synapse);

struct Violation {
  enum class Kind { BelowMinimum, SwingAboveCut, NegativeBallast, Unbalanced };

  Kind kind;
  std::optional<std::size_t> index; ///< input index for BelowMinimum
  std::optional<Tree> tree;
  double value;  ///< offending quantity (fF or V)
  double limit;  ///< bound it violated
  double margin; ///< value - limit, signed so that negative = infeasible

  std::string describe() const;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

FeasibilityReport check_feasibility(const NeuronSpec &spec,
                                    const TechProfile &tech,
                                    double total_synapse_cap);

/// Technology limits of an existing configuration (C_min, balance, swing).
FeasibilityReport check_config(const AcnConfig &config,
                               const TechProfile &tech);

/// Proportional weight-to-capacitance compilation with bias synthesis and
/// ballast balancing. Throws Error(Infeasible) carrying the report text.
AcnConfig map_weights(const NeuronSpec &spec, const TechProfile &tech,
                      double total_synapse_cap);

/// Largest software margin (in weight units) that quantization can flip:
/// N * grid / k.
double quantization_margin(const AcnConfig &config, const TechProfile &tech);

} // namespace acn
