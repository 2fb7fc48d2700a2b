/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acn {

/// Abstract binary neuron: y = [sum_i w_i x_i >= bias].
///
/// Weights are kept in input-index order. Zero weights are allowed and belong
/// to neither the excitatory nor the inhibitory set.
class NeuronSpec {
public:
  NeuronSpec(std::vector<double> weights, double bias);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_.at(i); }
  double bias() const noexcept { return bias_; }

  /// Sum of absolute weights (w_T).
  double weight_sum() const noexcept { return weight_sum_; }

  std::vector<std::size_t> excitatory() const;
  std::vector<std::size_t> inhibitory() const;

private:
  std::vector<double> weights_;
  double bias_;
  double weight_sum_;
};

/// Ordered binary input x_0..x_{N-1}. Text form is written left to right,
/// leftmost character = x_0, optionally grouped with underscores.
class InputVector {
public:
  InputVector() = default;
  explicit InputVector(std::vector<std::uint8_t> bits);

  static InputVector parse(std::string_view text, std::size_t n);
  static InputVector zeros(std::size_t n);
  static InputVector ones(std::size_t n);
  /// Bit i of `mask` becomes x_i.
  static InputVector from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  InputVector flipped(std::size_t i) const;

  /// Grouped by four with underscores, e.g. "0001_1010_0000".
  std::string to_string() const;

  friend bool operator==(const InputVector &, const InputVector &) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Technology constants. Voltages in V, capacitances in fF.
struct TechProfile {
  double v_dd = 1.8;
  double v_max = 1.8;
  double v_cut = 1.3;
  double v_thp = 0.5;
  double c_min = 35.0;
  double cap_grid = 1.0;
  double c_parasitic = 30.0; ///< per membrane node, in parallel with C_d

  void validate() const;

  /// The 0.18 um configuration used for the 12-input reference neuron, with
  /// the parasitic set to zero (the reference table predates extraction).
  static TechProfile reference();
};

/// sum_i w_i x_i - bias. Non-negative margin means the neuron fires.
double software_margin(const NeuronSpec &spec, const InputVector &x);

int eval_software_neuron(const NeuronSpec &spec, const InputVector &x);

InputVector parse_input_vector(std::string_view text, std::size_t n);

} // namespace acn
