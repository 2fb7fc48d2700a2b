/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/core_model.hpp"

#include <cmath>
#include <sstream>

#include "acn/error.hpp"

namespace acn {

NeuronSpec::NeuronSpec(std::vector<double> weights, double bias)
    : weights_(std::move(weights)), bias_(bias), weight_sum_(0.0) {
  if (weights_.empty())
    fail(ErrorCode::Invalid, "neuron needs at least one weight");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]))
      fail(ErrorCode::Invalid,
           "weight " + std::to_string(i) + " is not finite");
    weight_sum_ += std::abs(weights_[i]);
  }
  if (!std::isfinite(bias_))
    fail(ErrorCode::Invalid, "bias is not finite");
  if (!(weight_sum_ > 0.0))
    fail(ErrorCode::Invalid, "sum of absolute weights is zero");
}

std::vector<std::size_t> NeuronSpec::excitatory() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] > 0.0)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> NeuronSpec::inhibitory() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] < 0.0)
      out.push_back(i);
  return out;
}

InputVector::InputVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] > 1)
      fail(ErrorCode::Parse,
           "input bit " + std::to_string(i) + " is not 0 or 1");
}

InputVector InputVector::parse(std::string_view text, std::size_t n) {
  std::vector<std::uint8_t> bits;
  bits.reserve(n);
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '_' || c == ' ' || c == '\t' || c == '\r' || c == '\n')
      continue;
    if (c != '0' && c != '1') {
      std::ostringstream msg;
      msg << "unexpected character '" << c << "' at position " << pos
          << " in input vector \"" << text << '"';
      fail(ErrorCode::Parse, msg.str());
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (bits.size() != n) {
    std::ostringstream msg;
    msg << "input vector \"" << text << "\" has " << bits.size()
        << " bits, expected " << n;
    fail(ErrorCode::Dimension, msg.str());
  }
  return InputVector(std::move(bits));
}

InputVector InputVector::zeros(std::size_t n) {
  return InputVector(std::vector<std::uint8_t>(n, 0));
}

InputVector InputVector::ones(std::size_t n) {
  return InputVector(std::vector<std::uint8_t>(n, 1));
}

InputVector InputVector::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64)
    fail(ErrorCode::Range, "mask form supports at most 64 inputs");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i)
    bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return InputVector(std::move(bits));
}

InputVector InputVector::flipped(std::size_t i) const {
  InputVector out = *this;
  out.bits_.at(i) ^= 1U;
  return out;
}

std::string InputVector::to_string() const {
  std::string out;
  out.reserve(bits_.size() + bits_.size() / 4);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i > 0 && i % 4 == 0)
      out.push_back('_');
    out.push_back(bits_[i] ? '1' : '0');
  }
  return out;
}

void TechProfile::validate() const {
  if (!(v_dd > 0.0) || !(v_max > 0.0))
    fail(ErrorCode::Invalid, "supply and power-clock peak must be positive");
  if (!(v_cut > 0.0) || v_cut > v_dd)
    fail(ErrorCode::Invalid, "V_cut must lie in (0, V_DD]");
  if (std::abs(v_cut - (v_dd - std::abs(v_thp))) > 0.1 + 1e-12)
    fail(ErrorCode::Invalid, "V_cut must be within 0.1 V of V_DD - |V_thp|");
  if (!(c_min > 0.0))
    fail(ErrorCode::Invalid, "C_min must be positive");
  if (!(cap_grid > 0.0))
    fail(ErrorCode::Invalid, "capacitor grid must be positive");
  if (!(c_parasitic >= 0.0))
    fail(ErrorCode::Invalid, "parasitic capacitance must be non-negative");
}

TechProfile TechProfile::reference() {
  TechProfile t;
  t.c_parasitic = 0.0;
  return t;
}

double software_margin(const NeuronSpec &spec, const InputVector &x) {
  if (x.size() != spec.size())
    fail(ErrorCode::Dimension, "input vector has " + std::to_string(x.size()) +
                                   " bits, neuron has " +
                                   std::to_string(spec.size()) + " inputs");
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (x[i])
      sum += spec.weight(i);
  return sum - spec.bias();
}

int eval_software_neuron(const NeuronSpec &spec, const InputVector &x) {
  return software_margin(spec, x) >= 0.0 ? 1 : 0;
}

InputVector parse_input_vector(std::string_view text, std::size_t n) {
  return InputVector::parse(text, n);
}

} // namespace acn
