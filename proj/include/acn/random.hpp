/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <cstdint>

// Counter-based sampling: every variate is a pure function of
// (seed, draw, attempt, slot), so draws can be generated in any order or in
// parallel and still reproduce the serial stream.
namespace acn::random {

using Philox4x32Counter = std::array<std::uint32_t, 4>;
using Philox4x32Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds.
Philox4x32Counter philox4x32(Philox4x32Counter ctr, Philox4x32Key key);

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform in the open interval (0, 1) from a 53-bit integer draw.
double to_unit_open(std::uint64_t bits53);

/// Standard-normal quantile. Acklam's rational approximation refined by one
/// Halley step on erfc; absolute error well below 1e-8 on (0, 1).
double inverse_normal_cdf(double p);

double normal_cdf(double x);

/// Normal and uniform variates for one (seed, draw, attempt) triple. Slot k
/// is independent of every other slot and of the access order.
class CounterStream {
public:
  CounterStream(std::uint64_t seed, std::uint64_t draw, std::uint32_t attempt);

  double uniform(std::uint32_t slot) const;
  double normal(std::uint32_t slot) const;

private:
  Philox4x32Key key_;
  std::uint32_t draw_lo_, draw_hi_, attempt_;
};

/// Base-2 Sobol sequence (Joe-Kuo direction numbers), random-access in Gray
/// code order: point i equals the i-th output of the sequential generator.
class Sobol {
public:
  static constexpr unsigned kMaxDimensions = 64;

  static std::uint32_t raw(std::uint64_t index, unsigned dim);
  static double point(std::uint64_t index, unsigned dim);
};

/// Sobol points with a seeded random digital shift per dimension, mapped
/// into (0, 1).
class ScrambledSobol {
public:
  explicit ScrambledSobol(std::uint64_t seed);

  double uniform(std::uint64_t index, unsigned dim) const;
  double normal(std::uint64_t index, unsigned dim) const;

private:
  std::array<std::uint32_t, Sobol::kMaxDimensions> shift_{};
};

} // namespace acn::random
