/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/random.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <numbers>
#include <vector>

#include "acn/error.hpp"

namespace acn::random {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53U;
constexpr std::uint32_t kM1 = 0xCD9E8D57U;
constexpr std::uint32_t kW0 = 0x9E3779B9U;
constexpr std::uint32_t kW1 = 0xBB67AE85U;

struct Primitive {
  std::uint32_t poly; // includes leading and trailing terms
  std::vector<std::uint32_t> m;
};

// Joe-Kuo (new-joe-kuo-6.21201) primitive polynomials and initial direction
// numbers for dimensions 1..63; dimension 0 is the van der Corput sequence.
const Primitive kPrimitives[] = {
    {3, {1}},
    {7, {1, 3}},
    {11, {1, 3, 1}},
    {13, {1, 1, 1}},
    {19, {1, 1, 3, 3}},
    {25, {1, 3, 5, 13}},
    {37, {1, 1, 5, 5, 17}},
    {41, {1, 1, 5, 5, 5}},
    {47, {1, 1, 7, 11, 19}},
    {55, {1, 1, 5, 1, 1}},
    {59, {1, 1, 1, 3, 11}},
    {61, {1, 3, 5, 5, 31}},
    {67, {1, 3, 3, 9, 7, 49}},
    {91, {1, 1, 1, 15, 21, 21}},
    {97, {1, 3, 1, 13, 27, 49}},
    {103, {1, 1, 1, 15, 7, 5}},
    {109, {1, 3, 1, 15, 13, 25}},
    {115, {1, 1, 5, 5, 19, 61}},
    {131, {1, 3, 7, 11, 23, 15, 103}},
    {137, {1, 3, 7, 13, 13, 15, 69}},
    {143, {1, 1, 3, 13, 7, 35, 63}},
    {145, {1, 3, 5, 9, 1, 25, 53}},
    {157, {1, 3, 1, 13, 9, 35, 107}},
    {167, {1, 3, 1, 5, 27, 61, 31}},
    {171, {1, 1, 5, 11, 19, 41, 61}},
    {185, {1, 3, 5, 3, 3, 13, 69}},
    {191, {1, 1, 7, 13, 1, 19, 1}},
    {193, {1, 3, 7, 5, 13, 19, 59}},
    {203, {1, 1, 3, 9, 25, 29, 41}},
    {211, {1, 3, 5, 13, 23, 1, 55}},
    {213, {1, 3, 7, 3, 13, 59, 17}},
    {229, {1, 3, 1, 3, 5, 53, 69}},
    {239, {1, 1, 5, 5, 23, 33, 13}},
    {241, {1, 1, 7, 7, 1, 61, 123}},
    {247, {1, 1, 7, 9, 13, 61, 49}},
    {253, {1, 3, 3, 5, 3, 55, 33}},
    {285, {1, 3, 1, 15, 31, 13, 49, 245}},
    {299, {1, 3, 5, 15, 31, 59, 63, 97}},
    {301, {1, 3, 1, 11, 11, 11, 77, 249}},
    {333, {1, 3, 1, 11, 27, 43, 71, 9}},
    {351, {1, 1, 7, 15, 21, 11, 81, 45}},
    {355, {1, 3, 7, 3, 25, 31, 65, 79}},
    {357, {1, 3, 1, 1, 19, 11, 3, 205}},
    {361, {1, 1, 5, 9, 19, 21, 29, 157}},
    {369, {1, 3, 7, 11, 1, 33, 89, 185}},
    {391, {1, 3, 3, 3, 15, 9, 79, 71}},
    {397, {1, 3, 7, 11, 15, 39, 119, 27}},
    {425, {1, 1, 3, 1, 11, 31, 97, 225}},
    {451, {1, 1, 1, 3, 23, 43, 57, 177}},
    {463, {1, 3, 7, 7, 17, 17, 37, 71}},
    {487, {1, 3, 1, 5, 27, 63, 123, 213}},
    {501, {1, 1, 3, 5, 11, 43, 53, 133}},
    {529, {1, 3, 5, 5, 29, 17, 47, 173, 479}},
    {539, {1, 3, 3, 11, 3, 1, 109, 9, 69}},
    {545, {1, 1, 1, 5, 17, 39, 23, 5, 343}},
    {557, {1, 3, 1, 5, 25, 15, 31, 103, 499}},
    {563, {1, 1, 1, 11, 11, 17, 63, 105, 183}},
    {601, {1, 1, 5, 11, 9, 29, 97, 231, 363}},
    {607, {1, 1, 5, 15, 19, 45, 41, 7, 383}},
    {617, {1, 3, 7, 7, 31, 19, 83, 137, 221}},
    {623, {1, 1, 1, 3, 23, 15, 111, 223, 83}},
    {631, {1, 1, 5, 13, 31, 15, 55, 25, 161}},
    {637, {1, 1, 3, 13, 25, 47, 39, 87, 257}},
};

using DirectionTable = std::array<std::array<std::uint32_t, 32>, Sobol::kMaxDimensions>;

DirectionTable build_directions() {
  DirectionTable v{};
  for (unsigned j = 0; j < 32; ++j)
    v[0][j] = 1U << (31 - j);
  for (unsigned d = 1; d < Sobol::kMaxDimensions; ++d) {
    const Primitive &p = kPrimitives[d - 1];
    const unsigned s = static_cast<unsigned>(std::bit_width(p.poly)) - 1;
    const std::uint32_t a = (p.poly >> 1) & ((1U << (s - 1)) - 1U);
    for (unsigned j = 0; j < 32; ++j) {
      if (j < s) {
        v[d][j] = p.m[j] << (31 - j);
        continue;
      }
      std::uint32_t x = v[d][j - s] ^ (v[d][j - s] >> s);
      for (unsigned k = 1; k < s; ++k)
        if ((a >> (s - 1 - k)) & 1U)
          x ^= v[d][j - k];
      v[d][j] = x;
    }
  }
  return v;
}

const DirectionTable &directions() {
  static const DirectionTable table = build_directions();
  return table;
}

} // namespace

Philox4x32Counter philox4x32(Philox4x32Counter ctr, Philox4x32Key key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double to_unit_open(std::uint64_t bits53) {
  return (static_cast<double>(bits53 & ((std::uint64_t{1} << 53) - 1)) + 0.5) *
         0x1.0p-53;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0)
      return -HUGE_VAL;
    if (p == 1.0)
      return HUGE_VAL;
    fail(ErrorCode::Range, "probability must lie in [0, 1]");
  }
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t draw,
                             std::uint32_t attempt)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      draw_lo_(static_cast<std::uint32_t>(draw)),
      draw_hi_(static_cast<std::uint32_t>(draw >> 32)), attempt_(attempt) {}

double CounterStream::uniform(std::uint32_t slot) const {
  const auto out = philox4x32({draw_lo_, draw_hi_, attempt_, slot}, key_);
  const std::uint64_t bits =
      (std::uint64_t{out[0]} << 21) ^ (std::uint64_t{out[1]} >> 11);
  return to_unit_open(bits);
}

double CounterStream::normal(std::uint32_t slot) const {
  return inverse_normal_cdf(uniform(slot));
}

std::uint32_t Sobol::raw(std::uint64_t index, unsigned dim) {
  if (dim >= kMaxDimensions)
    fail(ErrorCode::Range, "Sobol dimension " + std::to_string(dim) +
                               " exceeds the supported " +
                               std::to_string(kMaxDimensions));
  const auto &v = directions()[dim];
  std::uint64_t gray = index ^ (index >> 1);
  std::uint32_t x = 0;
  for (unsigned bit = 0; gray != 0 && bit < 32; ++bit, gray >>= 1)
    if (gray & 1U)
      x ^= v[bit];
  return x;
}

double Sobol::point(std::uint64_t index, unsigned dim) {
  return static_cast<double>(raw(index, dim)) * 0x1.0p-32;
}

ScrambledSobol::ScrambledSobol(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto &s : shift_) {
    state = splitmix64(state);
    s = static_cast<std::uint32_t>(state >> 32);
  }
}

double ScrambledSobol::uniform(std::uint64_t index, unsigned dim) const {
  const std::uint32_t x = Sobol::raw(index, dim) ^ shift_[dim];
  return (static_cast<double>(x) + 0.5) * 0x1.0p-32;
}

double ScrambledSobol::normal(std::uint64_t index, unsigned dim) const {
  return inverse_normal_cdf(uniform(index, dim));
}

} // namespace acn::random
