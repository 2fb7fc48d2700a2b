/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "acn/fixtures.hpp"

namespace acn {

using fixtures::Corner;
using fixtures::Direction;

enum class TlVariant { Ideal, Proposed, Conventional };

std::string_view to_string(TlVariant v);
TlVariant parse_tl_variant(std::string_view s);

struct OffsetEntry {
  Corner corner;
  double temp_c;
  Direction direction;
  double offset_mv;
};

/// Input-referred comparator offsets on a (corner, temperature, direction)
/// grid. Lookup interpolates linearly in temperature only.
class OffsetTable {
public:
  OffsetTable() = default;
  explicit OffsetTable(std::vector<OffsetEntry> entries);

  bool empty() const noexcept { return entries_.empty(); }
  std::span<const OffsetEntry> entries() const noexcept { return entries_; }
  double max_abs() const;
  double lookup(Corner corner, double temp_c, Direction direction) const;

private:
  std::vector<OffsetEntry> entries_; // sorted by (corner, direction, temp)
};

struct OperatingCondition {
  Corner corner = Corner::TT;
  double temp_c = 27.0;
};

/// Behavioural comparator + latch.
///
/// `threshold_mv` is the effective decision margin for a peak-sampled
/// comparison. It is calibrated rather than read from the offset table: the
/// table was measured with a slow differential ramp, not a sampled peak.
class TlModel {
public:
  static constexpr double kDefaultLoadFf = 100.0;
  static constexpr double kProposedThresholdMv = 5.0;
  static constexpr double kConventionalThresholdMv = 20.0;

  static TlModel ideal();
  static TlModel proposed();
  static TlModel conventional();
  static TlModel make(TlVariant variant);

  TlModel(TlVariant variant, OffsetTable offsets, double threshold_mv,
          double load_ff = kDefaultLoadFf);

  TlVariant variant() const noexcept { return variant_; }
  const OffsetTable &offsets() const noexcept { return offsets_; }
  double threshold_mv() const noexcept { return threshold_mv_; }
  double load_ff() const noexcept { return load_ff_; }

  TlModel with_threshold(double threshold_mv) const;
  TlModel with_load(double load_ff) const;

  /// Threshold at a process/temperature condition: the nominal threshold
  /// shifted by the rising-offset change relative to TT, 27 C.
  double threshold_at(const OperatingCondition &cond) const;

private:
  TlVariant variant_;
  OffsetTable offsets_;
  double threshold_mv_;
  double load_ff_;
};

double offset_lookup(const TlModel &model, Corner corner, double temp_c,
                     Direction direction);

struct TlDecision {
  int output = 0;
  double margin_mv = 0.0;      ///< v_md = v_m+ - v_m-
  double offset_used_mv = 0.0; ///< effective threshold applied
};

/// Membrane voltages in mV; both must lie in [0, V_DD].
TlDecision tl_decide(const TlModel &model, double vp_mv, double vm_mv,
                     const OperatingCondition &cond = {}, double v_dd = 1.8);

/// E_TL = C_TL V_DD^2, fJ.
double tl_energy(const TlModel &model, double v_dd);

} // namespace acn
