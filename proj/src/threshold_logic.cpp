/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "acn/threshold_logic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <tuple>

#include "acn/error.hpp"

namespace acn {

namespace {

constexpr double kMinTemp = -55.0;
constexpr double kMaxTemp = 125.0;

OffsetTable table_for(fixtures::TlDesign design) {
  std::vector<OffsetEntry> entries;
  for (const auto &r : fixtures::offsets_for(fixtures::embedded(), design))
    entries.push_back({r.corner, r.temp_c, r.direction, r.offset_mv});
  return OffsetTable(std::move(entries));
}

} // namespace

std::string_view to_string(TlVariant v) {
  switch (v) {
  case TlVariant::Ideal:
    return "ideal";
  case TlVariant::Proposed:
    return "proposed";
  case TlVariant::Conventional:
    return "conventional";
  }
  return "ideal";
}

TlVariant parse_tl_variant(std::string_view s) {
  std::string l(s);
  std::transform(l.begin(), l.end(), l.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (l == "ideal")
    return TlVariant::Ideal;
  if (l == "proposed")
    return TlVariant::Proposed;
  if (l == "conventional")
    return TlVariant::Conventional;
  fail(ErrorCode::Parse, "unknown threshold-logic variant '" + l + "'");
}

OffsetTable::OffsetTable(std::vector<OffsetEntry> entries)
    : entries_(std::move(entries)) {
  for (const auto &e : entries_)
    if (!std::isfinite(e.offset_mv) || !std::isfinite(e.temp_c))
      fail(ErrorCode::Invalid, "offset table entries must be finite");
  std::sort(entries_.begin(), entries_.end(),
            [](const OffsetEntry &a, const OffsetEntry &b) {
              return std::tuple(a.corner, a.direction, a.temp_c) <
                     std::tuple(b.corner, b.direction, b.temp_c);
            });
}

double OffsetTable::max_abs() const {
  double m = 0.0;
  for (const auto &e : entries_)
    m = std::max(m, std::abs(e.offset_mv));
  return m;
}

double OffsetTable::lookup(Corner corner, double temp_c,
                           Direction direction) const {
  if (!(temp_c >= kMinTemp && temp_c <= kMaxTemp))
    fail(ErrorCode::Range, "temperature " + std::to_string(temp_c) +
                               " C outside [-55, 125] C");
  const OffsetEntry *below = nullptr;
  const OffsetEntry *above = nullptr;
  for (const auto &e : entries_) {
    if (e.corner != corner || e.direction != direction)
      continue;
    if (e.temp_c == temp_c)
      return e.offset_mv;
    if (e.temp_c < temp_c && (!below || e.temp_c > below->temp_c))
      below = &e;
    if (e.temp_c > temp_c && (!above || e.temp_c < above->temp_c))
      above = &e;
  }
  if (!below || !above)
    fail(ErrorCode::Range, "no offset data brackets " +
                               std::to_string(temp_c) + " C for corner " +
                               std::string(fixtures::to_string(corner)));
  const double t = (temp_c - below->temp_c) / (above->temp_c - below->temp_c);
  return below->offset_mv + t * (above->offset_mv - below->offset_mv);
}

TlModel::TlModel(TlVariant variant, OffsetTable offsets, double threshold_mv,
                 double load_ff)
    : variant_(variant), offsets_(std::move(offsets)),
      threshold_mv_(threshold_mv), load_ff_(load_ff) {
  if (variant_ == TlVariant::Ideal && (threshold_mv_ != 0.0 || !offsets_.empty()))
    fail(ErrorCode::Invalid, "ideal threshold logic has no offsets");
  if (variant_ == TlVariant::Proposed && offsets_.max_abs() > 9.01)
    fail(ErrorCode::Invalid, "proposed offset table exceeds 9.01 mV");
  if (!std::isfinite(threshold_mv_))
    fail(ErrorCode::Invalid, "decision threshold must be finite");
  if (!(load_ff_ >= 0.0))
    fail(ErrorCode::Invalid, "threshold-logic load must be non-negative");
}

TlModel TlModel::ideal() { return TlModel(TlVariant::Ideal, {}, 0.0); }

TlModel TlModel::proposed() {
  return TlModel(TlVariant::Proposed, table_for(fixtures::TlDesign::Proposed),
                 kProposedThresholdMv);
}

TlModel TlModel::conventional() {
  return TlModel(TlVariant::Conventional,
                 table_for(fixtures::TlDesign::Conventional),
                 kConventionalThresholdMv);
}

TlModel TlModel::make(TlVariant variant) {
  switch (variant) {
  case TlVariant::Ideal:
    return ideal();
  case TlVariant::Proposed:
    return proposed();
  case TlVariant::Conventional:
    return conventional();
  }
  return ideal();
}

TlModel TlModel::with_threshold(double threshold_mv) const {
  return TlModel(variant_, offsets_, threshold_mv, load_ff_);
}

TlModel TlModel::with_load(double load_ff) const {
  return TlModel(variant_, offsets_, threshold_mv_, load_ff);
}

double TlModel::threshold_at(const OperatingCondition &cond) const {
  if (variant_ == TlVariant::Ideal)
    return 0.0;
  if (offsets_.empty())
    return threshold_mv_;
  return threshold_mv_ +
         offsets_.lookup(cond.corner, cond.temp_c, Direction::Rising) -
         offsets_.lookup(Corner::TT, 27.0, Direction::Rising);
}

double offset_lookup(const TlModel &model, Corner corner, double temp_c,
                     Direction direction) {
  if (model.offsets().empty())
    return 0.0;
  return model.offsets().lookup(corner, temp_c, direction);
}

TlDecision tl_decide(const TlModel &model, double vp_mv, double vm_mv,
                     const OperatingCondition &cond, double v_dd) {
  const double vdd_mv = v_dd * 1000.0;
  auto in_range = [vdd_mv](double v) { return v >= 0.0 && v <= vdd_mv; };
  if (!in_range(vp_mv) || !in_range(vm_mv))
    fail(ErrorCode::Range, "membrane voltages must lie in [0, V_DD]");
  TlDecision d;
  d.margin_mv = vp_mv - vm_mv;
  d.offset_used_mv = model.threshold_at(cond);
  d.output = d.margin_mv >= d.offset_used_mv ? 1 : 0;
  return d;
}

double tl_energy(const TlModel &model, double v_dd) {
  if (!(v_dd > 0.0))
    fail(ErrorCode::Range, "supply voltage must be positive");
  return model.load_ff() * v_dd * v_dd;
}

} // namespace acn
