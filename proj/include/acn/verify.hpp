/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acn/fixtures.hpp"
#include "acn/mapper.hpp"

namespace acn {

struct CheckRecord {
  std::string id;       ///< e.g. "table4.TV10.proposed"
  std::string table;    ///< fixture table id, e.g. "table4"
  int criterion = 0;    ///< acceptance criterion number
  std::string expected;
  std::string actual;
  std::string tolerance;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  bool pass() const;
  /// Pass/fail per criterion, in criterion order.
  std::vector<std::pair<int, bool>> criteria() const;
  /// Aligned plain-text table, one record per line plus a summary.
  std::string render_table() const;
  std::string to_json() const;
};

struct VerifyOptions {
  /// Table id filter ("table1".."table7", "appendix", "oracle", "mc");
  /// empty runs everything.
  std::string only;
  /// Replaces the published capacitor values before checking.
  std::optional<AcnConfig> table3_override;
  unsigned threads = 0;
};

/// Known table ids accepted by VerifyOptions::only.
const std::vector<std::string> &verify_table_ids();

/// Copy of `set` with the published capacitors taken from `config`.
fixtures::FixtureSet with_reference_caps(fixtures::FixtureSet set,
                                         const AcnConfig &config);

/// Runs the acceptance checks against a fixture set. Throws Error(Invalid)
/// for an unknown table id.
VerifyReport run_verify(const fixtures::FixtureSet &set,
                        const VerifyOptions &options = {});

} // namespace acn
