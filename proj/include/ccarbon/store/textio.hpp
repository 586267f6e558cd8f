// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ccarbon/store/documents.hpp"

namespace ccarbon::store {

// Profile and factor documents use a line-oriented key-value format:
//
//   # comment
//   schema_version = 1
//   system_name = Some server
//   [component]
//   name = CPU
//   class = logic-ic
//   area_cm2 = 8.12
//   count = 1
//   factor = logic-cmos-2023
//
// Top-level keys come first; each `[section]` header starts a new list entry
// owning the keys that follow it. Values are single-line free text or numbers;
// numbers round-trip at full precision. Unknown keys, duplicate keys, unknown
// sections and malformed numbers are reported with their line number.
//
// Grid tables are CSV with header `label,kg_co2e_per_kwh`, UTF-8, LF endings.

/// Parses a factor-set document.
FactorSet parse_factor_set(const std::string& text);

/// Normalized serialization; parse_factor_set(serialize_factor_set(f)) == f.
std::string serialize_factor_set(const FactorSet& fs);

/// Parses a profile document, resolving component factor ids against
/// `factors`. The result is fully validated.
ProfileDocument parse_profile(const std::string& text, const FactorSet& factors);

/// Normalized serialization; parse_profile(serialize_profile(d), fs) == d for
/// the factor set d was parsed against. Numeric fields keep full precision.
std::string serialize_profile(const ProfileDocument& d);

/// Parses a grid-intensity CSV table. Duplicate labels, negative values and
/// malformed rows are line-numbered errors.
GridTable parse_grid_table(const std::string& text);

std::string serialize_grid_table(const GridTable& gt);

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

}  // namespace ccarbon::store
