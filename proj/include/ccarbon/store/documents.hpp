// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ccarbon/types.hpp"

namespace ccarbon::store {

/// Supported document schema version. Unknown versions are rejected, never guessed.
inline constexpr int kSchemaVersion = 1;

/// A hardware profile on disk: system BOM, power profile, default lifetime,
/// the factor set its component factors resolve against, and provenance text.
struct ProfileDocument {
    int schema_version = kSchemaVersion;
    std::string factor_set;
    SystemBom system;
    PowerProfile profile;
    LifetimePolicy default_lifetime;
    std::string provenance;

    bool operator==(const ProfileDocument&) const = default;
};

/// A named, versioned set of emission factors. Factor ids are unique within a set.
struct FactorSet {
    std::string name;
    std::string vintage;
    std::vector<EmissionFactor> factors;

    [[nodiscard]] const EmissionFactor* find(const std::string& id) const;

    bool operator==(const FactorSet&) const = default;
};

/// Grid carbon intensities keyed by label. Labels are unique.
struct GridTable {
    std::vector<GridIntensity> entries;

    [[nodiscard]] const GridIntensity* find(const std::string& label) const;

    /// Lookup that throws ValidationError for unknown labels.
    [[nodiscard]] GridIntensity at(const std::string& label) const;

    bool operator==(const GridTable&) const = default;
};

void validate(const FactorSet& fs);
void validate(const GridTable& gt);
void validate(const ProfileDocument& d);

}  // namespace ccarbon::store
