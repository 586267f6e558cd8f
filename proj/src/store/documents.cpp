// SPDX-License-Identifier: Apache-2.0
#include "ccarbon/store/documents.hpp"

#include <unordered_set>

namespace ccarbon::store {

const EmissionFactor* FactorSet::find(const std::string& id) const {
    for (const auto& f : factors)
        if (f.id == id) return &f;
    return nullptr;
}

const GridIntensity* GridTable::find(const std::string& label) const {
    for (const auto& g : entries)
        if (g.label == label) return &g;
    return nullptr;
}

GridIntensity GridTable::at(const std::string& label) const {
    if (const auto* g = find(label)) return *g;
    throw ValidationError("grid: unknown label \"" + label + "\"");
}

void validate(const FactorSet& fs) {
    if (fs.name.empty())
        throw ValidationError("factor set: name must not be empty");
    std::unordered_set<std::string> ids;
    for (const auto& f : fs.factors) {
        if (f.id.empty())
            throw ValidationError("factor set \"" + fs.name + "\": factor id must not be empty");
        if (!ids.insert(f.id).second)
            throw ValidationError("factor set \"" + fs.name + "\": duplicate factor id \"" + f.id + "\"");
        ccarbon::validate(f);
    }
}

void validate(const GridTable& gt) {
    std::unordered_set<std::string> labels;
    for (const auto& g : gt.entries) {
        if (g.label.empty())
            throw ValidationError("grid table: label must not be empty");
        if (!labels.insert(g.label).second)
            throw ValidationError("grid table: duplicate label \"" + g.label + "\"");
        ccarbon::validate(g);
    }
}

void validate(const ProfileDocument& d) {
    if (d.schema_version != kSchemaVersion)
        throw ValidationError("schema_version: unsupported version " +
                              std::to_string(d.schema_version) + " (supported: " +
                              std::to_string(kSchemaVersion) + ")");
    if (d.factor_set.empty())
        throw ValidationError("factor_set: must not be empty");
    if (d.system.system_name.empty())
        throw ValidationError("system_name: must not be empty");
    ccarbon::validate(d.system);
    ccarbon::validate(d.profile);
    ccarbon::validate(d.default_lifetime);
}

}  // namespace ccarbon::store
