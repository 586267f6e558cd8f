// SPDX-License-Identifier: Apache-2.0
#include "ccarbon/types.hpp"

#include <cmath>

#include "ccarbon/calc.hpp"

namespace ccarbon {

std::string to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::LogicIc: return "logic-ic";
        case ComponentClass::MemoryIc: return "memory-ic";
        case ComponentClass::OtherIc: return "other-ic";
        case ComponentClass::Pcb: return "pcb";
    }
    throw ValidationError("class: unknown component class");
}

ComponentClass component_class_from_string(const std::string& s) {
    if (s == "logic-ic") return ComponentClass::LogicIc;
    if (s == "memory-ic") return ComponentClass::MemoryIc;
    if (s == "other-ic") return ComponentClass::OtherIc;
    if (s == "pcb") return ComponentClass::Pcb;
    throw ValidationError("class: must be one of logic-ic, memory-ic, other-ic, pcb (got \"" + s + "\")");
}

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const EmissionFactor& f) {
    if (!finite(f.kg_per_cm2) || f.kg_per_cm2 <= 0.0)
        throw ValidationError("factor \"" + f.id + "\": kg_co2e_per_cm2 must be > 0");
}

void validate(const ComponentSpec& c) {
    if (!finite(c.unit_area_cm2) || c.unit_area_cm2 <= 0.0)
        throw ValidationError("component \"" + c.name + "\": area_cm2 must be > 0");
    if (c.count < 1)
        throw ValidationError("component \"" + c.name + "\": count must be >= 1");
    validate(c.factor);
    if (c.factor.applies_to != c.cls)
        throw ValidationError("component \"" + c.name + "\": factor \"" + c.factor.id +
                              "\" applies to " + to_string(c.factor.applies_to) +
                              ", component class is " + to_string(c.cls));
}

void validate(const SystemBom& bom) {
    const bool has_components = !bom.components.empty();
    const bool has_override = bom.embodied_override_kg.has_value();
    if (has_components == has_override)
        throw ValidationError("system \"" + bom.system_name +
                              "\": exactly one of components or embodied_override_kg must be present");
    if (has_override && (!finite(*bom.embodied_override_kg) || *bom.embodied_override_kg < 0.0))
        throw ValidationError("system \"" + bom.system_name + "\": embodied_override_kg must be >= 0");
    for (const auto& c : bom.components) validate(c);
}

void validate(const PowerMode& m) {
    if (!finite(m.power_w) || m.power_w < 0.0)
        throw ValidationError("mode \"" + m.name + "\": power_w must be >= 0");
    if (!finite(m.time_fraction) || m.time_fraction < 0.0 || m.time_fraction > 1.0)
        throw ValidationError("mode \"" + m.name + "\": time_fraction must be in [0,1]");
}

void validate(const PowerProfile& p) {
    if (p.modes.empty())
        throw ValidationError("profile: at least one power mode is required");
    if (!finite(p.hours_per_year) || p.hours_per_year <= 0.0)
        throw ValidationError("profile: hours_per_year must be > 0");
    double sum = 0.0;
    for (const auto& m : p.modes) {
        validate(m);
        sum += m.time_fraction;
    }
    if (std::abs(sum - 1.0) > kFractionSumTol)
        throw ValidationError("profile: mode time_fraction values must sum to 1 (got " +
                              std::to_string(sum) + ")");
}

void validate(const GridIntensity& g) {
    if (!finite(g.kg_per_kwh) || g.kg_per_kwh < 0.0)
        throw ValidationError("grid \"" + g.label + "\": kg_co2e_per_kwh must be >= 0");
}

void validate(const LifetimePolicy& l) {
    if (!finite(l.service_life_years) || l.service_life_years <= 0.0)
        throw ValidationError("lifetime: service_life_years must be > 0");
}

void validate(const TrainingRunSpec& t) {
    if (!finite(t.device_hours) || t.device_hours <= 0.0)
        throw ValidationError("training: device_hours must be > 0");
    if (!finite(t.avg_device_power_kw) || t.avg_device_power_kw <= 0.0)
        throw ValidationError("training: avg_device_power_kw must be > 0");
    if (!finite(t.overhead_multiplier) || t.overhead_multiplier < 1.0)
        throw ValidationError("training: overhead_multiplier must be >= 1");
    validate(t.intensity);
}

void validate(const FunctionalUnitSpec& fu) {
    if (!finite(fu.annual_units) || fu.annual_units <= 0.0)
        throw ValidationError("functional unit \"" + fu.unit_name + "\": annual_units must be > 0");
    if (!finite(fu.usage_share) || fu.usage_share <= 0.0 || fu.usage_share > 1.0)
        throw ValidationError("functional unit \"" + fu.unit_name + "\": usage_share must be in (0,1]");
}

}  // namespace ccarbon
