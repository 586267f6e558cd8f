// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccarbon/errors.hpp"

namespace ccarbon {

/// Component classes that emission factors apply to.
enum class ComponentClass { LogicIc, MemoryIc, OtherIc, Pcb };

std::string to_string(ComponentClass c);
ComponentClass component_class_from_string(const std::string& s);

/// Manufacturing emission factor for one component class, in kg CO2e per cm²
/// of die (ICs) or board (PCB) area.
struct EmissionFactor {
    std::string id;
    double kg_per_cm2 = 0.0;
    ComponentClass applies_to = ComponentClass::OtherIc;
    std::string source_note;

    bool operator==(const EmissionFactor&) const = default;
};

/// One line of a bill of materials: `count` identical parts of `unit_area_cm2`
/// each, manufactured under `factor`.
struct ComponentSpec {
    std::string name;
    ComponentClass cls = ComponentClass::OtherIc;
    double unit_area_cm2 = 0.0;
    long count = 1;
    EmissionFactor factor;

    bool operator==(const ComponentSpec&) const = default;
};

/// Bill of materials of a compute system. Either a component list or an
/// aggregate embodied estimate is given, never both and never neither
/// (some systems are only published as a single aggregate number).
struct SystemBom {
    std::string system_name;
    std::vector<ComponentSpec> components;
    std::optional<double> embodied_override_kg;

    bool operator==(const SystemBom&) const = default;
};

/// One operating mode: draw `power_w` for `time_fraction` of the time.
struct PowerMode {
    std::string name;
    double power_w = 0.0;
    double time_fraction = 0.0;

    bool operator==(const PowerMode&) const = default;
};

/// Use-phase power draw as a duty cycle over modes. Fractions must sum to 1.
struct PowerProfile {
    std::vector<PowerMode> modes;
    double hours_per_year = 8760.0;

    bool operator==(const PowerProfile&) const = default;
};

/// Carbon intensity of consumed electricity, kg CO2e per kWh.
struct GridIntensity {
    std::string label;
    double kg_per_kwh = 0.0;

    bool operator==(const GridIntensity&) const = default;
};

/// Service lifetime over which embodied emissions are amortized.
struct LifetimePolicy {
    double service_life_years = 0.0;

    bool operator==(const LifetimePolicy&) const = default;
};

/// One row of an embodied-emissions breakdown. `area_cm2` is the component's
/// total area (unit area times count); override rows carry zero area/factor.
struct EmbodiedRow {
    std::string name;
    double area_cm2 = 0.0;
    double factor_kg_per_cm2 = 0.0;
    double kg_co2e = 0.0;

    bool operator==(const EmbodiedRow&) const = default;
};

/// Embodied breakdown: per-component rows plus their full-precision sum.
struct EmbodiedBreakdown {
    std::vector<EmbodiedRow> rows;
    double total_kg_co2e = 0.0;
    bool from_override = false;

    bool operator==(const EmbodiedBreakdown&) const = default;
};

/// Full life-cycle result for one system under one grid and lifetime.
/// `amortized_base_kg` records the embodied value the annual share was
/// amortized from (normally the breakdown total; reproduction modes may
/// substitute a rounded value).
struct LifecycleResult {
    EmbodiedBreakdown embodied;
    double annual_energy_kwh = 0.0;
    double annual_use_phase_kg = 0.0;
    double amortized_base_kg = 0.0;
    double annual_embodied_kg = 0.0;
    double annual_total_kg = 0.0;
    double use_phase_share = 0.0;  // zero when annual_total_kg is zero
};

/// A training run: total device-hours at an average per-device power draw
/// (kW, including host overhead), an optional site-overhead multiplier, and
/// the grid the energy was drawn from. `compute_note` is free-form metadata
/// (FLOPs, utilization) that does not enter the math.
struct TrainingRunSpec {
    double device_hours = 0.0;
    double avg_device_power_kw = 0.0;
    double overhead_multiplier = 1.0;
    GridIntensity intensity;
    std::string compute_note;
};

/// Functional unit: `annual_units` of utility delivered per year by a service
/// holding `usage_share` of the physical system.
struct FunctionalUnitSpec {
    std::string unit_name;
    double annual_units = 0.0;
    double usage_share = 1.0;
};

// Strict validation: violations throw ValidationError naming the field.
// Nothing is clamped.
void validate(const EmissionFactor& f);
void validate(const ComponentSpec& c);
void validate(const SystemBom& bom);
void validate(const PowerMode& m);
void validate(const PowerProfile& p);
void validate(const GridIntensity& g);
void validate(const LifetimePolicy& l);
void validate(const TrainingRunSpec& t);
void validate(const FunctionalUnitSpec& fu);

}  // namespace ccarbon
