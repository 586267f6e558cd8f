// SPDX-License-Identifier: Apache-2.0
#include "ccarbon/calc.hpp"

namespace ccarbon {

double component_embodied_kg(const ComponentSpec& c) {
    validate(c);
    return c.unit_area_cm2 * static_cast<double>(c.count) * c.factor.kg_per_cm2;
}

EmbodiedBreakdown system_embodied(const SystemBom& bom) {
    validate(bom);
    EmbodiedBreakdown out;
    if (bom.embodied_override_kg) {
        out.from_override = true;
        out.rows.push_back({"aggregate estimate", 0.0, 0.0, *bom.embodied_override_kg});
        out.total_kg_co2e = *bom.embodied_override_kg;
        return out;
    }
    out.rows.reserve(bom.components.size());
    for (const auto& c : bom.components) {
        const double kg = c.unit_area_cm2 * static_cast<double>(c.count) * c.factor.kg_per_cm2;
        out.rows.push_back({c.name, c.unit_area_cm2 * static_cast<double>(c.count),
                            c.factor.kg_per_cm2, kg});
        out.total_kg_co2e += kg;
    }
    return out;
}

double average_power_w(const PowerProfile& p) {
    validate(p);
    double avg = 0.0;
    for (const auto& m : p.modes) avg += m.power_w * m.time_fraction;
    return avg;
}

double annual_energy_kwh(const PowerProfile& p) {
    // hours/1000 first, so a single-mode profile at P watts over 8760 h
    // yields exactly P * 8.76 kWh.
    return average_power_w(p) * (p.hours_per_year / 1000.0);
}

double use_phase_emissions_kg(double energy_kwh, const GridIntensity& g) {
    validate(g);
    if (!(energy_kwh >= 0.0))
        throw ValidationError("use phase: energy_kwh must be >= 0");
    return energy_kwh * g.kg_per_kwh;
}

double amortize_embodied_kg(double embodied_kg, const LifetimePolicy& l) {
    validate(l);
    if (!(embodied_kg >= 0.0))
        throw ValidationError("amortization: embodied_kg must be >= 0");
    return embodied_kg / l.service_life_years;
}

LifecycleResult lifecycle_total(const SystemBom& bom, const PowerProfile& p,
                                const GridIntensity& g, const LifetimePolicy& l) {
    LifecycleResult r;
    r.embodied = system_embodied(bom);
    r.annual_energy_kwh = annual_energy_kwh(p);
    r.annual_use_phase_kg = use_phase_emissions_kg(r.annual_energy_kwh, g);
    r.amortized_base_kg = r.embodied.total_kg_co2e;
    r.annual_embodied_kg = amortize_embodied_kg(r.amortized_base_kg, l);
    r.annual_total_kg = r.annual_use_phase_kg + r.annual_embodied_kg;
    r.use_phase_share = r.annual_total_kg > 0.0 ? r.annual_use_phase_kg / r.annual_total_kg : 0.0;
    return r;
}

LifecycleResult lifecycle_with_amortized_base(const SystemBom& bom, const PowerProfile& p,
                                              const GridIntensity& g, const LifetimePolicy& l,
                                              double amortized_base_kg) {
    LifecycleResult r;
    r.embodied = system_embodied(bom);
    r.annual_energy_kwh = annual_energy_kwh(p);
    r.annual_use_phase_kg = use_phase_emissions_kg(r.annual_energy_kwh, g);
    r.amortized_base_kg = amortized_base_kg;
    r.annual_embodied_kg = amortize_embodied_kg(amortized_base_kg, l);
    r.annual_total_kg = r.annual_use_phase_kg + r.annual_embodied_kg;
    r.use_phase_share = r.annual_total_kg > 0.0 ? r.annual_use_phase_kg / r.annual_total_kg : 0.0;
    return r;
}

TrainingFootprint training_run_footprint(const TrainingRunSpec& t) {
    validate(t);
    TrainingFootprint f;
    f.energy_kwh = t.device_hours * t.avg_device_power_kw * t.overhead_multiplier;
    f.emissions_kg = f.energy_kwh * t.intensity.kg_per_kwh;
    return f;
}

double allocate_share_kg(double total_kg, double usage_share) {
    if (!(usage_share > 0.0) || usage_share > 1.0)
        throw ValidationError("allocation: usage_share must be in (0,1]");
    return total_kg * usage_share;
}

double per_functional_unit_kg(const LifecycleResult& r, const FunctionalUnitSpec& fu) {
    validate(fu);
    return r.annual_total_kg * fu.usage_share / fu.annual_units;
}

}  // namespace ccarbon
