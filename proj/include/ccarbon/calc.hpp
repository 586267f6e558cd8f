// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ccarbon/types.hpp"

namespace ccarbon {

/// Tolerance on the sum of power-mode time fractions.
inline constexpr double kFractionSumTol = 1e-9;

/// Embodied emissions of one BOM line: unit_area * count * factor.
double component_embodied_kg(const ComponentSpec& c);

/// Per-component breakdown plus exact total. An aggregate override yields a
/// single synthetic row carrying the override value.
EmbodiedBreakdown system_embodied(const SystemBom& bom);

/// Duty-cycle-weighted average power in watts.
double average_power_w(const PowerProfile& p);

/// Annual electricity consumption in kWh.
double annual_energy_kwh(const PowerProfile& p);

/// Emissions from consuming `energy_kwh` on grid `g`.
double use_phase_emissions_kg(double energy_kwh, const GridIntensity& g);

/// Annual share of embodied emissions over the service lifetime.
double amortize_embodied_kg(double embodied_kg, const LifetimePolicy& l);

/// Composes the operations above: annual total = use phase + amortized
/// embodied share.
LifecycleResult lifecycle_total(const SystemBom& bom, const PowerProfile& p,
                                const GridIntensity& g, const LifetimePolicy& l);

/// Same composition, but amortizes `amortized_base_kg` instead of the
/// breakdown total. The breakdown in the result stays exact.
LifecycleResult lifecycle_with_amortized_base(const SystemBom& bom, const PowerProfile& p,
                                              const GridIntensity& g, const LifetimePolicy& l,
                                              double amortized_base_kg);

struct TrainingFootprint {
    double energy_kwh = 0.0;
    double emissions_kg = 0.0;
};

/// Energy and emissions of a training run:
/// energy = device_hours * avg_device_power * overhead, emissions = energy * intensity.
TrainingFootprint training_run_footprint(const TrainingRunSpec& t);

/// Proportional share of a total for one tenant of a shared system.
double allocate_share_kg(double total_kg, double usage_share);

/// Emissions attributed to one functional unit:
/// annual total * usage share / annual units.
double per_functional_unit_kg(const LifecycleResult& r, const FunctionalUnitSpec& fu);

}  // namespace ccarbon
