// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Monte-Carlo harness. A Scenario fixes the surface, the link budget and a
// one-dimensional sweep; run_scenario draws fresh user angles, scatter paths
// and noise per realization (seeded base_seed + realization index), runs each
// estimator in the roster, configures the surface from the estimates, and
// aggregates rate and direction-cosine MSE per sweep point.

#pragma once

#include <string>

#include "lisbt/estimator.hpp"

namespace lisbt {

/// Rate achieved with the LoS-only channel under the configured profile:
/// log2(1 + data_power*|H|^2 / noise_power). The estimation quality enters
/// through the profile; scatter paths are treated as estimation interference
/// only. Throws std::domain_error when the scene is noiseless.
double achieved_rate(const ChannelScene& scene, const PhaseProfile& profile,
                     double data_power);

/// Component-wise sample means of the squared direction-cosine errors.
std::pair<double, double> mse(const std::vector<std::pair<double, double>>& errors);

enum class SweepVariable { pilot_power_dbm, pilot_count, element_count, nlos_gap_db };
enum class EstimatorKind { proposed, grid, hierarchical };

std::string to_string(SweepVariable v);
std::string to_string(EstimatorKind k);

struct Scenario {
    std::string name;
    LisConfig cfg;
    double d0 = 200.0;
    int nlos_paths = 0;
    double nlos_gap_db = 20.0;
    double noise_power = 0.0;  // watts
    double data_power = 1.0;   // watts, transmit power during data transmission
    double pilot_power = 0.1;  // watts, fixed value when not the sweep variable
    int pilot_budget = 23;     // fixed value when not the sweep variable
    double delta = 1e-6;
    int k_max = 4;
    SweepVariable sweep = SweepVariable::pilot_power_dbm;
    std::vector<double> sweep_values{};
    std::vector<EstimatorKind> estimators{};
    int realizations = 100;
    std::uint64_t base_seed = 1;
};

struct MetricRow {
    double sweep_value = 0.0;
    std::string estimator;
    double mean_rate = 0.0; // bits/s/Hz
    double mse_alpha1 = 0.0;
    double mse_alpha2 = 0.0;
    double mean_pilots = 0.0;
    int realizations = 0; // realizations included in the means
    int exclusions = 0;   // realizations excluded by estimation failure
};

/// Runs every (sweep value, estimator) cell of the scenario. Realization r
/// uses seed base_seed + r for the user angles and the scene, so all cells
/// see the same channel draws. The proposed estimator switches to the
/// per-tile near-field pipeline automatically when d0 is inside the
/// Fraunhofer distance of the configured surface. Estimation failures are
/// counted per cell, not propagated.
std::vector<MetricRow> run_scenario(const Scenario& scn);

} // namespace lisbt
