// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Scenario-file parsing. The format is INI-style key/value text with two
// sections and unit-tagged values, e.g.:
//
//   [geometry]
//   fc = 30 GHz          # carrier; alternatively lambda = 1 cm
//   Mx = 257             # odd element counts
//   My = 257
//   dr = lambda/4        # element pitch: lambda/<n>, <x> lambda, or a length
//   Le = 0.8 dr          # element edge: <x> dr or a length
//   F = 1.0              # optional pattern factor (default 1)
//   P = 30 dBm           # data transmit power (dBm, W or mW)
//   N0 = -115 dBm        # receiver noise power
//
//   [scenario]
//   name = rate_vs_pilot_power
//   d0 = 200 m
//   realizations = 100
//   seed = 1
//   estimators = proposed, grid, hierarchical
//   nlos_paths = 4       # optional (default 0)
//   nlos_gap_db = 20     # optional (default 20)
//   pilot_power = 20 dBm # fixed value when not swept (default 20 dBm)
//   pilot_budget = 23    # fixed value when not swept (default 23)
//   delta = 1e-6         # optional convergence threshold
//   k_max = 4            # optional iteration cap
//   sweep = pilot_power_dbm   # or pilot_count | element_count | nlos_gap_db
//   sweep_values = -10, -5, 0, 5, 10, 15, 20
//
// Lengths accept m/cm/mm, frequencies GHz/MHz/kHz/Hz, powers dBm/W/mW
// (dBm is converted to watts at parse time). Unknown keys are rejected.
// All errors carry the offending line number.

#pragma once

#include <optional>

#include "lisbt/experiments.hpp"

namespace lisbt {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse scenario text; errors are reported as "line N: ...".
Scenario parse_scenario_text(const std::string& text);

/// Read and parse a scenario file; errors are prefixed with the path.
Scenario parse_scenario_file(const std::string& path);

enum class ScalePreset { none, desk, paper };

/// Desk preset: 65x65 elements, 100 realizations. Paper preset: 257x257,
/// 1000. Element counts are left alone when the scenario sweeps them.
Scenario apply_scale(const Scenario& scn, ScalePreset scale);

struct RunConfig {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;      // overrides the scenario seed
    std::optional<int> realizations;        // overrides the realization count
    ScalePreset scale = ScalePreset::none;
};

} // namespace lisbt
