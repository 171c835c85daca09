// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Result serialization: one CSV per scenario (fixed column order, 9
// significant digits, fully rewritten per run) plus a JSON manifest echoing
// everything needed to reproduce the run byte-for-byte.

#pragma once

#include "lisbt/config.hpp"

namespace lisbt {

inline constexpr const char* version = "0.1.0";
inline constexpr const char* csv_header =
    "sweep,estimator,rate_bps_hz,mse_alpha1,mse_alpha2,pilots,realizations,exclusions";

/// Shortest-faithful %.9g rendering used for every floating-point CSV field.
std::string format_g9(double x);

std::string to_csv(const std::vector<MetricRow>& rows);

/// JSON echo of a fully-resolved scenario (after overrides and scaling).
std::string scenario_manifest(const Scenario& scn, ScalePreset scale);

/// Parse the scenario, apply overrides/scale, run it, and write
/// <out_dir>/<name>.csv and <out_dir>/<name>_manifest.json. The output
/// directory is created when missing. Returns the process exit status;
/// I/O failures are reported on stderr.
int run_sweep(const RunConfig& rc);

} // namespace lisbt
