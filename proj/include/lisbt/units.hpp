// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#pragma once

#include <cmath>
#include <numbers>

namespace lisbt {

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double speed_of_light = 299792458.0; // m/s

/// dBm -> watt. 0 dBm = 1 mW.
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// watt -> dBm. Requires w > 0.
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// dB -> linear power ratio.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Wrap an angle into [0, 2*pi).
inline double wrap_two_pi(double x) {
    double r = std::fmod(x, two_pi);
    return r < 0.0 ? r + two_pi : r;
}

/// Wrap an angle difference into (-pi, pi].
inline double wrap_pi(double x) {
    double r = std::fmod(x, two_pi);
    if (r > std::numbers::pi) r -= two_pi;
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

/// sin(x)/x with the removable singularity at x = 0.
inline double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

/// Periodic array factor sin(m*x)/sin(x) for odd m, with the removable
/// singularities at x = q*pi evaluated by their limit m.
inline double dirichlet_ratio(double x, int m) {
    const double offset = x - std::numbers::pi * std::round(x / std::numbers::pi);
    if (std::abs(offset) < 1e-9) return static_cast<double>(m);
    return std::sin(m * x) / std::sin(x);
}

} // namespace lisbt
