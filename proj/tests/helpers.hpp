// SPDX-License-Identifier: Apache-2.0
//
// Shared test fixtures: the reference surface used throughout (30 GHz,
// quarter-wavelength pitch) and independent brute-force oracles that
// deliberately avoid the library's evaluation paths.

#pragma once

#include <complex>
#include <random>

#include "lisbt/estimator.hpp"

namespace test_support {

/// Reference radio constants at a configurable element count:
/// lambda = 1 cm, dr = lambda/4, Le = 0.8*dr, isotropic elements.
inline lisbt::LisConfig ref_cfg(int m = 257) {
    return lisbt::LisConfig(0.01, m, m, 0.0025, 0.002, 1.0);
}

inline lisbt::LisConfig ref_cfg(int mx, int my) {
    return lisbt::LisConfig(0.01, mx, my, 0.0025, 0.002, 1.0);
}

/// Euclidean element-user distance computed from raw Cartesian coordinates,
/// independent of the cosine-rule path under test.
inline double oracle_distance(const lisbt::LisConfig& cfg, const lisbt::UserGeometry& g,
                              int ix, int iy) {
    const double ux = g.d0 * std::sin(g.theta) * std::cos(g.phi);
    const double uy = g.d0 * std::sin(g.theta) * std::sin(g.phi);
    const double uz = g.d0 * std::cos(g.theta);
    const double ex = ix * cfg.dr;
    const double ey = iy * cfg.dr;
    return std::sqrt((ux - ex) * (ux - ex) + (uy - ey) * (uy - ey) + uz * uz);
}

/// Brute-force per-element channel sum over a full-surface profile, written
/// against oracle_distance with plain scalar loops.
inline std::complex<double> oracle_channel(const lisbt::LisConfig& cfg,
                                           const lisbt::UserGeometry& g,
                                           const lisbt::PhaseProfile& profile) {
    const double k0 = 2.0 * std::numbers::pi / cfg.wavelength;
    std::complex<double> sum = 0.0;
    for (int ix = -cfg.half_x(); ix <= cfg.half_x(); ++ix) {
        for (int iy = -cfg.half_y(); iy <= cfg.half_y(); ++iy) {
            const double d = oracle_distance(cfg, g, ix, iy);
            const double mag =
                cfg.wavelength * std::sqrt(cfg.pattern_factor) / (4.0 * std::numbers::pi * d);
            sum += std::polar(mag, profile.phase_at(ix, iy) - k0 * d);
        }
    }
    return sum;
}

/// Uniformly random user direction (theta, phi as the paper's experiments
/// draw them).
inline lisbt::UserGeometry random_geometry(double d0, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, lisbt::two_pi);
    return {d0, u_theta(rng), u_phi(rng)};
}

} // namespace test_support
