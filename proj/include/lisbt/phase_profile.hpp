// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Per-element phase-shift configurations. A profile stores the phase beta of
// each element's unit-magnitude weight e^{j*beta} over a rectangular support
// block; elements outside the support are deactivated (zero amplitude), which
// is how single-active-element soundings and per-tile isolation are modelled.

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "lisbt/geometry.hpp"

namespace lisbt {

/// Parameters of the linear (steering) phase form: element (ix, iy) gets
/// beta = -mod(k0*dr*(ix*beta1 + iy*beta2) + beta0, 2*pi). beta1/beta2 play
/// the role of target direction cosines, beta0 is a common phase offset.
struct LinearSteering {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
};

struct PhaseProfile {
    /// phases(i, j) is the phase of element (ix0 + i, iy0 + j), stored
    /// wrapped to [0, 2*pi).
    Eigen::ArrayXXd phases;
    int ix0 = 0;
    int iy0 = 0;
    /// Set when the profile was expanded from the linear form.
    std::optional<LinearSteering> steering;

    int rows() const { return static_cast<int>(phases.rows()); }
    int cols() const { return static_cast<int>(phases.cols()); }

    bool full_surface(const LisConfig& cfg) const {
        return ix0 == -cfg.half_x() && iy0 == -cfg.half_y() &&
               rows() == cfg.mx && cols() == cfg.my;
    }

    double phase_at(int ix, int iy) const { return phases(ix - ix0, iy - iy0); }
};

/// Full-surface profile from an explicit mx x my phase matrix.
PhaseProfile full_profile(const LisConfig& cfg, Eigen::ArrayXXd phases);

/// Full-surface constant-phase profile.
PhaseProfile uniform_profile(const LisConfig& cfg, double phase = 0.0);

/// Full-surface linear steering profile,
/// beta(ix, iy) = -mod(k0*dr*(ix*beta1 + iy*beta2) + beta0, 2*pi).
/// beta1/beta2 outside [-1, 1] are accepted (estimator iterates may wander
/// out of the physical range before clamping).
PhaseProfile linear_phase_profile(const LisConfig& cfg, double beta0, double beta1,
                                  double beta2);

/// Phase-conjugate profile beta(ix, iy) = mod(k0 * d_{ix,iy}, 2*pi) built from
/// the exact element distances. Under this profile every element's
/// contribution arrives co-phased, so |H| attains its maximum over all
/// profiles and the channel is real-positive.
PhaseProfile optimal_phase_profile(const LisConfig& cfg, const UserGeometry& geom);

/// 1x1-support profile activating only element (ix, iy) with zero phase.
PhaseProfile single_element_profile(const LisConfig& cfg, int ix, int iy);

/// Centered m_x x m_y sub-aperture with linear steering (local indices
/// coincide with global ones). m_x, m_y must be odd and fit the grid.
PhaseProfile sub_aperture_profile(const LisConfig& cfg, int m_x, int m_y,
                                  const LinearSteering& steer);

/// Profile supported on one tile, with the linear form applied in tile-local
/// indices (relative to the tile's center element).
PhaseProfile tile_phase_profile(const LisConfig& cfg, const TileGrid& tiles, int tx,
                                int ty, const LinearSteering& steer);

/// Full-surface profile stitched from per-tile linear steerings, one triple
/// per tile in x-major order (flat index tx * n + ty).
PhaseProfile assemble_tile_profile(const LisConfig& cfg, const TileGrid& tiles,
                                   const std::vector<LinearSteering>& steering);

} // namespace lisbt
