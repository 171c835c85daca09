// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Complex channel evaluation. exact_channel is the per-element ground truth
// every approximation is checked against; the far-field forms collapse the
// double sum into products of periodic array factors, and the near-field
// model superposes far-field tile channels.

#pragma once

#include <complex>
#include <vector>

#include "lisbt/geometry.hpp"
#include "lisbt/phase_profile.hpp"

namespace lisbt {

using Complex = std::complex<double>;

/// Free-space LoS coefficient of one element,
/// (lambda*sqrt(F)/(4*pi*d)) * e^{-j*k0*d}, d the exact element-user distance.
Complex los_element_channel(const LisConfig& cfg, const UserGeometry& geom, int ix,
                            int iy);

/// LoS channel under a phase profile: sum over the profile's support of
/// e^{j*beta} times the element coefficient. Elements outside the support do
/// not contribute.
Complex exact_channel(const LisConfig& cfg, const UserGeometry& geom,
                      const PhaseProfile& profile);

/// Received power pt * |H|^2 under the exact LoS channel.
double received_power(const LisConfig& cfg, const UserGeometry& geom,
                      const PhaseProfile& profile, double pt);

/// Far-field channel value plus a regime flag; converts implicitly to the
/// complex value. within_far_field is false when d0 is inside the surface's
/// Fraunhofer distance, where the closed form loses accuracy.
struct FarFieldChannel {
    Complex value;
    bool within_far_field;
    operator Complex() const { return value; }
};

/// Closed-form far-field channel under linear steering (beta1, beta2):
///   (sqrt(F)*lambda*e^{-j*k0*d0} / (4*pi*d0))
///     * sin(k0*Lx*(alpha1-beta1)/2)/sin(k0*dr*(alpha1-beta1)/2)
///     * sin(k0*Ly*(alpha2-beta2)/2)/sin(k0*dr*(alpha2-beta2)/2).
/// The removable singularities at beta = alpha evaluate to Mx, My.
FarFieldChannel far_field_channel(const LisConfig& cfg, const UserGeometry& geom,
                                  double beta1, double beta2);

/// Continuous-aperture (dr -> 0) limit of the far-field channel:
///   prefactor * Mx*My * sinc(k0*Lx*(alpha1-beta1)/2) * sinc(k0*Ly*(alpha2-beta2)/2).
FarFieldChannel far_field_channel_sinc(const LisConfig& cfg, const UserGeometry& geom,
                                       double beta1, double beta2);

/// Far-field channel of one tile: the closed form evaluated with tile
/// dimensions, tile-center distance, and tile-local direction cosines,
/// multiplied by e^{-j*beta0}.
Complex tile_channel(const LisConfig& cfg, const TileGrid& tiles,
                     const UserGeometry& geom, int tx, int ty,
                     const LinearSteering& steer);

/// Near-field channel: superposition of tile_channel over all tiles, one
/// steering triple per tile in x-major order.
Complex near_field_channel(const LisConfig& cfg, const TileGrid& tiles,
                           const UserGeometry& geom,
                           const std::vector<LinearSteering>& steering);

/// Per-tile steering that co-phases the superposition: beta1/beta2 set to the
/// tile-local direction cosines, beta0 to the phase of the tile channel so
/// every term comes out real-positive.
std::vector<LinearSteering> aligned_tile_steering(const LisConfig& cfg,
                                                  const TileGrid& tiles,
                                                  const UserGeometry& geom);

} // namespace lisbt
