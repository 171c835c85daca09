// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Channel realizations: LoS geometry plus an optional ensemble of planar
// NLoS scatter paths and receiver noise, with a fixed draw order (NLoS gains,
// NLoS angles, then per-pilot noise in pilot order) so every experiment is
// bit-reproducible from its seed.

#pragma once

#include <cstdint>
#include <random>

#include "lisbt/channel.hpp"

namespace lisbt {

/// Which channel model generates pilot observations. `exact` is the physical
/// truth; the far-field forms exist so estimator tests can be run
/// model-consistently against the closed forms they are derived from.
enum class ChannelModel { exact, far_field, far_field_sinc };

/// One scatter path, modelled as a planar wave from direction (theta, phi)
/// with complex gain applied to the whole surface.
struct NlosPath {
    Complex gain;
    double theta;
    double phi;
    double alpha1;
    double alpha2;
};

struct ChannelScene {
    LisConfig cfg;
    UserGeometry geom;
    std::vector<NlosPath> nlos;
    double noise_power; // total variance of the complex AWGN per observation, watts
    std::uint64_t rng_seed;
    /// Engine state after the construction draws; pilot noise continues from
    /// here so the global draw order is (gains, angles, pilot noise).
    std::mt19937_64 pilot_stream;
};

/// LoS-only scene.
ChannelScene make_scene(const LisConfig& cfg, const UserGeometry& geom,
                        double noise_power, std::uint64_t seed);

/// Scene with nlos_count scatter paths whose per-path gain is complex
/// Gaussian with E|gain|^2 = 10^(-gap_db/10) * (lambda*sqrt(F)/(4*pi*d0))^2,
/// i.e. gap_db below the per-element LoS coefficient power. Path angles are
/// uniform over theta in [0, pi/2), phi in [0, 2*pi).
ChannelScene make_scene(const LisConfig& cfg, const UserGeometry& geom,
                        double noise_power, int nlos_count, double nlos_gap_db,
                        std::uint64_t seed);

/// Fresh pilot-noise generator positioned just after the scene's
/// construction draws.
inline std::mt19937_64 pilot_rng(const ChannelScene& scene) { return scene.pilot_stream; }

/// NLoS channel under a profile: sum over paths of
/// gain * sum over the profile support of e^{j(beta + k0*dr*(ix*a1 + iy*a2))}.
Complex nlos_channel(const LisConfig& cfg, const std::vector<NlosPath>& paths,
                     const PhaseProfile& profile);

/// Complex pilot observation sqrt(Pp) * (H_los + H_nlos) + n, where n is
/// circularly-symmetric Gaussian with total variance noise_power (no draw is
/// consumed when noise_power is zero). For the far-field models the profile
/// must be a full-surface linear one.
Complex observation_value(const ChannelScene& scene, ChannelModel model,
                          const PhaseProfile& profile, double pilot_power,
                          std::mt19937_64& rng);

struct PilotObservation {
    Complex value;
    double pilot_power;
    PhaseProfile profile_used;
};

PilotObservation observe_pilot(const ChannelScene& scene, const PhaseProfile& profile,
                               double pilot_power, std::mt19937_64& rng,
                               ChannelModel model = ChannelModel::exact);

/// Sounding with a single active element (zero phase, all others off):
/// value = sqrt(Pp) * (lambda*sqrt(F)/(4*pi*d_i)) * e^{-j*k0*d_i} + n, plus
/// the NLoS wave through that element when the scene carries scatter paths.
PilotObservation single_element_observation(const ChannelScene& scene, int ix, int iy,
                                            double pilot_power, std::mt19937_64& rng);

} // namespace lisbt
