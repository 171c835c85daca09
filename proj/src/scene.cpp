// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/scene.hpp"

namespace lisbt {

namespace {

Complex draw_awgn(double variance, std::mt19937_64& rng) {
    if (variance <= 0.0) return {0.0, 0.0};
    std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

} // namespace

ChannelScene make_scene(const LisConfig& cfg, const UserGeometry& geom,
                        double noise_power, std::uint64_t seed) {
    return make_scene(cfg, geom, noise_power, 0, 0.0, seed);
}

ChannelScene make_scene(const LisConfig& cfg, const UserGeometry& geom,
                        double noise_power, int nlos_count, double nlos_gap_db,
                        std::uint64_t seed) {
    if (noise_power < 0.0) throw std::invalid_argument("noise power must be >= 0");
    if (nlos_count < 0) throw std::invalid_argument("NLoS path count must be >= 0");

    std::mt19937_64 rng(seed);
    std::vector<NlosPath> paths(nlos_count);

    const double elem_mag =
        cfg.wavelength * std::sqrt(cfg.pattern_factor) / (4.0 * std::numbers::pi * geom.d0);
    const double sigma2 = db_to_linear(-nlos_gap_db) * elem_mag * elem_mag;
    std::normal_distribution<double> normal(0.0, std::sqrt(sigma2 / 2.0));
    for (auto& p : paths) p.gain = {normal(rng), normal(rng)};

    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, two_pi);
    for (auto& p : paths) {
        p.theta = u_theta(rng);
        p.phi = u_phi(rng);
        std::tie(p.alpha1, p.alpha2) = direction_cosines(p.theta, p.phi);
    }

    return {cfg, geom, std::move(paths), noise_power, seed, rng};
}

Complex nlos_channel(const LisConfig& cfg, const std::vector<NlosPath>& paths,
                     const PhaseProfile& profile) {
    if (paths.empty()) return {0.0, 0.0};
    const double k0dr = cfg.wave_number() * cfg.dr;
    const int rows = profile.rows();
    const int cols = profile.cols();
    const Eigen::ArrayXd ix =
        Eigen::ArrayXd::LinSpaced(rows, profile.ix0, profile.ix0 + rows - 1);
    const Eigen::ArrayXd iy =
        Eigen::ArrayXd::LinSpaced(cols, profile.iy0, profile.iy0 + cols - 1);
    Complex total = 0.0;
    for (const auto& p : paths) {
        const Eigen::ArrayXXd arg = profile.phases +
                                    (k0dr * p.alpha1) * ix.replicate(1, cols) +
                                    (k0dr * p.alpha2) * iy.transpose().replicate(rows, 1);
        total += p.gain * Complex(arg.cos().sum(), arg.sin().sum());
    }
    return total;
}

Complex observation_value(const ChannelScene& scene, ChannelModel model,
                          const PhaseProfile& profile, double pilot_power,
                          std::mt19937_64& rng) {
    if (pilot_power < 0.0) throw std::invalid_argument("pilot power must be >= 0");

    Complex h_los;
    switch (model) {
    case ChannelModel::exact:
        h_los = exact_channel(scene.cfg, scene.geom, profile);
        break;
    case ChannelModel::far_field:
    case ChannelModel::far_field_sinc: {
        if (!profile.steering || !profile.full_surface(scene.cfg))
            throw std::logic_error(
                "far-field observation models require a full-surface linear profile");
        const auto& s = *profile.steering;
        auto ff = (model == ChannelModel::far_field)
                      ? far_field_channel(scene.cfg, scene.geom, s.beta1, s.beta2)
                      : far_field_channel_sinc(scene.cfg, scene.geom, s.beta1, s.beta2);
        h_los = ff.value * std::polar(1.0, -s.beta0);
        break;
    }
    }

    const Complex h_nlos = nlos_channel(scene.cfg, scene.nlos, profile);
    return std::sqrt(pilot_power) * (h_los + h_nlos) + draw_awgn(scene.noise_power, rng);
}

PilotObservation observe_pilot(const ChannelScene& scene, const PhaseProfile& profile,
                               double pilot_power, std::mt19937_64& rng,
                               ChannelModel model) {
    return {observation_value(scene, model, profile, pilot_power, rng), pilot_power,
            profile};
}

PilotObservation single_element_observation(const ChannelScene& scene, int ix, int iy,
                                            double pilot_power, std::mt19937_64& rng) {
    const PhaseProfile probe = single_element_profile(scene.cfg, ix, iy);
    return {observation_value(scene, ChannelModel::exact, probe, pilot_power, rng),
            pilot_power, probe};
}

} // namespace lisbt
