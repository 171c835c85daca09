// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/selfcheck.hpp"

#include <sstream>

#include "lisbt/estimator.hpp"

namespace lisbt {

namespace {

LisConfig small_cfg(int m) { return LisConfig(0.01, m, m, 0.0025, 0.002, 1.0); }

CheckResult check_geometric_sum(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.01, std::numbers::pi);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const double a = u(rng);
        Complex direct = 0.0;
        for (int m = -16; m <= 16; ++m) direct += std::polar(1.0, m * a);
        worst = std::max(worst, std::abs(direct - Complex(dirichlet_ratio(a / 2, 33))));
    }
    std::ostringstream os;
    os << "max |direct - closed| = " << worst;
    return {"geometric-sum identity (M=33)", worst < 1e-10, os.str()};
}

CheckResult check_far_field_agreement(std::uint64_t seed) {
    const LisConfig cfg = small_cfg(17);
    const double d0 = 2.0 * fraunhofer_distance(cfg);
    const double peak = cfg.wavelength / (4.0 * std::numbers::pi * d0) * cfg.mx * cfg.my;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, two_pi);
    std::uniform_real_distribution<double> u_beta(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
        const UserGeometry geom(d0, u_theta(rng), u_phi(rng));
        const double b1 = u_beta(rng), b2 = u_beta(rng);
        const Complex he = exact_channel(cfg, geom, linear_phase_profile(cfg, 0, b1, b2));
        const Complex hf = far_field_channel(cfg, geom, b1, b2);
        worst = std::max(worst, std::abs(std::abs(hf) - std::abs(he)) / peak);
    }
    std::ostringstream os;
    os << "max peak-relative magnitude error = " << worst;
    return {"far-field closed form vs exact channel (17x17)", worst < 0.02, os.str()};
}

CheckResult check_five_pilot(std::uint64_t seed) {
    const LisConfig cfg = small_cfg(33);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, two_pi);
    std::uniform_real_distribution<double> u_beta(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const UserGeometry geom(500.0, u_theta(rng), u_phi(rng));
        const ChannelScene scene = make_scene(cfg, geom, 0.0, seed + t);
        const auto est = make_estimator_config(cfg, 1.0);
        const auto r = noiseless_estimate(scene, est, u_beta(rng), u_beta(rng),
                                          ChannelModel::far_field_sinc);
        worst = std::max({worst, std::abs(r.alpha1_hat - geom.alpha1),
                          std::abs(r.alpha2_hat - geom.alpha2)});
    }
    std::ostringstream os;
    os << "max |alpha_hat - alpha| = " << worst;
    return {"noiseless five-pilot recovery (sinc model)", worst < 1e-9, os.str()};
}

CheckResult check_pilot_accounting(std::uint64_t seed) {
    const LisConfig cfg = small_cfg(9);
    const UserGeometry geom(1000.0, 0.4, 1.1);
    const ChannelScene scene = make_scene(cfg, geom, 1e-12, seed);
    auto est = make_estimator_config(cfg, 0.1, 1e-30, 4);
    auto rng = pilot_rng(scene);
    const auto r = proposed_estimate(scene, est, rng);
    std::ostringstream os;
    os << "pilots used = " << r.pilots_used << " after " << r.iterations << " iterations";
    return {"pilot accounting 3 + 5k", r.pilots_used == 3 + 5 * r.iterations &&
                                           r.pilots_used == 23,
            os.str()};
}

CheckResult check_determinism(std::uint64_t seed) {
    const LisConfig cfg = small_cfg(9);
    const UserGeometry geom(200.0, 0.7, 2.0);
    const ChannelScene a = make_scene(cfg, geom, 1e-13, 4, 20.0, seed);
    const ChannelScene b = make_scene(cfg, geom, 1e-13, 4, 20.0, seed);
    auto ra = pilot_rng(a);
    auto rb = pilot_rng(b);
    const PhaseProfile probe = linear_phase_profile(cfg, 0.0, 0.2, -0.3);
    const Complex ya = observation_value(a, ChannelModel::exact, probe, 0.1, ra);
    const Complex yb = observation_value(b, ChannelModel::exact, probe, 0.1, rb);
    const bool same = ya.real() == yb.real() && ya.imag() == yb.imag();
    return {"seeded observation determinism", same,
            same ? "bit-identical replay" : "replay mismatch"};
}

} // namespace

std::vector<CheckResult> run_selfchecks(std::uint64_t seed) {
    return {check_geometric_sum(seed), check_far_field_agreement(seed),
            check_five_pilot(seed), check_pilot_accounting(seed),
            check_determinism(seed)};
}

} // namespace lisbt
