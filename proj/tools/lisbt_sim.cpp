// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// CLI entry point with three subcommands:
//   estimate  -- run the proposed pipeline on a single scene and print the
//                estimates against ground truth
//   sweep     -- execute a scenario file and emit CSV + manifest
//   validate  -- run the fast library self-checks

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "lisbt/report.hpp"
#include "lisbt/selfcheck.hpp"

namespace {

struct EstimateOptions {
    double d0 = 200.0;
    double theta_deg = 30.0;
    double phi_deg = 45.0;
    int mx = 65;
    int my = 65;
    double lambda = 0.01;
    double pilot_power_dbm = 20.0;
    double data_power_dbm = 30.0;
    double noise_dbm = -115.0;
    int nlos_paths = 0;
    double nlos_gap_db = 20.0;
    int k_max = 4;
    std::uint64_t seed = 1;
};

int run_estimate(const EstimateOptions& o) {
    using namespace lisbt;
    const LisConfig cfg(o.lambda, o.mx, o.my, o.lambda / 4.0, 0.8 * o.lambda / 4.0, 1.0);
    const UserGeometry geom(o.d0, o.theta_deg * std::numbers::pi / 180.0,
                            wrap_two_pi(o.phi_deg * std::numbers::pi / 180.0));
    const ChannelScene scene = make_scene(cfg, geom, dbm_to_watt(o.noise_dbm),
                                          o.nlos_paths, o.nlos_gap_db, o.seed);
    const double pilot_power = dbm_to_watt(o.pilot_power_dbm);
    const double data_power = dbm_to_watt(o.data_power_dbm);
    auto est = make_estimator_config(cfg, pilot_power, 1e-6, o.k_max);
    auto rng = pilot_rng(scene);

    std::printf("surface: %d x %d elements, pitch %.4g m, lambda %.4g m\n", cfg.mx,
                cfg.my, cfg.dr, cfg.wavelength);
    std::printf("user: d0 = %.6g m (Fraunhofer %.6g m), alpha = (%+.6f, %+.6f)\n",
                geom.d0, fraunhofer_distance(cfg), geom.alpha1, geom.alpha2);

    PhaseProfile configured = uniform_profile(cfg);
    int pilots = 0;
    if (geom.d0 >= fraunhofer_distance(cfg)) {
        const EstimationResult r = proposed_estimate(scene, est, rng);
        std::printf("far-field pipeline: alpha_hat = (%+.6f, %+.6f) after %d iterations, %d pilots\n",
                    r.alpha1_hat, r.alpha2_hat, r.iterations, r.pilots_used);
        configured = linear_phase_profile(cfg, 0.0, r.alpha1_hat, r.alpha2_hat);
        pilots = r.pilots_used;
    } else {
        const TileGrid tiles = make_tile_grid(cfg, geom.d0);
        const NearFieldEstimate r = near_field_estimate(scene, tiles, est, rng);
        std::printf("near-field pipeline: %d x %d tiles, %d pilots\n", tiles.n, tiles.n,
                    r.pilots_used);
        for (int tx = 0; tx < tiles.n; ++tx) {
            for (int ty = 0; ty < tiles.n; ++ty) {
                const auto& t = r.per_tile[tiles.flat(tx, ty)];
                const TileView v = tile_view(cfg, tiles, geom, tx, ty);
                std::printf("  tile (%d,%d): alpha_hat = (%+.6f, %+.6f)  true = (%+.6f, %+.6f)\n",
                            tx, ty, t.alpha1_hat, t.alpha2_hat, v.alpha1, v.alpha2);
            }
        }
        configured = r.profile;
        pilots = r.pilots_used;
    }

    const double rate = achieved_rate(scene, configured, data_power);
    const double ceiling =
        achieved_rate(scene, optimal_phase_profile(cfg, geom), data_power);
    std::printf("achieved rate: %.6g bits/s/Hz (perfect-CSI ceiling %.6g), %d pilots\n",
                rate, ceiling, pilots);
    return 0;
}

int run_validate(std::uint64_t seed) {
    bool all = true;
    for (const auto& c : lisbt::run_selfchecks(seed)) {
        std::printf("%s  %-48s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LISBT channel simulation and pilot-based parameter estimation"};
    app.require_subcommand(1);

    EstimateOptions eo;
    auto* est = app.add_subcommand("estimate", "estimate one scene and report the rate");
    est->add_option("--d0", eo.d0, "user distance, meters");
    est->add_option("--theta-deg", eo.theta_deg, "elevation, degrees in [0, 90]");
    est->add_option("--phi-deg", eo.phi_deg, "azimuth, degrees in [0, 360)");
    est->add_option("--mx", eo.mx, "elements along x (odd)");
    est->add_option("--my", eo.my, "elements along y (odd)");
    est->add_option("--lambda", eo.lambda, "wavelength, meters");
    est->add_option("--pilot-power-dbm", eo.pilot_power_dbm, "pilot power, dBm");
    est->add_option("--data-power-dbm", eo.data_power_dbm, "data power, dBm");
    est->add_option("--noise-dbm", eo.noise_dbm, "noise power, dBm");
    est->add_option("--nlos", eo.nlos_paths, "number of NLoS paths");
    est->add_option("--nlos-gap-db", eo.nlos_gap_db, "LoS-NLoS power gap, dB");
    est->add_option("--k-max", eo.k_max, "iteration cap");
    est->add_option("--seed", eo.seed, "realization seed");

    lisbt::RunConfig rc;
    std::string scale = "none";
    auto* sweep = app.add_subcommand("sweep", "run a scenario file, write CSV + manifest");
    sweep->add_option("--config", rc.config_path, "scenario file")->required();
    sweep->add_option("--out", rc.out_dir, "output directory (created when missing)");
    std::uint64_t seed_override = 0;
    int realizations_override = 0;
    auto* seed_opt = sweep->add_option("--seed", seed_override, "override the scenario seed");
    auto* real_opt = sweep->add_option("--realizations", realizations_override,
                                       "override the realization count");
    sweep->add_option("--scale", scale, "scale preset: desk | paper")
        ->check(CLI::IsMember({"none", "desk", "paper"}));

    std::uint64_t validate_seed = 1;
    auto* val = app.add_subcommand("validate", "run the fast library self-checks");
    val->add_option("--seed", validate_seed, "seed for the randomized checks");

    CLI11_PARSE(app, argc, argv);

    if (est->parsed()) {
        try {
            return run_estimate(eo);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    if (sweep->parsed()) {
        if (*seed_opt) rc.seed = seed_override;
        if (*real_opt) {
            if (realizations_override < 1) {
                std::cerr << "error: --realizations must be >= 1\n";
                return 2;
            }
            rc.realizations = realizations_override;
        }
        if (scale == "desk") rc.scale = lisbt::ScalePreset::desk;
        else if (scale == "paper") rc.scale = lisbt::ScalePreset::paper;
        return lisbt::run_sweep(rc);
    }
    return run_validate(validate_seed);
}
