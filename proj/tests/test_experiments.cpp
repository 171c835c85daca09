// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lisbt/experiments.hpp"
#include "lisbt/report.hpp"

#include "helpers.hpp"

using namespace lisbt;
using test_support::ref_cfg;

TEST_CASE("achieved rate") {
    SUBCASE("unit SNR gives exactly one bit") {
        // 1x1 surface: |H|^2 known in closed form; pick data power so that
        // P_r = N0.
        const LisConfig cfg(0.01, 1, 1, 0.01, 0.008);
        const UserGeometry geom(0.01, 0.0, 0.0);
        const double h2 = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
        const double n0 = 1e-9;
        const ChannelScene scene = make_scene(cfg, geom, n0, 1);
        CHECK(achieved_rate(scene, uniform_profile(cfg), n0 / h2) == doctest::Approx(1.0));
    }

    SUBCASE("zero received power gives zero rate") {
        const LisConfig dark(0.01, 1, 1, 0.01, 0.008, 0.0);
        const UserGeometry geom(0.01, 0.0, 0.0);
        const ChannelScene scene = make_scene(dark, geom, 1e-9, 1);
        CHECK(achieved_rate(scene, uniform_profile(dark), 1.0) == 0.0);
    }

    SUBCASE("noiseless scenes are rejected") {
        const LisConfig cfg(0.01, 1, 1, 0.01, 0.008);
        const UserGeometry geom(0.01, 0.0, 0.0);
        const ChannelScene scene = make_scene(cfg, geom, 0.0, 1);
        CHECK_THROWS_AS(achieved_rate(scene, uniform_profile(cfg), 1.0),
                        std::domain_error);
    }

    SUBCASE("reference link budget under perfect phases") {
        // independent arithmetic oracle: R = log2(1 + Pt (lambda M / (4 pi d0))^2 / N0)
        // at Pt = 30 dBm, N0 = -115 dBm, d0 = 200 m, M = 257^2, broadside user
        const LisConfig cfg = ref_cfg();
        const UserGeometry geom(200.0, 0.0, 0.0);
        const double pt = 1.0;            // 30 dBm
        const double n0 = 3.16227766e-15; // -115 dBm
        const double amp = 0.01 * 257.0 * 257.0 / (4.0 * std::numbers::pi * 200.0);
        const double oracle = std::log2(1.0 + pt * amp * amp / n0);
        const ChannelScene scene = make_scene(cfg, geom, dbm_to_watt(-115.0), 1);
        const double got = achieved_rate(scene, optimal_phase_profile(cfg, geom), pt);
        CHECK(got == doctest::Approx(oracle).epsilon(1e-4));
        CHECK(got == doctest::Approx(44.31).epsilon(1e-3));
    }
}

TEST_CASE("mse aggregation") {
    CHECK(mse({{0.0, 0.0}, {0.0, 0.0}}) == std::pair{0.0, 0.0});
    CHECK(mse({{0.1, -0.2}}).first == doctest::Approx(0.01));
    CHECK(mse({{0.1, -0.2}}).second == doctest::Approx(0.04));
    CHECK_THROWS_AS(mse({}), std::invalid_argument);

    // statistical: Gaussian errors of sigma = 0.01 average to ~1e-4
    std::mt19937_64 rng(101);
    std::normal_distribution<double> g(0.0, 0.01);
    std::vector<std::pair<double, double>> errs(1000);
    for (auto& e : errs) e = {g(rng), g(rng)};
    const auto [m1, m2] = mse(errs);
    CHECK(m1 == doctest::Approx(1e-4).epsilon(0.2));
    CHECK(m2 == doctest::Approx(1e-4).epsilon(0.2));
}

namespace {

Scenario small_scenario() {
    Scenario scn{.name = "unit", .cfg = ref_cfg(33)};
    scn.d0 = 400.0;
    scn.noise_power = dbm_to_watt(-115.0);
    scn.data_power = 1.0;
    scn.pilot_power = dbm_to_watt(20.0);
    scn.pilot_budget = 23;
    scn.sweep = SweepVariable::pilot_power_dbm;
    scn.sweep_values = {0.0, 20.0};
    scn.estimators = {EstimatorKind::proposed, EstimatorKind::grid,
                      EstimatorKind::hierarchical};
    scn.realizations = 10;
    scn.base_seed = 7;
    return scn;
}

} // namespace

TEST_CASE("run_scenario basics") {
    const Scenario scn = small_scenario();
    const auto rows = run_scenario(scn);
    REQUIRE(rows.size() == 6); // 2 sweep points x 3 estimators

    SUBCASE("row order is sweep-major, roster-minor") {
        CHECK(rows[0].sweep_value == 0.0);
        CHECK(rows[0].estimator == "proposed");
        CHECK(rows[1].estimator == "grid");
        CHECK(rows[2].estimator == "hierarchical");
        CHECK(rows[3].sweep_value == 20.0);
    }

    SUBCASE("determinism: identical scenario, identical table") {
        const auto again = run_scenario(scn);
        CHECK(to_csv(rows) == to_csv(again));
    }

    SUBCASE("all realizations accounted for") {
        for (const auto& r : rows) {
            CHECK(r.realizations + r.exclusions == scn.realizations);
            CHECK(r.exclusions == 0);
            CHECK(r.mean_rate > 0.0);
        }
    }

    SUBCASE("proposed consumes the 23-pilot budget, baselines their own") {
        CHECK(rows[0].mean_pilots <= 23.0);
        CHECK(rows[1].mean_pilots == doctest::Approx(16.0)); // grid 4x4
        CHECK(rows[2].mean_pilots == doctest::Approx(20.0)); // 5 levels x 4
    }
}

TEST_CASE("single noiseless realization matches direct steering") {
    // proposed estimator at high pilot power ~ steering straight at the user
    Scenario scn = small_scenario();
    scn.realizations = 1;
    scn.sweep_values = {40.0}; // strong pilots: estimation error negligible
    scn.estimators = {EstimatorKind::proposed};
    const auto rows = run_scenario(scn);
    REQUIRE(rows.size() == 1);

    std::mt19937_64 master(scn.base_seed);
    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, two_pi);
    const UserGeometry geom(scn.d0, u_theta(master), u_phi(master));
    const ChannelScene scene =
        make_scene(scn.cfg, geom, scn.noise_power, 0, scn.nlos_gap_db, master());
    const double direct = achieved_rate(
        scene, linear_phase_profile(scn.cfg, 0.0, geom.alpha1, geom.alpha2),
        scn.data_power);
    CHECK(rows[0].mean_rate == doctest::Approx(direct).epsilon(1e-3));
}

TEST_CASE("proposed dominates the baselines at equal budget") {
    Scenario scn = small_scenario();
    scn.realizations = 40;
    scn.sweep_values = {0.0, 10.0, 20.0};
    const auto rows = run_scenario(scn);

    // proposed mean rate is non-decreasing in pilot power
    CHECK(rows[0].mean_rate <= rows[3].mean_rate + 1e-9);
    CHECK(rows[3].mean_rate <= rows[6].mean_rate + 1e-9);

    // beats the exhaustive grid at every point >= 0 dBm; the hierarchical
    // search only falls behind once pilots are strong enough for the
    // initializer (at 0 dBm its wide-beam aggregation is more robust than
    // three single-element soundings)
    for (size_t base = 0; base < rows.size(); base += 3)
        CHECK(rows[base].mean_rate > rows[base + 1].mean_rate);
    CHECK(rows[6].mean_rate > rows[8].mean_rate);
}

TEST_CASE("near-field scenario path") {
    // 65x65 close in: proposed switches to the tiled pipeline
    Scenario scn{.name = "nf", .cfg = ref_cfg(65)};
    scn.d0 = 3.0;
    scn.noise_power = dbm_to_watt(-115.0);
    scn.pilot_power = dbm_to_watt(20.0);
    scn.pilot_budget = 3 + 9 * 5 + 9; // one iteration per tile on a 3x3 grid
    scn.sweep = SweepVariable::pilot_count;
    scn.sweep_values = {double(scn.pilot_budget)};
    scn.estimators = {EstimatorKind::proposed};
    scn.realizations = 5;
    scn.base_seed = 11;
    const auto rows = run_scenario(scn);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].exclusions == 0);
    CHECK(rows[0].mean_pilots == doctest::Approx(double(scn.pilot_budget)));
    CHECK(rows[0].mse_alpha1 < 1e-3);
    CHECK(rows[0].mse_alpha2 < 1e-3);

    // the achieved rate sits near the perfect-CSI ceiling
    std::mt19937_64 master(scn.base_seed);
    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, two_pi);
    const UserGeometry geom(scn.d0, u_theta(master), u_phi(master));
    const ChannelScene scene = make_scene(scn.cfg, geom, scn.noise_power, master());
    const double ceiling =
        achieved_rate(scene, optimal_phase_profile(scn.cfg, geom), scn.data_power);
    CHECK(rows[0].mean_rate < ceiling);
    CHECK(rows[0].mean_rate > 0.9 * ceiling);
}

TEST_CASE("element-count sweep reconfigures the surface") {
    // at a fixed 23-pilot budget the estimation accuracy is
    // aperture-independent, so the larger surface wins on beamforming gain
    Scenario scn = small_scenario();
    scn.sweep = SweepVariable::element_count;
    scn.sweep_values = {65.0, 129.0};
    scn.realizations = 8;
    scn.estimators = {EstimatorKind::proposed};
    const auto rows = run_scenario(scn);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].mean_rate > rows[0].mean_rate);
}

TEST_CASE("noiseless estimation reaches 99.9% of the far-field ceiling") {
    // initializer-seeded five-pilot round on noiseless exact-channel
    // observations, scored as a rate ratio against steering straight at the
    // user (the far-field perfect-CSI configuration)
    const LisConfig cfg = ref_cfg();
    const double n0 = dbm_to_watt(-115.0);
    std::mt19937_64 rng(103);
    double worst = 1.0;
    for (int t = 0; t < 15; ++t) {
        const UserGeometry geom = test_support::random_geometry(200.0, rng);
        const ChannelScene quiet = make_scene(cfg, geom, 0.0, 500 + t);
        auto prng = pilot_rng(quiet);
        const auto est = make_estimator_config(cfg, 1.0);
        const auto [b1, b2] = initialize_from_actives(quiet, 1.0, prng);
        const auto r = noiseless_estimate(quiet, est, b1, b2);

        const ChannelScene rated = make_scene(cfg, geom, n0, 500 + t);
        const double got = achieved_rate(
            rated, linear_phase_profile(cfg, 0.0, r.alpha1_hat, r.alpha2_hat), 1.0);
        const double best = achieved_rate(
            rated, linear_phase_profile(cfg, 0.0, geom.alpha1, geom.alpha2), 1.0);
        worst = std::min(worst, got / best);
    }
    CHECK(worst >= 0.999);
}

TEST_CASE("estimation failures are excluded, not fatal") {
    // a dark surface (pattern factor 0) with no receiver noise yields
    // all-zero observations: every candidate is degenerate and every
    // realization lands in the exclusions column
    Scenario scn{.name = "dark", .cfg = LisConfig(0.01, 17, 17, 0.0025, 0.002, 0.0)};
    scn.d0 = 400.0;
    scn.noise_power = 0.0;
    scn.sweep = SweepVariable::pilot_count;
    scn.sweep_values = {23.0};
    scn.estimators = {EstimatorKind::proposed};
    scn.realizations = 6;
    scn.base_seed = 2;
    const auto rows = run_scenario(scn);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].exclusions == 6);
    CHECK(rows[0].realizations == 0);
    CHECK(rows[0].mean_rate == 0.0);
}

TEST_CASE("scenario validation") {
    Scenario scn = small_scenario();
    scn.sweep_values.clear();
    CHECK_THROWS_AS(run_scenario(scn), std::invalid_argument);
    scn = small_scenario();
    scn.estimators.clear();
    CHECK_THROWS_AS(run_scenario(scn), std::invalid_argument);
    scn = small_scenario();
    scn.realizations = 0;
    CHECK_THROWS_AS(run_scenario(scn), std::invalid_argument);
}

TEST_CASE("csv formatting") {
    MetricRow r;
    r.sweep_value = -10.0;
    r.estimator = "proposed";
    r.mean_rate = 12.3456789012345;
    r.mse_alpha1 = 1.23456789e-7;
    r.mse_alpha2 = 0.0;
    r.mean_pilots = 23.0;
    r.realizations = 100;
    r.exclusions = 0;
    const std::string csv = to_csv({r});
    CHECK(csv ==
          "sweep,estimator,rate_bps_hz,mse_alpha1,mse_alpha2,pilots,realizations,exclusions\n"
          "-10,proposed,12.3456789,1.23456789e-07,0,23,100,0\n");
    CHECK(format_g9(1.0 / 3.0) == "0.333333333");
}
