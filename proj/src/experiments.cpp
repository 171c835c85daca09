// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/experiments.hpp"

#include <cmath>

namespace lisbt {

double achieved_rate(const ChannelScene& scene, const PhaseProfile& profile,
                     double data_power) {
    if (scene.noise_power <= 0.0)
        throw std::domain_error("achieved rate is undefined without receiver noise");
    const double pr = received_power(scene.cfg, scene.geom, profile, data_power);
    return std::log2(1.0 + pr / scene.noise_power);
}

std::pair<double, double> mse(const std::vector<std::pair<double, double>>& errors) {
    if (errors.empty()) throw std::invalid_argument("mse needs at least one realization");
    double s1 = 0.0, s2 = 0.0;
    for (const auto& [e1, e2] : errors) {
        s1 += e1 * e1;
        s2 += e2 * e2;
    }
    return {s1 / errors.size(), s2 / errors.size()};
}

std::string to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::pilot_power_dbm: return "pilot_power_dbm";
    case SweepVariable::pilot_count: return "pilot_count";
    case SweepVariable::element_count: return "element_count";
    case SweepVariable::nlos_gap_db: return "nlos_gap_db";
    }
    return "?";
}

std::string to_string(EstimatorKind k) {
    switch (k) {
    case EstimatorKind::proposed: return "proposed";
    case EstimatorKind::grid: return "grid";
    case EstimatorKind::hierarchical: return "hierarchical";
    }
    return "?";
}

namespace {

struct CellPoint {
    LisConfig cfg;
    double pilot_power;
    int pilot_budget;
    double nlos_gap_db;
};

// Resolve the sweep variable into the concrete cell parameters.
CellPoint resolve_sweep(const Scenario& scn, double value) {
    CellPoint p{scn.cfg, scn.pilot_power, scn.pilot_budget, scn.nlos_gap_db};
    switch (scn.sweep) {
    case SweepVariable::pilot_power_dbm:
        p.pilot_power = dbm_to_watt(value);
        break;
    case SweepVariable::pilot_count:
        p.pilot_budget = static_cast<int>(value);
        break;
    case SweepVariable::element_count: {
        const int m = static_cast<int>(value);
        p.cfg = LisConfig(scn.cfg.wavelength, m, m, scn.cfg.dr, scn.cfg.le,
                          scn.cfg.pattern_factor);
        break;
    }
    case SweepVariable::nlos_gap_db:
        p.nlos_gap_db = value;
        break;
    }
    return p;
}

struct RealizationOutcome {
    double rate;
    double err1;
    double err2;
    int pilots;
};

RealizationOutcome run_one(const Scenario& scn, const CellPoint& cell,
                           EstimatorKind kind, std::uint64_t seed) {
    // Per-realization draws: user angles from the master stream, then an
    // independent sub-seed for the scene's own (NLoS, noise) stream.
    std::mt19937_64 master(seed);
    std::uniform_real_distribution<double> u_theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> u_phi(0.0, two_pi);
    const double theta = u_theta(master);
    const double phi = u_phi(master);
    const UserGeometry geom(scn.d0, theta, phi);
    const ChannelScene scene = make_scene(cell.cfg, geom, scn.noise_power,
                                          scn.nlos_paths, cell.nlos_gap_db, master());
    auto rng = pilot_rng(scene);

    RealizationOutcome out{};
    switch (kind) {
    case EstimatorKind::proposed: {
        if (scn.d0 >= fraunhofer_distance(cell.cfg)) {
            EstimatorConfig est = make_estimator_config(cell.cfg, cell.pilot_power,
                                                        scn.delta, scn.k_max);
            est.k_max = std::clamp((cell.pilot_budget - 3) / 5, 1, scn.k_max);
            const EstimationResult r = proposed_estimate(scene, est, rng);
            out.rate = achieved_rate(
                scene, linear_phase_profile(cell.cfg, 0.0, r.alpha1_hat, r.alpha2_hat),
                scn.data_power);
            out.err1 = r.alpha1_hat - geom.alpha1;
            out.err2 = r.alpha2_hat - geom.alpha2;
            out.pilots = r.pilots_used;
        } else {
            const TileGrid tiles = make_tile_grid(cell.cfg, scn.d0);
            EstimatorConfig est = make_estimator_config(cell.cfg, cell.pilot_power,
                                                        scn.delta, scn.k_max);
            const int per_tile_budget =
                (cell.pilot_budget - 3 - tiles.tile_count()) / (5 * tiles.tile_count());
            est.k_max = std::clamp(per_tile_budget, 1, scn.k_max);
            const NearFieldEstimate r = near_field_estimate(scene, tiles, est, rng);
            out.rate = achieved_rate(scene, r.profile, scn.data_power);
            // Near-field errors: mean squared tile-local cosine error,
            // aggregated over tiles.
            double e1 = 0.0, e2 = 0.0;
            for (int tx = 0; tx < tiles.n; ++tx) {
                for (int ty = 0; ty < tiles.n; ++ty) {
                    const TileView v = tile_view(cell.cfg, tiles, geom, tx, ty);
                    const auto& t = r.per_tile[tiles.flat(tx, ty)];
                    e1 += (t.alpha1_hat - v.alpha1) * (t.alpha1_hat - v.alpha1);
                    e2 += (t.alpha2_hat - v.alpha2) * (t.alpha2_hat - v.alpha2);
                }
            }
            out.err1 = std::sqrt(e1 / tiles.tile_count());
            out.err2 = std::sqrt(e2 / tiles.tile_count());
            out.pilots = r.pilots_used;
        }
        break;
    }
    case EstimatorKind::grid: {
        const int grid_n = std::max(1, static_cast<int>(std::sqrt(double(cell.pilot_budget))));
        const EstimationResult r =
            baseline_grid_search(scene, grid_n, cell.pilot_budget, cell.pilot_power, rng);
        out.rate = achieved_rate(
            scene, linear_phase_profile(cell.cfg, 0.0, r.alpha1_hat, r.alpha2_hat),
            scn.data_power);
        out.err1 = r.alpha1_hat - geom.alpha1;
        out.err2 = r.alpha2_hat - geom.alpha2;
        out.pilots = r.pilots_used;
        break;
    }
    case EstimatorKind::hierarchical: {
        const int levels = std::max(1, cell.pilot_budget / 4);
        const EstimationResult r =
            baseline_hierarchical(scene, levels, cell.pilot_power, rng);
        out.rate = achieved_rate(
            scene, linear_phase_profile(cell.cfg, 0.0, r.alpha1_hat, r.alpha2_hat),
            scn.data_power);
        out.err1 = r.alpha1_hat - geom.alpha1;
        out.err2 = r.alpha2_hat - geom.alpha2;
        out.pilots = r.pilots_used;
        break;
    }
    }
    return out;
}

} // namespace

std::vector<MetricRow> run_scenario(const Scenario& scn) {
    if (scn.realizations < 1)
        throw std::invalid_argument("scenario needs at least one realization");
    if (scn.sweep_values.empty())
        throw std::invalid_argument("scenario needs at least one sweep point");
    if (scn.estimators.empty())
        throw std::invalid_argument("scenario needs at least one estimator");

    std::vector<MetricRow> rows;
    rows.reserve(scn.sweep_values.size() * scn.estimators.size());
    for (double value : scn.sweep_values) {
        const CellPoint cell = resolve_sweep(scn, value);
        for (EstimatorKind kind : scn.estimators) {
            MetricRow row;
            row.sweep_value = value;
            row.estimator = to_string(kind);
            double rate_sum = 0.0, e1_sum = 0.0, e2_sum = 0.0, pilot_sum = 0.0;
            for (int r = 0; r < scn.realizations; ++r) {
                try {
                    const RealizationOutcome o =
                        run_one(scn, cell, kind, scn.base_seed + std::uint64_t(r));
                    rate_sum += o.rate;
                    e1_sum += o.err1 * o.err1;
                    e2_sum += o.err2 * o.err2;
                    pilot_sum += o.pilots;
                    ++row.realizations;
                } catch (const EstimationError&) {
                    ++row.exclusions;
                }
            }
            if (row.realizations > 0) {
                row.mean_rate = rate_sum / row.realizations;
                row.mse_alpha1 = e1_sum / row.realizations;
                row.mse_alpha2 = e2_sum / row.realizations;
                row.mean_pilots = pilot_sum / row.realizations;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace lisbt
