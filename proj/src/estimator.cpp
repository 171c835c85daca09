// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace lisbt {

std::pair<double, double> probe_offsets(const LisConfig& cfg) {
    return {1.0 / cfg.kx(), 1.0 / cfg.ky()};
}

EstimatorConfig make_estimator_config(const LisConfig& cfg, double pilot_power,
                                      double delta, int k_max) {
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (pilot_power < 0.0) throw std::invalid_argument("pilot power must be >= 0");
    auto [v, w] = probe_offsets(cfg);
    return {v, w, delta, k_max, pilot_power};
}

double null_magnitude_floor(const ChannelScene& scene, double pilot_power) {
    const double single = scene.cfg.wavelength * std::sqrt(scene.cfg.pattern_factor) /
                          (4.0 * std::numbers::pi * scene.geom.d0);
    return 1e-3 * std::sqrt(pilot_power) * single;
}

std::pair<double, double> null_recovery(double beta1_hat, double beta2_hat,
                                        const LisConfig& cfg) {
    return {beta1_hat + 0.5 / cfg.kx(), beta2_hat + 0.5 / cfg.ky()};
}

CandidateQuad candidate_solutions(double y0, double y_plus, double y_minus,
                                  double beta_hat, double offset) {
    // IEEE division produces inf for the vanishing-denominator candidates and
    // NaN when the numerator vanishes too; both are "invalid" downstream.
    return {{beta_hat + y_plus * offset / (y_plus + y0),
             beta_hat + y_plus * offset / (y_plus - y0),
             beta_hat + y_minus * offset / (-y_minus + y0),
             beta_hat + y_minus * offset / (-y_minus - y0)}};
}

double select_consistent(const CandidateQuad& quad) {
    double best_gap = std::numeric_limits<double>::infinity();
    double best_mid = 0.0;
    bool found = false;
    for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 4; ++j) {
            if (!std::isfinite(quad.c[i]) || !std::isfinite(quad.c[j])) continue;
            const double gap = std::abs(quad.c[i] - quad.c[j]);
            if (gap < best_gap) {
                best_gap = gap;
                best_mid = 0.5 * (quad.c[i] + quad.c[j]);
                found = true;
            }
        }
    }
    if (!found) throw EstimationError("all candidate pairs are degenerate");
    return best_mid;
}

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Magnitude of one probe observation given the probe base; the five-pilot
// round and the iterative loop share this through a callback so the same
// machinery serves full-surface and per-tile probing.
using ProbeMagnitude = std::function<double(double b1, double b2)>;

struct FiveProbeRound {
    double alpha1;
    double alpha2;
};

FiveProbeRound five_probe_round(const ProbeMagnitude& probe, double b1, double b2,
                                double v, double w, double y0) {
    const double yp1 = probe(b1 + v, b2);
    const double ym1 = probe(b1 - v, b2);
    const double yp2 = probe(b1, b2 + w);
    const double ym2 = probe(b1, b2 - w);
    return {clamp_unit(select_consistent(candidate_solutions(y0, yp1, ym1, b1, v))),
            clamp_unit(select_consistent(candidate_solutions(y0, yp2, ym2, b2, w)))};
}

EstimationResult iterate_probes(const ProbeMagnitude& probe, const EstimatorConfig& est,
                                std::pair<double, double> init) {
    EstimationResult res;
    double b1 = clamp_unit(init.first);
    double b2 = clamp_unit(init.second);
    res.trace.push_back({b1, b2});
    for (int k = 1; k <= est.k_max; ++k) {
        const double y0 = probe(b1, b2);
        const auto [a1, a2] = five_probe_round(probe, b1, b2, est.v, est.w, y0);
        const double step = (a1 - b1) * (a1 - b1) + (a2 - b2) * (a2 - b2);
        b1 = a1;
        b2 = a2;
        res.trace.push_back({b1, b2});
        res.iterations = k;
        res.pilots_used += 5;
        if (step < est.delta) {
            res.converged = true;
            break;
        }
    }
    res.alpha1_hat = b1;
    res.alpha2_hat = b2;
    return res;
}

ProbeMagnitude surface_probe(const ChannelScene& scene, const EstimatorConfig& est,
                             ChannelModel model, std::mt19937_64& rng) {
    return [&scene, &est, model, &rng](double b1, double b2) {
        const PhaseProfile probe = linear_phase_profile(scene.cfg, 0.0, b1, b2);
        return std::abs(observation_value(scene, model, probe, est.pilot_power, rng));
    };
}

} // namespace

EstimationResult noiseless_estimate(const ChannelScene& scene,
                                    const EstimatorConfig& est, double beta1_hat,
                                    double beta2_hat, ChannelModel model) {
    auto rng = pilot_rng(scene);
    const ProbeMagnitude probe = surface_probe(scene, est, model, rng);
    const double floor = null_magnitude_floor(scene, est.pilot_power);

    double b1 = beta1_hat;
    double b2 = beta2_hat;
    int pilots = 1;
    double y0 = probe(b1, b2);
    if (y0 < floor) {
        std::tie(b1, b2) = null_recovery(b1, b2, scene.cfg);
        y0 = probe(b1, b2);
        ++pilots;
        if (y0 < floor)
            throw EstimationError("observations remain null after recovery shift");
    }

    const auto [a1, a2] = five_probe_round(probe, b1, b2, est.v, est.w, y0);
    pilots += 4;

    EstimationResult res;
    res.alpha1_hat = a1;
    res.alpha2_hat = a2;
    res.iterations = 1;
    res.pilots_used = pilots;
    res.trace = {{beta1_hat, beta2_hat}, {a1, a2}};
    res.converged = true;
    return res;
}

EstimationResult iterative_estimate(const ChannelScene& scene,
                                    const EstimatorConfig& est,
                                    std::pair<double, double> init,
                                    std::mt19937_64& rng, ChannelModel model) {
    return iterate_probes(surface_probe(scene, est, model, rng), est, init);
}

EstimationResult iterative_estimate(const ChannelScene& scene,
                                    const EstimatorConfig& est,
                                    std::pair<double, double> init, ChannelModel model) {
    auto rng = pilot_rng(scene);
    return iterative_estimate(scene, est, init, rng, model);
}

std::pair<double, double> initialize_from_actives(const ChannelScene& scene,
                                                  double pilot_power,
                                                  std::mt19937_64& rng) {
    const Complex y1 = single_element_observation(scene, 0, 0, pilot_power, rng).value;
    const Complex y2 = single_element_observation(scene, 1, 0, pilot_power, rng).value;
    const Complex y3 = single_element_observation(scene, 0, 1, pilot_power, rng).value;
    const double k0dr = scene.cfg.wave_number() * scene.cfg.dr;
    return {clamp_unit(wrap_pi(std::arg(y2) - std::arg(y1)) / k0dr),
            clamp_unit(wrap_pi(std::arg(y3) - std::arg(y1)) / k0dr)};
}

EstimationResult proposed_estimate(const ChannelScene& scene, const EstimatorConfig& est,
                                   std::mt19937_64& rng, ChannelModel model) {
    const auto init = initialize_from_actives(scene, est.pilot_power, rng);
    EstimationResult res = iterative_estimate(scene, est, init, rng, model);
    res.pilots_used += 3;
    return res;
}

NearFieldEstimate near_field_estimate(const ChannelScene& scene, const TileGrid& tiles,
                                      const EstimatorConfig& est, std::mt19937_64& rng) {
    const auto init = initialize_from_actives(scene, est.pilot_power, rng);

    NearFieldEstimate out;
    out.per_tile.reserve(tiles.tile_count());
    out.beta0.reserve(tiles.tile_count());
    out.steering.reserve(tiles.tile_count());
    out.pilots_used = 3;

    for (int tx = 0; tx < tiles.n; ++tx) {
        for (int ty = 0; ty < tiles.n; ++ty) {
            // Probe offsets follow the tile's own aperture widths so the
            // array-factor numerator stays shift-invariant per tile.
            const TileView view = tile_view(scene.cfg, tiles, scene.geom, tx, ty);
            EstimatorConfig tile_est = est;
            tile_est.v = scene.cfg.wavelength / view.lx;
            tile_est.w = scene.cfg.wavelength / view.ly;

            const ProbeMagnitude probe = [&](double b1, double b2) {
                const PhaseProfile p =
                    tile_phase_profile(scene.cfg, tiles, tx, ty, {0.0, b1, b2});
                return std::abs(
                    observation_value(scene, ChannelModel::exact, p, est.pilot_power, rng));
            };

            EstimationResult r = iterate_probes(probe, tile_est, init);
            out.pilots_used += r.pilots_used;

            // One extra pilot reads the tile channel's phase at the estimate,
            // which co-phases the tiles in the assembled profile.
            const PhaseProfile at_estimate = tile_phase_profile(
                scene.cfg, tiles, tx, ty, {0.0, r.alpha1_hat, r.alpha2_hat});
            const Complex y = observation_value(scene, ChannelModel::exact, at_estimate,
                                                est.pilot_power, rng);
            const double beta0 = std::arg(y);
            ++out.pilots_used;

            out.steering.push_back({beta0, r.alpha1_hat, r.alpha2_hat});
            out.beta0.push_back(beta0);
            out.per_tile.push_back(std::move(r));
        }
    }

    out.profile = assemble_tile_profile(scene.cfg, tiles, out.steering);
    return out;
}

NearFieldEstimate near_field_estimate(const ChannelScene& scene, const TileGrid& tiles,
                                      const EstimatorConfig& est) {
    auto rng = pilot_rng(scene);
    return near_field_estimate(scene, tiles, est, rng);
}

EstimationResult baseline_grid_search(const ChannelScene& scene, int grid_n,
                                      int pilot_budget, double pilot_power,
                                      std::mt19937_64& rng) {
    if (grid_n < 1) throw std::invalid_argument("grid_n must be >= 1");
    if (grid_n * grid_n > pilot_budget)
        throw std::invalid_argument("grid_n^2 exceeds the pilot budget");

    std::vector<double> points(grid_n);
    if (grid_n == 1) {
        points[0] = 0.0;
    } else {
        for (int i = 0; i < grid_n; ++i)
            points[i] = -1.0 + 2.0 * i / (grid_n - 1);
    }

    double best = -1.0;
    double best_b1 = 0.0, best_b2 = 0.0;
    for (double b1 : points) {
        for (double b2 : points) {
            const PhaseProfile probe = linear_phase_profile(scene.cfg, 0.0, b1, b2);
            const double mag =
                std::abs(observation_value(scene, ChannelModel::exact, probe, pilot_power, rng));
            if (mag > best) {
                best = mag;
                best_b1 = b1;
                best_b2 = b2;
            }
        }
    }

    EstimationResult res;
    res.alpha1_hat = best_b1;
    res.alpha2_hat = best_b2;
    res.iterations = 1;
    res.pilots_used = grid_n * grid_n;
    res.trace = {{best_b1, best_b2}};
    res.converged = true;
    return res;
}

EstimationResult baseline_hierarchical(const ChannelScene& scene, int levels,
                                       double pilot_power, std::mt19937_64& rng) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const LisConfig& cfg = scene.cfg;

    // Sub-aperture sized so the first pattern null sits at ~2x the interval
    // half-width: wide enough that the farther probe never outshines the
    // nearer one, narrow enough to discriminate. Minimum 3 elements (a single
    // element has no angular discrimination).
    const auto aperture_for = [&cfg](double half_width) {
        int m = static_cast<int>(std::floor(cfg.wavelength / (2.0 * half_width * cfg.dr)));
        if (m % 2 == 0) --m;
        m = std::max(m, 3);
        return std::min({m, cfg.mx, cfg.my});
    };

    double c1 = 0.0, c2 = 0.0, half = 1.0;
    EstimationResult res;
    for (int level = 0; level < levels; ++level) {
        const int m = aperture_for(half);
        const auto magnitude = [&](double b1, double b2) {
            const PhaseProfile p = sub_aperture_profile(cfg, m, m, {0.0, b1, b2});
            return std::abs(
                observation_value(scene, ChannelModel::exact, p, pilot_power, rng));
        };
        const double left1 = magnitude(c1 - half / 2.0, c2);
        const double right1 = magnitude(c1 + half / 2.0, c2);
        c1 += (right1 > left1 ? half / 2.0 : -half / 2.0);
        const double left2 = magnitude(c1, c2 - half / 2.0);
        const double right2 = magnitude(c1, c2 + half / 2.0);
        c2 += (right2 > left2 ? half / 2.0 : -half / 2.0);
        half /= 2.0;
        res.pilots_used += 4;
        res.trace.push_back({c1, c2});
    }

    res.alpha1_hat = c1;
    res.alpha2_hat = c2;
    res.iterations = levels;
    res.converged = true;
    return res;
}

} // namespace lisbt
