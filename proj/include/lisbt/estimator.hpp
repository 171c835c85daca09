// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Direction-cosine estimators. The five-pilot scheme probes the linear phase
// profile at (b1, b2) and at offsets +-v along beta1 and +-w along beta2,
// with v = 1/Kx, w = 1/Ky chosen so the array-factor numerator magnitude is
// invariant under the shift; magnitude ratios then yield closed-form
// candidates for the direction cosines. An iterative loop repeats the scheme
// against noisy observations, the three-pilot single-element sounding seeds
// it, and a per-tile variant covers the near field. Two plumbing baselines
// (exhaustive grid, interval bisection with widened beams) are included for
// comparison runs.

#pragma once

#include <array>
#include <utility>

#include "lisbt/scene.hpp"

namespace lisbt {

class EstimationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Probe offsets (v, w) = (1/Kx, 1/Ky) with Kx = Lx/lambda, Ky = Ly/lambda,
/// the smallest shifts keeping Kx*v and Ky*w integral.
std::pair<double, double> probe_offsets(const LisConfig& cfg);

struct EstimatorConfig {
    double v;
    double w;
    double delta = 1e-6; // convergence threshold on the squared iterate step
    int k_max = 4;       // iteration cap; 4 reproduces the 23-pilot budget
    double pilot_power = 0.1;
};

EstimatorConfig make_estimator_config(const LisConfig& cfg, double pilot_power,
                                      double delta = 1e-6, int k_max = 4);

/// Magnitude below which the center observation counts as a sinc null:
/// three orders of magnitude under the single-element level
/// sqrt(Pp)*lambda*sqrt(F)/(4*pi*d0).
double null_magnitude_floor(const ChannelScene& scene, double pilot_power);

/// Shifted probe base (b1 + 1/(2Kx), b2 + 1/(2Ky)), moving from a sinc null
/// to the nearest peak.
std::pair<double, double> null_recovery(double beta1_hat, double beta2_hat,
                                        const LisConfig& cfg);

/// The four closed-form candidates along one axis from the center magnitude
/// y0 and the two offset magnitudes:
///   c1/c2 = bh + y_plus*off  / ( y_plus  +- y0)
///   c3/c4 = bh + y_minus*off / (-y_minus +- y0)
/// A vanishing denominator leaves the affected candidate non-finite rather
/// than raising.
struct CandidateQuad {
    std::array<double, 4> c;
};

CandidateQuad candidate_solutions(double y0, double y_plus, double y_minus,
                                  double beta_hat, double offset);

/// Of the pairs (i, j), i in {c1, c2}, j in {c3, c4}, picks the one with the
/// smallest |c_i - c_j| (ties to the lexicographically first pair) and
/// returns the pair midpoint. Throws EstimationError when no finite pair
/// exists.
double select_consistent(const CandidateQuad& quad);

struct EstimationResult {
    double alpha1_hat = 0.0;
    double alpha2_hat = 0.0;
    int iterations = 0;
    int pilots_used = 0;
    /// Iterate history; trace.front() is the initial (beta1, beta2) pair.
    std::vector<std::pair<double, double>> trace;
    bool converged = false;
};

/// Single five-pilot estimation round from probe base (beta1_hat, beta2_hat).
/// Exact on observations from the sinc-form far-field model; on the exact
/// channel it inherits the far-field approximation error. When the center
/// observation sits below the null floor the probe base is first shifted by
/// null_recovery (one extra pilot). Estimates are clamped to [-1, 1].
EstimationResult noiseless_estimate(const ChannelScene& scene,
                                    const EstimatorConfig& est, double beta1_hat,
                                    double beta2_hat,
                                    ChannelModel model = ChannelModel::exact);

/// Iterative five-pilot estimation: each iteration re-centers the probes on
/// the previous estimate; stops when the squared step falls below delta or
/// after k_max iterations. converged reflects the delta test.
EstimationResult iterative_estimate(const ChannelScene& scene,
                                    const EstimatorConfig& est,
                                    std::pair<double, double> init,
                                    std::mt19937_64& rng,
                                    ChannelModel model = ChannelModel::exact);
EstimationResult iterative_estimate(const ChannelScene& scene,
                                    const EstimatorConfig& est,
                                    std::pair<double, double> init,
                                    ChannelModel model = ChannelModel::exact);

/// Three-pilot initial values: single-element soundings at (0,0), (1,0) and
/// (0,1) give alpha_i ~= wrap(phase difference)/(k0*dr). Unambiguous for
/// dr <= lambda/2. Results are clamped to [-1, 1].
std::pair<double, double> initialize_from_actives(const ChannelScene& scene,
                                                  double pilot_power,
                                                  std::mt19937_64& rng);

/// Full far-field pipeline: three-pilot initializer followed by the
/// iterative estimator; consumes exactly 3 + 5k pilots after k iterations.
EstimationResult proposed_estimate(const ChannelScene& scene,
                                   const EstimatorConfig& est, std::mt19937_64& rng,
                                   ChannelModel model = ChannelModel::exact);

struct NearFieldEstimate {
    std::vector<EstimationResult> per_tile; // x-major tile order
    std::vector<double> beta0;              // measured tile channel phases
    std::vector<LinearSteering> steering;   // assembled per-tile parameters
    PhaseProfile profile;                   // full-surface assembled profile
    int pilots_used = 0;
};

/// Near-field pipeline: one global three-pilot initialization, then the
/// iterative estimator per tile with observations restricted to that tile
/// (all other tiles deactivated), then one extra pilot per tile to read the
/// tile channel phase beta0. Per-tile probe offsets use the tile's own
/// aperture widths.
NearFieldEstimate near_field_estimate(const ChannelScene& scene, const TileGrid& tiles,
                                      const EstimatorConfig& est, std::mt19937_64& rng);
NearFieldEstimate near_field_estimate(const ChannelScene& scene, const TileGrid& tiles,
                                      const EstimatorConfig& est);

/// Exhaustive baseline: observes the grid_n x grid_n uniform grid over
/// [-1,1]^2 and returns the argmax point. Requires grid_n^2 <= pilot_budget.
EstimationResult baseline_grid_search(const ChannelScene& scene, int grid_n,
                                      int pilot_budget, double pilot_power,
                                      std::mt19937_64& rng);

/// Bisection baseline: per axis keeps an interval over [-1,1], probes the two
/// half-interval centers with a beam widened by steering only a centered
/// sub-aperture sized to the interval, keeps the stronger half and halves the
/// interval. 2 pilots per level per axis (4*levels total).
EstimationResult baseline_hierarchical(const ChannelScene& scene, int levels,
                                       double pilot_power, std::mt19937_64& rng);

} // namespace lisbt
