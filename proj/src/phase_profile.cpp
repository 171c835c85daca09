// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/phase_profile.hpp"

namespace lisbt {

namespace {

// Linear-form phases over an index block, local indices measured from
// (cx, cy). Stored wrapped to [0, 2*pi); the represented weight is
// e^{-j(k0*dr*(lx*beta1 + ly*beta2) + beta0)}.
Eigen::ArrayXXd linear_block(const LisConfig& cfg, int first_x, int nx, int first_y,
                             int ny, int cx, int cy, const LinearSteering& s) {
    const double k0dr = cfg.wave_number() * cfg.dr;
    Eigen::ArrayXXd out(nx, ny);
    for (int i = 0; i < nx; ++i) {
        const double px = k0dr * (first_x + i - cx) * s.beta1;
        for (int j = 0; j < ny; ++j) {
            const double py = k0dr * (first_y + j - cy) * s.beta2;
            out(i, j) = wrap_two_pi(-(px + py + s.beta0));
        }
    }
    return out;
}

} // namespace

PhaseProfile full_profile(const LisConfig& cfg, Eigen::ArrayXXd phases) {
    if (phases.rows() != cfg.mx || phases.cols() != cfg.my)
        throw std::invalid_argument("phase matrix does not match the element grid");
    return {std::move(phases), -cfg.half_x(), -cfg.half_y(), std::nullopt};
}

PhaseProfile uniform_profile(const LisConfig& cfg, double phase) {
    return {Eigen::ArrayXXd::Constant(cfg.mx, cfg.my, wrap_two_pi(phase)),
            -cfg.half_x(), -cfg.half_y(), std::nullopt};
}

PhaseProfile linear_phase_profile(const LisConfig& cfg, double beta0, double beta1,
                                  double beta2) {
    PhaseProfile p;
    p.phases = linear_block(cfg, -cfg.half_x(), cfg.mx, -cfg.half_y(), cfg.my, 0, 0,
                            {beta0, beta1, beta2});
    p.ix0 = -cfg.half_x();
    p.iy0 = -cfg.half_y();
    p.steering = LinearSteering{beta0, beta1, beta2};
    return p;
}

PhaseProfile optimal_phase_profile(const LisConfig& cfg, const UserGeometry& geom) {
    const double k0 = cfg.wave_number();
    Eigen::ArrayXXd phases(cfg.mx, cfg.my);
    for (int i = 0; i < cfg.mx; ++i)
        for (int j = 0; j < cfg.my; ++j)
            phases(i, j) = wrap_two_pi(
                k0 * exact_distance(cfg, geom, i - cfg.half_x(), j - cfg.half_y()));
    return {std::move(phases), -cfg.half_x(), -cfg.half_y(), std::nullopt};
}

PhaseProfile single_element_profile(const LisConfig& cfg, int ix, int iy) {
    if (std::abs(ix) > cfg.half_x() || std::abs(iy) > cfg.half_y())
        throw std::out_of_range("element index outside the grid");
    return {Eigen::ArrayXXd::Zero(1, 1), ix, iy, LinearSteering{}};
}

PhaseProfile sub_aperture_profile(const LisConfig& cfg, int m_x, int m_y,
                                  const LinearSteering& steer) {
    if (m_x <= 0 || m_x % 2 == 0 || m_x > cfg.mx || m_y <= 0 || m_y % 2 == 0 ||
        m_y > cfg.my)
        throw std::invalid_argument("sub-aperture counts must be odd and fit the grid");
    PhaseProfile p;
    p.ix0 = -(m_x - 1) / 2;
    p.iy0 = -(m_y - 1) / 2;
    p.phases = linear_block(cfg, p.ix0, m_x, p.iy0, m_y, 0, 0, steer);
    p.steering = steer;
    return p;
}

PhaseProfile tile_phase_profile(const LisConfig& cfg, const TileGrid& tiles, int tx,
                                int ty, const LinearSteering& steer) {
    if (tx < 0 || tx >= tiles.n || ty < 0 || ty >= tiles.n)
        throw std::out_of_range("tile index outside the grid");
    PhaseProfile p;
    p.ix0 = tiles.x.first[tx];
    p.iy0 = tiles.y.first[ty];
    p.phases = linear_block(cfg, p.ix0, tiles.x.count[tx], p.iy0, tiles.y.count[ty],
                            tiles.x.center[tx], tiles.y.center[ty], steer);
    p.steering = steer;
    return p;
}

PhaseProfile assemble_tile_profile(const LisConfig& cfg, const TileGrid& tiles,
                                   const std::vector<LinearSteering>& steering) {
    if (static_cast<int>(steering.size()) != tiles.tile_count())
        throw std::invalid_argument("expected one steering triple per tile");
    Eigen::ArrayXXd phases(cfg.mx, cfg.my);
    for (int tx = 0; tx < tiles.n; ++tx) {
        for (int ty = 0; ty < tiles.n; ++ty) {
            const auto& s = steering[tiles.flat(tx, ty)];
            phases.block(tiles.x.first[tx] + cfg.half_x(),
                         tiles.y.first[ty] + cfg.half_y(), tiles.x.count[tx],
                         tiles.y.count[ty]) =
                linear_block(cfg, tiles.x.first[tx], tiles.x.count[tx],
                             tiles.y.first[ty], tiles.y.count[ty],
                             tiles.x.center[tx], tiles.y.center[ty], s);
        }
    }
    return {std::move(phases), -cfg.half_x(), -cfg.half_y(), std::nullopt};
}

} // namespace lisbt
