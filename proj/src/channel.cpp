// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/channel.hpp"

namespace lisbt {

Complex los_element_channel(const LisConfig& cfg, const UserGeometry& geom, int ix,
                            int iy) {
    const double d = exact_distance(cfg, geom, ix, iy);
    const double mag = cfg.wavelength * std::sqrt(cfg.pattern_factor) / (4.0 * std::numbers::pi * d);
    return std::polar(mag, -cfg.wave_number() * d);
}

Complex exact_channel(const LisConfig& cfg, const UserGeometry& geom,
                      const PhaseProfile& profile) {
    const int rows = profile.rows();
    const int cols = profile.cols();
    if (profile.ix0 < -cfg.half_x() || profile.ix0 + rows - 1 > cfg.half_x() ||
        profile.iy0 < -cfg.half_y() || profile.iy0 + cols - 1 > cfg.half_y())
        throw std::invalid_argument("profile support exceeds the element grid");

    const double k0 = cfg.wave_number();
    const Eigen::ArrayXd ix =
        Eigen::ArrayXd::LinSpaced(rows, profile.ix0, profile.ix0 + rows - 1);
    const Eigen::ArrayXd iy =
        Eigen::ArrayXd::LinSpaced(cols, profile.iy0, profile.iy0 + cols - 1);
    // d^2 = d0^2 + dr^2(ix^2+iy^2) - 2 d0 dr (ix a1 + iy a2), separable in ix/iy
    const Eigen::ArrayXd fx =
        (cfg.dr * cfg.dr) * ix.square() - (2.0 * geom.d0 * cfg.dr * geom.alpha1) * ix;
    const Eigen::ArrayXd fy =
        (cfg.dr * cfg.dr) * iy.square() - (2.0 * geom.d0 * cfg.dr * geom.alpha2) * iy;
    const Eigen::ArrayXXd dist = (fx.replicate(1, cols) +
                                  fy.transpose().replicate(rows, 1) + geom.d0 * geom.d0)
                                     .sqrt();
    const Eigen::ArrayXXd arg = profile.phases - k0 * dist;
    const double re = (arg.cos() / dist).sum();
    const double im = (arg.sin() / dist).sum();
    const double pref = cfg.wavelength * std::sqrt(cfg.pattern_factor) / (4.0 * std::numbers::pi);
    return {pref * re, pref * im};
}

double received_power(const LisConfig& cfg, const UserGeometry& geom,
                      const PhaseProfile& profile, double pt) {
    if (pt < 0.0) throw std::invalid_argument("transmit power must be >= 0");
    return pt * std::norm(exact_channel(cfg, geom, profile));
}

namespace {

Complex far_field_prefactor(const LisConfig& cfg, double d0) {
    const double mag =
        std::sqrt(cfg.pattern_factor) * cfg.wavelength / (4.0 * std::numbers::pi * d0);
    return std::polar(mag, -cfg.wave_number() * d0);
}

} // namespace

FarFieldChannel far_field_channel(const LisConfig& cfg, const UserGeometry& geom,
                                  double beta1, double beta2) {
    const double half = cfg.wave_number() * cfg.dr / 2.0;
    const double gx = dirichlet_ratio(half * (geom.alpha1 - beta1), cfg.mx);
    const double gy = dirichlet_ratio(half * (geom.alpha2 - beta2), cfg.my);
    return {far_field_prefactor(cfg, geom.d0) * (gx * gy),
            geom.d0 >= fraunhofer_distance(cfg)};
}

FarFieldChannel far_field_channel_sinc(const LisConfig& cfg, const UserGeometry& geom,
                                       double beta1, double beta2) {
    const double hx = cfg.wave_number() * cfg.lx() / 2.0;
    const double hy = cfg.wave_number() * cfg.ly() / 2.0;
    const double gain = double(cfg.mx) * cfg.my * sinc(hx * (geom.alpha1 - beta1)) *
                        sinc(hy * (geom.alpha2 - beta2));
    return {far_field_prefactor(cfg, geom.d0) * gain,
            geom.d0 >= fraunhofer_distance(cfg)};
}

Complex tile_channel(const LisConfig& cfg, const TileGrid& tiles,
                     const UserGeometry& geom, int tx, int ty,
                     const LinearSteering& steer) {
    const TileView v = tile_view(cfg, tiles, geom, tx, ty);
    const double half = cfg.wave_number() * cfg.dr / 2.0;
    const double gx = dirichlet_ratio(half * (v.alpha1 - steer.beta1), v.mx);
    const double gy = dirichlet_ratio(half * (v.alpha2 - steer.beta2), v.my);
    return far_field_prefactor(cfg, v.distance) * (gx * gy) *
           std::polar(1.0, -steer.beta0);
}

Complex near_field_channel(const LisConfig& cfg, const TileGrid& tiles,
                           const UserGeometry& geom,
                           const std::vector<LinearSteering>& steering) {
    if (static_cast<int>(steering.size()) != tiles.tile_count())
        throw std::invalid_argument("expected one steering triple per tile");
    Complex total = 0.0;
    for (int tx = 0; tx < tiles.n; ++tx)
        for (int ty = 0; ty < tiles.n; ++ty)
            total += tile_channel(cfg, tiles, geom, tx, ty, steering[tiles.flat(tx, ty)]);
    return total;
}

std::vector<LinearSteering> aligned_tile_steering(const LisConfig& cfg,
                                                  const TileGrid& tiles,
                                                  const UserGeometry& geom) {
    std::vector<LinearSteering> out(tiles.tile_count());
    for (int tx = 0; tx < tiles.n; ++tx) {
        for (int ty = 0; ty < tiles.n; ++ty) {
            const TileView v = tile_view(cfg, tiles, geom, tx, ty);
            LinearSteering s{0.0, v.alpha1, v.alpha2};
            s.beta0 = std::arg(tile_channel(cfg, tiles, geom, tx, ty, s));
            out[tiles.flat(tx, ty)] = s;
        }
    }
    return out;
}

} // namespace lisbt
