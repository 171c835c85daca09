// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/geometry.hpp"

#include <cmath>
#include <string>

namespace lisbt {

std::pair<double, double> direction_cosines(double theta, double phi) {
    if (theta < 0.0 || theta > std::numbers::pi / 2)
        throw std::domain_error("theta must lie in [0, pi/2]");
    if (phi < 0.0 || phi >= two_pi)
        throw std::domain_error("phi must lie in [0, 2*pi)");
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi)};
}

Eigen::Vector3d element_position(const LisConfig& cfg, int ix, int iy) {
    if (std::abs(ix) > cfg.half_x() || std::abs(iy) > cfg.half_y())
        throw std::out_of_range("element index (" + std::to_string(ix) + ", " +
                                std::to_string(iy) + ") outside the grid");
    return {ix * cfg.dr, iy * cfg.dr, 0.0};
}

double exact_distance(const LisConfig& cfg, const UserGeometry& geom, int ix, int iy) {
    if (std::abs(ix) > cfg.half_x() || std::abs(iy) > cfg.half_y())
        throw std::out_of_range("element index outside the grid");
    const double r2 = cfg.dr * cfg.dr * (double(ix) * ix + double(iy) * iy);
    const double proj = cfg.dr * (ix * geom.alpha1 + iy * geom.alpha2);
    return std::sqrt(geom.d0 * geom.d0 + r2 - 2.0 * geom.d0 * proj);
}

double fraunhofer_distance(const LisConfig& cfg) {
    const double d = cfg.diagonal();
    return 2.0 * d * d / cfg.wavelength;
}

namespace {

// Split m elements into n odd, center-symmetric counts summing to m.
// Base count is m/n rounded down to odd; the remainder is distributed in +2
// steps, middle tile first, then symmetric pairs moving outward.
AxisTiles partition_axis(int m, int n) {
    const int q = m / n;
    const int base = (q % 2 == 1) ? q : q - 1;
    std::vector<int> count(n, base);
    int increments = (m - n * base) / 2;
    const int mid = n / 2;
    if (increments % 2 == 1) {
        count[mid] += 2;
        --increments;
    }
    for (int dist = 1; increments > 0; ++dist) {
        count[mid - dist] += 2;
        count[mid + dist] += 2;
        increments -= 2;
    }

    AxisTiles out;
    out.count = std::move(count);
    out.first.resize(n);
    out.center.resize(n);
    int start = -(m - 1) / 2;
    for (int i = 0; i < n; ++i) {
        out.first[i] = start;
        out.center[i] = start + (out.count[i] - 1) / 2;
        start += out.count[i];
    }
    return out;
}

int max_count(const AxisTiles& t) {
    int m = 0;
    for (int c : t.count) m = std::max(m, c);
    return m;
}

} // namespace

TileGrid make_tile_grid(const LisConfig& cfg, double d0) {
    if (d0 <= 0.0) throw std::invalid_argument("d0 must be positive");
    const int n_limit = std::min(cfg.mx, cfg.my);
    for (int n = 1; n <= n_limit; n += 2) {
        AxisTiles px = partition_axis(cfg.mx, n);
        AxisTiles py = partition_axis(cfg.my, n);
        // Far-field check against the widest realized tile, not the nominal
        // Lx/n: identical whenever n divides the counts, stricter otherwise.
        const double wx = max_count(px) * cfg.dr;
        const double wy = max_count(py) * cfg.dr;
        if (d0 >= 2.0 * (wx * wx + wy * wy) / cfg.wavelength) {
            TileGrid grid;
            grid.n = n;
            grid.tile_lx = cfg.lx() / n;
            grid.tile_ly = cfg.ly() / n;
            grid.x = std::move(px);
            grid.y = std::move(py);
            return grid;
        }
    }
    throw TilingError("no odd tiling satisfies the per-tile far-field condition at d0 = " +
                      std::to_string(d0) + " m");
}

TileView tile_view(const LisConfig& cfg, const TileGrid& tiles,
                   const UserGeometry& geom, int tx, int ty) {
    if (tx < 0 || tx >= tiles.n || ty < 0 || ty >= tiles.n)
        throw std::out_of_range("tile index outside the grid");
    TileView v;
    v.mx = tiles.x.count[tx];
    v.my = tiles.y.count[ty];
    v.lx = v.mx * cfg.dr;
    v.ly = v.my * cfg.dr;
    v.center = {tiles.x.center[tx] * cfg.dr, tiles.y.center[ty] * cfg.dr, 0.0};
    const Eigen::Vector3d rel = geom.position() - v.center;
    v.distance = rel.norm();
    v.alpha1 = rel.x() / v.distance;
    v.alpha2 = rel.y() / v.distance;
    return v;
}

} // namespace lisbt
