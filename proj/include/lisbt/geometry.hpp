// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Coordinate system, element/tile positions, distances, direction cosines,
// and field-region classification.
//
// The surface lies in the x-y plane with its center at the origin. Elements
// sit on a regular grid with pitch dr and are addressed by center-symmetric
// integer indices (ix, iy), ix in [-(mx-1)/2, (mx-1)/2], likewise iy. All
// lengths are meters, all angles radians.

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "lisbt/units.hpp"

namespace lisbt {

/// Raised when no odd tile count can satisfy the per-tile far-field condition.
class TilingError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometry and radio constants of the phase-shifting surface.
///
/// mx, my must be odd so the element grid is center-symmetric. pattern_factor
/// is the per-element power radiation pattern F (dimensionless, isotropic 1).
struct LisConfig {
    double wavelength;
    int mx;
    int my;
    double dr;
    double le;
    double pattern_factor;

    LisConfig(double wavelength_, int mx_, int my_, double dr_, double le_,
              double pattern_factor_ = 1.0)
        : wavelength(wavelength_), mx(mx_), my(my_), dr(dr_), le(le_),
          pattern_factor(pattern_factor_) {
        if (wavelength <= 0.0) throw std::invalid_argument("wavelength must be positive");
        if (mx <= 0 || mx % 2 == 0) throw std::invalid_argument("mx must be an odd positive integer");
        if (my <= 0 || my % 2 == 0) throw std::invalid_argument("my must be an odd positive integer");
        if (dr <= 0.0) throw std::invalid_argument("element spacing dr must be positive");
        if (le <= 0.0 || le > dr) throw std::invalid_argument("element edge le must satisfy 0 < le <= dr");
        if (pattern_factor < 0.0) throw std::invalid_argument("pattern factor must be >= 0");
    }

    int half_x() const { return (mx - 1) / 2; }
    int half_y() const { return (my - 1) / 2; }
    long element_count() const { return static_cast<long>(mx) * my; }
    double lx() const { return mx * dr; }
    double ly() const { return my * dr; }
    double wave_number() const { return two_pi / wavelength; }
    double diagonal() const { return std::hypot(lx(), ly()); }
    /// Aperture widths in wavelengths; these set the sinc-pattern null spacing.
    double kx() const { return lx() / wavelength; }
    double ky() const { return ly() / wavelength; }
};

/// User position in spherical form: range d0, elevation theta in [0, pi/2],
/// azimuth phi in [0, 2*pi). alpha1/alpha2 are the direction cosines of the
/// user direction onto the surface axes -- the two quantities the estimators
/// recover.
struct UserGeometry {
    double d0;
    double theta;
    double phi;
    double alpha1;
    double alpha2;

    UserGeometry(double d0_, double theta_, double phi_)
        : d0(d0_), theta(theta_), phi(phi_) {
        if (d0 <= 0.0) throw std::invalid_argument("d0 must be positive");
        if (theta < 0.0 || theta > std::numbers::pi / 2)
            throw std::domain_error("theta must lie in [0, pi/2]");
        if (phi < 0.0 || phi >= two_pi)
            throw std::domain_error("phi must lie in [0, 2*pi)");
        alpha1 = std::sin(theta) * std::cos(phi);
        alpha2 = std::sin(theta) * std::sin(phi);
    }

    Eigen::Vector3d position() const {
        return {d0 * alpha1, d0 * alpha2, d0 * std::cos(theta)};
    }
};

/// Direction cosines (sin(theta)cos(phi), sin(theta)sin(phi)).
/// Throws std::domain_error for angles outside [0, pi/2] x [0, 2*pi).
std::pair<double, double> direction_cosines(double theta, double phi);

/// Cartesian position of element (ix, iy): (ix*dr, iy*dr, 0).
/// Throws std::out_of_range for indices beyond the grid.
Eigen::Vector3d element_position(const LisConfig& cfg, int ix, int iy);

/// Element-to-user distance by the cosine rule:
///   sqrt(d0^2 + dr^2(ix^2+iy^2) - 2 d0 dr (ix*alpha1 + iy*alpha2)).
/// Equals the Euclidean distance between element and user exactly.
double exact_distance(const LisConfig& cfg, const UserGeometry& geom, int ix, int iy);

/// Far-field (Fraunhofer) boundary 2*D^2/lambda, D the surface diagonal.
double fraunhofer_distance(const LisConfig& cfg);

/// Center-symmetric partition of one grid axis into n odd element counts.
/// first[i] is the first centered element index of segment i, center[i] the
/// index of its middle element.
struct AxisTiles {
    std::vector<int> count;
    std::vector<int> first;
    std::vector<int> center;
};

/// Partition of the surface into n x n tiles, each small enough that the
/// far-field condition d0 >= 2*D_T^2/lambda holds per tile. tile_lx/tile_ly
/// are the nominal segment lengths Lx/n, Ly/n; the realized per-tile element
/// counts differ by at most +-4 elements when n does not divide mx or my.
///
/// Tiles are addressed by (tx, ty) in [0, n) x [0, n), flattened x-major.
struct TileGrid {
    int n;
    double tile_lx;
    double tile_ly;
    AxisTiles x;
    AxisTiles y;

    int tile_count() const { return n * n; }
    int flat(int tx, int ty) const { return tx * n + ty; }
};

/// Smallest odd n x n tiling whose tiles all satisfy the far-field condition
/// at range d0. n = 1 when d0 is already beyond the surface's Fraunhofer
/// distance. Throws TilingError when even single-element tiles fail.
TileGrid make_tile_grid(const LisConfig& cfg, double d0);

/// Tile geometry as seen from the user: center position, center distance,
/// and the direction cosines of the user direction relative to the tile
/// center (the per-tile analogues of UserGeometry::alpha1/alpha2).
struct TileView {
    Eigen::Vector3d center;
    double distance;
    double alpha1;
    double alpha2;
    int mx;
    int my;
    double lx;
    double ly;
};

TileView tile_view(const LisConfig& cfg, const TileGrid& tiles,
                   const UserGeometry& geom, int tx, int ty);

} // namespace lisbt
