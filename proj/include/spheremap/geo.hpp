#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "spheremap/errors.hpp"

namespace spheremap {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Point of the plane; sphere radius is 1, so plane lengths are in radians
/// of arc at true scale.
using PlanePoint = Eigen::Vector2d;

/// Unit-norm 3-vector carrying a sphere point (x^2 + y^2 + z^2 = 1 within
/// 1e-12 whenever produced by this library).
using UnitVec3 = Eigen::Vector3d;

/// Position on the unit sphere. Latitude is held in [-pi/2, pi/2],
/// longitude normalized to (-pi, pi] on construction; at the poles the
/// longitude is canonicalized to 0 so equal points compare equal.
class GeoPoint {
 public:
  GeoPoint(double lat_rad, double lon_rad) {
    if (std::abs(lat_rad) > kHalfPi + 1e-12 || !std::isfinite(lat_rad)) {
      throw Error("latitude out of range [-pi/2, pi/2]");
    }
    if (!std::isfinite(lon_rad)) {
      throw Error("longitude must be finite");
    }
    lat_ = std::clamp(lat_rad, -kHalfPi, kHalfPi);
    double lon = std::remainder(lon_rad, kTwoPi);  // [-pi, pi]
    if (lon <= -kPi) lon += kTwoPi;                // (-pi, pi]
    if (lon == 0.0) lon = 0.0;                     // drop negative zero
    lon_ = lon;
    if (lat_ == kHalfPi || lat_ == -kHalfPi) lon_ = 0.0;
  }

  double lat() const { return lat_; }
  double lon() const { return lon_; }

  static GeoPoint from_degrees(double lat_deg, double lon_deg) {
    return GeoPoint(deg_to_rad(lat_deg), deg_to_rad(lon_deg));
  }

 private:
  double lat_;
  double lon_;
};

/// Latitude/longitude window on the sphere. Longitude bounds are kept as
/// given (they may leave (-pi, pi]; sampling normalizes per point), with
/// lon span constrained to (0, 2*pi].
struct Region {
  double lat_min;
  double lat_max;
  double lon_min;
  double lon_max;

  Region(double lat_min_rad, double lat_max_rad, double lon_min_rad,
         double lon_max_rad)
      : lat_min(lat_min_rad),
        lat_max(lat_max_rad),
        lon_min(lon_min_rad),
        lon_max(lon_max_rad) {
    if (!(lat_min < lat_max) || lat_min < -kHalfPi - 1e-12 ||
        lat_max > kHalfPi + 1e-12) {
      throw Error("region latitude bounds must satisfy -pi/2 <= lat_min < lat_max <= pi/2");
    }
    const double span = lon_max - lon_min;
    if (!(span > 0.0) || span > kTwoPi + 1e-12) {
      throw Error("region longitude span must lie in (0, 2*pi]");
    }
  }

  static Region from_degrees(double lat_min_deg, double lat_max_deg,
                             double lon_min_deg, double lon_max_deg) {
    return Region(deg_to_rad(lat_min_deg), deg_to_rad(lat_max_deg),
                  deg_to_rad(lon_min_deg), deg_to_rad(lon_max_deg));
  }
};

}  // namespace spheremap
