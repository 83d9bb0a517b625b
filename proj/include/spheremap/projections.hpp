#pragma once

#include <variant>

#include "spheremap/delisle.hpp"
#include "spheremap/geo.hpp"

namespace spheremap {

enum class Pole { North, South };

/// Projection from one pole onto the plane tangent at the opposite pole.
/// Parallels map to concentric circles about the image of the opposite
/// pole (the origin); meridians map to straight lines through it. The
/// plane radius of the parallel at angular distance d from the tangent
/// point is 2 tan(d/2), so the map is conformal with linear scale
/// sec^2(d/2).
struct Stereographic {
  Pole projection_pole;
};

/// Projection from the sphere's center onto the plane tangent at
/// tangent_point; defined on the open hemisphere around it. Sends every
/// great circle in its domain to a straight line.
struct Gnomonic {
  GeoPoint tangent_point;
};

enum class CylindricalProfile { Equirectangular, Conformal, EqualArea };

/// x = lon * cos(ref_lat), y = g(lat) with g the profile function:
/// identity, ln tan(pi/4 + lat/2), or sin. Meridian images are vertical
/// lines, parallel images horizontal lines.
struct Cylindrical {
  CylindricalProfile profile;
  double ref_lat;

  explicit Cylindrical(CylindricalProfile p, double ref_lat_rad = 0.0)
      : profile(p), ref_lat(ref_lat_rad) {
    if (!(std::abs(ref_lat) < kHalfPi)) {
      throw Error("cylindrical ref_lat must lie in (-pi/2, pi/2)");
    }
  }
};

/// Delisle's equidistant conic; see ConicParams for the plane formulas.
struct EquidistantConic {
  ConicParams params;
};

using ProjectionSpec = std::variant<Stereographic, Gnomonic, Cylindrical, EquidistantConic>;

/// Throws OutOfDomain (naming the violated constraint) for points the
/// family cannot map: the stereographic projection pole, points a quarter
/// turn or more from a gnomonic tangent point, the poles of a conformal
/// cylinder, and latitudes at or beyond a conic apex.
PlanePoint forward(const ProjectionSpec& spec, const GeoPoint& p);

/// Right inverse of forward on its image: forward(spec, inverse(spec, q))
/// reproduces q within 1e-9. Throws OutOfImage for plane points no sphere
/// point attains.
GeoPoint inverse(const ProjectionSpec& spec, const PlanePoint& q);

/// True iff forward(spec, p) succeeds.
bool in_domain(const ProjectionSpec& spec, const GeoPoint& p);

/// True for the families whose plane image tears at lon = pi (cylindrical
/// and conic); their local metric is undefined across that cut.
bool has_antimeridian_cut(const ProjectionSpec& spec);

}  // namespace spheremap
