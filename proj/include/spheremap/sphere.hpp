#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spheremap/geo.hpp"

namespace spheremap {

/// (cos lat cos lon, cos lat sin lon, sin lat).
UnitVec3 geo_to_vec(const GeoPoint& p);

/// Inverse of geo_to_vec. Throws NonUnitVector if |v| deviates from 1 by
/// more than 1e-9.
GeoPoint vec_to_geo(const UnitVec3& v);

/// Geodesic (great-circle) distance in radians, in [0, pi]. Uses the
/// two-argument arctangent of cross magnitude over dot product, which stays
/// accurate near 0 and pi where arccos does not.
double great_circle_distance(const GeoPoint& p, const GeoPoint& q);

/// Point at parameter t in [0, 1] along the minor great-circle arc from p
/// to q, at arc length t * distance(p, q) from p. Throws DegenerateArc for
/// equal or antipodal endpoints (no unique arc).
GeoPoint geodesic_point(const GeoPoint& p, const GeoPoint& q, double t);

/// Spherical triangle with pairwise distinct, non-antipodal vertices; all
/// side lengths lie in (0, pi).
struct SphericalTriangle {
  GeoPoint a;
  GeoPoint b;
  GeoPoint c;

  SphericalTriangle(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c);
};

/// Interior angles at vertices A, B, C, each in (0, pi). Their sum exceeds
/// pi by the spherical excess. Computed from tangent vectors obtained by
/// projecting the neighbor vertices off the vertex direction, which keeps
/// small triangles accurate where the spherical law of cosines cancels.
std::array<double, 3> triangle_angles(const SphericalTriangle& t);

struct Midline {
  double de;       // distance between the midpoints of AB and BC
  double half_ac;  // half the distance from A to C
};

/// Midline comparison: on the sphere the segment joining the midpoints of
/// AB and BC is strictly longer than AC/2.
Midline triangle_midline(const SphericalTriangle& t);

/// n points of constant longitude, latitudes uniformly spaced over
/// lat_range (inclusive). Meridians are geodesics, so consecutive points
/// are equidistant on the sphere.
std::vector<GeoPoint> sample_meridian(double lon, std::pair<double, double> lat_range, int n);

/// n points of constant latitude, longitudes uniformly spaced (inclusive).
/// Throws PoleParallel at |lat| = pi/2, where the parallel degenerates to a
/// point (the foliation's two singular points).
std::vector<GeoPoint> sample_parallel(double lat, std::pair<double, double> lon_range, int n);

}  // namespace spheremap
