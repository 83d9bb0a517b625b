#include "spheremap/sphere.hpp"

#include <Eigen/Geometry>
#include <cmath>

namespace spheremap {

UnitVec3 geo_to_vec(const GeoPoint& p) {
  // cos(pi/2) rounds to 6.1e-17, not 0; pin the poles to the exact axis so
  // hemisphere boundaries (gnomonic domain) classify exactly.
  const double cl = std::abs(p.lat()) == kHalfPi ? 0.0 : std::cos(p.lat());
  return {cl * std::cos(p.lon()), cl * std::sin(p.lon()), std::sin(p.lat())};
}

GeoPoint vec_to_geo(const UnitVec3& v) {
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw NonUnitVector("vec_to_geo requires a unit vector (|norm - 1| <= 1e-9)");
  }
  const double hyp = std::hypot(v.x(), v.y());
  if (hyp == 0.0) {
    return GeoPoint(v.z() > 0.0 ? kHalfPi : -kHalfPi, 0.0);
  }
  return GeoPoint(std::atan2(v.z(), hyp), std::atan2(v.y(), v.x()));
}

namespace {

double angle_between(const UnitVec3& u, const UnitVec3& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

}  // namespace

double great_circle_distance(const GeoPoint& p, const GeoPoint& q) {
  return angle_between(geo_to_vec(p), geo_to_vec(q));
}

GeoPoint geodesic_point(const GeoPoint& p, const GeoPoint& q, double t) {
  const UnitVec3 u = geo_to_vec(p);
  const UnitVec3 v = geo_to_vec(q);
  const double ang = angle_between(u, v);
  if (ang < 1e-12) throw DegenerateArc("geodesic endpoints coincide");
  if (ang > kPi - 1e-12) throw DegenerateArc("geodesic endpoints are antipodal");
  // Slerp; endpoints are reproduced exactly at t = 0 and t = 1.
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  const double s = std::sin(ang);
  const UnitVec3 w = (std::sin((1.0 - t) * ang) * u + std::sin(t * ang) * v) / s;
  return vec_to_geo(w.normalized());
}

SphericalTriangle::SphericalTriangle(const GeoPoint& a_, const GeoPoint& b_, const GeoPoint& c_)
    : a(a_), b(b_), c(c_) {
  const double ab = great_circle_distance(a, b);
  const double bc = great_circle_distance(b, c);
  const double ca = great_circle_distance(c, a);
  for (double side : {ab, bc, ca}) {
    if (side <= 0.0) throw DegenerateTriangle("two triangle vertices coincide");
    if (side >= kPi) throw DegenerateTriangle("two triangle vertices are antipodal");
  }
}

namespace {

// Angle at vertex P between the arcs toward Q and R, from the tangent
// vectors of the two arcs at P.
double vertex_angle(const UnitVec3& p, const UnitVec3& q, const UnitVec3& r) {
  const Eigen::Vector3d tq = q - p.dot(q) * p;
  const Eigen::Vector3d tr = r - p.dot(r) * p;
  return std::atan2(tq.cross(tr).norm(), tq.dot(tr));
}

UnitVec3 arc_midpoint(const UnitVec3& u, const UnitVec3& v) {
  return (u + v).normalized();
}

}  // namespace

std::array<double, 3> triangle_angles(const SphericalTriangle& t) {
  const UnitVec3 va = geo_to_vec(t.a);
  const UnitVec3 vb = geo_to_vec(t.b);
  const UnitVec3 vc = geo_to_vec(t.c);
  return {vertex_angle(va, vb, vc), vertex_angle(vb, vc, va), vertex_angle(vc, va, vb)};
}

Midline triangle_midline(const SphericalTriangle& t) {
  const UnitVec3 va = geo_to_vec(t.a);
  const UnitVec3 vb = geo_to_vec(t.b);
  const UnitVec3 vc = geo_to_vec(t.c);
  const UnitVec3 d = arc_midpoint(va, vb);
  const UnitVec3 e = arc_midpoint(vb, vc);
  return {std::atan2(d.cross(e).norm(), d.dot(e)),
          0.5 * std::atan2(va.cross(vc).norm(), va.dot(vc))};
}

std::vector<GeoPoint> sample_meridian(double lon, std::pair<double, double> lat_range, int n) {
  if (n < 2) throw BadSampleCount("meridian sampling needs n >= 2");
  const auto [lat0, lat1] = lat_range;
  if (std::abs(lat0) > kHalfPi + 1e-12 || std::abs(lat1) > kHalfPi + 1e-12) {
    throw Error("meridian latitude range must lie within [-pi/2, pi/2]");
  }
  std::vector<GeoPoint> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    pts.emplace_back(lat0 + t * (lat1 - lat0), lon);
  }
  return pts;
}

std::vector<GeoPoint> sample_parallel(double lat, std::pair<double, double> lon_range, int n) {
  if (n < 2) throw BadSampleCount("parallel sampling needs n >= 2");
  if (std::abs(lat) >= kHalfPi) {
    throw PoleParallel("parallel degenerates to a point at |lat| = pi/2");
  }
  const auto [lon0, lon1] = lon_range;
  std::vector<GeoPoint> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    pts.emplace_back(lat, lon0 + t * (lon1 - lon0));
  }
  return pts;
}

}  // namespace spheremap
