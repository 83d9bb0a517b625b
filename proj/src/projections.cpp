#include "spheremap/projections.hpp"

#include <cmath>

#include "spheremap/sphere.hpp"

namespace spheremap {

namespace {

struct TangentFrame {
  UnitVec3 up;
  Eigen::Vector3d east;
  Eigen::Vector3d north;
};

TangentFrame frame_at(const GeoPoint& t) {
  // Pin the poles exactly, matching geo_to_vec, so the hemisphere boundary
  // of a polar gnomonic classifies exactly.
  const double sl = std::sin(t.lat());
  const double cl = std::abs(t.lat()) == kHalfPi ? 0.0 : std::cos(t.lat());
  const double so = std::sin(t.lon()), co = std::cos(t.lon());
  return {{cl * co, cl * so, sl}, {-so, co, 0.0}, {-sl * co, -sl * so, cl}};
}

double profile_y(CylindricalProfile profile, double lat) {
  switch (profile) {
    case CylindricalProfile::Equirectangular:
      return lat;
    case CylindricalProfile::Conformal:
      return std::asinh(std::tan(lat));
    case CylindricalProfile::EqualArea:
      return std::sin(lat);
  }
  throw Error("unreachable cylindrical profile");
}

struct ForwardVisitor {
  const GeoPoint& p;

  PlanePoint operator()(const Stereographic& s) const {
    const UnitVec3 v = geo_to_vec(p);
    if (s.projection_pole == Pole::North) {
      if (p.lat() >= kHalfPi) {
        throw OutOfDomain("stereographic: the North projection pole has no image");
      }
      const double t = 2.0 / (1.0 - v.z());
      return {t * v.x(), t * v.y()};
    }
    if (p.lat() <= -kHalfPi) {
      throw OutOfDomain("stereographic: the South projection pole has no image");
    }
    const double t = 2.0 / (1.0 + v.z());
    return {t * v.x(), t * v.y()};
  }

  PlanePoint operator()(const Gnomonic& g) const {
    const TangentFrame f = frame_at(g.tangent_point);
    const UnitVec3 v = geo_to_vec(p);
    const double c = v.dot(f.up);
    if (!(c > 0.0)) {
      throw OutOfDomain("gnomonic: angular distance from the tangent point must be < pi/2");
    }
    const Eigen::Vector3d q = v / c;
    return {q.dot(f.east), q.dot(f.north)};
  }

  PlanePoint operator()(const Cylindrical& c) const {
    if (c.profile == CylindricalProfile::Conformal && std::abs(p.lat()) >= kHalfPi) {
      throw OutOfDomain("conformal cylindrical: the poles have no image");
    }
    return {p.lon() * std::cos(c.ref_lat), profile_y(c.profile, p.lat())};
  }

  PlanePoint operator()(const EquidistantConic& ec) const {
    const ConicParams& cp = ec.params;
    if (p.lat() >= cp.phi1 + cp.rho1) {
      throw OutOfDomain("conic: latitude at or beyond the cone apex");
    }
    const double rho = cp.rho1 + (cp.phi1 - p.lat());
    const double a = cp.n * p.lon();
    return {rho * std::sin(a), cp.rho1 - rho * std::cos(a)};
  }
};

struct InverseVisitor {
  const PlanePoint& q;

  GeoPoint operator()(const Stereographic& s) const {
    const double r2 = q.squaredNorm();
    const double z = s.projection_pole == Pole::North ? (r2 - 4.0) / (r2 + 4.0)
                                                      : (4.0 - r2) / (r2 + 4.0);
    const double scale = s.projection_pole == Pole::North ? (1.0 - z) / 2.0 : (1.0 + z) / 2.0;
    return vec_to_geo(UnitVec3(q.x() * scale, q.y() * scale, z).normalized());
  }

  GeoPoint operator()(const Gnomonic& g) const {
    const TangentFrame f = frame_at(g.tangent_point);
    const Eigen::Vector3d v = f.up + q.x() * f.east + q.y() * f.north;
    return vec_to_geo(v.normalized());
  }

  GeoPoint operator()(const Cylindrical& c) const {
    const double lon = q.x() / std::cos(c.ref_lat);
    if (std::abs(lon) > kPi + 1e-12) {
      throw OutOfImage("cylindrical: x maps to a longitude outside (-pi, pi]");
    }
    double lat;
    switch (c.profile) {
      case CylindricalProfile::Equirectangular:
        if (std::abs(q.y()) > kHalfPi + 1e-12) {
          throw OutOfImage("equirectangular: |y| exceeds pi/2");
        }
        lat = std::clamp(q.y(), -kHalfPi, kHalfPi);
        break;
      case CylindricalProfile::Conformal:
        lat = std::atan(std::sinh(q.y()));
        break;
      case CylindricalProfile::EqualArea:
        if (std::abs(q.y()) > 1.0 + 1e-12) {
          throw OutOfImage("equal-area cylindrical: |y| exceeds the span 1");
        }
        lat = std::asin(std::clamp(q.y(), -1.0, 1.0));
        break;
      default:
        throw Error("unreachable cylindrical profile");
    }
    return GeoPoint(lat, lon);
  }

  GeoPoint operator()(const EquidistantConic& ec) const {
    const ConicParams& cp = ec.params;
    const double dy = cp.rho1 - q.y();
    const double rho = std::hypot(q.x(), dy);
    if (rho == 0.0) {
      throw OutOfImage("conic: the apex point is not attained by any latitude");
    }
    const double lon = std::atan2(q.x(), dy) / cp.n;
    if (std::abs(lon) > kPi + 1e-12) {
      throw OutOfImage("conic: plane angle about the apex outside the n*lon range");
    }
    const double lat = cp.phi1 + cp.rho1 - rho;
    if (lat < -kHalfPi - 1e-12) {
      throw OutOfImage("conic: radius beyond the southernmost parallel");
    }
    return GeoPoint(std::max(lat, -kHalfPi), lon);
  }
};

struct DomainVisitor {
  const GeoPoint& p;

  bool operator()(const Stereographic& s) const {
    return s.projection_pole == Pole::North ? p.lat() < kHalfPi : p.lat() > -kHalfPi;
  }
  bool operator()(const Gnomonic& g) const {
    return geo_to_vec(p).dot(geo_to_vec(g.tangent_point)) > 0.0;
  }
  bool operator()(const Cylindrical& c) const {
    return c.profile != CylindricalProfile::Conformal || std::abs(p.lat()) < kHalfPi;
  }
  bool operator()(const EquidistantConic& ec) const {
    return p.lat() < ec.params.phi1 + ec.params.rho1;
  }
};

}  // namespace

PlanePoint forward(const ProjectionSpec& spec, const GeoPoint& p) {
  return std::visit(ForwardVisitor{p}, spec);
}

GeoPoint inverse(const ProjectionSpec& spec, const PlanePoint& q) {
  if (!q.allFinite()) throw OutOfImage("plane point must be finite");
  return std::visit(InverseVisitor{q}, spec);
}

bool in_domain(const ProjectionSpec& spec, const GeoPoint& p) {
  return std::visit(DomainVisitor{p}, spec);
}

bool has_antimeridian_cut(const ProjectionSpec& spec) {
  return std::holds_alternative<Cylindrical>(spec) ||
         std::holds_alternative<EquidistantConic>(spec);
}

}  // namespace spheremap
