#include <doctest.h>

#include "spheremap/fitting.hpp"
#include "spheremap/projections.hpp"
#include "spheremap/sphere.hpp"
#include "test_util.hpp"

using namespace spheremap;
using namespace spheremap::testing;

namespace {

const ConicParams kRussia = build_conic(deg_to_rad(47.5), deg_to_rad(62.5));

std::vector<PlanePoint> project_all(const ProjectionSpec& spec,
                                    const std::vector<GeoPoint>& pts) {
  std::vector<PlanePoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(forward(spec, p));
  return out;
}

double line_distance_from(const LineFit& fit, const PlanePoint& q) {
  const PlanePoint d = q - fit.point;
  return std::abs(d.x() * fit.direction.y() - d.y() * fit.direction.x());
}

}  // namespace

TEST_CASE("forward anchor values") {
  const ProjectionSpec gnom = Gnomonic{GeoPoint::from_degrees(-90.0, 0.0)};
  const PlanePoint origin = forward(gnom, GeoPoint::from_degrees(-90.0, 0.0));
  CHECK(origin.norm() < 1e-15);

  // Equator under the pole stereographic lands at radius 2*tan(45 deg).
  const ProjectionSpec stereo = Stereographic{Pole::North};
  CHECK(forward(stereo, GeoPoint(0.0, 0.0)).norm() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(forward(stereo, GeoPoint(0.0, 1.3)).norm() == doctest::Approx(2.0).epsilon(1e-14));

  const ProjectionSpec mercator = Cylindrical(CylindricalProfile::Conformal);
  const PlanePoint m = forward(mercator, GeoPoint::from_degrees(0.0, 30.0));
  CHECK(m.x() == doctest::Approx(kPi / 6.0).epsilon(1e-14));
  CHECK(m.y() == doctest::Approx(0.0));
}

TEST_CASE("stereographic radius follows 2 tan(d/2)") {
  const ProjectionSpec stereo = Stereographic{Pole::North};
  for (double lat_deg : {-80.0, -45.0, -10.0, 0.0, 30.0, 60.0, 85.0}) {
    const double d = deg_to_rad(lat_deg + 90.0);  // distance from the South pole
    const double r = forward(stereo, GeoPoint::from_degrees(lat_deg, 17.0)).norm();
    CHECK(r == doctest::Approx(2.0 * std::tan(d / 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("forward domain errors name the constraint") {
  CHECK_THROWS_AS(forward(Stereographic{Pole::North}, GeoPoint(kHalfPi, 0.0)), OutOfDomain);
  CHECK_THROWS_AS(forward(Stereographic{Pole::South}, GeoPoint(-kHalfPi, 0.0)), OutOfDomain);
  CHECK_THROWS_AS(
      forward(Gnomonic{GeoPoint::from_degrees(-90, 0)}, GeoPoint::from_degrees(0, 20)),
      OutOfDomain);
  CHECK_THROWS_AS(forward(Cylindrical(CylindricalProfile::Conformal), GeoPoint(kHalfPi, 0.0)),
                  OutOfDomain);
  // The conic apex sits beyond the pole, so every latitude is mappable.
  CHECK_NOTHROW(forward(EquidistantConic{kRussia}, GeoPoint(kHalfPi, 0.0)));
  CHECK_NOTHROW(forward(EquidistantConic{kRussia}, GeoPoint::from_degrees(89.9, 0.0)));
}

TEST_CASE("in_domain matches forward") {
  const ProjectionSpec gnom = Gnomonic{GeoPoint::from_degrees(-90, 0)};
  CHECK_FALSE(in_domain(gnom, GeoPoint(0.0, 0.3)));  // a quarter turn away
  CHECK(in_domain(gnom, GeoPoint::from_degrees(-0.001, 17.0)));

  CHECK_FALSE(in_domain(Stereographic{Pole::North}, GeoPoint(kHalfPi, 0.0)));
  CHECK(in_domain(Stereographic{Pole::North}, GeoPoint(-kHalfPi, 0.0)));

  CHECK(in_domain(EquidistantConic{kRussia}, GeoPoint::from_degrees(80.0, 0.0)));
  CHECK(in_domain(EquidistantConic{kRussia}, GeoPoint::from_degrees(90.0, 0.0)));

  auto rng = make_rng(29);
  const std::vector<ProjectionSpec> specs = {
      Stereographic{Pole::North}, Stereographic{Pole::South},
      Gnomonic{GeoPoint::from_degrees(55, 10)}, Cylindrical(CylindricalProfile::Conformal),
      EquidistantConic{kRussia}};
  for (const auto& spec : specs) {
    for (int i = 0; i < 500; ++i) {
      const GeoPoint p = random_point(rng);
      if (in_domain(spec, p)) {
        CHECK_NOTHROW(forward(spec, p));
      } else {
        CHECK_THROWS_AS(forward(spec, p), OutOfDomain);
      }
    }
  }
}

TEST_CASE("inverse anchor values") {
  const ProjectionSpec gnom = Gnomonic{GeoPoint::from_degrees(-90, 0)};
  const GeoPoint south = inverse(gnom, PlanePoint(0.0, 0.0));
  CHECK(south.lat() == doctest::Approx(-kHalfPi));
  CHECK(south.lon() == 0.0);

  const ProjectionSpec plate = Cylindrical(CylindricalProfile::Equirectangular);
  const GeoPoint p = inverse(plate, PlanePoint(0.7, -0.3));
  CHECK(p.lat() == doctest::Approx(-0.3));
  CHECK(p.lon() == doctest::Approx(0.7));
}

TEST_CASE("inverse rejects points outside the image") {
  CHECK_THROWS_AS(inverse(Cylindrical(CylindricalProfile::EqualArea), PlanePoint(0.0, 1.5)),
                  OutOfImage);
  CHECK_THROWS_AS(
      inverse(Cylindrical(CylindricalProfile::Equirectangular), PlanePoint(0.0, 2.0)),
      OutOfImage);
  CHECK_THROWS_AS(
      inverse(Cylindrical(CylindricalProfile::Equirectangular), PlanePoint(4.0, 0.0)),
      OutOfImage);

  const ProjectionSpec conic = EquidistantConic{kRussia};
  // The apex itself and plane angles beyond n * pi are unreachable.
  CHECK_THROWS_AS(inverse(conic, PlanePoint(0.0, kRussia.rho1)), OutOfImage);
  CHECK_THROWS_AS(inverse(conic, PlanePoint(0.0, 2.0 * kRussia.rho1)), OutOfImage);
  // A radius larger than rho(-pi/2) undershoots every latitude.
  CHECK_THROWS_AS(inverse(conic, PlanePoint(0.0, kRussia.rho1 - 5.0)), OutOfImage);
}

TEST_CASE("forward/inverse round trips on 1e4 random in-domain points per spec") {
  auto rng = make_rng(31);
  const std::vector<ProjectionSpec> specs = {
      Stereographic{Pole::North},
      Stereographic{Pole::South},
      Gnomonic{GeoPoint::from_degrees(-90, 0)},
      Gnomonic{GeoPoint::from_degrees(40, -20)},
      Cylindrical(CylindricalProfile::Equirectangular),
      Cylindrical(CylindricalProfile::Conformal, deg_to_rad(30.0)),
      Cylindrical(CylindricalProfile::EqualArea),
      EquidistantConic{kRussia},
  };
  for (const auto& spec : specs) {
    int done = 0;
    while (done < 10000) {
      const GeoPoint p = random_point(rng);
      if (!in_domain(spec, p)) continue;
      // Keep the sample away from blow-up edges where the image radius
      // exceeds a few hundred sphere radii.
      if (std::holds_alternative<Stereographic>(spec) && std::abs(p.lat()) > deg_to_rad(89)) {
        continue;
      }
      if (const auto* g = std::get_if<Gnomonic>(&spec)) {
        if (great_circle_distance(g->tangent_point, p) > deg_to_rad(85)) continue;
      }
      if (std::holds_alternative<Cylindrical>(spec) && std::abs(p.lat()) > deg_to_rad(89)) {
        continue;
      }
      const PlanePoint q = forward(spec, p);
      const PlanePoint q2 = forward(spec, inverse(spec, q));
      CHECK((q2 - q).norm() < 1e-9);
      const GeoPoint p2 = inverse(spec, q);
      CHECK(std::abs(p2.lat() - p.lat()) < 1e-9);
      CHECK(std::abs(std::remainder(p2.lon() - p.lon(), kTwoPi)) < 1e-9);
      ++done;
    }
  }
}

TEST_CASE("stereographic sends parallels to circles about the South pole image") {
  const ProjectionSpec stereo = Stereographic{Pole::North};
  for (double lat_deg : {-60.0, -20.0, 0.0, 30.0, 60.0}) {
    const auto pts =
        project_all(stereo, sample_parallel(deg_to_rad(lat_deg), {-kPi, kPi}, 256));
    const CircleFit fit = fit_circle(pts);
    CHECK(fit.max_residual < 1e-9);
    CHECK(fit.center.norm() < 1e-9);  // the South pole lands at the origin
  }
  for (double lon_deg : {-120.0, -45.0, 0.0, 90.0}) {
    const auto pts = project_all(
        stereo, sample_meridian(deg_to_rad(lon_deg), {deg_to_rad(-89), deg_to_rad(89)}, 256));
    const LineFit fit = fit_line(pts);
    CHECK(fit.max_residual < 1e-9);
    CHECK(line_distance_from(fit, PlanePoint(0, 0)) < 1e-9);
  }
}

TEST_CASE("gnomonic sends parallels to circles, meridians and great circles to lines") {
  const ProjectionSpec gnom = Gnomonic{GeoPoint::from_degrees(-90, 0)};
  for (double lat_deg : {-80.0, -60.0, -40.0, -20.0}) {
    const auto pts = project_all(gnom, sample_parallel(deg_to_rad(lat_deg), {-kPi, kPi}, 256));
    const CircleFit fit = fit_circle(pts);
    CHECK(fit.max_residual < 1e-9);
    CHECK(fit.center.norm() < 1e-9);
  }
  for (double lon_deg : {-90.0, 0.0, 45.0}) {
    const auto pts = project_all(
        gnom, sample_meridian(deg_to_rad(lon_deg), {deg_to_rad(-89), deg_to_rad(-5)}, 256));
    const LineFit fit = fit_line(pts);
    CHECK(fit.max_residual < 1e-9);
    CHECK(line_distance_from(fit, PlanePoint(0, 0)) < 1e-9);
  }

  // Arbitrary great-circle arcs inside the domain project to straight lines.
  auto rng = make_rng(37);
  std::uniform_real_distribution<double> lat(-85.0, -25.0), lon(-180.0, 180.0);
  for (int trial = 0; trial < 20; ++trial) {
    const GeoPoint a = GeoPoint::from_degrees(lat(rng), lon(rng));
    const GeoPoint b = GeoPoint::from_degrees(lat(rng), lon(rng));
    if (great_circle_distance(a, b) < 0.1) continue;
    std::vector<GeoPoint> arc;
    for (int i = 0; i < 128; ++i) arc.push_back(geodesic_point(a, b, i / 127.0));
    const LineFit fit = fit_line(project_all(gnom, arc));
    CHECK(fit.max_residual < 1e-9);
  }
}

TEST_CASE("cylindrical graticule images are vertical and horizontal lines") {
  const ProjectionSpec merc = Cylindrical(CylindricalProfile::Conformal, deg_to_rad(20.0));
  const auto mer = project_all(
      merc, sample_meridian(deg_to_rad(25.0), {deg_to_rad(-80), deg_to_rad(80)}, 64));
  for (const auto& q : mer) CHECK(q.x() == mer.front().x());

  const auto par = project_all(
      merc, sample_parallel(deg_to_rad(35.0), {deg_to_rad(-170), deg_to_rad(170)}, 64));
  for (const auto& q : par) CHECK(q.y() == par.front().y());
}

TEST_CASE("conic meridians pass through the apex, parallels circle it") {
  const ProjectionSpec conic = EquidistantConic{kRussia};
  const PlanePoint apex(0.0, kRussia.rho1);
  for (double lon_deg : {-150.0, -60.0, 0.0, 90.0, 179.0}) {
    const auto pts = project_all(
        conic, sample_meridian(deg_to_rad(lon_deg), {deg_to_rad(-30), deg_to_rad(80)}, 256));
    const LineFit fit = fit_line(pts);
    CHECK(fit.max_residual < 1e-9);
    CHECK(line_distance_from(fit, apex) < 1e-9);
  }
  for (double lat_deg : {40.0, 55.0, 70.0}) {
    const auto pts = project_all(conic, sample_parallel(deg_to_rad(lat_deg), {-kPi, kPi}, 256));
    const CircleFit fit = fit_circle(pts);
    CHECK(fit.max_residual < 1e-9);
    CHECK((fit.center - apex).norm() < 1e-9);
  }
}

TEST_CASE("cylindrical ref_lat must be a proper latitude") {
  CHECK_THROWS_AS(Cylindrical(CylindricalProfile::Equirectangular, kHalfPi), Error);
}
