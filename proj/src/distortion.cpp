#include "spheremap/distortion.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace spheremap {

MetricSample local_metric(const ProjectionSpec& spec, const GeoPoint& p, double step) {
  if (!(step > 0.0) || step > 1e-3) {
    throw Error("finite-difference step must lie in (0, 1e-3]");
  }
  const double cl = std::cos(p.lat());
  if (cl < 1e-6) {
    throw NearPole("local metric is undefined where cos(lat) < 1e-6");
  }
  if (std::abs(p.lat()) + step > kHalfPi) {
    throw OutOfDomain("finite-difference stencil crosses a pole");
  }
  if (has_antimeridian_cut(spec) && (p.lon() + step > kPi || p.lon() - step <= -kPi)) {
    throw OutOfDomain("finite-difference stencil crosses the antimeridian cut");
  }

  const GeoPoint north(p.lat() + step, p.lon());
  const GeoPoint south(p.lat() - step, p.lon());
  const GeoPoint east(p.lat(), p.lon() + step);
  const GeoPoint west(p.lat(), p.lon() - step);
  for (const GeoPoint* g : {&p, &north, &south, &east, &west}) {
    if (!in_domain(spec, *g)) {
      throw OutOfDomain("finite-difference stencil leaves the projection domain");
    }
  }

  const PlanePoint d_merid = (forward(spec, north) - forward(spec, south)) / (2.0 * step);
  const PlanePoint d_par = (forward(spec, east) - forward(spec, west)) / (2.0 * step);

  const double h = d_merid.norm();
  const double k = d_par.norm() / cl;
  const double cross = d_merid.x() * d_par.y() - d_merid.y() * d_par.x();
  const double theta = std::atan2(std::abs(cross), d_merid.dot(d_par));

  // Differential of the map against an orthonormal frame on the sphere
  // (arc length along the meridian and along the parallel).
  Eigen::Matrix2d jac;
  jac.col(0) = d_merid;
  jac.col(1) = d_par / cl;
  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(jac);
  const double s1 = svd.singularValues()(0);
  const double s2 = svd.singularValues()(1);
  const double omega = (s1 + s2) > 0.0 ? 2.0 * std::asin((s1 - s2) / (s1 + s2)) : 0.0;

  return {p, h, k, theta, omega, h * k * std::sin(theta)};
}

namespace {

struct StatsAccumulator {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  int argmax = -1;

  void add(double v, int idx) {
    if (v < min) min = v;
    if (v > max) {
      max = v;
      argmax = idx;
    }
  }
};

}  // namespace

DistortionGrid distortion_grid(const ProjectionSpec& spec, const Region& region, int nlat,
                               int nlon, double step) {
  if (nlat < 2 || nlon < 2) throw Error("grid resolution must be at least 2 x 2");

  std::vector<MetricSample> samples;
  samples.reserve(static_cast<size_t>(nlat) * nlon);
  int skipped = 0;
  for (int i = 0; i < nlat; ++i) {
    const double lat =
        region.lat_min + (region.lat_max - region.lat_min) * static_cast<double>(i) / (nlat - 1);
    for (int j = 0; j < nlon; ++j) {
      const double lon =
          region.lon_min + (region.lon_max - region.lon_min) * static_cast<double>(j) / (nlon - 1);
      try {
        samples.push_back(local_metric(spec, GeoPoint(lat, lon), step));
      } catch (const OutOfDomain&) {
        ++skipped;
      } catch (const NearPole&) {
        ++skipped;
      }
    }
  }
  if (samples.empty()) {
    throw EmptyGrid("every grid point falls outside the projection domain");
  }

  StatsAccumulator h, k, omega, s;
  for (size_t idx = 0; idx < samples.size(); ++idx) {
    const MetricSample& m = samples[idx];
    const int i = static_cast<int>(idx);
    h.add(m.h, i);
    k.add(m.k, i);
    omega.add(m.omega, i);
    s.add(m.s, i);
  }
  const auto stats = [&](const StatsAccumulator& a) {
    return QuantityStats{a.min, a.max, samples[static_cast<size_t>(a.argmax)].at};
  };
  GridSummary summary{stats(h), stats(k), stats(omega), stats(s),
                      static_cast<int>(samples.size()), skipped};
  return {std::move(samples), summary};
}

DefectReport perfect_defect(const ProjectionSpec& spec, const Region& region, int nlat, int nlon,
                            double step) {
  const DistortionGrid grid = distortion_grid(spec, region, nlat, nlon, step);
  double defect = -1.0;
  const MetricSample* worst = nullptr;
  for (const MetricSample& m : grid.samples) {
    const double d =
        std::max({std::abs(m.h - 1.0), std::abs(m.k - 1.0), std::abs(std::cos(m.theta))});
    if (d > defect) {
      defect = d;
      worst = &m;
    }
  }
  return {defect,
          worst->at,
          std::abs(worst->h - 1.0),
          std::abs(worst->k - 1.0),
          std::abs(std::cos(worst->theta)),
          grid.summary.skipped};
}

ClassifyFlags classify(const ProjectionSpec& spec, const Region& region, int nlat, int nlon,
                       double tol, double step) {
  const DistortionGrid grid = distortion_grid(spec, region, nlat, nlon, step);
  double max_omega = 0.0, max_area_dev = 0.0, max_h_dev = 0.0;
  for (const MetricSample& m : grid.samples) {
    max_omega = std::max(max_omega, m.omega);
    max_area_dev = std::max(max_area_dev, std::abs(m.s - 1.0));
    max_h_dev = std::max(max_h_dev, std::abs(m.h - 1.0));
  }
  return {max_omega < tol, max_area_dev < tol, max_h_dev < tol};
}

}  // namespace spheremap
