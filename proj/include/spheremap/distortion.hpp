#pragma once

#include <vector>

#include "spheremap/geo.hpp"
#include "spheremap/projections.hpp"

namespace spheremap {

/// Default central-difference step (radians): truncation O(step^2) ~ 1e-10
/// against 64-bit cancellation.
inline constexpr double kDefaultFdStep = 1e-5;

/// Local metric of a projection at a point, from central differences of
/// forward along the meridian and the parallel through it.
struct MetricSample {
  GeoPoint at;
  double h;      // meridian scale
  double k;      // parallel scale (per true arc length, i.e. / cos lat)
  double theta;  // angle between projected meridian and parallel directions
  double omega;  // max angular distortion, 2 asin((s1 - s2)/(s1 + s2))
  double s;      // areal scale, h * k * sin(theta)
};

/// Throws NearPole when cos(lat) < 1e-6 (both foliations are singular
/// there) and OutOfDomain when the 5-point stencil leaves the projection
/// domain or crosses a pole or an antimeridian cut.
MetricSample local_metric(const ProjectionSpec& spec, const GeoPoint& p,
                          double step = kDefaultFdStep);

struct QuantityStats {
  double min;
  double max;
  GeoPoint argmax;
};

struct GridSummary {
  QuantityStats h;
  QuantityStats k;
  QuantityStats omega;
  QuantityStats s;
  int samples;
  int skipped;  // grid points outside the domain or too near a pole
};

struct DistortionGrid {
  std::vector<MetricSample> samples;  // row-major: latitude rows south to
                                      // north, longitude within a row
  GridSummary summary;
};

/// Sweep an nlat x nlon grid over the region (endpoints included).
/// Unmappable points are skipped and counted; argmax ties go to the first
/// point in row-major order. Throws EmptyGrid if no point is mappable.
DistortionGrid distortion_grid(const ProjectionSpec& spec, const Region& region, int nlat,
                               int nlon, double step = kDefaultFdStep);

/// Witness of the impossibility of a perfect map: the worst violation of
/// h = 1, k = 1, theta = pi/2 over the grid.
struct DefectReport {
  double defect;  // max over grid of max(|h-1|, |k-1|, |cos theta|)
  GeoPoint argmax;
  double res_h;          // |h-1| at argmax
  double res_k;          // |k-1| at argmax
  double res_cos_theta;  // |cos theta| at argmax
  int skipped;
};

DefectReport perfect_defect(const ProjectionSpec& spec, const Region& region, int nlat,
                            int nlon, double step = kDefaultFdStep);

/// Which of the three classical requirements the projection satisfies on
/// the region, to tolerance tol.
struct ClassifyFlags {
  bool conformal;             // max omega < tol
  bool equal_area;            // max |s - 1| < tol
  bool meridian_equidistant;  // max |h - 1| < tol
};

ClassifyFlags classify(const ProjectionSpec& spec, const Region& region, int nlat, int nlon,
                       double tol, double step = kDefaultFdStep);

}  // namespace spheremap
