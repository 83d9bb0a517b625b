#pragma once

#include <utility>
#include <vector>

#include "spheremap/geo.hpp"

namespace spheremap {

/// Equidistant conic determined by two standard parallels. The plane map is
///
///   rho(phi) = rho1 + (phi1 - phi)
///   x = rho(phi) * sin(n * lon),  y = rho1 - rho(phi) * cos(n * lon)
///
/// which keeps every meridian a straight line through the apex (0, rho1),
/// keeps distances along meridians (|d rho / d phi| = 1), meets parallels
/// at right angles, and holds the parallel-to-meridian degree ratio exact
/// at phi1 and phi2.
struct ConicParams {
  double phi1;  // standard parallels, radians, 0 < phi1 < phi2 < pi/2
  double phi2;
  double n;     // cone constant, (cos phi1 - cos phi2) / (phi2 - phi1)
  double rho1;  // plane radius of the phi1 parallel, cos(phi1) / n
};

/// Delisle's rule: standard parallels equidistant from the window's central
/// parallel and from its outer parallels, i.e. the quarter points.
std::pair<double, double> midpoint_standard_parallels(double phi_s, double phi_n);

ConicParams build_conic(double phi1, double phi2);

/// Ratio of the projected degree on the parallel to the true one,
/// n * rho(phi) / cos(phi). Equals 1 at both standard parallels.
double parallel_scale(const ConicParams& params, double phi);

/// Latitude at which rho vanishes: phi1 + rho1. The projected meridians all
/// meet there; for any window inside (0, pi/2) it lies strictly beyond the
/// North pole.
double apex_latitude(const ConicParams& params);

/// Plane angle subtended at the apex by dlon of longitude: n * dlon. A
/// plane semicircle therefore spans pi / n of longitude, more than 180
/// degrees whenever n < 1.
double parallel_angular_span(const ConicParams& params, double dlon);

struct Deviation {
  double value;       // max |k(phi) - 1| over the window
  double argmax_phi;  // where it is attained
};

/// Maximum deviation of the parallel scale from 1 over [phi_s, phi_n],
/// located by dense sampling plus golden-section refinement. k is smooth
/// with a single interior minimum between the standard parallels, so the
/// maximum sits at an endpoint or at that interior critical point.
Deviation max_deviation(const ConicParams& params, double phi_s, double phi_n);

struct OptimizerResult {
  double phi1_opt;
  double phi2_opt;
  double minimax_deviation;
  double midpoint_deviation;
  double improvement_ratio;  // midpoint_deviation / minimax_deviation, >= 1
};

/// Minimize the maximum deviation over the window by choice of the two
/// standard parallels: brute-force coarse grid, then coordinate-wise
/// golden-section refinement to 1e-8. The midpoint pair seeds the search,
/// so the result never loses to Delisle's rule. Deterministic: on ties the
/// earlier grid cell wins.
OptimizerResult optimize_standard_parallels(double phi_s, double phi_n);

struct ArcFit {
  double chord;              // distance between the projected endpoints
  double max_line_residual;  // sagitta: max deviation from the chord line
  PlanePoint circle_center;  // least-squares circle (Kasa seed + one
  double circle_radius;      // Gauss-Newton step)
  double circle_rms_residual;
  bool straight;  // true when the points are collinear to roundoff; the
                  // circle then degenerates to the chord line and
                  // circle_radius is +infinity
};

/// Chord-line and circle fits of an already-projected polyline.
ArcFit fit_projected_arc(const std::vector<PlanePoint>& pts);

/// Project the great-circle arc from a to b (nsamples >= 16 points) under
/// the conic and measure how far its image is from a straight line and
/// from a circular arc.
ArcFit geodesic_flatness(const ConicParams& params, const GeoPoint& a, const GeoPoint& b,
                         int nsamples);

}  // namespace spheremap
