#pragma once

#include <vector>

#include "spheremap/geo.hpp"

namespace spheremap {

struct LineFit {
  PlanePoint point;      // centroid of the samples
  PlanePoint direction;  // unit direction of the total-least-squares line
  double max_residual;   // max |perpendicular distance|
  double rms_residual;
};

/// Total-least-squares line through a point set (principal direction of the
/// 2x2 scatter matrix).
LineFit fit_line(const std::vector<PlanePoint>& pts);

struct CircleFit {
  PlanePoint center;
  double radius;
  double max_residual;  // max ||p - center| - radius|
  double rms_residual;
};

/// Algebraic least-squares circle (Kasa normal equations on centered data)
/// followed by one geometric Gauss-Newton step. Near-straight arcs make a
/// purely geometric fit ill-conditioned; the algebraic seed stabilizes it.
/// Throws DegenerateArc when the points are collinear to roundoff and no
/// finite circle is determined.
CircleFit fit_circle(const std::vector<PlanePoint>& pts);

/// Max perpendicular distance of the points from the segment joining the
/// first and last point. Throws DegenerateArc if those endpoints coincide.
double max_distance_to_chord(const std::vector<PlanePoint>& pts);

}  // namespace spheremap
