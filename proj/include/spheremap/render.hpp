#pragma once

#include <string>
#include <vector>

#include "spheremap/geo.hpp"
#include "spheremap/projections.hpp"

namespace spheremap {

struct GraticuleSpec {
  Region region;
  double parallel_step;  // radians between drawn parallels
  double meridian_step;  // radians between drawn meridians
  int samples_per_curve;

  GraticuleSpec(const Region& r, double pstep, double mstep, int samples)
      : region(r), parallel_step(pstep), meridian_step(mstep), samples_per_curve(samples) {
    if (!(pstep > 0.0) || !(mstep > 0.0)) throw Error("graticule steps must be positive");
    if (samples < 2) throw BadSampleCount("graticule needs samples_per_curve >= 2");
  }
};

/// One projected curve. Curves are split, not clipped, at domain
/// boundaries: pieces of the same sphere curve share a label and count
/// segments from 0. Every polyline holds at least 2 finite points.
struct Polyline {
  std::string label;  // "parallel:<deg>", "meridian:<deg>", "geodesic", "outline"
  int segment;
  std::vector<PlanePoint> points;
};

struct PathSet {
  std::vector<Polyline> lines;
};

/// Project the graticule of the region: one curve per parallel at
/// lat_min + i * parallel_step and per meridian at lon_min +
/// j * meridian_step, each sampled uniformly in the sphere parameter.
/// Out-of-domain samples are dropped and the curve split there. Throws
/// EmptyPathSet when nothing intersects the domain.
PathSet graticule_paths(const ProjectionSpec& spec, const GraticuleSpec& g);

/// Projected boundary of the region as a single closed curve (label
/// "outline"), split at domain gaps like the graticule.
PathSet outline_path(const ProjectionSpec& spec, const Region& region, int samples_per_edge);

/// Projected great-circle arc from a to b (label "geodesic").
PathSet geodesic_path(const ProjectionSpec& spec, const GeoPoint& a, const GeoPoint& b,
                      int nsamples);

PathSet merge(PathSet a, const PathSet& b);

struct SvgStyle {
  double width_px = 800.0;
  // First matching label prefix decides the stroke color.
  std::vector<std::pair<std::string, std::string>> stroke_by_prefix = {
      {"meridian", "#1f77b4"},
      {"parallel", "#2ca02c"},
      {"geodesic", "#d62728"},
      {"outline", "#333333"},
  };
};

/// SVG 1.1 document, north up (y axis flipped), viewBox fitted to the
/// bounding box with a 2% margin. Byte-identical for identical input.
std::string emit_svg(const PathSet& paths, const SvgStyle& style = {});

/// CSV with columns label, segment_index, point_index, x, y; coordinates
/// carry 17 significant digits so parsing them back is lossless.
std::string emit_csv(const PathSet& paths);

}  // namespace spheremap
