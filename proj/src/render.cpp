#include "spheremap/render.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "spheremap/sphere.hpp"

namespace spheremap {

namespace {

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string curve_label(const char* kind, double value_rad) {
  return std::string(kind) + ":" + format_double(rad_to_deg(value_rad), "%.10g");
}

// Project the samples, splitting into runs wherever the domain is left;
// runs shorter than 2 points are dropped.
void append_split(PathSet& out, const ProjectionSpec& spec, const std::string& label,
                  const std::vector<GeoPoint>& samples) {
  int segment = 0;
  std::vector<PlanePoint> run;
  const auto flush = [&] {
    if (run.size() >= 2) {
      out.lines.push_back({label, segment++, run});
    }
    run.clear();
  };
  for (const GeoPoint& g : samples) {
    if (in_domain(spec, g)) {
      run.push_back(forward(spec, g));
    } else {
      flush();
    }
  }
  flush();
}

}  // namespace

PathSet graticule_paths(const ProjectionSpec& spec, const GraticuleSpec& g) {
  PathSet out;
  const Region& r = g.region;
  for (int i = 0;; ++i) {
    const double lat = r.lat_min + i * g.parallel_step;
    if (lat > r.lat_max + 1e-9) break;
    if (std::abs(lat) >= kHalfPi) continue;  // a pole-parallel is a point
    append_split(out, spec, curve_label("parallel", lat),
                 sample_parallel(lat, {r.lon_min, r.lon_max}, g.samples_per_curve));
  }
  for (int j = 0;; ++j) {
    const double lon = r.lon_min + j * g.meridian_step;
    if (lon > r.lon_max + 1e-9) break;
    append_split(out, spec, curve_label("meridian", lon),
                 sample_meridian(lon, {r.lat_min, r.lat_max}, g.samples_per_curve));
  }
  if (out.lines.empty()) {
    throw EmptyPathSet("no graticule curve intersects the projection domain");
  }
  return out;
}

PathSet outline_path(const ProjectionSpec& spec, const Region& region, int samples_per_edge) {
  if (samples_per_edge < 2) throw BadSampleCount("outline needs samples_per_edge >= 2");
  std::vector<GeoPoint> loop;
  const auto edge = [&](double lat0, double lon0, double lat1, double lon1, bool skip_first) {
    for (int i = skip_first ? 1 : 0; i < samples_per_edge; ++i) {
      const double t = static_cast<double>(i) / (samples_per_edge - 1);
      loop.emplace_back(lat0 + t * (lat1 - lat0), lon0 + t * (lon1 - lon0));
    }
  };
  edge(region.lat_min, region.lon_min, region.lat_min, region.lon_max, false);
  edge(region.lat_min, region.lon_max, region.lat_max, region.lon_max, true);
  edge(region.lat_max, region.lon_max, region.lat_max, region.lon_min, true);
  edge(region.lat_max, region.lon_min, region.lat_min, region.lon_min, true);

  PathSet out;
  append_split(out, spec, "outline", loop);
  if (out.lines.empty()) {
    throw EmptyPathSet("the region outline does not intersect the projection domain");
  }
  return out;
}

PathSet geodesic_path(const ProjectionSpec& spec, const GeoPoint& a, const GeoPoint& b,
                      int nsamples) {
  if (nsamples < 2) throw BadSampleCount("geodesic path needs nsamples >= 2");
  std::vector<GeoPoint> samples;
  samples.reserve(static_cast<size_t>(nsamples));
  for (int i = 0; i < nsamples; ++i) {
    samples.push_back(geodesic_point(a, b, static_cast<double>(i) / (nsamples - 1)));
  }
  PathSet out;
  append_split(out, spec, "geodesic", samples);
  if (out.lines.empty()) {
    throw EmptyPathSet("the geodesic does not intersect the projection domain");
  }
  return out;
}

PathSet merge(PathSet a, const PathSet& b) {
  a.lines.insert(a.lines.end(), b.lines.begin(), b.lines.end());
  return a;
}

std::string emit_svg(const PathSet& paths, const SvgStyle& style) {
  if (paths.lines.empty()) throw EmptyPathSet("cannot render an empty path set");

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const Polyline& line : paths.lines) {
    for (const PlanePoint& p : line.points) {
      min_x = std::min(min_x, p.x());
      max_x = std::max(max_x, p.x());
      min_y = std::min(min_y, -p.y());  // north up
      max_y = std::max(max_y, -p.y());
    }
  }
  double span_x = max_x - min_x, span_y = max_y - min_y;
  const double pad = 0.02 * std::max({span_x, span_y, 1e-9});
  min_x -= pad;
  min_y -= pad;
  span_x += 2.0 * pad;
  span_y += 2.0 * pad;

  const auto num = [](double v) { return format_double(v, "%.9g"); };
  const double height_px = style.width_px * span_y / span_x;
  const double stroke_w = 0.002 * std::max(span_x, span_y);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(style.width_px) + "\" height=\"" + num(height_px) + "\" viewBox=\"" + num(min_x) +
         " " + num(min_y) + " " + num(span_x) + " " + num(span_y) + "\">\n";
  for (const Polyline& line : paths.lines) {
    std::string stroke = "#000000";
    for (const auto& [prefix, color] : style.stroke_by_prefix) {
      if (line.label.rfind(prefix, 0) == 0) {
        stroke = color;
        break;
      }
    }
    svg += "  <path fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(stroke_w) +
           "\" d=\"";
    for (size_t i = 0; i < line.points.size(); ++i) {
      svg += (i == 0 ? "M" : " L");
      svg += num(line.points[i].x()) + " " + num(-line.points[i].y());
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string emit_csv(const PathSet& paths) {
  if (paths.lines.empty()) throw EmptyPathSet("cannot emit an empty path set");
  std::string csv = "label,segment_index,point_index,x,y\n";
  for (const Polyline& line : paths.lines) {
    for (size_t i = 0; i < line.points.size(); ++i) {
      csv += line.label + "," + std::to_string(line.segment) + "," + std::to_string(i) + "," +
             format_double(line.points[i].x(), "%.17g") + "," +
             format_double(line.points[i].y(), "%.17g") + "\n";
    }
  }
  return csv;
}

}  // namespace spheremap
