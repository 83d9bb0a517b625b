#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "spheremap/delisle.hpp"
#include "spheremap/distortion.hpp"
#include "spheremap/render.hpp"
#include "spheremap/spec_json.hpp"

using nlohmann::ordered_json;
using namespace spheremap;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << content;
  if (!out) throw Error("cannot write output file: " + path);
}

void write_json(const std::string& path, const ordered_json& j) {
  write_file(path, j.dump(2) + "\n");
}

Region parse_region(const std::vector<double>& r) {
  if (r.size() != 4) {
    throw Error("region must be lat_min,lat_max,lon_min,lon_max in degrees");
  }
  return Region::from_degrees(r[0], r[1], r[2], r[3]);
}

std::pair<int, int> parse_res(const std::string& res) {
  const size_t x = res.find('x');
  if (x == std::string::npos) throw Error("resolution must look like 50x50 (nlat x nlon)");
  try {
    const int nlat = std::stoi(res.substr(0, x));
    const int nlon = std::stoi(res.substr(x + 1));
    return {nlat, nlon};
  } catch (const std::exception&) {
    throw Error("resolution must look like 50x50 (nlat x nlon)");
  }
}

GeoPoint parse_latlon(const std::vector<double>& v, const char* flag) {
  if (v.size() != 2) throw Error(std::string(flag) + " must be lat,lon in degrees");
  return GeoPoint::from_degrees(v[0], v[1]);
}

ordered_json point_json(const PlanePoint& q) {
  return ordered_json{{"x", q.x()}, {"y", q.y()}};
}

int run_project(const std::string& spec_path, const std::vector<double>& latlon,
                const std::vector<double>& xy, const std::string& points_path,
                const std::string& json_out, const std::string& csv_out) {
  const ProjectionSpec spec = load_spec_file(spec_path);

  if (!points_path.empty()) {
    std::ifstream in(points_path);
    if (!in) throw Error("cannot read points file: " + points_path);
    std::string csv = "lat_deg,lon_deg,x,y\n";
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (!std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-' &&
          line[0] != '+') {
        continue;  // header or comment
      }
      double lat_deg = 0.0, lon_deg = 0.0;
      if (std::sscanf(line.c_str(), "%lf,%lf", &lat_deg, &lon_deg) != 2) {
        throw Error("points file rows must be lat_deg,lon_deg: " + line);
      }
      const PlanePoint q = forward(spec, GeoPoint::from_degrees(lat_deg, lon_deg));
      csv += fmt17(lat_deg) + "," + fmt17(lon_deg) + "," + fmt17(q.x()) + "," + fmt17(q.y()) +
             "\n";
    }
    write_file(csv_out, csv);
    return 0;
  }

  ordered_json j;
  if (!xy.empty()) {
    if (xy.size() != 2) throw Error("--xy must be x,y plane coordinates");
    const GeoPoint p = inverse(spec, PlanePoint(xy[0], xy[1]));
    j = ordered_json{{"lat_deg", rad_to_deg(p.lat())}, {"lon_deg", rad_to_deg(p.lon())}};
  } else {
    const GeoPoint p = parse_latlon(latlon, "--point");
    j = point_json(forward(spec, p));
  }
  if (json_out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(json_out, j);
  }
  return 0;
}

int run_graticule(const std::string& spec_path, const std::vector<double>& region_deg,
                  double step_deg, double pstep_deg, double mstep_deg, int samples,
                  bool outline, const std::string& svg_out, const std::string& csv_out) {
  const ProjectionSpec spec = load_spec_file(spec_path);
  const Region region = parse_region(region_deg);
  const double pstep = deg_to_rad(pstep_deg > 0 ? pstep_deg : step_deg);
  const double mstep = deg_to_rad(mstep_deg > 0 ? mstep_deg : step_deg);
  PathSet paths = graticule_paths(spec, GraticuleSpec(region, pstep, mstep, samples));
  if (outline) paths = merge(std::move(paths), outline_path(spec, region, samples));
  if (!svg_out.empty()) write_file(svg_out, emit_svg(paths));
  if (!csv_out.empty()) write_file(csv_out, emit_csv(paths));
  return 0;
}

ordered_json stats_json(const QuantityStats& q) {
  return ordered_json{{"min", q.min},
                      {"max", q.max},
                      {"argmax_lat_deg", rad_to_deg(q.argmax.lat())},
                      {"argmax_lon_deg", rad_to_deg(q.argmax.lon())}};
}

int run_distortion(const std::string& spec_path, const std::vector<double>& region_deg,
                   const std::string& res, const std::string& csv_out,
                   const std::string& json_out) {
  const ProjectionSpec spec = load_spec_file(spec_path);
  const auto [nlat, nlon] = parse_res(res);
  const DistortionGrid grid = distortion_grid(spec, parse_region(region_deg), nlat, nlon);

  if (!csv_out.empty()) {
    std::string csv = "lat_deg,lon_deg,h,k,theta_deg,omega_deg,areal_scale\n";
    for (const MetricSample& m : grid.samples) {
      csv += fmt17(rad_to_deg(m.at.lat())) + "," + fmt17(rad_to_deg(m.at.lon())) + "," +
             fmt17(m.h) + "," + fmt17(m.k) + "," + fmt17(rad_to_deg(m.theta)) + "," +
             fmt17(rad_to_deg(m.omega)) + "," + fmt17(m.s) + "\n";
    }
    write_file(csv_out, csv);
  }
  if (!json_out.empty()) {
    const GridSummary& s = grid.summary;
    write_json(json_out, ordered_json{{"samples", s.samples},
                                      {"skipped", s.skipped},
                                      {"h", stats_json(s.h)},
                                      {"k", stats_json(s.k)},
                                      {"omega", stats_json(s.omega)},
                                      {"areal_scale", stats_json(s.s)}});
  }
  return 0;
}

int run_defect(const std::string& spec_path, const std::vector<double>& region_deg,
               const std::string& res, const std::string& json_out) {
  const ProjectionSpec spec = load_spec_file(spec_path);
  const auto [nlat, nlon] = parse_res(res);
  const DefectReport rep = perfect_defect(spec, parse_region(region_deg), nlat, nlon);
  const ordered_json j{{"defect", rep.defect},
                       {"argmax_lat_deg", rad_to_deg(rep.argmax.lat())},
                       {"argmax_lon_deg", rad_to_deg(rep.argmax.lon())},
                       {"residual_h", rep.res_h},
                       {"residual_k", rep.res_k},
                       {"residual_cos_theta", rep.res_cos_theta},
                       {"skipped", rep.skipped}};
  if (json_out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(json_out, j);
  }
  return 0;
}

int run_optimize(double south_deg, double north_deg, const std::string& json_out) {
  const double s = deg_to_rad(south_deg), n = deg_to_rad(north_deg);
  if (!(s < n) || s <= -kHalfPi || n >= kHalfPi) {
    throw BadWindow("window parallels must satisfy -90 < south < north < 90");
  }
  // Quarter points taken in degrees: the midpoint rule at the CLI's degree
  // boundary stays exact (47.5, not 47.499999...).
  const double mid1_deg = (3.0 * south_deg + north_deg) / 4.0;
  const double mid2_deg = (south_deg + 3.0 * north_deg) / 4.0;
  const ConicParams conic = build_conic(deg_to_rad(mid1_deg), deg_to_rad(mid2_deg));
  const Deviation mid_dev = max_deviation(conic, s, n);
  const OptimizerResult opt = optimize_standard_parallels(s, n);

  const ordered_json j{
      {"window", ordered_json{{"south_deg", south_deg}, {"north_deg", north_deg}}},
      {"midpoint", ordered_json{{"phi1_deg", mid1_deg},
                                {"phi2_deg", mid2_deg},
                                {"max_deviation", mid_dev.value},
                                {"argmax_lat_deg", rad_to_deg(mid_dev.argmax_phi)}}},
      {"optimizer", ordered_json{{"phi1_deg", rad_to_deg(opt.phi1_opt)},
                                 {"phi2_deg", rad_to_deg(opt.phi2_opt)},
                                 {"minimax_deviation", opt.minimax_deviation},
                                 {"midpoint_deviation", opt.midpoint_deviation},
                                 {"improvement_ratio", opt.improvement_ratio}}},
      {"conic", ordered_json{{"n", conic.n},
                             {"rho1", conic.rho1},
                             {"apex_lat_deg", rad_to_deg(apex_latitude(conic))},
                             {"semicircle_lon_span_deg", rad_to_deg(kPi / conic.n)}}}};
  if (json_out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(json_out, j);
  }
  return 0;
}

int run_geodesic(const std::string& spec_path, const std::vector<double>& from_deg,
                 const std::vector<double>& to_deg, int samples, const std::string& json_out,
                 const std::string& svg_out, const std::string& csv_out) {
  const ProjectionSpec spec = load_spec_file(spec_path);
  const GeoPoint a = parse_latlon(from_deg, "--from");
  const GeoPoint b = parse_latlon(to_deg, "--to");
  const PathSet path = geodesic_path(spec, a, b, samples);
  if (path.lines.size() != 1 ||
      path.lines[0].points.size() != static_cast<size_t>(samples)) {
    throw OutOfDomain("geodesic leaves the projection domain; cannot fit one arc");
  }
  const ArcFit fit = fit_projected_arc(path.lines[0].points);

  ordered_json j{{"chord", fit.chord},
                 {"sagitta", fit.max_line_residual},
                 {"sagitta_over_chord", fit.max_line_residual / fit.chord},
                 {"straight", fit.straight},
                 {"circle", ordered_json{{"center_x", fit.circle_center.x()},
                                         {"center_y", fit.circle_center.y()},
                                         {"radius", fit.circle_radius},
                                         {"radius_over_chord", fit.circle_radius / fit.chord},
                                         {"rms_residual", fit.circle_rms_residual}}}};
  if (!json_out.empty()) {
    write_json(json_out, j);
  } else if (svg_out.empty() && csv_out.empty()) {
    std::cout << j.dump(2) << "\n";
  }
  if (!svg_out.empty()) write_file(svg_out, emit_svg(path));
  if (!csv_out.empty()) write_file(csv_out, emit_csv(path));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spheremap: map projections, distortion analysis and the Delisle conic"};
  app.require_subcommand(1);

  std::string spec_path, points_path, json_out, csv_out, svg_out, res = "50x50";
  std::vector<double> region_deg, latlon, xy, from_deg, to_deg;
  double step_deg = 10.0, pstep_deg = 0.0, mstep_deg = 0.0;
  double south_deg = 0.0, north_deg = 0.0;
  int samples = 256;
  bool outline = false;

  auto* project = app.add_subcommand("project", "Forward- or inverse-project points");
  project->add_option("--spec", spec_path, "projection spec JSON file")->required();
  auto* mode = project->add_option_group("input", "what to project");
  mode->add_option("--point", latlon, "lat,lon in degrees")->delimiter(',');
  mode->add_option("--xy", xy, "plane x,y to invert")->delimiter(',');
  auto* points_opt = mode->add_option("--points", points_path, "CSV of lat_deg,lon_deg rows");
  mode->require_option(1);
  project->add_option("--json", json_out, "JSON output path");
  auto* project_csv = project->add_option("--csv", csv_out, "CSV output path");
  points_opt->needs(project_csv);

  auto* graticule = app.add_subcommand("graticule", "Render the projected graticule");
  graticule->add_option("--spec", spec_path, "projection spec JSON file")->required();
  graticule->add_option("--region", region_deg, "lat_min,lat_max,lon_min,lon_max (deg)")
      ->required()
      ->delimiter(',');
  graticule->add_option("--step", step_deg, "graticule step in degrees");
  graticule->add_option("--parallel-step", pstep_deg, "override step for parallels");
  graticule->add_option("--meridian-step", mstep_deg, "override step for meridians");
  graticule->add_option("--samples", samples, "samples per curve");
  graticule->add_flag("--outline", outline, "include the window outline");
  auto* gout = graticule->add_option_group("output", "at least one output");
  gout->add_option("--svg", svg_out, "SVG output path");
  gout->add_option("--csv", csv_out, "CSV output path");
  gout->require_option(1, 2);

  auto* distortion = app.add_subcommand("distortion", "Local metric samples over a grid");
  distortion->add_option("--spec", spec_path, "projection spec JSON file")->required();
  distortion->add_option("--region", region_deg, "lat_min,lat_max,lon_min,lon_max (deg)")
      ->required()
      ->delimiter(',');
  distortion->add_option("--res", res, "grid resolution nlat x nlon, e.g. 50x50");
  auto* dout = distortion->add_option_group("output", "at least one output");
  dout->add_option("--csv", csv_out, "per-sample CSV output path");
  dout->add_option("--json", json_out, "summary JSON output path");
  dout->require_option(1, 2);

  auto* defect = app.add_subcommand("defect", "Perfect-map defect over a grid");
  defect->add_option("--spec", spec_path, "projection spec JSON file")->required();
  defect->add_option("--region", region_deg, "lat_min,lat_max,lon_min,lon_max (deg)")
      ->required()
      ->delimiter(',');
  defect->add_option("--res", res, "grid resolution nlat x nlon");
  defect->add_option("--json", json_out, "JSON output path");

  auto* optimize = app.add_subcommand("optimize", "Standard parallels for a window");
  optimize->add_option("--south", south_deg, "southern window parallel (deg)")->required();
  optimize->add_option("--north", north_deg, "northern window parallel (deg)")->required();
  optimize->add_option("--json", json_out, "JSON output path");

  auto* geodesic = app.add_subcommand("geodesic", "Project a great-circle arc and fit it");
  geodesic->add_option("--spec", spec_path, "projection spec JSON file")->required();
  geodesic->add_option("--from", from_deg, "start lat,lon (deg)")->required()->delimiter(',');
  geodesic->add_option("--to", to_deg, "end lat,lon (deg)")->required()->delimiter(',');
  geodesic->add_option("--samples", samples, "samples along the arc");
  geodesic->add_option("--json", json_out, "arc-fit JSON output path");
  geodesic->add_option("--svg", svg_out, "SVG output path");
  geodesic->add_option("--csv", csv_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (project->parsed()) {
      return run_project(spec_path, latlon, xy, points_path, json_out, csv_out);
    }
    if (graticule->parsed()) {
      return run_graticule(spec_path, region_deg, step_deg, pstep_deg, mstep_deg, samples,
                           outline, svg_out, csv_out);
    }
    if (distortion->parsed()) {
      return run_distortion(spec_path, region_deg, res, csv_out, json_out);
    }
    if (defect->parsed()) {
      return run_defect(spec_path, region_deg, res, json_out);
    }
    if (optimize->parsed()) {
      return run_optimize(south_deg, north_deg, json_out);
    }
    if (geodesic->parsed()) {
      return run_geodesic(spec_path, from_deg, to_deg, samples, json_out, svg_out, csv_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
