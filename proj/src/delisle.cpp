#include "spheremap/delisle.hpp"

#include <cmath>
#include <limits>

#include "spheremap/fitting.hpp"
#include "spheremap/projections.hpp"
#include "spheremap/sphere.hpp"

namespace spheremap {

std::pair<double, double> midpoint_standard_parallels(double phi_s, double phi_n) {
  if (!(phi_s < phi_n) || phi_s <= -kHalfPi || phi_n >= kHalfPi) {
    throw BadWindow("window parallels must satisfy -pi/2 < phi_s < phi_n < pi/2");
  }
  return {(3.0 * phi_s + phi_n) / 4.0, (phi_s + 3.0 * phi_n) / 4.0};
}

ConicParams build_conic(double phi1, double phi2) {
  if (!(phi1 < phi2)) {
    throw BadParallels("standard parallels must satisfy phi1 < phi2");
  }
  if (!(phi1 > 0.0) || !(phi2 < kHalfPi)) {
    throw BadParallels("standard parallels must lie strictly inside (0, pi/2)");
  }
  const double n = (std::cos(phi1) - std::cos(phi2)) / (phi2 - phi1);
  return {phi1, phi2, n, std::cos(phi1) / n};
}

double apex_latitude(const ConicParams& params) { return params.phi1 + params.rho1; }

double parallel_scale(const ConicParams& params, double phi) {
  if (phi >= apex_latitude(params)) {
    throw BeyondApex("parallel scale is undefined at or beyond the cone apex");
  }
  return params.n * (params.rho1 + (params.phi1 - phi)) / std::cos(phi);
}

double parallel_angular_span(const ConicParams& params, double dlon) {
  return params.n * dlon;
}

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

// Golden-section maximization; returns the best point ever evaluated.
template <typename F>
Deviation golden_max(const F& f, double a, double b, double tol) {
  double best_x = a, best_f = f(a);
  const double fb = f(b);
  if (fb > best_f) {
    best_x = b;
    best_f = fb;
  }
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
      if (f2 > best_f) {
        best_f = f2;
        best_x = x2;
      }
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
      if (f1 > best_f) {
        best_f = f1;
        best_x = x1;
      }
    }
  }
  return {best_f, best_x};
}

// Max of |k - 1| over [s, n]: dense scan, optionally sharpened by a
// golden-section pass over the bracketing cells of the scan argmax.
template <typename K>
Deviation scan_deviation(const K& k_of, double s, double n, int samples, bool refine) {
  const auto dev = [&](double phi) { return std::abs(k_of(phi) - 1.0); };
  if (s == n) return {dev(s), s};
  double best_f = -1.0, best_x = s;
  for (int i = 0; i < samples; ++i) {
    const double phi = s + (n - s) * static_cast<double>(i) / (samples - 1);
    const double d = dev(phi);
    if (d > best_f) {
      best_f = d;
      best_x = phi;
    }
  }
  if (!refine) return {best_f, best_x};
  const double cell = (n - s) / (samples - 1);
  const Deviation sharpened =
      golden_max(dev, std::max(s, best_x - cell), std::min(n, best_x + cell), 1e-12);
  return sharpened.value > best_f ? sharpened : Deviation{best_f, best_x};
}

}  // namespace

Deviation max_deviation(const ConicParams& params, double phi_s, double phi_n) {
  if (!(phi_s <= phi_n)) throw BadWindow("window requires phi_s <= phi_n");
  if (phi_s <= -kHalfPi || phi_n >= apex_latitude(params)) {
    throw BadWindow("window must lie inside (-pi/2, apex latitude)");
  }
  const auto k_of = [&](double phi) { return parallel_scale(params, phi); };
  return scan_deviation(k_of, phi_s, phi_n, 4097, true);
}

OptimizerResult optimize_standard_parallels(double phi_s, double phi_n) {
  if (!(phi_s < phi_n) || phi_s <= -kHalfPi || phi_n >= kHalfPi) {
    throw BadWindow("window parallels must satisfy -pi/2 < phi_s < phi_n < pi/2");
  }

  // Candidate pairs may straddle the equator, where the cone flattens to a
  // cylinder (n -> 0); the parallel scale written without rho1 = cos(phi1)/n
  // stays finite there.
  const auto objective = [&](double f1, double f2, int samples) {
    const double n = (std::cos(f1) - std::cos(f2)) / (f2 - f1);
    const double c1 = std::cos(f1);
    const auto k_of = [=](double phi) { return (c1 + n * (f1 - phi)) / std::cos(phi); };
    return scan_deviation(k_of, phi_s, phi_n, samples, samples > 512).value;
  };

  // Coarse pass: 200 x 200 interior grid, earlier cell wins ties.
  constexpr int kGrid = 200;
  const double width = phi_n - phi_s;
  double best_f1 = 0.0, best_f2 = 0.0, best_val = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= kGrid; ++i) {
    const double f1 = phi_s + width * static_cast<double>(i) / (kGrid + 1);
    for (int j = i + 1; j <= kGrid; ++j) {
      const double f2 = phi_s + width * static_cast<double>(j) / (kGrid + 1);
      const double v = objective(f1, f2, 257);
      if (v < best_val) {
        best_val = v;
        best_f1 = f1;
        best_f2 = f2;
      }
    }
  }

  const auto fine = [&](double f1, double f2) { return objective(f1, f2, 2049); };

  // Seed with the better of the coarse winner and Delisle's midpoint pair,
  // so the refined result can never lose to the midpoint rule.
  const auto [mid1, mid2] = midpoint_standard_parallels(phi_s, phi_n);
  const double midpoint_dev = fine(mid1, mid2);
  double cur_f1 = best_f1, cur_f2 = best_f2;
  double cur_val = fine(cur_f1, cur_f2);
  if (midpoint_dev < cur_val) {
    cur_f1 = mid1;
    cur_f2 = mid2;
    cur_val = midpoint_dev;
  }

  // Coordinate-wise golden-section descent to 1e-8 bracket width.
  const double margin = 1e-9 * width;
  double cell = width / (kGrid + 1);
  for (int pass = 0; pass < 64; ++pass) {
    const double prev_val = cur_val;
    {
      const double lo = std::max(phi_s + margin, cur_f1 - cell);
      const double hi = std::min(cur_f2 - margin, cur_f1 + cell);
      if (lo < hi) {
        const Deviation d = golden_max([&](double f1) { return -fine(f1, cur_f2); }, lo, hi, 1e-8);
        if (-d.value < cur_val) {
          cur_val = -d.value;
          cur_f1 = d.argmax_phi;
        }
      }
    }
    {
      const double lo = std::max(cur_f1 + margin, cur_f2 - cell);
      const double hi = std::min(phi_n - margin, cur_f2 + cell);
      if (lo < hi) {
        const Deviation d = golden_max([&](double f2) { return -fine(cur_f1, f2); }, lo, hi, 1e-8);
        if (-d.value < cur_val) {
          cur_val = -d.value;
          cur_f2 = d.argmax_phi;
        }
      }
    }
    if (prev_val - cur_val < 1e-13 && pass >= 2) break;
    cell = std::max(cell * 0.5, 2e-8);
  }

  const double minimax = std::min(cur_val, midpoint_dev);
  if (midpoint_dev <= cur_val) {
    cur_f1 = mid1;
    cur_f2 = mid2;
  }
  return {cur_f1, cur_f2, minimax, midpoint_dev,
          minimax > 0.0 ? midpoint_dev / minimax : 1.0};
}

ArcFit fit_projected_arc(const std::vector<PlanePoint>& pts) {
  if (pts.size() < 2) throw DegenerateArc("projected arc needs at least 2 points");
  const double chord = (pts.back() - pts.front()).norm();
  if (chord < 1e-300) throw DegenerateArc("projected endpoints coincide");
  const double sagitta = max_distance_to_chord(pts);

  if (sagitta <= 1e-12 * std::max(1.0, chord)) {
    // Collinear to roundoff: the limiting circle is the chord line itself.
    double sum_sq = 0.0;
    const PlanePoint a = pts.front();
    const PlanePoint d = (pts.back() - a) / chord;
    for (const auto& p : pts) {
      const PlanePoint q = p - a;
      const double r = q.x() * d.y() - q.y() * d.x();
      sum_sq += r * r;
    }
    return {chord,
            sagitta,
            0.5 * (pts.front() + pts.back()),
            std::numeric_limits<double>::infinity(),
            std::sqrt(sum_sq / static_cast<double>(pts.size())),
            true};
  }

  const CircleFit cf = fit_circle(pts);
  return {chord, sagitta, cf.center, cf.radius, cf.rms_residual, false};
}

ArcFit geodesic_flatness(const ConicParams& params, const GeoPoint& a, const GeoPoint& b,
                         int nsamples) {
  if (nsamples < 16) throw BadSampleCount("geodesic flatness needs nsamples >= 16");
  const ProjectionSpec spec = EquidistantConic{params};
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<size_t>(nsamples));
  double prev_lon = a.lon();
  for (int i = 0; i < nsamples; ++i) {
    const double t = static_cast<double>(i) / (nsamples - 1);
    const GeoPoint g = geodesic_point(a, b, t);
    if (!in_domain(spec, g)) {
      throw OutOfDomain("geodesic leaves the conic domain");
    }
    if (std::abs(g.lon() - prev_lon) > kPi) {
      throw OutOfDomain("geodesic crosses the antimeridian cut of the conic image");
    }
    prev_lon = g.lon();
    pts.push_back(forward(spec, g));
  }
  return fit_projected_arc(pts);
}

}  // namespace spheremap
