#include "spheremap/fitting.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace spheremap {

LineFit fit_line(const std::vector<PlanePoint>& pts) {
  if (pts.size() < 2) throw DegenerateArc("line fit needs at least 2 points");
  PlanePoint centroid = PlanePoint::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(pts.size());

  Eigen::Matrix2d scatter = Eigen::Matrix2d::Zero();
  for (const auto& p : pts) {
    const PlanePoint d = p - centroid;
    scatter += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(scatter);
  const PlanePoint dir = es.eigenvectors().col(1);  // largest eigenvalue

  double max_r = 0.0, sum_sq = 0.0;
  for (const auto& p : pts) {
    const PlanePoint d = p - centroid;
    const double r = std::abs(d.x() * dir.y() - d.y() * dir.x());
    max_r = std::max(max_r, r);
    sum_sq += r * r;
  }
  return {centroid, dir, max_r, std::sqrt(sum_sq / static_cast<double>(pts.size()))};
}

CircleFit fit_circle(const std::vector<PlanePoint>& pts) {
  const auto npts = static_cast<Eigen::Index>(pts.size());
  if (npts < 3) throw DegenerateArc("circle fit needs at least 3 points");

  PlanePoint centroid = PlanePoint::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(npts);

  // Kasa: minimize sum (|q|^2 + D x + E y + F)^2 over centered data q.
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d atb = Eigen::Vector3d::Zero();
  for (const auto& p : pts) {
    const PlanePoint q = p - centroid;
    const Eigen::Vector3d row(q.x(), q.y(), 1.0);
    const double rhs = -q.squaredNorm();
    ata += row * row.transpose();
    atb += row * rhs;
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu(ata);
  lu.setThreshold(1e-12);
  if (lu.rank() < 3) throw DegenerateArc("circle fit is singular (collinear points)");
  const Eigen::Vector3d sol = lu.solve(atb);
  PlanePoint center = centroid + PlanePoint(-sol(0) / 2.0, -sol(1) / 2.0);
  double r2 = sol(0) * sol(0) / 4.0 + sol(1) * sol(1) / 4.0 - sol(2);
  if (!(r2 > 0.0) || !std::isfinite(r2)) {
    throw DegenerateArc("circle fit is singular (collinear points)");
  }
  double radius = std::sqrt(r2);

  // One Gauss-Newton step on (cx, cy, R) with residuals |p - c| - R.
  Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
  Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
  for (const auto& p : pts) {
    const PlanePoint d = p - center;
    const double dist = d.norm();
    if (dist == 0.0) continue;
    const Eigen::Vector3d jrow(-d.x() / dist, -d.y() / dist, -1.0);
    const double res = dist - radius;
    jtj += jrow * jrow.transpose();
    jtr += jrow * res;
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu2(jtj);
  lu2.setThreshold(1e-12);
  if (lu2.rank() == 3) {
    const Eigen::Vector3d step = lu2.solve(-jtr);
    const PlanePoint cand_center = center + PlanePoint(step(0), step(1));
    const double cand_radius = radius + step(2);
    if (std::isfinite(cand_radius) && cand_radius > 0.0) {
      center = cand_center;
      radius = cand_radius;
    }
  }

  double max_r = 0.0, sum_sq = 0.0;
  for (const auto& p : pts) {
    const double r = std::abs((p - center).norm() - radius);
    max_r = std::max(max_r, r);
    sum_sq += r * r;
  }
  return {center, radius, max_r, std::sqrt(sum_sq / static_cast<double>(npts))};
}

double max_distance_to_chord(const std::vector<PlanePoint>& pts) {
  if (pts.size() < 2) throw DegenerateArc("chord needs at least 2 points");
  const PlanePoint a = pts.front();
  const PlanePoint d = pts.back() - a;
  const double len = d.norm();
  if (len < 1e-300) throw DegenerateArc("projected endpoints coincide");
  double max_r = 0.0;
  for (const auto& p : pts) {
    const PlanePoint q = p - a;
    max_r = std::max(max_r, std::abs(q.x() * d.y() - q.y() * d.x()) / len);
  }
  return max_r;
}

}  // namespace spheremap
