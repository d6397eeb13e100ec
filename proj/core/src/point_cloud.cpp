// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/point_cloud.hpp"

#include <algorithm>
#include <cmath>

#include "msvf/errors.hpp"

namespace msvf {

double euclidean(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionMismatch("point dimensions differ");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

PointCloud PointCloud::of(std::size_t dim, std::vector<Point> pts, const Tolerance& tol) {
  if (dim == 0) throw Error("point cloud dimension must be positive");
  if (pts.empty()) throw EmptySetError("point cloud requires at least one point");
  tol.validate();
  for (const Point& p : pts) {
    if (p.size() != dim) throw DimensionMismatch("point cloud contains mixed dimensions");
    for (double v : p)
      if (!std::isfinite(v)) throw Error("point coordinates must be finite");
  }
  std::sort(pts.begin(), pts.end());
  std::vector<Point> kept;
  kept.reserve(pts.size());
  for (Point& p : pts) {
    if (!kept.empty() && euclidean(kept.back(), p) <= tol.dedupe_eps) continue;
    kept.push_back(std::move(p));
  }
  PointCloud out;
  out.dim_ = dim;
  out.pts_ = std::move(kept);
  return out;
}

PointCloud PointCloud::of1d(std::vector<double> xs, const Tolerance& tol) {
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back({x});
  return of(1, std::move(pts), tol);
}

double PointCloud::dist(const Point& a) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : pts_) best = std::min(best, euclidean(a, p));
  return best;
}

std::vector<std::size_t> PointCloud::project(const Point& a, const Tolerance& tol) const {
  const double d = dist(a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (euclidean(a, pts_[i]) <= d + tol.tie_eps) out.push_back(i);
  return out;
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("hausdorff over mismatched dimensions");
  double worst = 0;
  for (const Point& p : a.points()) worst = std::max(worst, b.dist(p));
  for (const Point& p : b.points()) worst = std::max(worst, a.dist(p));
  return worst;
}

PointCloud minkowski_combination(const std::vector<double>& coeffs,
                                 const std::vector<PointCloud>& sets,
                                 const Tolerance& tol) {
  if (coeffs.size() != sets.size()) throw LengthMismatch("coefficient/set count mismatch");
  if (sets.empty()) throw EmptySetError("minkowski combination of zero sets");
  const std::size_t dim = sets.front().dim();
  std::vector<Point> acc{Point(dim, 0.0)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].dim() != dim) throw DimensionMismatch("minkowski combination over mixed dimensions");
    std::vector<Point> next;
    next.reserve(acc.size() * sets[i].size());
    for (const Point& base : acc) {
      for (const Point& p : sets[i].points()) {
        Point q = base;
        for (std::size_t k = 0; k < dim; ++k) q[k] += coeffs[i] * p[k];
        next.push_back(std::move(q));
      }
    }
    acc = PointCloud::of(dim, std::move(next), tol).points();
  }
  return PointCloud::of(dim, std::move(acc), tol);
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

PointCloud convex_hull(const PointCloud& a, const Tolerance& tol) {
  if (a.dim() == 1) {
    std::vector<double> xs;
    for (const Point& p : a.points()) xs.push_back(p[0]);
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    return PointCloud::of1d({*mn, *mx}, tol);
  }
  if (a.dim() != 2)
    throw UnsupportedOperator("convex hull implemented for dimensions 1 and 2 only");
  std::vector<Point> pts = a.points();  // already sorted lexicographically
  if (pts.size() <= 2) return a;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower_end = k + 1;
  for (auto it = pts.rbegin() + 1, lim = pts.rend(); it != lim; ++it) {  // upper chain
    while (k >= lower_end && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return PointCloud::of(2, std::move(hull), tol);
}

}  // namespace msvf
