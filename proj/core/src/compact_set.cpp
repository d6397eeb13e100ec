// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/compact_set.hpp"

#include "msvf/errors.hpp"

namespace msvf {

const IntervalUnion& CompactSet::intervals() const {
  if (!is_interval_union()) throw KindMismatch("expected an interval-union set");
  return std::get<IntervalUnion>(rep_);
}

const PointCloud& CompactSet::cloud() const {
  if (!is_point_cloud()) throw KindMismatch("expected a point-cloud set");
  return std::get<PointCloud>(rep_);
}

void require_same_kind(const std::vector<CompactSet>& sets) {
  if (sets.empty()) throw EmptySetError("expected at least one set");
  for (const CompactSet& s : sets) {
    if (s.is_interval_union() != sets.front().is_interval_union())
      throw KindMismatch("sets mix interval unions and point clouds");
    if (s.dim() != sets.front().dim())
      throw DimensionMismatch("sets have mixed dimensions");
  }
}

double dist(const Point& a, const CompactSet& b) {
  if (b.is_interval_union()) {
    if (a.size() != 1) throw DimensionMismatch("1D set but point has dimension != 1");
    return b.intervals().dist(a[0]);
  }
  return b.cloud().dist(a);
}

CompactSet project(const Point& a, const CompactSet& b, const Tolerance& tol) {
  if (b.is_interval_union()) {
    if (a.size() != 1) throw DimensionMismatch("1D set but point has dimension != 1");
    return IntervalUnion::points(b.intervals().project(a[0], tol), tol);
  }
  std::vector<Point> pts;
  for (std::size_t i : b.cloud().project(a, tol)) pts.push_back(b.cloud().points()[i]);
  return PointCloud::of(b.cloud().dim(), std::move(pts), tol);
}

double hausdorff(const CompactSet& a, const CompactSet& b) {
  if (a.is_interval_union() != b.is_interval_union())
    throw KindMismatch("hausdorff over mixed set kinds");
  if (a.is_interval_union()) return hausdorff(a.intervals(), b.intervals());
  return hausdorff(a.cloud(), b.cloud());
}

CompactSet minkowski_combination(const std::vector<double>& coeffs,
                                 const std::vector<CompactSet>& sets,
                                 const Tolerance& tol) {
  require_same_kind(sets);
  if (sets.front().is_interval_union()) {
    std::vector<IntervalUnion> us;
    us.reserve(sets.size());
    for (const CompactSet& s : sets) us.push_back(s.intervals());
    return minkowski_combination(coeffs, us, tol);
  }
  std::vector<PointCloud> cs;
  cs.reserve(sets.size());
  for (const CompactSet& s : sets) cs.push_back(s.cloud());
  return minkowski_combination(coeffs, cs, tol);
}

CompactSet convex_hull(const CompactSet& a, const Tolerance& tol) {
  if (a.is_interval_union()) return convex_hull(a.intervals());
  return convex_hull(a.cloud(), tol);
}

bool approx_equal(const CompactSet& a, const CompactSet& b, double eps) {
  return hausdorff(a, b) <= eps;
}

}  // namespace msvf
