// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <vector>

#include "msvf/tolerance.hpp"

namespace msvf {

using Point = std::vector<double>;

double euclidean(const Point& a, const Point& b);

/// A finite nonempty set of points in R^dim; the discrete stand-in for a
/// compact set in dimension >= 2 (and the carrier of the brute-force engine
/// in any dimension). Points are deduplicated within dedupe_eps and stored
/// in lexicographic order so that results are deterministic.
class PointCloud {
public:
  static PointCloud of(std::size_t dim, std::vector<Point> pts, const Tolerance& tol = {});
  /// 1D convenience.
  static PointCloud of1d(std::vector<double> xs, const Tolerance& tol = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }

  double dist(const Point& a) const;
  /// Indices of all points at minimal distance from a, within tol.tie_eps.
  std::vector<std::size_t> project(const Point& a, const Tolerance& tol = {}) const;

  bool operator==(const PointCloud& other) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Point> pts_;
};

double hausdorff(const PointCloud& a, const PointCloud& b);

PointCloud minkowski_combination(const std::vector<double>& coeffs,
                                 const std::vector<PointCloud>& sets,
                                 const Tolerance& tol = {});

/// Hull vertex set. Exact for dim 1 and 2 (monotone chain); higher
/// dimensions are outside the scope of this library.
PointCloud convex_hull(const PointCloud& a, const Tolerance& tol = {});

}  // namespace msvf
