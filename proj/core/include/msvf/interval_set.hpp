// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <vector>

#include "msvf/tolerance.hpp"

namespace msvf {

/// A closed interval [lo, hi]; lo == hi encodes a single point.
struct Interval {
  double lo = 0;
  double hi = 0;

  Interval() = default;
  Interval(double lo_, double hi_);

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }

  bool operator==(const Interval& other) const = default;
};

/// A nonempty compact subset of the real line stored as a sorted union of
/// pairwise disjoint closed intervals. This is the exact 1D representation:
/// all set operations on it are computed without discretization.
class IntervalUnion {
public:
  /// Builds a normalized union: sorts, merges overlaps and gaps <= merge_eps.
  /// Throws EmptySetError on empty input.
  static IntervalUnion normalized(std::vector<Interval> raw, const Tolerance& tol = {});

  /// Single interval convenience.
  static IntervalUnion interval(double lo, double hi);
  /// Singleton {x}.
  static IntervalUnion point(double x);
  /// Finite set of reals (each a degenerate component).
  static IntervalUnion points(std::vector<double> xs, const Tolerance& tol = {});

  const std::vector<Interval>& components() const { return comps_; }
  std::size_t component_count() const { return comps_.size(); }
  double min() const { return comps_.front().lo; }
  double max() const { return comps_.back().hi; }

  bool contains(double x, double eps = 0.0) const;

  /// All component endpoints, ascending.
  std::vector<double> endpoints() const;
  /// Midpoints of the gaps between consecutive components (the points
  /// equidistant from two neighboring components).
  std::vector<double> voronoi_midpoints() const;

  /// dist(x, A) = min over a in A of |x - a|.
  double dist(double x) const;

  /// The projection set: all points of A nearest to x, detected within
  /// tol.tie_eps. Contains one point, or two when x sits on a gap midpoint.
  std::vector<double> project(double x, const Tolerance& tol = {}) const;

  /// Grid discretization with step <= g per component; every component
  /// contributes both endpoints. Used by the brute-force discrete engine.
  std::vector<double> discretize(double g) const;

  bool operator==(const IntervalUnion& other) const = default;

private:
  std::vector<Interval> comps_;
};

/// max over both directed sup-distances; the Hausdorff metric on compact sets.
double hausdorff(const IntervalUnion& a, const IntervalUnion& b);

/// { sum_i coeffs[i] * a_i : a_i in sets[i] independently }, normalized.
/// Negative coefficients are allowed (they flip interval orientation).
IntervalUnion minkowski_combination(const std::vector<double>& coeffs,
                                    const std::vector<IntervalUnion>& sets,
                                    const Tolerance& tol = {});

/// [min A, max A].
IntervalUnion convex_hull(const IntervalUnion& a);

/// A intersect B, or empty vector when disjoint.
std::vector<Interval> intersect(const IntervalUnion& a, const IntervalUnion& b);

/// True when haus(a, b) <= eps.
bool approx_equal(const IntervalUnion& a, const IntervalUnion& b, double eps);

}  // namespace msvf
