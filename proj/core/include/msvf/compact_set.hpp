// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <variant>
#include <vector>

#include "msvf/interval_set.hpp"
#include "msvf/point_cloud.hpp"

namespace msvf {

/// A nonempty compact set: exact interval union on the line, finite point
/// cloud otherwise. All operations below require both operands to be of the
/// same kind and dimension and throw KindMismatch/DimensionMismatch otherwise.
class CompactSet {
public:
  CompactSet(IntervalUnion u) : rep_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  CompactSet(PointCloud c) : rep_(std::move(c)) {}     // NOLINT(google-explicit-constructor)

  bool is_interval_union() const { return std::holds_alternative<IntervalUnion>(rep_); }
  bool is_point_cloud() const { return std::holds_alternative<PointCloud>(rep_); }
  std::size_t dim() const { return is_interval_union() ? 1 : cloud().dim(); }

  const IntervalUnion& intervals() const;
  const PointCloud& cloud() const;

  bool operator==(const CompactSet& other) const = default;

private:
  std::variant<IntervalUnion, PointCloud> rep_;
};

/// Throws KindMismatch/DimensionMismatch unless all sets share kind and dim.
void require_same_kind(const std::vector<CompactSet>& sets);

double dist(const Point& a, const CompactSet& b);
/// The projection set as a compact set (finite).
CompactSet project(const Point& a, const CompactSet& b, const Tolerance& tol = {});
double hausdorff(const CompactSet& a, const CompactSet& b);
CompactSet minkowski_combination(const std::vector<double>& coeffs,
                                 const std::vector<CompactSet>& sets,
                                 const Tolerance& tol = {});
CompactSet convex_hull(const CompactSet& a, const Tolerance& tol = {});
bool approx_equal(const CompactSet& a, const CompactSet& b, double eps);

}  // namespace msvf
