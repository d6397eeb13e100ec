// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/interval_set.hpp"

#include <algorithm>
#include <cmath>

#include "msvf/errors.hpp"

namespace msvf {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(std::isfinite(lo) && std::isfinite(hi))) throw Error("interval endpoints must be finite");
  if (lo > hi) throw Error("interval requires lo <= hi");
}

IntervalUnion IntervalUnion::normalized(std::vector<Interval> raw, const Tolerance& tol) {
  if (raw.empty()) throw EmptySetError("interval union requires at least one interval");
  tol.validate();
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  IntervalUnion out;
  out.comps_.push_back(raw.front());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    Interval& last = out.comps_.back();
    if (raw[i].lo - last.hi <= tol.merge_eps) {
      last.hi = std::max(last.hi, raw[i].hi);
    } else {
      out.comps_.push_back(raw[i]);
    }
  }
  return out;
}

IntervalUnion IntervalUnion::interval(double lo, double hi) {
  return normalized({Interval(lo, hi)});
}

IntervalUnion IntervalUnion::point(double x) {
  return normalized({Interval(x, x)});
}

IntervalUnion IntervalUnion::points(std::vector<double> xs, const Tolerance& tol) {
  std::vector<Interval> raw;
  raw.reserve(xs.size());
  for (double x : xs) raw.emplace_back(x, x);
  return normalized(std::move(raw), tol);
}

bool IntervalUnion::contains(double x, double eps) const {
  return dist(x) <= eps;
}

std::vector<double> IntervalUnion::endpoints() const {
  std::vector<double> out;
  out.reserve(2 * comps_.size());
  for (const Interval& c : comps_) {
    out.push_back(c.lo);
    if (c.hi != c.lo) out.push_back(c.hi);
  }
  return out;
}

std::vector<double> IntervalUnion::voronoi_midpoints() const {
  std::vector<double> out;
  out.reserve(comps_.size() > 0 ? comps_.size() - 1 : 0);
  for (std::size_t i = 1; i < comps_.size(); ++i)
    out.push_back(0.5 * (comps_[i - 1].hi + comps_[i].lo));
  return out;
}

namespace {

// Index of the first component with lo > x (component to the right of x).
std::size_t upper_component(const std::vector<Interval>& comps, double x) {
  return static_cast<std::size_t>(
      std::upper_bound(comps.begin(), comps.end(), x,
                       [](double v, const Interval& c) { return v < c.lo; }) -
      comps.begin());
}

}  // namespace

double IntervalUnion::dist(double x) const {
  const std::size_t up = upper_component(comps_, x);
  double best = std::numeric_limits<double>::infinity();
  if (up < comps_.size()) best = std::min(best, comps_[up].lo - x);
  if (up > 0) {
    const Interval& c = comps_[up - 1];
    best = std::min(best, c.contains(x) ? 0.0 : x - c.hi);
  }
  return best;
}

std::vector<double> IntervalUnion::project(double x, const Tolerance& tol) const {
  const double d = dist(x);
  if (d == 0.0) return {x};
  std::vector<double> out;
  const std::size_t up = upper_component(comps_, x);
  if (up > 0 && std::abs(x - comps_[up - 1].hi) <= d + tol.tie_eps) out.push_back(comps_[up - 1].hi);
  if (up < comps_.size() && std::abs(comps_[up].lo - x) <= d + tol.tie_eps) out.push_back(comps_[up].lo);
  return out;
}

std::vector<double> IntervalUnion::discretize(double g) const {
  if (!(g > 0)) throw Error("grid step must be positive");
  std::vector<double> out;
  for (const Interval& c : comps_) {
    const auto steps = static_cast<std::size_t>(std::ceil(c.length() / g));
    out.push_back(c.lo);
    for (std::size_t k = 1; k < steps; ++k) out.push_back(c.lo + c.length() * static_cast<double>(k) / static_cast<double>(steps));
    if (!c.is_point()) out.push_back(c.hi);
  }
  return out;
}

namespace {

// sup over a in A of dist(a, B). The distance-to-B function is piecewise
// linear with peaks only at B's gap midpoints, so the supremum over the
// interval union A is attained at a component endpoint of A or at a gap
// midpoint of B interior to A.
double directed_hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  double worst = 0;
  for (double e : a.endpoints()) worst = std::max(worst, b.dist(e));
  for (double m : b.voronoi_midpoints())
    if (a.contains(m)) worst = std::max(worst, b.dist(m));
  return worst;
}

}  // namespace

double hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

IntervalUnion minkowski_combination(const std::vector<double>& coeffs,
                                    const std::vector<IntervalUnion>& sets,
                                    const Tolerance& tol) {
  if (coeffs.size() != sets.size()) throw LengthMismatch("coefficient/set count mismatch");
  if (sets.empty()) throw EmptySetError("minkowski combination of zero sets");
  std::vector<Interval> acc{Interval(0, 0)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const double lam = coeffs[i];
    std::vector<Interval> next;
    next.reserve(acc.size() * sets[i].component_count());
    for (const Interval& base : acc) {
      for (const Interval& c : sets[i].components()) {
        const double x = lam * c.lo, y = lam * c.hi;
        next.emplace_back(base.lo + std::min(x, y), base.hi + std::max(x, y));
      }
    }
    acc = IntervalUnion::normalized(std::move(next), tol).components();
  }
  return IntervalUnion::normalized(std::move(acc), tol);
}

IntervalUnion convex_hull(const IntervalUnion& a) {
  return IntervalUnion::interval(a.min(), a.max());
}

std::vector<Interval> intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  for (const Interval& x : a.components()) {
    for (const Interval& y : b.components()) {
      const double lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
      if (lo <= hi) out.emplace_back(lo, hi);
    }
  }
  return out;
}

bool approx_equal(const IntervalUnion& a, const IntervalUnion& b, double eps) {
  return hausdorff(a, b) <= eps;
}

}  // namespace msvf
