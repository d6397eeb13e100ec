// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/chains.hpp"

#include <algorithm>
#include <cmath>

#include "msvf/errors.hpp"

namespace msvf {

std::vector<double> ChainFamily::chain_at(double tau) const {
  std::vector<double> out;
  out.reserve(coords.size());
  for (const ChainCoord& c : coords) out.push_back(c.at(tau));
  return out;
}

namespace {

// One directional arm of a family: the coordinate states encountered while
// walking away from the pivot, in walk order.
using Arm = std::vector<ChainCoord>;

// Walks from the pivot in direction dir, projecting onto each set in turn.
// A coordinate that still tracks the pivot stays free exactly when the
// current segment lies inside a component of the next set (decided at the
// segment midpoint; segment bounds are breakpoints, so the open segment
// never straddles a component endpoint or a gap midpoint). Any clamped
// value projects to one endpoint, or to two on an exact tie, in which case
// the walk branches. Returns all branch-consistent arms.
std::vector<Arm> propagate(const std::vector<IntervalUnion>& sets, std::size_t pivot, int dir,
                           bool segment_mode, double lo, double hi, const Tolerance& tol) {
  std::vector<Arm> arms{Arm{}};
  const double mid = 0.5 * (lo + hi);
  const auto n = static_cast<std::ptrdiff_t>(sets.size());
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(pivot) + dir; i >= 0 && i < n; i += dir) {
    const IntervalUnion& next_set = sets[static_cast<std::size_t>(i)];
    std::vector<Arm> grown;
    grown.reserve(arms.size());
    for (const Arm& arm : arms) {
      const bool cur_free = arm.empty() ? true : arm.back().tracks_pivot;
      const double cur_val = arm.empty() ? lo : arm.back().value;
      if (cur_free && segment_mode) {
        if (next_set.dist(mid) == 0.0) {
          Arm a = arm;
          a.push_back({true, 0});
          grown.push_back(std::move(a));
        } else {
          for (double p : next_set.project(mid, tol)) {
            Arm a = arm;
            a.push_back({false, p});
            grown.push_back(std::move(a));
          }
        }
        continue;
      }
      const double v = cur_free ? lo : cur_val;  // point mode: tau == lo == hi
      if (next_set.dist(v) == 0.0) {
        Arm a = arm;
        a.push_back(cur_free ? ChainCoord{true, 0} : ChainCoord{false, v});
        grown.push_back(std::move(a));
      } else {
        for (double p : next_set.project(v, tol)) {
          Arm a = arm;
          a.push_back({false, p});
          grown.push_back(std::move(a));
        }
      }
    }
    arms = std::move(grown);
  }
  return arms;
}

void add_families(std::vector<ChainFamily>& out, const std::vector<IntervalUnion>& sets,
                  std::size_t pivot, bool segment_mode, double lo, double hi,
                  const Tolerance& tol) {
  const auto lefts = propagate(sets, pivot, -1, segment_mode, lo, hi, tol);
  const auto rights = propagate(sets, pivot, +1, segment_mode, lo, hi, tol);
  for (const Arm& left : lefts) {
    for (const Arm& right : rights) {
      ChainFamily f;
      f.pivot = pivot;
      f.tau_lo = lo;
      f.tau_hi = hi;
      f.coords.resize(sets.size());
      f.coords[pivot] = {true, 0};
      for (std::size_t k = 0; k < left.size(); ++k) f.coords[pivot - 1 - k] = left[k];
      for (std::size_t k = 0; k < right.size(); ++k) f.coords[pivot + 1 + k] = right[k];
      out.push_back(std::move(f));
    }
  }
}

bool family_less(const ChainFamily& a, const ChainFamily& b) {
  if (a.tau_lo != b.tau_lo) return a.tau_lo < b.tau_lo;
  if (a.tau_hi != b.tau_hi) return a.tau_hi < b.tau_hi;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].tracks_pivot != b.coords[i].tracks_pivot) return a.coords[i].tracks_pivot;
    if (!a.coords[i].tracks_pivot && a.coords[i].value != b.coords[i].value)
      return a.coords[i].value < b.coords[i].value;
  }
  return false;
}

bool family_equal(const ChainFamily& a, const ChainFamily& b) {
  return !family_less(a, b) && !family_less(b, a);
}

}  // namespace

std::vector<ChainFamily> exact_chain_families(const std::vector<IntervalUnion>& sets,
                                              const Tolerance& tol) {
  if (sets.empty()) throw EmptySetError("chain enumeration over zero sets");
  tol.validate();

  std::vector<double> features;
  for (const IntervalUnion& s : sets) {
    for (double e : s.endpoints()) features.push_back(e);
    for (double m : s.voronoi_midpoints()) features.push_back(m);
  }
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()), features.end());

  std::vector<ChainFamily> out;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (const Interval& comp : sets[j].components()) {
      std::vector<double> bps{comp.lo};
      for (double f : features)
        if (comp.lo < f && f < comp.hi) bps.push_back(f);
      if (!comp.is_point()) bps.push_back(comp.hi);
      for (std::size_t k = 0; k + 1 < bps.size(); ++k)
        add_families(out, sets, j, /*segment_mode=*/true, bps[k], bps[k + 1], tol);
      for (double b : bps) add_families(out, sets, j, /*segment_mode=*/false, b, b, tol);
    }
  }
  std::sort(out.begin(), out.end(), family_less);
  out.erase(std::unique(out.begin(), out.end(), family_equal), out.end());
  return out;
}

std::vector<MetricChain> discrete_chains(const std::vector<PointCloud>& sets,
                                         const Tolerance& tol) {
  if (sets.empty()) throw EmptySetError("chain enumeration over zero sets");
  tol.validate();
  const std::size_t dim = sets.front().dim();
  for (const PointCloud& s : sets)
    if (s.dim() != dim) throw DimensionMismatch("chain sets have mixed dimensions");

  using ArmP = std::vector<Point>;
  const auto walk = [&](std::size_t pivot, const Point& start, int dir) {
    std::vector<ArmP> arms{ArmP{}};
    const auto n = static_cast<std::ptrdiff_t>(sets.size());
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(pivot) + dir; i >= 0 && i < n;
         i += dir) {
      const PointCloud& next_set = sets[static_cast<std::size_t>(i)];
      std::vector<ArmP> grown;
      for (const ArmP& arm : arms) {
        const Point& cur = arm.empty() ? start : arm.back();
        for (std::size_t idx : next_set.project(cur, tol)) {
          ArmP a = arm;
          a.push_back(next_set.points()[idx]);
          grown.push_back(std::move(a));
        }
      }
      arms = std::move(grown);
    }
    return arms;
  };

  std::vector<MetricChain> out;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (const Point& p : sets[j].points()) {
      const auto lefts = walk(j, p, -1);
      const auto rights = walk(j, p, +1);
      for (const ArmP& left : lefts) {
        for (const ArmP& right : rights) {
          MetricChain ch;
          ch.pivot = j;
          ch.points.resize(sets.size());
          ch.points[j] = p;
          for (std::size_t k = 0; k < left.size(); ++k) ch.points[j - 1 - k] = left[k];
          for (std::size_t k = 0; k < right.size(); ++k) ch.points[j + 1 + k] = right[k];
          out.push_back(std::move(ch));
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const MetricChain& a, const MetricChain& b) {
    return a.points < b.points;
  });
  const auto near = [&](const MetricChain& a, const MetricChain& b) {
    for (std::size_t i = 0; i < a.points.size(); ++i)
      if (euclidean(a.points[i], b.points[i]) > tol.dedupe_eps) return false;
    return true;
  };
  out.erase(std::unique(out.begin(), out.end(), near), out.end());
  return out;
}

IntervalUnion coordinate_image(const std::vector<ChainFamily>& families, std::size_t i,
                               const Tolerance& tol) {
  std::vector<Interval> acc;
  acc.reserve(families.size());
  for (const ChainFamily& f : families) {
    if (f.coords.at(i).tracks_pivot)
      acc.emplace_back(f.tau_lo, f.tau_hi);
    else
      acc.emplace_back(f.coords[i].value, f.coords[i].value);
  }
  return IntervalUnion::normalized(std::move(acc), tol);
}

bool is_metric_chain(const std::vector<double>& values, const std::vector<IntervalUnion>& sets,
                     const Tolerance& tol) {
  if (values.size() != sets.size() || sets.empty()) return false;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].dist(values[i]) > tol.tie_eps) return false;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    bool ok = true;
    for (std::size_t i = 1; i <= j && ok; ++i)
      ok = std::abs(values[i] - values[i - 1]) <= sets[i - 1].dist(values[i]) + tol.tie_eps;
    for (std::size_t i = j; i + 1 < sets.size() && ok; ++i)
      ok = std::abs(values[i + 1] - values[i]) <= sets[i + 1].dist(values[i]) + tol.tie_eps;
    if (ok) return true;
  }
  return false;
}

bool is_metric_chain(const std::vector<Point>& points, const std::vector<PointCloud>& sets,
                     const Tolerance& tol) {
  if (points.size() != sets.size() || sets.empty()) return false;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].dist(points[i]) > tol.tie_eps) return false;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    bool ok = true;
    for (std::size_t i = 1; i <= j && ok; ++i)
      ok = euclidean(points[i], points[i - 1]) <= sets[i - 1].dist(points[i]) + tol.tie_eps;
    for (std::size_t i = j; i + 1 < sets.size() && ok; ++i)
      ok = euclidean(points[i + 1], points[i]) <= sets[i + 1].dist(points[i]) + tol.tie_eps;
    if (ok) return true;
  }
  return false;
}

namespace {

IntervalUnion families_image(const std::vector<ChainFamily>& families,
                             const std::vector<double>& coeffs, const Tolerance& tol) {
  std::vector<Interval> acc;
  acc.reserve(families.size());
  for (const ChainFamily& f : families) {
    double slope = 0, offset = 0;
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
      if (f.coords[i].tracks_pivot)
        slope += coeffs[i];
      else
        offset += coeffs[i] * f.coords[i].value;
    }
    const double g1 = slope * f.tau_lo + offset;
    const double g2 = slope * f.tau_hi + offset;
    acc.emplace_back(std::min(g1, g2), std::max(g1, g2));
  }
  return IntervalUnion::normalized(std::move(acc), tol);
}

std::vector<IntervalUnion> as_intervals(const std::vector<CompactSet>& sets) {
  std::vector<IntervalUnion> out;
  out.reserve(sets.size());
  for (const CompactSet& s : sets) out.push_back(s.intervals());
  return out;
}

std::vector<PointCloud> as_clouds(const std::vector<CompactSet>& sets) {
  std::vector<PointCloud> out;
  out.reserve(sets.size());
  for (const CompactSet& s : sets) out.push_back(s.cloud());
  return out;
}

}  // namespace

PairSet metric_pairs(const CompactSet& a, const CompactSet& b, const Tolerance& tol) {
  require_same_kind({a, b});
  PairSet out;
  if (a.is_interval_union()) {
    out.exact = true;
    out.families = exact_chain_families({a.intervals(), b.intervals()}, tol);
    return out;
  }
  const PointCloud& ca = a.cloud();
  const PointCloud& cb = b.cloud();
  for (const Point& pa : ca.points())
    for (std::size_t i : cb.project(pa, tol))
      out.pairs.push_back({pa, cb.points()[i], PairWitness::kAProjectsOntoB});
  for (const Point& pb : cb.points())
    for (std::size_t i : ca.project(pb, tol))
      out.pairs.push_back({ca.points()[i], pb, PairWitness::kBProjectsOntoA});
  std::sort(out.pairs.begin(), out.pairs.end(), [](const MetricPair& x, const MetricPair& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::vector<MetricPair> merged;
  for (MetricPair& p : out.pairs) {
    if (!merged.empty() && merged.back().a == p.a && merged.back().b == p.b) {
      if (merged.back().witness != p.witness) merged.back().witness = PairWitness::kBoth;
      continue;
    }
    merged.push_back(std::move(p));
  }
  out.pairs = std::move(merged);
  return out;
}

CompactSet metric_average(const CompactSet& a, const CompactSet& b, double t,
                          const Tolerance& tol) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("metric average weight must lie in [0,1]");
  const PairSet ps = metric_pairs(a, b, tol);
  if (ps.exact) return families_image(ps.families, {t, 1.0 - t}, tol);
  std::vector<Point> pts;
  pts.reserve(ps.pairs.size());
  const std::size_t dim = a.dim();
  for (const MetricPair& p : ps.pairs) {
    Point q(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) q[k] = t * p.a[k] + (1.0 - t) * p.b[k];
    pts.push_back(std::move(q));
  }
  return PointCloud::of(dim, std::move(pts), tol);
}

ChainSet metric_chains(const std::vector<CompactSet>& sets, const Tolerance& tol) {
  require_same_kind(sets);
  ChainSet out;
  if (sets.front().is_interval_union()) {
    out.exact = true;
    out.families = exact_chain_families(as_intervals(sets), tol);
  } else {
    out.chains = discrete_chains(as_clouds(sets), tol);
  }
  return out;
}

CompactSet metric_linear_combination(const std::vector<double>& coeffs,
                                     const std::vector<CompactSet>& sets,
                                     const Tolerance& tol) {
  if (coeffs.size() != sets.size()) throw LengthMismatch("coefficient/set count mismatch");
  require_same_kind(sets);
  return combination_from_chains(metric_chains(sets, tol), coeffs, tol);
}

CompactSet combination_from_chains(const ChainSet& chains, const std::vector<double>& coeffs,
                                   const Tolerance& tol) {
  if (chains.exact) {
    if (!chains.families.empty() && chains.families.front().coords.size() != coeffs.size())
      throw LengthMismatch("coefficient/chain length mismatch");
    return families_image(chains.families, coeffs, tol);
  }
  if (chains.chains.empty()) throw EmptySetError("empty chain collection");
  if (chains.chains.front().points.size() != coeffs.size())
    throw LengthMismatch("coefficient/chain length mismatch");
  const std::size_t dim = chains.chains.front().points.front().size();
  std::vector<Point> pts;
  pts.reserve(chains.chains.size());
  for (const MetricChain& ch : chains.chains) {
    Point q(dim, 0.0);
    for (std::size_t i = 0; i < ch.points.size(); ++i)
      for (std::size_t k = 0; k < dim; ++k) q[k] += coeffs[i] * ch.points[i][k];
    pts.push_back(std::move(q));
  }
  return PointCloud::of(dim, std::move(pts), tol);
}

}  // namespace msvf
