// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <vector>

#include "msvf/compact_set.hpp"

namespace msvf {

/// Which side of the pair condition a metric pair was generated from.
enum class PairWitness { kBProjectsOntoA, kAProjectsOntoB, kBoth };

/// An element of the pair set of two compact sets: a in A, b in B with
/// a nearest to b in A, or b nearest to a in B (or both).
struct MetricPair {
  Point a;
  Point b;
  PairWitness witness = PairWitness::kBoth;
};

/// A tuple selecting one point from each set of a sequence, generated from a
/// pivot by successive nearest-point projections to the left and right.
struct MetricChain {
  std::vector<Point> points;
  std::size_t pivot = 0;
};

/// One coordinate of a one-parameter chain family: either it tracks the
/// pivot coordinate tau identically, or it is pinned to a constant (an
/// endpoint reached by a clamping projection).
struct ChainCoord {
  bool tracks_pivot = false;
  double value = 0;  // used when !tracks_pivot

  double at(double tau) const { return tracks_pivot ? tau : value; }
};

/// A branch-consistent one-parameter family of metric chains of a sequence
/// of interval unions. The pivot coordinate tau ranges over the closed
/// segment [tau_lo, tau_hi] inside one component of the pivot set, and each
/// coordinate is an affine map of tau with slope 0 or 1. Degenerate families
/// (tau_lo == tau_hi) carry the single chains that exist only at breakpoint
/// parameters, e.g. the extra branch of a projection tie at a component
/// boundary. The union of all families enumerated for a sequence is exactly
/// its metric chain collection.
struct ChainFamily {
  std::size_t pivot = 0;
  double tau_lo = 0;
  double tau_hi = 0;
  std::vector<ChainCoord> coords;

  bool degenerate() const { return tau_lo == tau_hi; }
  std::vector<double> chain_at(double tau) const;
};

/// The metric chain collection of a sequence of sets: exact one-parameter
/// families in 1D, an explicit finite list for point clouds.
struct ChainSet {
  bool exact = false;
  std::vector<ChainFamily> families;  // exact mode
  std::vector<MetricChain> chains;    // discrete mode
};

/// The pair set of two compact sets; 1D pairs are returned as two-coordinate
/// chain families, point-cloud pairs as an explicit list.
struct PairSet {
  bool exact = false;
  std::vector<ChainFamily> families;
  std::vector<MetricPair> pairs;
};

/// Exact enumeration of all metric chain families of a sequence of interval
/// unions (see ChainFamily).
std::vector<ChainFamily> exact_chain_families(const std::vector<IntervalUnion>& sets,
                                              const Tolerance& tol = {});

/// Brute-force enumeration of all metric chains of a sequence of point
/// clouds, branching on every projection tie, deduplicated.
std::vector<MetricChain> discrete_chains(const std::vector<PointCloud>& sets,
                                         const Tolerance& tol = {});

/// Union of the i-th coordinate over all families; equals the i-th set when
/// the enumeration covers it (every element generates at least one chain).
IntervalUnion coordinate_image(const std::vector<ChainFamily>& families, std::size_t i,
                               const Tolerance& tol = {});

/// True when `values` is a metric chain of `sets` for some pivot index.
bool is_metric_chain(const std::vector<double>& values, const std::vector<IntervalUnion>& sets,
                     const Tolerance& tol = {});
bool is_metric_chain(const std::vector<Point>& points, const std::vector<PointCloud>& sets,
                     const Tolerance& tol = {});

/// The pair set Pi(A, B).
PairSet metric_pairs(const CompactSet& a, const CompactSet& b, const Tolerance& tol = {});

/// The t-weighted metric average { t a + (1-t) b : (a,b) in Pi(A,B) }.
/// Requires t in [0, 1].
CompactSet metric_average(const CompactSet& a, const CompactSet& b, double t,
                          const Tolerance& tol = {});

/// The full chain collection CH(A_0, ..., A_N).
ChainSet metric_chains(const std::vector<CompactSet>& sets, const Tolerance& tol = {});

/// The metric linear combination
///   { sum_i coeffs[i] * a_i : (a_0, ..., a_N) a metric chain },
/// computed exactly in 1D via the chain families and by enumeration for
/// point clouds. Coefficients may be negative.
CompactSet metric_linear_combination(const std::vector<double>& coeffs,
                                     const std::vector<CompactSet>& sets,
                                     const Tolerance& tol = {});

/// Image { sum_i coeffs[i] * a_i } of an already enumerated chain collection.
/// Lets callers that evaluate many coefficient vectors over the same sets
/// enumerate the chains once.
CompactSet combination_from_chains(const ChainSet& chains, const std::vector<double>& coeffs,
                                   const Tolerance& tol = {});

}  // namespace msvf
