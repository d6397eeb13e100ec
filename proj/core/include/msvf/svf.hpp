// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msvf/chains.hpp"
#include "msvf/compact_set.hpp"

namespace msvf {

/// Strictly increasing knots x_0 < ... < x_N spanning [x_0, x_N].
class Partition {
public:
  static Partition of(std::vector<double> knots);
  /// n subintervals of equal width over [a, b].
  static Partition uniform(double a, double b, std::size_t n);

  const std::vector<double>& knots() const { return knots_; }
  double a() const { return knots_.front(); }
  double b() const { return knots_.back(); }
  std::size_t interval_count() const { return knots_.size() - 1; }
  double delta(std::size_t i) const { return knots_[i + 1] - knots_[i]; }
  double delta_max() const;
  double delta_min() const;
  bool is_uniform(double eps = 1e-12) const;

  /// Index i with x in [x_i, x_{i+1}]; throws DomainError when x is outside
  /// [a, b]. The last knot maps to the last interval.
  std::size_t bracket(double x) const;

  bool operator==(const Partition& other) const = default;

private:
  std::vector<double> knots_;
};

/// Samples F_i = F(x_i) of a set-valued function on a partition.
struct SampledSVF {
  Partition partition;
  std::vector<CompactSet> values;

  static SampledSVF of(Partition partition, std::vector<CompactSet> values);
  std::size_t size() const { return values.size(); }
};

/// A closed-form set-valued function on [a, b], used as ground truth when
/// measuring approximation errors. `lipschitz`, `omega` and `omega_v` carry
/// analytic regularity data when known; empirical probes fill in otherwise.
struct SVFOracle {
  double a = 0;
  double b = 1;
  std::function<CompactSet(double)> eval;
  std::optional<double> lipschitz;
  std::function<double(double)> omega;    // modulus of continuity, optional
  std::function<double(double)> omega_v;  // modulus of the variation profile, optional
  std::string name;

  SampledSVF sample(const Partition& partition) const;
};

/// The hat weight lambda_i(x) = (x_{i+1} - x) / (x_{i+1} - x_i).
double hat_weight(const Partition& partition, std::size_t i, double x);

/// Full piecewise-linear coefficient vector at x: zero except for the
/// bracketing pair (lambda_i, 1 - lambda_i).
std::vector<double> pl_coefficients(const Partition& partition, double x);

/// The metric piecewise-linear interpolant evaluated through the chains of
/// the full sample sequence. Reproduces F_i exactly at the knots.
CompactSet eval_metric_pl(const SampledSVF& f, double x, const Tolerance& tol = {});

/// The piecewise-linear interpolant built from the binary metric average of
/// the two bracketing samples. Coincides with eval_metric_pl.
CompactSet eval_artstein_pl(const SampledSVF& f, double x, const Tolerance& tol = {});

/// Caches the chain enumeration of a sample sequence so a grid of x values
/// can be evaluated without re-enumeration.
class MetricPLEvaluator {
public:
  MetricPLEvaluator(SampledSVF f, Tolerance tol = {});
  CompactSet operator()(double x) const;
  const ChainSet& chains() const { return chains_; }
  const SampledSVF& svf() const { return f_; }

private:
  SampledSVF f_;
  Tolerance tol_;
  ChainSet chains_;
};

/// A single-valued piecewise-linear selection induced by one metric chain.
struct Selection {
  Partition partition;
  std::vector<Point> values;  // one per knot

  Point at(double x) const;
  /// 1D convenience; requires dim 1 values.
  double scalar_at(double x) const;
};

/// The selection representation of the metric piecewise-linear interpolant:
/// chain families in the exact 1D mode, an explicit finite list for point
/// clouds. The pointwise union of the selections equals the interpolant.
struct SelectionSet {
  Partition partition;
  ChainSet chains;

  /// Explicit selections in discrete mode; throws for exact mode.
  std::vector<Selection> finite() const;
  /// Samples each exact family at its segment ends plus `per_segment`
  /// interior parameters (discrete mode returns the finite list).
  std::vector<Selection> sample(std::size_t per_segment) const;
};

SelectionSet selections(const SampledSVF& f, const Tolerance& tol = {});

/// Dense-grid probe of a set-valued function used to estimate moduli of
/// continuity. omega(delta) is the empirical supremum of haus(G(x), G(y))
/// over probed pairs with |x - y| <= delta: a monotone lower bound of the
/// true modulus.
class ModulusTable {
public:
  ModulusTable(std::vector<double> xs, std::vector<CompactSet> values);
  double omega(double delta) const;

private:
  std::vector<double> xs_;
  std::vector<std::vector<double>> haus_;  // pairwise distances
};

ModulusTable probe_modulus(const SVFOracle& g, std::size_t probe_count = 512);
ModulusTable probe_modulus(const SampledSVF& f);

/// Empirical modulus at a single delta.
double modulus_of_continuity(const SVFOracle& g, double delta, std::size_t probe_count = 512);
double modulus_of_continuity(const SampledSVF& f, double delta);

/// Cumulative variation profile v(x) on a refinement grid; v is
/// nondecreasing with v(a) = 0 and total() = v(b), a lower bound of the
/// total variation.
class VariationProfile {
public:
  VariationProfile(std::vector<double> xs, std::vector<double> v);
  double total() const { return v_.back(); }
  double at(double x) const;
  /// Modulus of the nondecreasing profile: sup v(x + delta) - v(x) on grid.
  double omega(double delta) const;
  const std::vector<double>& grid() const { return xs_; }
  const std::vector<double>& values() const { return v_; }

private:
  std::vector<double> xs_;
  std::vector<double> v_;
};

VariationProfile total_variation(const SVFOracle& g, std::size_t refinement = (1u << 12));
VariationProfile total_variation(const SampledSVF& f);

/// Wraps the metric piecewise-linear interpolant of f as an oracle on the
/// partition's span (fast path through the binary metric average).
SVFOracle pl_oracle(const SampledSVF& f, const Tolerance& tol = {});

}  // namespace msvf
