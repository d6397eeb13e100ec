// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>
#include <string>

#include "msvf/svf.hpp"

namespace msvf {

/// Bernstein basis values (C(N,i) x^i (1-x)^{N-i})_{i=0..N} at x in [0,1],
/// computed by the triangular recurrence. N is capped at 64.
std::vector<double> bernstein_coeffs(std::size_t n, double x);

/// Cardinal B-spline of order m (degree m-1) with integer knots and support
/// [0, m], by the standard order recursion. Exactly zero outside [0, m].
double bspline_eval(std::size_t m, double t);

/// Schoenberg coefficients (B_m(N x - i))_{i=0..N}. Only valid for
/// x in [(m-1)/N, 1], where they form a partition of unity; a DomainError is
/// raised outside.
std::vector<double> schoenberg_coeffs(std::size_t m, std::size_t n, double x);

/// The closed validity interval [(m-1)/N, 1] of the Schoenberg coefficients.
Interval schoenberg_domain(std::size_t m, std::size_t n);

/// Lagrange basis values l_i(x) over the partition knots; sum to 1, and
/// l_i(x_j) = delta_ij. Negative off the nodes.
std::vector<double> lagrange_coeffs(const Partition& partition, double x);

enum class OperatorKind { kBernstein, kSchoenberg, kLagrange, kCustom };

/// A named family of coefficient functions c_i(x) together with the closed
/// subinterval on which they are valid (and, for the three classical kinds,
/// form a partition of unity).
struct OperatorSpec {
  OperatorKind kind = OperatorKind::kCustom;
  std::size_t spline_order = 0;  // Schoenberg only
  std::function<std::vector<double>(const Partition&, double)> coefficients;
  std::function<Interval(const Partition&)> valid_domain;
  std::string name;

  Interval domain(const Partition& partition) const { return valid_domain(partition); }
};

/// Bernstein over a uniform partition of [0, 1].
OperatorSpec bernstein_operator();
/// Schoenberg of order m over a uniform partition of [0, 1].
OperatorSpec schoenberg_operator(std::size_t m);
/// Polynomial interpolation over arbitrary distinct knots.
OperatorSpec lagrange_operator();
/// User-supplied coefficient family; the validity domain must be given.
OperatorSpec custom_operator(std::function<std::vector<double>(const Partition&, double)> coeffs,
                             std::function<Interval(const Partition&)> domain,
                             std::string name = "custom");

/// The metric analogue of the operator: the metric linear combination of the
/// samples with coefficients c(x). Leading/trailing exact-zero coefficients
/// are dropped together with their sets before chain enumeration; the chain
/// collection of a contiguous window of sets equals the restriction of the
/// full collection, so the result is unchanged.
CompactSet apply_metric_operator(const OperatorSpec& spec, const SampledSVF& f, double x,
                                 const Tolerance& tol = {});

/// The classical set-valued analogue: Minkowski combination of the samples.
/// Requires nonnegative coefficients (throws UnsupportedOperator otherwise).
CompactSet apply_minkowski_operator(const OperatorSpec& spec, const SampledSVF& f, double x,
                                    const Tolerance& tol = {});

/// The de Casteljau construction with the metric average as the binary
/// operation: F_i^k = MA(F_i^{k-1}, F_{i+1}^{k-1}, 1-x), returning F_0^N.
/// Requires a uniform partition of [0, 1]. A comparison operator distinct
/// from the metric Bernstein operator.
CompactSet decasteljau_ma_bernstein(const SampledSVF& f, double x, const Tolerance& tol = {});

}  // namespace msvf
