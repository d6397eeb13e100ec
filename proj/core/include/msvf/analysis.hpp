// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <optional>

#include "msvf/operators.hpp"

namespace msvf {

/// Accuracy-modulus shapes phi(x, delta), nondecreasing in delta with
/// phi(x, 0) = 0.
enum class PhiKind { kDelta, kSqrtDelta, kBernstein };

double phi_value(PhiKind kind, double x, double delta);

/// Regularity data of an oracle plus the fitted operator constant used by
/// the bound checks.
struct ErrorModel {
  double lipschitz = 0;
  double fitted_c = 0;
  PhiKind phi = PhiKind::kDelta;
  std::function<double(double)> omega_f;   // modulus of the oracle
  std::function<double(double)> omega_vf;  // modulus of its variation profile
};

struct ErrorRow {
  std::size_t n = 0;
  double error = 0;
  double bound = 0;   // filled by bound_check
  double margin = 0;  // bound - error
};

struct ConvergenceReport {
  std::string operator_name;
  std::string oracle_name;
  std::optional<double> eval_x;  // fixed-x mode; otherwise max over the grid
  std::vector<ErrorRow> rows;

  /// Least-squares slope of log error vs log N over rows with n >= 8 and
  /// positive error; NaN when fewer than two rows qualify.
  double slope() const;
};

/// An operator as consumed by the harness: how to evaluate it on a sampled
/// function and where it is valid.
struct OperatorUnderTest {
  std::string name;
  std::function<CompactSet(const SampledSVF&, double)> apply;
  std::function<Interval(const Partition&)> domain;
};

OperatorUnderTest under_test(const OperatorSpec& spec, const Tolerance& tol = {});
OperatorUnderTest minkowski_under_test(const OperatorSpec& spec, const Tolerance& tol = {});
OperatorUnderTest pl_under_test(const Tolerance& tol = {});
OperatorUnderTest decasteljau_under_test(const Tolerance& tol = {});

/// Per-N maximal Hausdorff error of the operator against the oracle, over
/// `eval_grid` points of the validity domain (or at the fixed x).
ConvergenceReport error_curve(const SVFOracle& oracle, const OperatorUnderTest& op,
                              const std::vector<std::size_t>& ns, std::size_t eval_grid,
                              std::optional<double> fixed_x = {}, const Tolerance& tol = {});

enum class NamedBound {
  kPlUniform,             // 2 omega(F, delta_max)
  kSchoenbergLipschitz,   // (2 + floor((m+1)/2)) L / N
  kSchoenbergContinuous,  // 2 (1 + 2 floor((m+1)/2)) omega(F, 1/N)
  kBernsteinLipschitz,    // 2L/N + C L sqrt(x(1-x)/N)
  kBernsteinCBV,          // 2 omega(F,1/N) + 5 C omega(v_F, sqrt(x(1-x)/N))
};

struct BoundCheck {
  bool pass = false;
  double worst_margin = 0;  // min over rows of bound - error
  std::vector<ErrorRow> rows;
};

/// Asserts measured error <= stated bound row by row. `slack` inflates the
/// bound multiplicatively to absorb probe-induced underestimates of omega.
BoundCheck bound_check(const ConvergenceReport& report, const ErrorModel& model,
                       NamedBound bound, std::size_t spline_order = 0, double slack = 0.0);

/// Largest C with error <= fixed_part + C * scale over the report rows
/// (clipped at zero); the shape of both parts follows the named bound.
double fit_constant(const ConvergenceReport& report, const ErrorModel& model, NamedBound bound,
                    std::size_t spline_order = 0);

struct ConvexificationRow {
  std::size_t n = 0;
  double minkowski_to_hull = 0;
  double metric_to_set = 0;
};

struct ConvexificationDemo {
  bool vacuous = false;  // A already convex
  std::vector<ConvexificationRow> rows;
};

/// Applies the Bernstein operators to the constant function F == A at
/// x = 1/2 and tabulates haus(Minkowski result, conv A) against
/// haus(metric result, A) per N.
ConvexificationDemo convexification_demo(const CompactSet& a, const std::vector<std::size_t>& ns,
                                         const Tolerance& tol = {});

// Built-in oracle families. Images are interval unions on [0, 1] with
// closed-form regularity, one family per regularity class exercised by the
// bound checks.
SVFOracle oracle_lipschitz_convex();                       // [0, 1 + |x-1/2|]
SVFOracle oracle_lipschitz_nonconvex();                    // [0,1/3] u [2/3+x/4, 1+x/4]
SVFOracle oracle_cbv_sqrt();                               // [0, 1 + sqrt(x)]
SVFOracle oracle_singleton(std::function<double(double)> g, std::optional<double> lipschitz,
                           std::string name);
/// Nonconvex images whose component edges have a kink at p with slope q:
/// [0,1/3] u [2/3 + q|x-p|, 1 + q|x-p|]. Unlike the affine-edged family,
/// polynomial operators do not reproduce it exactly, so it carries the
/// Bernstein rate experiments.
SVFOracle oracle_kinked_nonconvex(double q, double p = 0.5);

/// A parameterized batch of Lipschitz nonconvex oracles (amplitude-varied
/// kinked instances) used for constant fitting and cross-validation.
std::vector<SVFOracle> lipschitz_family(std::size_t count);

/// Builds an ErrorModel for an oracle: analytic omega when the oracle's
/// fields carry one, probed otherwise; L estimated from difference quotients
/// when not supplied.
ErrorModel make_error_model(const SVFOracle& oracle, PhiKind phi,
                            std::size_t probe_count = 512);

/// Max difference quotient haus(G(x), G(y)) / |x-y| over `pairs` probes.
double estimate_lipschitz(const SVFOracle& oracle, std::size_t pairs = 4096);

/// CSV rows "n,error,bound,margin" (one per report row).
std::string report_csv(const ConvergenceReport& report);

}  // namespace msvf
