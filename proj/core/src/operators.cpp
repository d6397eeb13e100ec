// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/operators.hpp"

#include <algorithm>
#include <cmath>

#include "msvf/errors.hpp"

namespace msvf {

namespace {

constexpr std::size_t kMaxBernsteinDegree = 64;

void require_uniform_unit(const SampledSVF& f) {
  if (!f.partition.is_uniform())
    throw DomainError("operator requires a uniform partition");
  if (std::abs(f.partition.a()) > 1e-12 || std::abs(f.partition.b() - 1.0) > 1e-12)
    throw DomainError("operator requires the partition to span [0,1]");
}

}  // namespace

std::vector<double> bernstein_coeffs(std::size_t n, double x) {
  if (n < 1) throw Error("bernstein degree must be >= 1");
  if (n > kMaxBernsteinDegree) throw Error("bernstein degree capped at 64");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("bernstein weights need x in [0,1]");
  std::vector<double> c{1.0};
  c.reserve(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      next[i] += (1.0 - x) * c[i];
      next[i + 1] += x * c[i];
    }
    c = std::move(next);
  }
  return c;
}

double bspline_eval(std::size_t m, double t) {
  if (m < 1) throw Error("b-spline order must be >= 1");
  if (t <= 0.0 || t >= static_cast<double>(m)) {
    // closed support boundary carries value 0 for every order; the order-1
    // box is taken right/open so that the recursion sums to 1 at integers
    if (m == 1 && t >= 0.0 && t < 1.0) return 1.0;
    return 0.0;
  }
  if (m == 1) return 1.0;
  const double dm = static_cast<double>(m);
  return (t / (dm - 1.0)) * bspline_eval(m - 1, t) +
         ((dm - t) / (dm - 1.0)) * bspline_eval(m - 1, t - 1.0);
}

Interval schoenberg_domain(std::size_t m, std::size_t n) {
  const double lo = static_cast<double>(m - 1) / static_cast<double>(n);
  if (lo > 1.0) throw DomainError("schoenberg domain empty: need N >= m-1");
  return Interval(lo, 1.0);
}

std::vector<double> schoenberg_coeffs(std::size_t m, std::size_t n, double x) {
  if (m < 1) throw Error("schoenberg order must be >= 1");
  const Interval dom = schoenberg_domain(m, n);
  if (!dom.contains(x)) throw DomainError("x outside the schoenberg validity domain");
  std::vector<double> c(n + 1, 0.0);
  const double u = static_cast<double>(n) * x;
  for (std::size_t i = 0; i <= n; ++i) c[i] = bspline_eval(m, u - static_cast<double>(i));
  return c;
}

std::vector<double> lagrange_coeffs(const Partition& partition, double x) {
  const auto& t = partition.knots();
  std::vector<double> c(t.size(), 1.0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) c[i] *= (x - t[j]) / (t[i] - t[j]);
  return c;
}

OperatorSpec bernstein_operator() {
  OperatorSpec spec;
  spec.kind = OperatorKind::kBernstein;
  spec.name = "bernstein";
  spec.coefficients = [](const Partition& p, double x) {
    return bernstein_coeffs(p.interval_count(), x);
  };
  spec.valid_domain = [](const Partition&) { return Interval(0.0, 1.0); };
  return spec;
}

OperatorSpec schoenberg_operator(std::size_t m) {
  if (m < 1) throw Error("schoenberg order must be >= 1");
  OperatorSpec spec;
  spec.kind = OperatorKind::kSchoenberg;
  spec.spline_order = m;
  spec.name = "schoenberg-" + std::to_string(m);
  spec.coefficients = [m](const Partition& p, double x) {
    return schoenberg_coeffs(m, p.interval_count(), x);
  };
  spec.valid_domain = [m](const Partition& p) {
    return schoenberg_domain(m, p.interval_count());
  };
  return spec;
}

OperatorSpec lagrange_operator() {
  OperatorSpec spec;
  spec.kind = OperatorKind::kLagrange;
  spec.name = "lagrange";
  spec.coefficients = [](const Partition& p, double x) { return lagrange_coeffs(p, x); };
  spec.valid_domain = [](const Partition& p) { return Interval(p.a(), p.b()); };
  return spec;
}

OperatorSpec custom_operator(std::function<std::vector<double>(const Partition&, double)> coeffs,
                             std::function<Interval(const Partition&)> domain,
                             std::string name) {
  OperatorSpec spec;
  spec.kind = OperatorKind::kCustom;
  spec.name = std::move(name);
  spec.coefficients = std::move(coeffs);
  spec.valid_domain = std::move(domain);
  return spec;
}

namespace {

std::vector<double> operator_coefficients(const OperatorSpec& spec, const SampledSVF& f,
                                          double x) {
  if (spec.kind == OperatorKind::kBernstein || spec.kind == OperatorKind::kSchoenberg)
    require_uniform_unit(f);
  if (!spec.domain(f.partition).contains(x))
    throw DomainError("x outside the operator validity domain");
  std::vector<double> c = spec.coefficients(f.partition, x);
  if (c.size() != f.size()) throw LengthMismatch("coefficient family size mismatch");
  return c;
}

}  // namespace

CompactSet apply_metric_operator(const OperatorSpec& spec, const SampledSVF& f, double x,
                                 const Tolerance& tol) {
  const std::vector<double> c = operator_coefficients(spec, f, x);
  std::size_t lo = 0, hi = c.size();
  while (lo + 1 < hi && c[lo] == 0.0) ++lo;
  while (hi - 1 > lo && c[hi - 1] == 0.0) --hi;
  const std::vector<double> window_c(c.begin() + static_cast<std::ptrdiff_t>(lo),
                                     c.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::vector<CompactSet> window_sets(f.values.begin() + static_cast<std::ptrdiff_t>(lo),
                                            f.values.begin() + static_cast<std::ptrdiff_t>(hi));
  return metric_linear_combination(window_c, window_sets, tol);
}

CompactSet apply_minkowski_operator(const OperatorSpec& spec, const SampledSVF& f, double x,
                                    const Tolerance& tol) {
  const std::vector<double> c = operator_coefficients(spec, f, x);
  for (double v : c)
    if (v < 0.0)
      throw UnsupportedOperator("minkowski combination requires nonnegative coefficients");
  return minkowski_combination(c, f.values, tol);
}

CompactSet decasteljau_ma_bernstein(const SampledSVF& f, double x, const Tolerance& tol) {
  require_uniform_unit(f);
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("de casteljau needs x in [0,1]");
  std::vector<CompactSet> level = f.values;
  while (level.size() > 1) {
    std::vector<CompactSet> next;
    next.reserve(level.size() - 1);
    for (std::size_t i = 0; i + 1 < level.size(); ++i)
      next.push_back(metric_average(level[i], level[i + 1], 1.0 - x, tol));
    level = std::move(next);
  }
  return level.front();
}

}  // namespace msvf
