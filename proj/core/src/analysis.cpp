// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "msvf/errors.hpp"
#include "msvf/format.hpp"

namespace msvf {

double phi_value(PhiKind kind, double x, double delta) {
  switch (kind) {
    case PhiKind::kDelta:
      return delta;
    case PhiKind::kSqrtDelta:
      return std::sqrt(delta);
    case PhiKind::kBernstein:
      return std::sqrt(std::max(x * (1.0 - x), 0.0) * delta);
  }
  return delta;
}

double ConvergenceReport::slope() const {
  std::vector<double> lx, ly;
  for (const ErrorRow& r : rows) {
    if (r.n < 8 || !(r.error > 0)) continue;
    lx.push_back(std::log(static_cast<double>(r.n)));
    ly.push_back(std::log(r.error));
  }
  if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(lx.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  return num / den;
}

OperatorUnderTest under_test(const OperatorSpec& spec, const Tolerance& tol) {
  auto shared = std::make_shared<OperatorSpec>(spec);
  return {shared->name,
          [shared, tol](const SampledSVF& f, double x) {
            return apply_metric_operator(*shared, f, x, tol);
          },
          [shared](const Partition& p) { return shared->domain(p); }};
}

OperatorUnderTest minkowski_under_test(const OperatorSpec& spec, const Tolerance& tol) {
  auto shared = std::make_shared<OperatorSpec>(spec);
  return {shared->name + "-minkowski",
          [shared, tol](const SampledSVF& f, double x) {
            return apply_minkowski_operator(*shared, f, x, tol);
          },
          [shared](const Partition& p) { return shared->domain(p); }};
}

OperatorUnderTest pl_under_test(const Tolerance& tol) {
  return {"metric-pl",
          [tol](const SampledSVF& f, double x) { return eval_artstein_pl(f, x, tol); },
          [](const Partition& p) { return Interval(p.a(), p.b()); }};
}

OperatorUnderTest decasteljau_under_test(const Tolerance& tol) {
  return {"decasteljau-ma",
          [tol](const SampledSVF& f, double x) { return decasteljau_ma_bernstein(f, x, tol); },
          [](const Partition&) { return Interval(0.0, 1.0); }};
}

ConvergenceReport error_curve(const SVFOracle& oracle, const OperatorUnderTest& op,
                              const std::vector<std::size_t>& ns, std::size_t eval_grid,
                              std::optional<double> fixed_x, const Tolerance& tol) {
  if (ns.empty()) throw Error("error_curve requires at least one N");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw Error("N values must be strictly increasing");
  if (!fixed_x && eval_grid < 2) throw Error("eval grid needs at least two points");
  ConvergenceReport report;
  report.operator_name = op.name;
  report.oracle_name = oracle.name;
  report.eval_x = fixed_x;
  for (std::size_t n : ns) {
    const Partition partition = Partition::uniform(oracle.a, oracle.b, n);
    const SampledSVF f = oracle.sample(partition);
    const Interval dom = op.domain(partition);
    if (!(dom.lo <= dom.hi)) throw DomainError("operator domain empty for this N");
    std::vector<double> xs;
    if (fixed_x) {
      if (!dom.contains(*fixed_x)) throw DomainError("fixed x outside the operator domain");
      xs.push_back(*fixed_x);
    } else {
      for (std::size_t k = 0; k < eval_grid; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(eval_grid - 1);
        xs.push_back(dom.lo * (1.0 - t) + dom.hi * t);
      }
    }
    double worst = 0;
    for (double x : xs)
      worst = std::max(worst, hausdorff(oracle.eval(x), op.apply(f, x)));
    report.rows.push_back({n, worst, 0.0, 0.0});
  }
  return report;
}

namespace {

double bound_value(const ConvergenceReport& report, const ErrorModel& model, NamedBound bound,
                   std::size_t m, std::size_t n) {
  const double h = 1.0 / static_cast<double>(n);
  const double xq = report.eval_x ? *report.eval_x * (1.0 - *report.eval_x) : 0.25;
  switch (bound) {
    case NamedBound::kPlUniform:
      return 2.0 * model.omega_f(h);
    case NamedBound::kSchoenbergLipschitz:
      return (2.0 + std::floor((static_cast<double>(m) + 1.0) / 2.0)) * model.lipschitz * h;
    case NamedBound::kSchoenbergContinuous:
      return 2.0 * (1.0 + 2.0 * std::floor((static_cast<double>(m) + 1.0) / 2.0)) *
             model.omega_f(h);
    case NamedBound::kBernsteinLipschitz:
      return 2.0 * model.lipschitz * h +
             model.fitted_c * model.lipschitz * std::sqrt(xq * h);
    case NamedBound::kBernsteinCBV:
      return 2.0 * model.omega_f(h) + 5.0 * model.fitted_c * model.omega_vf(std::sqrt(xq * h));
  }
  return 0;
}

// The C-free part and the factor multiplying C, for constant fitting.
std::pair<double, double> bound_split(const ConvergenceReport& report, const ErrorModel& model,
                                      NamedBound bound, std::size_t n) {
  const double h = 1.0 / static_cast<double>(n);
  const double xq = report.eval_x ? *report.eval_x * (1.0 - *report.eval_x) : 0.25;
  switch (bound) {
    case NamedBound::kBernsteinLipschitz:
      return {2.0 * model.lipschitz * h, model.lipschitz * std::sqrt(xq * h)};
    case NamedBound::kBernsteinCBV:
      return {2.0 * model.omega_f(h), 5.0 * model.omega_vf(std::sqrt(xq * h))};
    default:
      return {bound_value(report, model, bound, 0, n), 0.0};
  }
}

}  // namespace

BoundCheck bound_check(const ConvergenceReport& report, const ErrorModel& model,
                       NamedBound bound, std::size_t spline_order, double slack) {
  if ((bound == NamedBound::kSchoenbergLipschitz || bound == NamedBound::kBernsteinLipschitz) &&
      !(model.lipschitz > 0))
    throw Error("Lipschitz-type bound requires a positive Lipschitz constant");
  BoundCheck out;
  out.pass = true;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (const ErrorRow& r : report.rows) {
    ErrorRow row = r;
    row.bound = bound_value(report, model, bound, spline_order, r.n) * (1.0 + slack);
    row.margin = row.bound - row.error;
    out.worst_margin = std::min(out.worst_margin, row.margin);
    if (row.margin < 0) out.pass = false;
    out.rows.push_back(row);
  }
  return out;
}

double fit_constant(const ConvergenceReport& report, const ErrorModel& model, NamedBound bound,
                    std::size_t /*spline_order*/) {
  double c = 0;
  for (const ErrorRow& r : report.rows) {
    const auto [fixed, scale] = bound_split(report, model, bound, r.n);
    if (scale <= 0) continue;
    c = std::max(c, (r.error - fixed) / scale);
  }
  return std::max(c, 0.0);
}

ConvexificationDemo convexification_demo(const CompactSet& a,
                                         const std::vector<std::size_t>& ns,
                                         const Tolerance& tol) {
  ConvexificationDemo demo;
  const CompactSet hull = convex_hull(a, tol);
  demo.vacuous = hausdorff(hull, a) <= tol.merge_eps;
  const OperatorSpec bern = bernstein_operator();
  for (std::size_t n : ns) {
    const Partition partition = Partition::uniform(0.0, 1.0, n);
    std::vector<CompactSet> samples(partition.knots().size(), a);
    const SampledSVF f = SampledSVF::of(partition, std::move(samples));
    ConvexificationRow row;
    row.n = n;
    row.minkowski_to_hull = hausdorff(apply_minkowski_operator(bern, f, 0.5, tol), hull);
    row.metric_to_set = hausdorff(apply_metric_operator(bern, f, 0.5, tol), a);
    demo.rows.push_back(row);
  }
  return demo;
}

SVFOracle oracle_lipschitz_convex() {
  SVFOracle g;
  g.a = 0;
  g.b = 1;
  g.name = "lipschitz-convex";
  g.lipschitz = 1.0;
  g.omega = [](double d) { return std::min(d, 0.5); };
  g.eval = [](double x) -> CompactSet {
    return IntervalUnion::interval(0.0, 1.0 + std::abs(x - 0.5));
  };
  return g;
}

SVFOracle oracle_lipschitz_nonconvex() {
  SVFOracle g;
  g.a = 0;
  g.b = 1;
  g.name = "lipschitz-nonconvex";
  g.lipschitz = 0.25;
  g.omega = [](double d) { return 0.25 * std::min(d, 1.0); };
  g.eval = [](double x) -> CompactSet {
    return IntervalUnion::normalized(
        {Interval(0.0, 1.0 / 3.0), Interval(2.0 / 3.0 + x / 4.0, 1.0 + x / 4.0)});
  };
  return g;
}

SVFOracle oracle_cbv_sqrt() {
  SVFOracle g;
  g.a = 0;
  g.b = 1;
  g.name = "cbv-sqrt";
  g.omega = [](double d) { return std::sqrt(std::min(d, 1.0)); };
  g.omega_v = [](double d) { return std::sqrt(std::min(d, 1.0)); };
  g.eval = [](double x) -> CompactSet {
    return IntervalUnion::interval(0.0, 1.0 + std::sqrt(std::max(x, 0.0)));
  };
  return g;
}

SVFOracle oracle_singleton(std::function<double(double)> g, std::optional<double> lipschitz,
                           std::string name) {
  SVFOracle out;
  out.a = 0;
  out.b = 1;
  out.name = std::move(name);
  out.lipschitz = lipschitz;
  out.eval = [g = std::move(g)](double x) -> CompactSet { return IntervalUnion::point(g(x)); };
  return out;
}

SVFOracle oracle_kinked_nonconvex(double q, double p) {
  if (!(q > 0 && q <= 0.4)) throw Error("kinked family needs slope q in (0, 0.4]");
  SVFOracle g;
  g.a = 0;
  g.b = 1;
  g.name = "kinked-nonconvex-q" + format_double(q) + "-p" + format_double(p);
  g.lipschitz = q;
  g.omega = [q](double d) { return q * std::min(d, 1.0); };
  g.eval = [q, p](double x) -> CompactSet {
    const double s = q * std::abs(x - p);
    return IntervalUnion::normalized({Interval(0.0, 1.0 / 3.0), Interval(2.0 / 3.0 + s, 1.0 + s)});
  };
  return g;
}

std::vector<SVFOracle> lipschitz_family(std::size_t count) {
  std::vector<SVFOracle> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double q = 0.12 + 0.28 * static_cast<double>(i) / std::max<std::size_t>(count - 1, 1);
    out.push_back(oracle_kinked_nonconvex(q));
  }
  return out;
}

ErrorModel make_error_model(const SVFOracle& oracle, PhiKind phi, std::size_t probe_count) {
  ErrorModel model;
  model.phi = phi;
  model.lipschitz = oracle.lipschitz ? *oracle.lipschitz : estimate_lipschitz(oracle);
  if (oracle.omega) {
    model.omega_f = oracle.omega;
  } else {
    auto table = std::make_shared<ModulusTable>(probe_modulus(oracle, probe_count));
    model.omega_f = [table](double d) { return table->omega(d); };
  }
  if (oracle.omega_v) {
    model.omega_vf = oracle.omega_v;
  } else {
    auto profile = std::make_shared<VariationProfile>(total_variation(oracle));
    model.omega_vf = [profile](double d) { return profile->omega(d); };
  }
  return model;
}

double estimate_lipschitz(const SVFOracle& oracle, std::size_t pairs) {
  const std::size_t grid = std::max<std::size_t>(static_cast<std::size_t>(std::sqrt(pairs)), 2);
  std::vector<double> xs(grid);
  std::vector<CompactSet> vals;
  vals.reserve(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
    xs[i] = oracle.a * (1.0 - t) + oracle.b * t;
    vals.push_back(oracle.eval(xs[i]));
  }
  double worst = 0;
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = i + 1; j < grid; ++j)
      worst = std::max(worst, hausdorff(vals[i], vals[j]) / (xs[j] - xs[i]));
  return worst;
}

std::string report_csv(const ConvergenceReport& report) {
  std::string out = "n,error,bound,margin\n";
  for (const ErrorRow& r : report.rows) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.error);
    out += ',';
    out += format_double(r.bound);
    out += ',';
    out += format_double(r.margin);
    out += '\n';
  }
  return out;
}

}  // namespace msvf
