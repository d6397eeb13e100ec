// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/verify.hpp"

#include <algorithm>
#include <cmath>

#include "msvf/analysis.hpp"
#include "msvf/errors.hpp"
#include "msvf/format.hpp"
#include "msvf/random_sets.hpp"

namespace msvf {

namespace {

struct Checker {
  SuiteReport report;

  void add(const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
  }
  /// pass when worst <= limit.
  void bound(const std::string& name, double worst, double limit) {
    add(name, worst <= limit, "worst=" + format_double(worst) + " limit=" + format_double(limit));
  }
};

std::string fd(double v) { return format_double(v); }

// sup over `from` of the distance into `into`, by candidate enumeration.
double sup_dist_into(const IntervalUnion& from, const IntervalUnion& into) {
  double worst = 0;
  for (double e : from.endpoints()) worst = std::max(worst, into.dist(e));
  for (double m : into.voronoi_midpoints())
    if (from.contains(m)) worst = std::max(worst, into.dist(m));
  return worst;
}

Partition random_partition(SetGenerator& gen, std::size_t max_intervals, double a = 0,
                           double b = 1) {
  const std::size_t n = 1 + gen.uniform_index(max_intervals);
  std::vector<double> deltas(n);
  double total = 0;
  for (double& d : deltas) {
    d = gen.uniform(0.2, 1.0);
    total += d;
  }
  std::vector<double> knots{a};
  double acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    acc += deltas[i];
    knots.push_back(a + (b - a) * acc / total);
  }
  knots.push_back(b);
  return Partition::of(std::move(knots));
}

SampledSVF random_svf(SetGenerator& gen, std::size_t max_intervals = 4,
                      std::size_t max_components = 3) {
  const Partition p = random_partition(gen, max_intervals);
  std::vector<CompactSet> values;
  for (std::size_t i = 0; i < p.knots().size(); ++i)
    values.push_back(gen.interval_union(max_components, 0, 6));
  return SampledSVF::of(p, std::move(values));
}

std::vector<CompactSet> random_union_sequence(SetGenerator& gen, std::size_t count,
                                              std::size_t max_components, double lo, double hi) {
  std::vector<CompactSet> sets;
  sets.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    sets.push_back(gen.interval_union(max_components, lo, hi));
  return sets;
}

// ---------------------------------------------------------------- metric-props

SuiteReport metric_props_suite(std::uint64_t seed) {
  Checker c;
  c.report.suite = "metric-props";
  const Tolerance tol;

  {
    SetGenerator gen(seed + 1);
    double worst = 0;
    for (int k = 0; k < 60; ++k) {
      const IntervalUnion a = gen.interval_union(), b = gen.interval_union(),
                          m = gen.interval_union();
      worst = std::max(worst, hausdorff(a, m) - (hausdorff(a, b) + hausdorff(b, m)));
    }
    c.bound("haus-triangle-inequality", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 2);
    double worst = 0;
    bool nonempty = true;
    for (int k = 0; k < 100; ++k) {
      const IntervalUnion b = gen.interval_union();
      const double a = gen.uniform(-12, 12);
      const auto proj = b.project(a, tol);
      nonempty = nonempty && !proj.empty();
      for (double p : proj) {
        worst = std::max(worst, std::abs(std::abs(a - p) - b.dist(a)));
        worst = std::max(worst, b.dist(p));
      }
    }
    c.add("projection-validity", nonempty && worst <= tol.tie_eps,
          "worst=" + fd(worst) + " nonempty=" + (nonempty ? "yes" : "no"));
  }
  {
    SetGenerator gen(seed + 3);
    double worst = 0;
    for (int k = 0; k < 60; ++k) {
      std::vector<Interval> raw;
      const std::size_t n = 1 + gen.uniform_index(5);
      for (std::size_t i = 0; i < n; ++i) {
        const double lo = gen.uniform(-10, 10);
        raw.emplace_back(lo, lo + gen.uniform(0, 4));
      }
      const IntervalUnion once = IntervalUnion::normalized(raw, tol);
      const IntervalUnion twice = IntervalUnion::normalized(once.components(), tol);
      if (!(once == twice)) worst = std::max(worst, 1.0);
      IntervalUnion rawu = IntervalUnion::normalized(raw, Tolerance{1e-9, 0.0, 0.0});
      worst = std::max(worst, hausdorff(once, rawu));
    }
    c.bound("normalize-idempotent", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 4);
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      const CompactSet a = gen.interval_union(), b = gen.interval_union();
      const double t = gen.uniform(0, 1), s = gen.uniform(0, 1);
      const double hab = hausdorff(a, b);
      const CompactSet mat = metric_average(a, b, t, tol), mas = metric_average(a, b, s, tol);
      worst = std::max(worst, std::abs(hausdorff(mat, mas) - std::abs(t - s) * hab));
      worst = std::max(worst, std::abs(hausdorff(mat, a) - (1 - t) * hab));
      worst = std::max(worst, std::abs(hausdorff(mat, b) - t * hab));
    }
    c.bound("metric-property-1d", worst, 1e-9);
  }
  {
    SetGenerator gen(seed + 5);
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      const CompactSet a = gen.cloud(2), b = gen.cloud(2);
      const double t = gen.uniform(0, 1);
      const double hab = hausdorff(a, b);
      const CompactSet mat = metric_average(a, b, t, tol);
      worst = std::max(worst, std::abs(hausdorff(mat, a) - (1 - t) * hab));
      worst = std::max(worst, std::abs(hausdorff(mat, b) - t * hab));
    }
    c.bound("metric-property-cloud", worst, 1e-9);
  }
  {
    SetGenerator gen(seed + 6);
    double worst = 0;
    int hits = 0;
    for (int k = 0; k < 200 && hits < 50; ++k) {
      const IntervalUnion a = gen.interval_union(3, -4, 4), b = gen.interval_union(3, -4, 4);
      const auto common = intersect(a, b);
      if (common.empty()) continue;
      ++hits;
      const double t = gen.uniform(0, 1);
      const IntervalUnion ma = metric_average(CompactSet(a), CompactSet(b), t, tol).intervals();
      worst = std::max(worst, sup_dist_into(IntervalUnion::normalized(common), ma));
    }
    c.add("intersection-inside-average", hits >= 30 && worst <= 1e-9,
          "worst=" + fd(worst) + " instances=" + std::to_string(hits));
  }
  {
    SetGenerator gen(seed + 7);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 2 + gen.uniform_index(4);
      const auto sets = random_union_sequence(gen, n, 3, -6, 6);
      const auto coeffs = gen.coefficients_sum1(n, true);
      const CompactSet lhs = metric_linear_combination(coeffs, sets, tol);
      std::vector<CompactSet> rsets(sets.rbegin(), sets.rend());
      std::vector<double> rcoeffs(coeffs.rbegin(), coeffs.rend());
      worst = std::max(worst, hausdorff(lhs, metric_linear_combination(rcoeffs, rsets, tol)));
    }
    c.bound("reversal", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 8);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const CompactSet a = gen.interval_union();
      const std::size_t n = 2 + gen.uniform_index(5);
      const auto coeffs = gen.coefficients_sum1(n, true);
      const std::vector<CompactSet> sets(n, a);
      worst = std::max(worst, hausdorff(metric_linear_combination(coeffs, sets, tol), a));
    }
    c.bound("constant-reproduction", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 9);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const CompactSet a = gen.interval_union(), b = gen.interval_union();
      const double t = gen.uniform(0, 1);
      worst = std::max(worst, hausdorff(metric_linear_combination({t, 1 - t}, {a, b}, tol),
                                        metric_average(a, b, t, tol)));
    }
    c.bound("pair-reduction", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 10);
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 1 + gen.uniform_index(4);
      const auto sets = random_union_sequence(gen, n, 3, -6, 6);
      std::vector<IntervalUnion> us;
      for (const CompactSet& s : sets) us.push_back(s.intervals());
      const auto fams = exact_chain_families(us, tol);
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, hausdorff(coordinate_image(fams, i, tol), us[i]));
    }
    c.bound("chain-coverage-1d", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 11);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = 1 + gen.uniform_index(3);
      std::vector<PointCloud> sets;
      for (std::size_t i = 0; i < n; ++i) sets.push_back(gen.cloud(2, 5));
      const auto chains = discrete_chains(sets, tol);
      for (std::size_t i = 0; i < n; ++i) {
        for (const Point& p : sets[i].points()) {
          double best = std::numeric_limits<double>::infinity();
          for (const MetricChain& ch : chains) best = std::min(best, euclidean(ch.points[i], p));
          worst = std::max(worst, best);
        }
      }
    }
    c.bound("chain-coverage-cloud", worst, 1e-12);
  }
  {
    const std::vector<CompactSet> sets{IntervalUnion::point(0), IntervalUnion::point(10),
                                       IntervalUnion::interval(0, 4)};
    const std::vector<CompactSet> swapped{sets[2], sets[1], sets[0]};
    const std::vector<double> coeffs{0.5, 0.25, 0.25};
    const double gap = hausdorff(metric_linear_combination(coeffs, sets, tol),
                                 metric_linear_combination(coeffs, swapped, tol));
    c.add("order-sensitivity-witness", gap > 0.5, "witness-gap=" + fd(gap));
  }
  {
    SetGenerator gen(seed + 12);
    double worst = 0;
    const double g = 1e-2;
    for (int k = 0; k < 25; ++k) {
      const std::size_t n = 2 + gen.uniform_index(4);
      const auto sets = random_union_sequence(gen, n, 3, 0, 2);
      const auto coeffs = gen.coefficients_sum1(n, true);
      double abs_sum = 0;
      for (double v : coeffs) abs_sum += std::abs(v);
      const CompactSet exact = metric_linear_combination(coeffs, sets, tol);
      std::vector<CompactSet> gridded;
      for (const CompactSet& s : sets)
        gridded.push_back(PointCloud::of1d(s.intervals().discretize(g), tol));
      const CompactSet approx = metric_linear_combination(coeffs, gridded, tol);
      std::vector<double> flat;
      for (const Point& p : approx.cloud().points()) flat.push_back(p[0]);
      const double gap = hausdorff(exact.intervals(), IntervalUnion::points(flat, tol));
      worst = std::max(worst, gap - abs_sum * g);
    }
    c.bound("engine-oracle-equivalence", worst, 0.0);
  }
  return c.report;
}

// -------------------------------------------------------------------------- pl

SuiteReport pl_suite(std::uint64_t seed) {
  Checker c;
  c.report.suite = "pl";
  const Tolerance tol;

  {
    SetGenerator gen(seed + 21);
    double worst = 0;
    for (int k = 0; k < 30; ++k) {
      const SampledSVF f = random_svf(gen);
      for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(
            worst, hausdorff(eval_metric_pl(f, f.partition.knots()[i], tol), f.values[i]));
    }
    c.bound("knot-interpolation", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 22);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const SampledSVF f = random_svf(gen);
      const double x = gen.uniform(f.partition.a(), f.partition.b());
      worst = std::max(worst, hausdorff(eval_metric_pl(f, x, tol), eval_artstein_pl(f, x, tol)));
    }
    c.bound("artstein-equivalence", worst, 1e-9);
  }
  {
    double worst = 0;
    for (const SVFOracle& g :
         {oracle_lipschitz_convex(), oracle_lipschitz_nonconvex(), oracle_cbv_sqrt()}) {
      for (std::size_t n : {8u, 16u}) {
        const SampledSVF f = g.sample(Partition::uniform(g.a, g.b, n));
        const double lim = 2.0 * g.omega(1.0 / static_cast<double>(n)) * 1.01;
        for (int k = 0; k <= 64; ++k) {
          const double x = g.a + (g.b - g.a) * k / 64.0;
          worst = std::max(worst, hausdorff(g.eval(x), eval_artstein_pl(f, x, tol)) - lim);
        }
      }
    }
    c.bound("pl-uniform-bound", worst, 0.0);
  }
  {
    SetGenerator gen(seed + 23);
    double worst = 0;
    for (const SVFOracle& g : {oracle_lipschitz_convex(), oracle_lipschitz_nonconvex()}) {
      const SampledSVF f = g.sample(Partition::uniform(g.a, g.b, 8));
      for (int k = 0; k < 200; ++k) {
        const double x = gen.uniform(g.a, g.b), y = gen.uniform(g.a, g.b);
        if (x == y) continue;
        const double lhs = hausdorff(eval_artstein_pl(f, x, tol), eval_artstein_pl(f, y, tol));
        worst = std::max(worst, lhs - *g.lipschitz * std::abs(x - y) * (1 + 1e-9));
      }
    }
    c.bound("lipschitz-preservation", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 24);
    double worst = 0;
    for (const SVFOracle& g : {oracle_lipschitz_convex(), oracle_lipschitz_nonconvex()}) {
      const SampledSVF f = g.sample(Partition::uniform(g.a, g.b, 6));
      const auto sel = selections(f, tol).sample(4);
      for (int k = 0; k < 40; ++k) {
        const double x = gen.uniform(g.a, g.b), y = gen.uniform(g.a, g.b);
        if (x == y) continue;
        for (const Selection& s : sel)
          worst = std::max(worst, std::abs(s.scalar_at(x) - s.scalar_at(y)) -
                                      *g.lipschitz * std::abs(x - y) * (1 + 1e-9));
      }
    }
    c.bound("selection-lipschitz", worst, 1e-12);
  }
  {
    double worst = 0;
    for (const SVFOracle& g :
         {oracle_lipschitz_convex(), oracle_lipschitz_nonconvex(), oracle_cbv_sqrt()}) {
      const SampledSVF f = g.sample(Partition::uniform(g.a, g.b, 8));
      const ModulusTable table = probe_modulus(pl_oracle(f, tol), 256);
      for (double d : {0.01, 0.05, 0.1, 0.3})
        worst = std::max(worst, table.omega(d) - 5.0 * g.omega(d));
    }
    c.bound("pl-modulus-factor-5", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 25);
    double worst = 0;
    for (const SVFOracle& g : {oracle_lipschitz_nonconvex(), oracle_cbv_sqrt()}) {
      const Partition p = Partition::uniform(g.a, g.b, 5);
      const SampledSVF f = g.sample(p);
      const auto sel = selections(f, tol).sample(4);
      for (std::size_t i = 0; i + 1 < p.knots().size(); ++i) {
        for (int k = 0; k < 10; ++k) {
          const double x = gen.uniform(p.knots()[i], p.knots()[i + 1]);
          const double y = gen.uniform(p.knots()[i], p.knots()[i + 1]);
          if (x == y) continue;
          for (const Selection& s : sel)
            worst = std::max(worst, std::abs(s.scalar_at(x) - s.scalar_at(y)) -
                                        2.0 * g.omega(std::abs(x - y)) * (1 + 1e-9));
        }
      }
    }
    c.bound("selection-local-modulus", worst, 1e-12);
  }
  {
    const SVFOracle g = oracle_cbv_sqrt();
    const SampledSVF f = g.sample(Partition::uniform(g.a, g.b, 8));
    const auto sel = selections(f, tol).sample(4);
    double worst = 0;
    for (double d : {0.02, 0.1, 0.25}) {
      const double lim = (4.0 * g.omega(d) + g.omega_v(d)) * (1 + 1e-9);
      for (const Selection& s : sel) {
        double w = 0;
        for (int k = 0; k <= 128; ++k) {
          const double x = g.a + (g.b - g.a) * k / 128.0;
          const double y = std::min(x + d, g.b);
          w = std::max(w, std::abs(s.scalar_at(x) - s.scalar_at(y)));
        }
        worst = std::max(worst, w - lim);
      }
    }
    c.bound("selection-cbv-modulus", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 26);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const Partition p = random_partition(gen, 3);
      std::vector<CompactSet> values;
      for (std::size_t i = 0; i < p.knots().size(); ++i) values.push_back(gen.cloud(1, 4, 0, 5));
      const SampledSVF f = SampledSVF::of(p, std::move(values));
      const auto sel = selections(f, tol).finite();
      for (int q = 0; q < 5; ++q) {
        const double x = gen.uniform(p.a(), p.b());
        std::vector<double> pool;
        for (const Selection& s : sel) pool.push_back(s.scalar_at(x));
        const CompactSet expected = eval_metric_pl(f, x, tol);
        std::vector<double> flat;
        for (const Point& pt : expected.cloud().points()) flat.push_back(pt[0]);
        worst = std::max(worst, hausdorff(IntervalUnion::points(pool, tol),
                                          IntervalUnion::points(flat, tol)));
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<double> pool;
        for (const Selection& s : sel) pool.push_back(s.values[i][0]);
        std::vector<double> flat;
        for (const Point& pt : f.values[i].cloud().points()) flat.push_back(pt[0]);
        worst = std::max(worst, hausdorff(IntervalUnion::points(pool, tol),
                                          IntervalUnion::points(flat, tol)));
      }
    }
    c.bound("selections-union", worst, 1e-12);
  }
  {
    double worst = 0;
    for (const SVFOracle& g : {oracle_lipschitz_convex(), oracle_cbv_sqrt()}) {
      const ModulusTable table = probe_modulus(g, 256);
      for (double lam : {0.5, 2.0, 3.0})
        worst = std::max(worst, table.omega(lam * 0.1) - (1 + lam) * table.omega(0.1) - 1e-12);
    }
    c.bound("modulus-scaling-property", worst, 0.0);
  }
  {
    double worst = 0;
    const SVFOracle constant{
        0, 1, [](double) -> CompactSet { return IntervalUnion::interval(1, 2); }, 0.0, {}, {},
        "const"};
    worst = std::max(worst, total_variation(constant, 256).total());
    const SVFOracle ident = oracle_singleton([](double x) { return x; }, 1.0, "identity");
    worst = std::max(worst, std::abs(total_variation(ident, 4096).total() - 1.0));
    SVFOracle sine;
    sine.a = 0;
    sine.b = 1;
    sine.name = "sine-top";
    sine.eval = [](double x) -> CompactSet {
      return IntervalUnion::interval(0.0, 1.0 + std::sin(3.14159265358979323846 * x));
    };
    worst = std::max(worst, std::abs(total_variation(sine, 4096).total() - 2.0));
    sine.b = 2;
    worst = std::max(worst, std::abs(total_variation(sine, 4096).total() - 4.0));
    c.bound("variation-values", worst, 1e-6);
  }
  {
    // probed modulus against the probed variation modulus; the profile is
    // chord-interpolated between refinement nodes, which can undershoot a
    // concave v by O(h^2) curvature, hence the 1e-6 discretization allowance
    const SVFOracle g = oracle_cbv_sqrt();
    const VariationProfile v = total_variation(g);
    const ModulusTable table = probe_modulus(g, 256);
    double worst = 0;
    for (double d : {0.01, 0.1, 0.4})
      worst = std::max(worst, table.omega(d) - v.omega(d) - 1e-6);
    c.bound("modulus-below-variation-modulus", worst, 0.0);
  }
  return c.report;
}

// ------------------------------------------------------------------- operators

SuiteReport operators_suite(std::uint64_t seed) {
  Checker c;
  c.report.suite = "operators";
  const Tolerance tol;

  {
    double worst = 0;
    for (std::size_t n : {4u, 9u, 16u}) {
      for (int k = 0; k <= 32; ++k) {
        const double x = static_cast<double>(k) / 32.0;
        double s = 0;
        for (double v : bernstein_coeffs(n, x)) s += v;
        worst = std::max(worst, std::abs(s - 1.0));
      }
      for (std::size_t m : {1u, 2u, 3u, 4u}) {
        const Interval dom = schoenberg_domain(m, n);
        for (int k = 0; k <= 32; ++k) {
          const double t = k / 32.0;
          const double x = dom.lo * (1.0 - t) + dom.hi * t;
          double s = 0;
          for (double v : schoenberg_coeffs(m, n, x)) s += v;
          worst = std::max(worst, std::abs(s - 1.0));
        }
      }
    }
    const Partition p = Partition::of({0, 0.3, 1.1, 2.0, 3.7});
    for (int k = 0; k <= 32; ++k) {
      const double x = 3.7 * k / 32.0;
      double s = 0;
      for (double v : lagrange_coeffs(p, x)) s += v;
      worst = std::max(worst, std::abs(s - 1.0));
    }
    c.bound("partition-of-unity", worst, 1e-12);
  }
  {
    double worst = 0;
    const auto b2 = bernstein_coeffs(2, 0.5);
    worst = std::max({worst, std::abs(b2[0] - 0.25), std::abs(b2[1] - 0.5),
                      std::abs(b2[2] - 0.25)});
    const auto b4 = bernstein_coeffs(4, 0.25);
    const double expected4[] = {81.0 / 256, 108.0 / 256, 54.0 / 256, 12.0 / 256, 1.0 / 256};
    for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(b4[i] - expected4[i]));
    const auto b0 = bernstein_coeffs(3, 0.0);
    const auto b1 = bernstein_coeffs(3, 1.0);
    worst = std::max({worst, std::abs(b0[0] - 1.0), std::abs(b0[1]), std::abs(b0[2]),
                      std::abs(b0[3]), std::abs(b1[3] - 1.0), std::abs(b1[0])});
    c.bound("bernstein-values", worst, 1e-15);
  }
  {
    double worst = 0;
    worst = std::max(worst, std::abs(bspline_eval(2, 0.5) - 0.5));
    worst = std::max(worst, std::abs(bspline_eval(2, 1.0) - 1.0));
    worst = std::max(worst, std::abs(bspline_eval(3, 1.5) - 0.75));
    worst = std::max(worst, std::abs(bspline_eval(3, 7.0)));
    for (std::size_t m : {1u, 2u, 3u, 5u}) {
      worst = std::max(worst, std::abs(bspline_eval(m, -0.1)));
      worst = std::max(worst, std::abs(bspline_eval(m, static_cast<double>(m) + 0.1)));
      double peak = 0;
      for (int k = 0; k <= 64; ++k)
        peak = std::max(peak, bspline_eval(m, static_cast<double>(m) * k / 64.0));
      worst = std::max(worst, peak > 0 ? 0.0 : 1.0);
    }
    c.bound("bspline-values", worst, 1e-15);
  }
  {
    // order-2 coefficients are the hat weights of the shifted argument:
    // B_2(Nx - i) peaks at x = (i+1)/N, so S_{2,N} F (x) = PL(F, x - 1/N)
    SetGenerator gen(seed + 31);
    double worst = 0;
    const std::size_t n = 8;
    const OperatorSpec schoen = schoenberg_operator(2);
    const Partition p = Partition::uniform(0, 1, n);
    for (int k = 0; k < 20; ++k) {
      std::vector<CompactSet> values;
      for (std::size_t i = 0; i <= n; ++i) values.push_back(gen.interval_union(2, 0, 4));
      const SampledSVF f = SampledSVF::of(p, values);
      for (int q = 0; q < 8; ++q) {
        const double x = gen.uniform(1.0 / n, 1.0);
        const CompactSet lhs = apply_metric_operator(schoen, f, x, tol);
        const CompactSet rhs = eval_artstein_pl(f, x - 1.0 / n, tol);
        worst = std::max(worst, hausdorff(lhs, rhs));
      }
    }
    c.bound("schoenberg-hat-shift", worst, 1e-9);
  }
  {
    const auto cs = schoenberg_coeffs(3, 10, 0.5);
    double worst = 0;
    for (std::size_t i = 0; i <= 10; ++i) {
      const double expected = (i == 3 || i == 4) ? 0.5 : 0.0;
      worst = std::max(worst, std::abs(cs[i] - expected));
    }
    c.bound("schoenberg-support-window", worst, 1e-15);
  }
  {
    bool gate = false;
    try {
      schoenberg_coeffs(3, 10, 0.1);
    } catch (const DomainError&) {
      gate = true;
    }
    c.add("schoenberg-domain-gate", gate, gate ? "DomainError raised" : "no error raised");
  }
  {
    double worst = 0;
    const Partition p = Partition::of({0, 2, 6});
    const auto l = lagrange_coeffs(p, 4.0);
    worst = std::max({worst, std::abs(l[0] + 1.0 / 3), std::abs(l[1] - 1.0),
                      std::abs(l[2] - 1.0 / 3)});
    for (std::size_t j = 0; j < 3; ++j) {
      const auto lj = lagrange_coeffs(p, p.knots()[j]);
      for (std::size_t i = 0; i < 3; ++i)
        worst = std::max(worst, std::abs(lj[i] - (i == j ? 1.0 : 0.0)));
    }
    const auto lin = lagrange_coeffs(Partition::of({0, 1}), 0.25);
    worst = std::max({worst, std::abs(lin[0] - 0.75), std::abs(lin[1] - 0.25)});
    c.bound("lagrange-values", worst, 1e-15);
  }
  {
    SetGenerator gen(seed + 32);
    double worst = 0;
    const OperatorSpec lag = lagrange_operator();
    for (int k = 0; k < 20; ++k) {
      const SampledSVF f = random_svf(gen, 4);
      for (std::size_t j = 0; j < f.size(); ++j)
        worst = std::max(worst, hausdorff(apply_metric_operator(lag, f, f.partition.knots()[j],
                                                                tol),
                                          f.values[j]));
    }
    c.bound("lagrange-node-interpolation", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 33);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = 2 + gen.uniform_index(5);
      const Partition p = Partition::uniform(0, 1, n);
      std::vector<double> g(n + 1);
      for (double& v : g) v = gen.uniform(-5, 5);
      std::vector<CompactSet> values;
      for (double v : g) values.push_back(IntervalUnion::point(v));
      const SampledSVF f = SampledSVF::of(p, values);
      for (const OperatorSpec& spec :
           {bernstein_operator(), schoenberg_operator(2), lagrange_operator()}) {
        const Interval dom = spec.domain(p);
        for (int q = 0; q < 6; ++q) {
          const double t = q / 5.0;
          const double x = dom.lo * (1.0 - t) + dom.hi * t;
          const auto cs = spec.coefficients(p, x);
          double scalar = 0;
          for (std::size_t i = 0; i <= n; ++i) scalar += cs[i] * g[i];
          const CompactSet set = apply_metric_operator(spec, f, x, tol);
          worst = std::max(worst, hausdorff(set, IntervalUnion::point(scalar)));
        }
      }
      for (int q = 0; q < 6; ++q) {
        const double x = q / 5.0;
        const auto cs = bernstein_coeffs(n, x);
        double scalar = 0;
        for (std::size_t i = 0; i <= n; ++i) scalar += cs[i] * g[i];
        worst = std::max(worst,
                         hausdorff(decasteljau_ma_bernstein(f, x, tol),
                                   IntervalUnion::point(scalar)));
      }
    }
    c.bound("singleton-consistency", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 34);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
      const CompactSet a = gen.interval_union(3, 0, 5);
      const std::size_t n = 4;
      const Partition p = Partition::uniform(0, 1, n);
      const SampledSVF f = SampledSVF::of(p, std::vector<CompactSet>(n + 1, a));
      for (const OperatorSpec& spec :
           {bernstein_operator(), schoenberg_operator(3), lagrange_operator()}) {
        const Interval dom = spec.domain(p);
        for (int q = 0; q < 5; ++q) {
          const double t = q / 4.0;
          const double x = dom.lo * (1.0 - t) + dom.hi * t;
          worst = std::max(worst, hausdorff(apply_metric_operator(spec, f, x, tol), a));
        }
      }
      worst = std::max(worst, hausdorff(decasteljau_ma_bernstein(f, 0.37, tol), a));
    }
    c.bound("constant-reproduction-operators", worst, 1e-12);
  }
  {
    bool gate = false;
    const Partition p = Partition::of({0, 2, 6});
    const SampledSVF f = SampledSVF::of(
        p, {IntervalUnion::interval(2, 8), IntervalUnion::point(5), IntervalUnion::point(5)});
    try {
      apply_minkowski_operator(lagrange_operator(), f, 4.0, tol);
    } catch (const UnsupportedOperator&) {
      gate = true;
    }
    double worst = 0;
    const CompactSet convex = IntervalUnion::interval(1, 3);
    const Partition pu = Partition::uniform(0, 1, 4);
    const SampledSVF fc = SampledSVF::of(pu, std::vector<CompactSet>(5, convex));
    worst = std::max(worst,
                     hausdorff(apply_minkowski_operator(bernstein_operator(), fc, 0.3, tol),
                               convex));
    c.add("minkowski-gates", gate && worst <= 1e-12,
          "negative-coefficient-gate=" + std::string(gate ? "yes" : "no") +
              " convex-constant-worst=" + fd(worst));
  }
  {
    SetGenerator gen(seed + 35);
    double worst = 0;
    for (int k = 0; k < 15; ++k) {
      const std::size_t n = 3 + gen.uniform_index(3);
      const Partition p = Partition::uniform(0, 1, n);
      std::vector<CompactSet> values;
      for (std::size_t i = 0; i <= n; ++i) values.push_back(gen.interval_union(2, 0, 4));
      const SampledSVF f = SampledSVF::of(p, values);
      const OperatorSpec schoen = schoenberg_operator(2);
      const double x = schoen.domain(p).lo + 0.9 * (1.0 - schoen.domain(p).lo);
      const CompactSet trimmed = apply_metric_operator(schoen, f, x, tol);
      const CompactSet full =
          metric_linear_combination(schoen.coefficients(p, x), f.values, tol);
      worst = std::max(worst, hausdorff(trimmed, full));
    }
    c.bound("window-trim-equivalence", worst, 1e-12);
  }
  {
    // reversing both the coefficient family and the sample order leaves
    // every operator value unchanged
    SetGenerator gen(seed + 36);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
      const std::size_t n = 2 + gen.uniform_index(3);
      const Partition p = Partition::uniform(0, 1, n);
      std::vector<CompactSet> values;
      for (std::size_t i = 0; i <= n; ++i) values.push_back(gen.interval_union(2, 0, 4));
      const SampledSVF f = SampledSVF::of(p, values);
      for (const OperatorSpec& spec : {bernstein_operator(), lagrange_operator()}) {
        const Interval dom = spec.domain(p);
        const double x = dom.lo + (dom.hi - dom.lo) * gen.uniform(0, 1);
        const auto cs = spec.coefficients(p, x);
        const CompactSet lhs = apply_metric_operator(spec, f, x, tol);
        const CompactSet rhs = metric_linear_combination(
            std::vector<double>(cs.rbegin(), cs.rend()),
            std::vector<CompactSet>(f.values.rbegin(), f.values.rend()), tol);
        worst = std::max(worst, hausdorff(lhs, rhs));
      }
    }
    c.bound("operator-reversal-consistency", worst, 1e-12);
  }
  {
    // orientation of the de casteljau weights against the closed form on a
    // quadratic: B_N(t^2)(x) = x^2 + x(1-x)/N
    double worst = 0;
    for (std::size_t n : {1u, 2u, 4u, 8u}) {
      const Partition p = Partition::uniform(0, 1, n);
      std::vector<CompactSet> values;
      for (double t : p.knots()) values.push_back(IntervalUnion::point(t * t));
      const SampledSVF f = SampledSVF::of(p, values);
      for (double x : {0.0, 0.25, 0.5, 0.8, 1.0}) {
        const double expected = x * x + x * (1.0 - x) / static_cast<double>(n);
        worst = std::max(worst, hausdorff(decasteljau_ma_bernstein(f, x, tol),
                                          IntervalUnion::point(expected)));
      }
    }
    c.bound("decasteljau-quadratic", worst, 1e-12);
  }
  return c.report;
}

// ---------------------------------------------------------------------- bounds

SuiteReport bounds_suite(std::uint64_t seed) {
  Checker c;
  c.report.suite = "bounds";
  const Tolerance tol;
  const std::vector<std::size_t> ns{8, 16, 32, 64};

  {
    // Lipschitz error model, fitted on half the family and validated on
    // the other half (Bernstein accuracy modulus).
    const auto family = lipschitz_family(8);
    std::vector<ConvergenceReport> reports;
    std::vector<ErrorModel> models;
    for (const SVFOracle& g : family) {
      reports.push_back(error_curve(g, under_test(bernstein_operator(), tol), ns, 2, 0.5, tol));
      models.push_back(make_error_model(g, PhiKind::kBernstein));
    }
    double c_fit = 0;
    for (std::size_t i = 0; i < family.size(); i += 2)
      c_fit = std::max(c_fit, fit_constant(reports[i], models[i], NamedBound::kBernsteinLipschitz));
    bool pass = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < family.size(); i += 2) {
      ErrorModel m = models[i];
      m.fitted_c = c_fit;
      const BoundCheck bc =
          bound_check(reports[i], m, NamedBound::kBernsteinLipschitz, 0, 1e-9);
      pass = pass && bc.pass;
      worst_margin = std::min(worst_margin, bc.worst_margin);
    }
    c.add("lipschitz-model-cross-validation", pass,
          "fitted-c=" + fd(c_fit) + " worst-margin=" + fd(worst_margin));
  }
  {
    // CBV error model on the square-root oracle.
    const SVFOracle g = oracle_cbv_sqrt();
    const ConvergenceReport report =
        error_curve(g, under_test(bernstein_operator(), tol), ns, 2, 0.5, tol);
    ErrorModel model = make_error_model(g, PhiKind::kBernstein);
    model.fitted_c = fit_constant(report, model, NamedBound::kBernsteinCBV);
    const BoundCheck bc = bound_check(report, model, NamedBound::kBernsteinCBV, 0, 1e-9);
    c.add("cbv-model-shape", bc.pass && model.fitted_c < 10.0,
          "fitted-c=" + fd(model.fitted_c) + " worst-margin=" + fd(bc.worst_margin));
  }
  {
    bool gate = false;
    const Partition p = Partition::of({0, 0.1, 0.4, 1.0});
    const SVFOracle g = oracle_lipschitz_nonconvex();
    const SampledSVF f = g.sample(p);
    try {
      apply_metric_operator(bernstein_operator(), f, 0.5, tol);
    } catch (const DomainError&) {
      gate = true;
    }
    c.add("uniformity-gate", gate, gate ? "DomainError raised" : "no error raised");
  }
  {
    const auto family = lipschitz_family(8);
    double c_even = 0, c_odd = 0;
    bool monotone = true;
    double slope_lo = std::numeric_limits<double>::infinity();
    double slope_hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < family.size(); ++i) {
      const ConvergenceReport report =
          error_curve(family[i], under_test(bernstein_operator(), tol), ns, 2, 0.5, tol);
      const ErrorModel model = make_error_model(family[i], PhiKind::kBernstein);
      const double cf = fit_constant(report, model, NamedBound::kBernsteinLipschitz);
      (i % 2 == 0 ? c_even : c_odd) = std::max(i % 2 == 0 ? c_even : c_odd, cf);
      for (std::size_t r = 1; r < report.rows.size(); ++r)
        monotone = monotone && report.rows[r].error <= report.rows[r - 1].error + 1e-15;
      const double s = report.slope();
      slope_lo = std::min(slope_lo, s);
      slope_hi = std::max(slope_hi, s);
    }
    const double rel = std::abs(c_even - c_odd) / std::max(c_even, c_odd);
    c.add("bernstein-rate",
          monotone && rel <= 0.25 && slope_lo >= -0.65 && slope_hi <= -0.35,
          "slope-range=[" + fd(slope_lo) + "," + fd(slope_hi) + "] c-split=[" + fd(c_even) +
              "," + fd(c_odd) + "]");
  }
  {
    const SVFOracle g = oracle_cbv_sqrt();
    ErrorModel model = make_error_model(g, PhiKind::kDelta);
    bool pass = true;
    std::string detail;
    for (std::size_t m : {2u, 3u}) {
      const ConvergenceReport report =
          error_curve(g, under_test(schoenberg_operator(m), tol), ns, 48, {}, tol);
      const BoundCheck bc =
          bound_check(report, model, NamedBound::kSchoenbergContinuous, m, 0.01);
      pass = pass && bc.pass;
      detail += "m" + std::to_string(m) + "-margin=" + fd(bc.worst_margin) + " ";
    }
    c.add("schoenberg-continuous-bound", pass, detail);
  }
  {
    const SVFOracle g = oracle_lipschitz_nonconvex();
    ErrorModel model = make_error_model(g, PhiKind::kDelta);
    bool pass = true;
    std::string detail;
    for (std::size_t m : {2u, 3u}) {
      const ConvergenceReport report =
          error_curve(g, under_test(schoenberg_operator(m), tol), ns, 48, {}, tol);
      const BoundCheck bc = bound_check(report, model, NamedBound::kSchoenbergLipschitz, m, 0.0);
      const double s = report.slope();
      pass = pass && bc.pass && s >= -1.2 && s <= -0.8;
      detail += "m" + std::to_string(m) + "-margin=" + fd(bc.worst_margin) + "-slope=" + fd(s) +
                " ";
      for (const ErrorRow& r : bc.rows)
        c.report.artifacts.push_back("report=schoenberg-" + std::to_string(m) + "/" + g.name +
                                     " n=" + std::to_string(r.n) + " error=" + fd(r.error) +
                                     " bound=" + fd(r.bound) + " margin=" + fd(r.margin));
    }
    c.add("schoenberg-lipschitz-bound", pass, detail);
  }
  {
    // order-2 schoenberg of the identity carries exactly the index shift h
    double worst = 0;
    const SVFOracle ident = oracle_singleton([](double x) { return x; }, 1.0, "identity");
    const ConvergenceReport report =
        error_curve(ident, under_test(schoenberg_operator(2), tol), ns, 33, {}, tol);
    for (const ErrorRow& r : report.rows)
      worst = std::max(worst, std::abs(r.error - 1.0 / static_cast<double>(r.n)));
    c.bound("schoenberg-identity-shift", worst, 1e-12);
  }
  {
    SetGenerator gen(seed + 41);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const SampledSVF fine = random_svf(gen, 6, 2);
      const SVFOracle g = pl_oracle(fine, tol);
      const ModulusTable table = probe_modulus(g, 256);
      const std::size_t n = 3 + gen.uniform_index(4);
      const Partition coarse = Partition::uniform(g.a, g.b, n);
      const SampledSVF f = g.sample(coarse);
      const double lim = 2.0 * table.omega(coarse.delta_max()) * 1.01 + 1e-12;
      for (int q = 0; q <= 32; ++q) {
        const double x = g.a + (g.b - g.a) * q / 32.0;
        worst = std::max(worst, hausdorff(g.eval(x), eval_artstein_pl(f, x, tol)) - lim);
      }
    }
    c.bound("pl-random-oracle-bound", worst, 0.0);
  }
  {
    // harness self-test: a deliberately halved bound must be flagged
    const SVFOracle g = oracle_lipschitz_nonconvex();
    ErrorModel model = make_error_model(g, PhiKind::kDelta);
    model.lipschitz = *g.lipschitz * 0.05;  // far too small a constant
    const ConvergenceReport report =
        error_curve(g, under_test(schoenberg_operator(2), tol), {8, 16}, 16, {}, tol);
    const BoundCheck bc = bound_check(report, model, NamedBound::kSchoenbergLipschitz, 2, 0.0);
    c.add("bound-check-self-test", !bc.pass,
          "violated-margin=" + fd(bc.worst_margin) + " (negative expected)");
  }
  return c.report;
}

// -------------------------------------------------------------- convexification

// independent subset-sum oracle for the two-point set {0, 1}
double two_point_minkowski_haus(std::size_t n) {
  const auto coeffs = bernstein_coeffs(n, 0.5);
  std::vector<double> sums{0.0};
  for (double w : coeffs) {
    std::vector<double> next;
    next.reserve(2 * sums.size());
    for (double s : sums) {
      next.push_back(s);
      next.push_back(s + w);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  double worst = 0;
  for (std::size_t i = 1; i < sums.size(); ++i)
    worst = std::max(worst, (sums[i] - sums[i - 1]) / 2.0);
  worst = std::max({worst, sums.front() - 0.0, 1.0 - sums.back()});
  return worst;
}

SuiteReport convexification_suite(std::uint64_t /*seed*/) {
  Checker c;
  c.report.suite = "convexification";
  const Tolerance tol;
  const CompactSet two_points = IntervalUnion::points({0.0, 1.0});

  {
    const std::vector<std::size_t> ns{1, 2, 3, 4, 5, 6, 7, 8};
    const ConvexificationDemo demo = convexification_demo(two_points, ns, tol);
    double worst = 0;
    for (std::size_t i = 0; i < ns.size(); ++i)
      worst = std::max(worst,
                       std::abs(demo.rows[i].minkowski_to_hull - two_point_minkowski_haus(ns[i])));
    c.bound("two-point-exact-values", worst, 1e-12);
  }
  {
    const std::vector<std::size_t> ns{1, 2, 3, 4, 5, 6, 7, 8, 12, 16};
    const ConvexificationDemo demo = convexification_demo(two_points, ns, tol);
    bool monotone = true;
    double metric_worst = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i > 0)
        monotone = monotone &&
                   demo.rows[i].minkowski_to_hull <= demo.rows[i - 1].minkowski_to_hull + 1e-15;
      metric_worst = std::max(metric_worst, demo.rows[i].metric_to_set);
      c.report.artifacts.push_back("demo=two-point n=" + std::to_string(demo.rows[i].n) +
                                   " minkowski-to-hull=" + fd(demo.rows[i].minkowski_to_hull) +
                                   " metric-to-set=" + fd(demo.rows[i].metric_to_set));
    }
    const bool shrinks = demo.rows.back().minkowski_to_hull <= 0.01;
    c.add("two-point-trend", monotone && shrinks && metric_worst <= 1e-12,
          "final-minkowski=" + fd(demo.rows.back().minkowski_to_hull) +
              " metric-worst=" + fd(metric_worst));
  }
  {
    const CompactSet wings =
        IntervalUnion::normalized({Interval(2, 4), Interval(6, 8)});
    const double gap = hausdorff(convex_hull(wings, tol), wings);
    const ConvexificationDemo demo = convexification_demo(wings, {1, 2, 4, 8, 16}, tol);
    bool monotone = true;
    double metric_worst = 0;
    for (std::size_t i = 0; i < demo.rows.size(); ++i) {
      if (i > 0)
        monotone = monotone &&
                   demo.rows[i].minkowski_to_hull <= demo.rows[i - 1].minkowski_to_hull + 1e-15;
      metric_worst = std::max(metric_worst, demo.rows[i].metric_to_set);
    }
    // components this wide convexify in a single averaging step, so the
    // minkowski column is already zero while the metric column stays on A
    const bool ok = std::abs(gap - 1.0) <= 1e-12 && !demo.vacuous && monotone &&
                    demo.rows.back().minkowski_to_hull <= 1e-12 && metric_worst <= 1e-12;
    c.add("interval-union-demo", ok,
          "initial-gap=" + fd(gap) + " final-minkowski=" + fd(demo.rows.back().minkowski_to_hull) +
              " metric-worst=" + fd(metric_worst));
  }
  {
    const ConvexificationDemo demo =
        convexification_demo(IntervalUnion::interval(0, 1), {1, 2}, tol);
    c.add("convex-input-vacuous", demo.vacuous, demo.vacuous ? "flagged" : "not flagged");
  }
  return c.report;
}

}  // namespace

bool SuiteReport::pass() const {
  return failures() == 0;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks) n += c.pass ? 0 : 1;
  return n;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"metric-props", "pl", "operators", "bounds",
                                              "convexification"};
  return names;
}

SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed) {
  if (name == "metric-props") return metric_props_suite(seed);
  if (name == "pl") return pl_suite(seed);
  if (name == "operators") return operators_suite(seed);
  if (name == "bounds") return bounds_suite(seed);
  if (name == "convexification") return convexification_suite(seed);
  throw Error("unknown verify suite: " + name);
}

std::vector<SuiteReport> run_verify(const std::string& suite_or_all, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  if (suite_or_all == "all") {
    for (const std::string& name : verify_suite_names())
      out.push_back(run_verify_suite(name, seed));
  } else {
    out.push_back(run_verify_suite(suite_or_all, seed));
  }
  return out;
}

std::string verify_report_text(const std::vector<SuiteReport>& reports, std::uint64_t seed) {
  std::string out;
  std::size_t checks = 0, failures = 0;
  for (const SuiteReport& r : reports) {
    for (const CheckResult& c : r.checks) {
      ++checks;
      failures += c.pass ? 0 : 1;
      out += "check=" + r.suite + "/" + c.name + " status=" + (c.pass ? "pass" : "fail") +
             " " + c.detail + "\n";
    }
    for (const std::string& line : r.artifacts) out += "data suite=" + r.suite + " " + line + "\n";
  }
  out += "summary checks=" + std::to_string(checks) + " failures=" + std::to_string(failures) +
         " seed=" + std::to_string(seed) + "\n";
  return out;
}

}  // namespace msvf
