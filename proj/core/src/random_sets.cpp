// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/random_sets.hpp"

#include <algorithm>
#include <cmath>

namespace msvf {

double SetGenerator::uniform(double lo, double hi) {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t SetGenerator::uniform_index(std::size_t count) {
  return static_cast<std::size_t>(uniform(0.0, static_cast<double>(count))) % count;
}

IntervalUnion SetGenerator::interval_union(std::size_t max_components, double lo, double hi) {
  const std::size_t k = 1 + uniform_index(max_components);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<double> cuts(2 * k);
    for (double& c : cuts) c = uniform(lo, hi);
    std::sort(cuts.begin(), cuts.end());
    bool ok = true;
    std::vector<Interval> comps;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const double a = cuts[2 * i], b = cuts[2 * i + 1];
      ok = b - a >= 0.05 || uniform(0, 1) < 0.15;  // occasional near-point component
      if (i > 0) ok = ok && a - comps.back().hi >= 0.05;
      if (ok) comps.emplace_back(a, b);
    }
    if (ok) return IntervalUnion::normalized(std::move(comps));
  }
  return IntervalUnion::interval(lo, hi);  // vanishingly unlikely
}

PointCloud SetGenerator::cloud(std::size_t dim, std::size_t max_points, double lo, double hi) {
  const std::size_t n = 1 + uniform_index(max_points);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point p(dim);
    for (double& v : p) v = uniform(lo, hi);
    pts.push_back(std::move(p));
  }
  return PointCloud::of(dim, std::move(pts));
}

std::vector<double> SetGenerator::coefficients_sum1(std::size_t count, bool allow_negative) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<double> c(count);
    double partial = 0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
      c[i] = allow_negative ? uniform(-0.8, 1.0) : uniform(0.0, 1.0);
      partial += c[i];
    }
    c[count - 1] = 1.0 - partial;
    if (!allow_negative && c[count - 1] < 0) continue;
    double abs_sum = 0;
    for (double v : c) abs_sum += std::abs(v);
    if (abs_sum <= 4.0) return c;
  }
  return std::vector<double>(count, 1.0 / static_cast<double>(count));
}

}  // namespace msvf
