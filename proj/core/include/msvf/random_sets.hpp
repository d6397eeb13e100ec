// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <random>

#include "msvf/compact_set.hpp"

namespace msvf {

/// Deterministic generator of random set instances for property suites.
/// All draws go through a hand-rolled uniform so that a fixed seed yields
/// identical instances on every platform and run.
class SetGenerator {
public:
  explicit SetGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::size_t uniform_index(std::size_t count);  // 0 .. count-1

  /// Interval union with 1..max_components components in [lo, hi]; gaps and
  /// lengths are kept above 0.05 so instances sit away from tolerance edges.
  IntervalUnion interval_union(std::size_t max_components = 3, double lo = -10, double hi = 10);

  PointCloud cloud(std::size_t dim, std::size_t max_points = 8, double lo = -10, double hi = 10);

  /// Coefficients of the given length summing exactly to 1 (last entry takes
  /// the closing remainder), optionally with negative entries, and with
  /// sum |c_i| kept below 4 to bound rounding amplification.
  std::vector<double> coefficients_sum1(std::size_t count, bool allow_negative);

private:
  std::mt19937_64 rng_;
};

}  // namespace msvf
