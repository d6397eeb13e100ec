// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msvf/errors.hpp"
#include "msvf/interval_set.hpp"
#include "msvf/random_sets.hpp"

using namespace msvf;

TEST_CASE("normalize merges overlapping and touching intervals") {
  const IntervalUnion u = IntervalUnion::normalized({Interval(2, 4), Interval(3, 8)});
  REQUIRE(u.component_count() == 1);
  CHECK(u.min() == 2);
  CHECK(u.max() == 8);

  const IntervalUnion v = IntervalUnion::normalized({Interval(6, 8), Interval(2, 4)});
  REQUIRE(v.component_count() == 2);
  CHECK(v.components()[0].lo == 2);
  CHECK(v.components()[0].hi == 4);
  CHECK(v.components()[1].lo == 6);
  CHECK(v.components()[1].hi == 8);

  const IntervalUnion w = IntervalUnion::normalized({Interval(5, 5)});
  CHECK(w.components()[0].is_point());
}

TEST_CASE("normalize rejects empty input and bad intervals") {
  CHECK_THROWS_AS(IntervalUnion::normalized({}), EmptySetError);
  CHECK_THROWS_AS(Interval(3, 2), Error);
}

TEST_CASE("normalize is idempotent") {
  SetGenerator gen(7);
  for (int k = 0; k < 50; ++k) {
    const IntervalUnion u = gen.interval_union();
    CHECK(IntervalUnion::normalized(u.components()) == u);
  }
}

TEST_CASE("dist examples") {
  const IntervalUnion b = IntervalUnion::normalized({Interval(0, 1), Interval(5, 6)});
  CHECK(b.dist(3) == 2);
  CHECK(IntervalUnion::interval(0, 1).dist(0.5) == 0);
  CHECK(IntervalUnion::interval(0, 1).dist(1.0) == 0);
}

TEST_CASE("project returns the full tie set") {
  const IntervalUnion b1 = IntervalUnion::normalized({Interval(0, 2), Interval(4, 6)});
  const auto tie = b1.project(3);
  REQUIRE(tie.size() == 2);
  CHECK(tie[0] == 2);
  CHECK(tie[1] == 4);

  CHECK(IntervalUnion::interval(2, 8).project(5) == std::vector<double>{5});

  const IntervalUnion b2 = IntervalUnion::normalized({Interval(2, 4), Interval(6, 8)});
  CHECK(b2.project(0) == std::vector<double>{2});
}

TEST_CASE("hausdorff examples and axioms") {
  const IntervalUnion a = IntervalUnion::normalized({Interval(0, 1), Interval(3, 4)});
  CHECK(hausdorff(a, IntervalUnion::interval(0, 4)) == 1);
  CHECK(hausdorff(a, a) == 0);
  CHECK(hausdorff(IntervalUnion::interval(0, 1), IntervalUnion::interval(2, 3)) == 2);

  SetGenerator gen(11);
  for (int k = 0; k < 100; ++k) {
    const IntervalUnion x = gen.interval_union(), y = gen.interval_union(),
                        z = gen.interval_union();
    CHECK(hausdorff(x, y) == hausdorff(y, x));
    CHECK(hausdorff(x, z) <= hausdorff(x, y) + hausdorff(y, z) + 1e-12);
  }
}

TEST_CASE("minkowski combination") {
  using Sets = std::vector<IntervalUnion>;
  const IntervalUnion unit = IntervalUnion::interval(0, 1);
  const IntervalUnion sum = minkowski_combination({1, 1}, Sets{unit, unit});
  CHECK(sum == IntervalUnion::interval(0, 2));

  const IntervalUnion pts = IntervalUnion::points({0, 2});
  const IntervalUnion avg = minkowski_combination({0.5, 0.5}, Sets{pts, pts});
  REQUIRE(avg.component_count() == 3);
  CHECK(avg.components()[1].lo == 1);

  CHECK(minkowski_combination({1}, Sets{IntervalUnion::interval(2, 8)}) ==
        IntervalUnion::interval(2, 8));

  // convex set averaged with itself reproduces itself
  SetGenerator gen(3);
  for (int k = 0; k < 20; ++k) {
    const double t = gen.uniform(0, 1);
    const IntervalUnion c = IntervalUnion::interval(-1, 4);
    CHECK(approx_equal(minkowski_combination({t, 1 - t}, Sets{c, c}), c, 1e-12));
  }

  CHECK_THROWS_AS(minkowski_combination({1, 1}, Sets{unit}), LengthMismatch);
}

TEST_CASE("negative coefficients flip interval orientation") {
  const IntervalUnion u =
      minkowski_combination({-2}, std::vector<IntervalUnion>{IntervalUnion::interval(1, 3)});
  CHECK(u.min() == -6);
  CHECK(u.max() == -2);
}

TEST_CASE("convex hull in 1d") {
  const IntervalUnion wings = IntervalUnion::normalized({Interval(2, 4), Interval(6, 8)});
  CHECK(convex_hull(wings) == IntervalUnion::interval(2, 8));
  CHECK(convex_hull(IntervalUnion::point(5)) == IntervalUnion::point(5));
}

TEST_CASE("discretize covers endpoints and respects the step") {
  const IntervalUnion wings = IntervalUnion::normalized({Interval(0, 1), Interval(4, 4)});
  const auto pts = wings.discretize(0.3);
  CHECK(pts.front() == 0);
  CHECK(pts.back() == 4);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const bool same_component = pts[i - 1] >= 0 && pts[i] <= 1;
    if (same_component) CHECK(pts[i] - pts[i - 1] <= 0.3 + 1e-12);
  }
  for (double p : pts) CHECK(wings.dist(p) == 0);
}
