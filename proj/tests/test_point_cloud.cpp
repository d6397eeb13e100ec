// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msvf/compact_set.hpp"
#include "msvf/errors.hpp"

using namespace msvf;

TEST_CASE("point cloud construction validates input") {
  CHECK_THROWS_AS(PointCloud::of(2, {}), EmptySetError);
  CHECK_THROWS_AS(PointCloud::of(2, {{1.0}}), DimensionMismatch);
  CHECK_THROWS_AS(PointCloud::of(0, {{}}), Error);
  const PointCloud c = PointCloud::of(1, {{3.0}, {3.0}, {1.0}});
  CHECK(c.size() == 2);  // duplicates collapse
  CHECK(c.points()[0] == Point{1.0});
}

TEST_CASE("distance and projection") {
  const PointCloud b = PointCloud::of(2, {{3.0, 4.0}});
  CHECK(b.dist({0.0, 0.0}) == 5);

  const PointCloud two = PointCloud::of1d({0, 2});
  const auto tie = two.project({1.0});
  CHECK(tie.size() == 2);
  const auto one = two.project({0.4});
  REQUIRE(one.size() == 1);
  CHECK(two.points()[one[0]] == Point{0.0});
}

TEST_CASE("hausdorff on clouds") {
  const PointCloud a = PointCloud::of1d({0, 1});
  const PointCloud b = PointCloud::of1d({0, 1, 3});
  CHECK(hausdorff(a, b) == 2);
  CHECK(hausdorff(a, a) == 0);
  CHECK_THROWS_AS(hausdorff(a, PointCloud::of(2, {{0.0, 0.0}})), DimensionMismatch);
}

TEST_CASE("minkowski combination on clouds") {
  const PointCloud pts = PointCloud::of1d({0, 2});
  const PointCloud avg =
      minkowski_combination({0.5, 0.5}, std::vector<PointCloud>{pts, pts});
  REQUIRE(avg.size() == 3);
  CHECK(avg.points()[1] == Point{1.0});
}

TEST_CASE("convex hull drops interior points in 2d") {
  const PointCloud c =
      PointCloud::of(2, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.2, 0.2}});
  const PointCloud hull = convex_hull(c);
  CHECK(hull.size() == 3);
  for (const Point& p : hull.points()) CHECK(p != Point{0.2, 0.2});

  const PointCloud line = PointCloud::of1d({5, -1, 3});
  const PointCloud h1 = convex_hull(line);
  REQUIRE(h1.size() == 2);
  CHECK(h1.points()[0] == Point{-1.0});
  CHECK(h1.points()[1] == Point{5.0});

  CHECK_THROWS_AS(convex_hull(PointCloud::of(3, {{0.0, 0.0, 0.0}})), UnsupportedOperator);
}

TEST_CASE("compact set variant dispatch") {
  const CompactSet u = IntervalUnion::interval(0, 1);
  const CompactSet c = PointCloud::of(2, {{0.0, 0.0}, {3.0, 4.0}});
  CHECK(u.is_interval_union());
  CHECK(c.is_point_cloud());
  CHECK(u.dim() == 1);
  CHECK(c.dim() == 2);
  CHECK(dist({0.5}, u) == 0);
  CHECK(dist({0.0, 0.0}, c) == 0);
  CHECK_THROWS_AS(dist({0.0, 0.0}, u), DimensionMismatch);
  CHECK_THROWS_AS(hausdorff(u, c), KindMismatch);

  const CompactSet proj = project({3.0}, u);
  CHECK(approx_equal(proj, CompactSet(IntervalUnion::point(1.0)), 0.0));
}
