// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "msvf/document.hpp"
#include "msvf/errors.hpp"
#include "msvf/figure.hpp"

using namespace msvf;

namespace {

const char* kExample1 = R"({
  "schema_version": 1,
  "partition": [0, 2, 6],
  "sets": [[[2, 8]], [[5, 5]], [[5, 5]]],
  "metadata": {"note": "parabolic example"}
})";

}  // namespace

TEST_CASE("document parsing") {
  const SVFDocument doc = SVFDocument::from_json_text(kExample1);
  const SampledSVF f = doc.to_svf();
  CHECK(f.partition.knots() == std::vector<double>{0, 2, 6});
  CHECK(f.values[0].intervals() == IntervalUnion::interval(2, 8));
  CHECK(f.values[1].intervals() == IntervalUnion::point(5));
}

TEST_CASE("document round trip is lossless") {
  const SVFDocument doc = SVFDocument::from_json_text(kExample1);
  const SVFDocument again = SVFDocument::from_json_text(doc.to_json_text());
  CHECK(again.partition == doc.partition);
  CHECK(again.sets == doc.sets);
  CHECK(again.to_json_text() == doc.to_json_text());
}

TEST_CASE("document validation failures raise ParseError") {
  CHECK_THROWS_AS(SVFDocument::from_json_text("{nope"), ParseError);
  CHECK_THROWS_AS(SVFDocument::from_json_text(R"({"schema_version": 2, "partition": [0,1],
                  "sets": [[[0,1]], [[0,1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(SVFDocument::from_json_text(R"({"schema_version": 1, "partition": [1,0],
                  "sets": [[[0,1]], [[0,1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(SVFDocument::from_json_text(R"({"schema_version": 1, "partition": [0,1],
                  "sets": [[[0,1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(SVFDocument::from_json_text(R"({"schema_version": 1, "partition": [0,1],
                  "domain": [0, 2], "sets": [[[0,1]], [[0,1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(SVFDocument::from_json_text(R"({"schema_version": 1, "partition": [0,1],
                  "sets": [[[1,0]], [[0,1]]]})"),
                  ParseError);
}

TEST_CASE("point cloud sets parse") {
  const SVFDocument doc = SVFDocument::from_json_text(R"({
    "schema_version": 1,
    "partition": [0, 1],
    "sets": [{"dim": 2, "points": [[0, 0], [1, 0]]},
             {"dim": 2, "points": [[0, 1]]}]
  })");
  const SampledSVF f = doc.to_svf();
  CHECK(f.values[0].cloud().size() == 2);
  CHECK(f.values[1].cloud().dim() == 2);
}

TEST_CASE("eval csv format") {
  std::vector<std::pair<double, CompactSet>> results;
  results.emplace_back(0.5, IntervalUnion::normalized({Interval(1, 2), Interval(4, 4)}));
  results.emplace_back(1.0, IntervalUnion::interval(0.1, 0.2));
  CHECK(eval_csv(results) == "x,lo,hi\n0.5,1,2\n0.5,4,4\n1,0.1,0.2\n");

  std::vector<std::pair<double, CompactSet>> cloud_results;
  cloud_results.emplace_back(0.0, PointCloud::of(2, {{1.0, 2.0}}));
  CHECK(eval_csv(cloud_results) == "x,coords\n0,1,2\n");
}

TEST_CASE("builtin figure data carries the worked examples") {
  const SampledSVF f1 = builtin_figure_data("parabolic-1");
  CHECK(f1.partition.knots() == std::vector<double>{0, 2, 6});
  CHECK(f1.values[0].intervals() == IntervalUnion::interval(2, 8));

  const SampledSVF f2 = builtin_figure_data("parabolic-2");
  CHECK(f2.partition.knots() == std::vector<double>{0, 4, 8});
  CHECK(f2.values[1].intervals() == IntervalUnion::interval(4.5, 5.5));
  CHECK(f2.values[2].intervals().component_count() == 2);

  CHECK_THROWS_AS(builtin_figure_data("spiral"), DomainError);
}

TEST_CASE("figure curves cover the evaluated set slice") {
  const SampledSVF f = builtin_figure_data("parabolic-1");
  FigureSpec spec;
  spec.grid = 13;  // knots of step 0.5 over [0, 6]; includes x = 4
  const auto curves = figure_curves(f, lagrange_operator(), spec);
  CHECK(!curves.empty());

  double lo = 1e300, hi = -1e300;
  for (const FigureCurve& c : curves) {
    const auto it = std::find_if(c.begin(), c.end(),
                                 [](const auto& pt) { return pt.first == 4.0; });
    REQUIRE(it != c.end());
    lo = std::min(lo, it->second);
    hi = std::max(hi, it->second);
  }
  // slice at x = 4 must match the evaluated interval [4, 6]
  CHECK(lo == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(hi == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("figure slice interpolates the middle set of the second example") {
  const SampledSVF f = builtin_figure_data("parabolic-2");
  FigureSpec spec;
  spec.grid = 9;  // includes x = 4 over [0, 8]
  const auto curves = figure_curves(f, lagrange_operator(), spec);
  double lo = 1e300, hi = -1e300;
  for (const FigureCurve& c : curves) {
    for (const auto& [x, y] : c) {
      if (x == 4.0) {
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
    }
  }
  CHECK(lo == doctest::Approx(4.5).epsilon(1e-9));
  CHECK(hi == doctest::Approx(5.5).epsilon(1e-9));
}

TEST_CASE("drawn curves cover the evaluated set at every grid point") {
  const SampledSVF f = builtin_figure_data("parabolic-2");
  const OperatorSpec op = lagrange_operator();
  FigureSpec spec;
  spec.grid = 17;
  const auto curves = figure_curves(f, op, spec);
  for (std::size_t k = 0; k < spec.grid; ++k) {
    const double t = static_cast<double>(k) / (spec.grid - 1);
    const double x = f.partition.a() * (1 - t) + f.partition.b() * t;
    const IntervalUnion u = apply_metric_operator(op, f, x).intervals();
    for (const auto& c : curves) CHECK(u.dist(c[k].second) <= 1e-9);
    for (const Interval& comp : u.components()) {
      double lo_gap = 1e300, hi_gap = 1e300;
      for (const auto& c : curves) {
        lo_gap = std::min(lo_gap, std::abs(c[k].second - comp.lo));
        hi_gap = std::min(hi_gap, std::abs(c[k].second - comp.hi));
      }
      CHECK(lo_gap <= 1e-9);  // every component endpoint is attained
      CHECK(hi_gap <= 1e-9);
    }
  }
}

TEST_CASE("svg rendering emits curves and set marks") {
  const SampledSVF f = builtin_figure_data("parabolic-1");
  const std::string svg = render_figure_svg(f, lagrange_operator(), FigureSpec{});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("stroke=\"black\"") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  // byte-stable rendering
  CHECK(render_figure_svg(f, lagrange_operator(), FigureSpec{}) == svg);
}
