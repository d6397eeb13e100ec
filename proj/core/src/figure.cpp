// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/figure.hpp"

#include <algorithm>
#include <cmath>

#include "msvf/errors.hpp"
#include "msvf/format.hpp"

namespace msvf {

std::vector<FigureCurve> figure_curves(const SampledSVF& f, const OperatorSpec& op,
                                       const FigureSpec& spec, const Tolerance& tol) {
  if (spec.grid < 2) throw Error("figure grid must have at least two points");
  const Interval dom = op.domain(f.partition);
  const auto sel = selections(f, tol).sample(spec.per_segment);
  std::vector<double> xs(spec.grid);
  for (std::size_t k = 0; k < spec.grid; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(spec.grid - 1);
    xs[k] = dom.lo * (1.0 - t) + dom.hi * t;
  }
  std::vector<std::vector<double>> coeffs;
  coeffs.reserve(xs.size());
  for (double x : xs) coeffs.push_back(op.coefficients(f.partition, x));

  std::vector<FigureCurve> curves;
  curves.reserve(sel.size());
  for (const Selection& s : sel) {
    FigureCurve curve;
    curve.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
      double y = 0;
      for (std::size_t i = 0; i < s.values.size(); ++i) y += coeffs[k][i] * s.values[i][0];
      curve.emplace_back(xs[k], y);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

namespace {

struct Box {
  double xmin, xmax, ymin, ymax;
};

std::string svg_line(double x1, double y1, double x2, double y2, const char* style) {
  std::string s = "  <line x1=\"" + format_double(x1) + "\" y1=\"" + format_double(y1) +
                  "\" x2=\"" + format_double(x2) + "\" y2=\"" + format_double(y2) + "\" " +
                  style + "/>\n";
  return s;
}

}  // namespace

std::string render_figure_svg(const SampledSVF& f, const OperatorSpec& op,
                              const FigureSpec& spec, const Tolerance& tol) {
  const auto curves = figure_curves(f, op, spec, tol);

  Box box{f.partition.a(), f.partition.b(), std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const CompactSet& s : f.values) {
    box.ymin = std::min(box.ymin, s.intervals().min());
    box.ymax = std::max(box.ymax, s.intervals().max());
  }
  for (const FigureCurve& c : curves)
    for (const auto& [x, y] : c) {
      box.ymin = std::min(box.ymin, y);
      box.ymax = std::max(box.ymax, y);
    }
  const double xpad = 0.05 * (box.xmax - box.xmin);
  const double ypad = 0.08 * std::max(box.ymax - box.ymin, 1e-9);
  box.xmin -= xpad;
  box.xmax += xpad;
  box.ymin -= ypad;
  box.ymax += ypad;

  const auto sx = [&](double x) {
    return (x - box.xmin) / (box.xmax - box.xmin) * spec.width;
  };
  const auto sy = [&](double y) {
    return spec.height - (y - box.ymin) / (box.ymax - box.ymin) * spec.height;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(spec.width) +
         "\" height=\"" + format_double(spec.height) + "\" viewBox=\"0 0 " +
         format_double(spec.width) + " " + format_double(spec.height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const FigureCurve& c : curves) {
    svg += "  <polyline fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" points=\"";
    for (const auto& [x, y] : c) {
      svg += format_double(sx(x));
      svg += ',';
      svg += format_double(sy(y));
      svg += ' ';
    }
    svg += "\"/>\n";
  }

  // knot sets on top, solid black
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double x = f.partition.knots()[i];
    for (const Interval& c : f.values[i].intervals().components()) {
      if (c.is_point()) {
        svg += "  <circle cx=\"" + format_double(sx(x)) + "\" cy=\"" + format_double(sy(c.lo)) +
               "\" r=\"2.5\" fill=\"black\"/>\n";
      } else {
        svg += svg_line(sx(x), sy(c.lo), sx(x), sy(c.hi),
                        "stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"round\"");
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

SampledSVF builtin_figure_data(const std::string& name) {
  if (name == "parabolic-1") {
    return SampledSVF::of(Partition::of({0, 2, 6}),
                          {IntervalUnion::interval(2, 8), IntervalUnion::point(5),
                           IntervalUnion::point(5)});
  }
  if (name == "parabolic-2") {
    const IntervalUnion wings =
        IntervalUnion::normalized({Interval(2, 4), Interval(6, 8)});
    return SampledSVF::of(Partition::of({0, 4, 8}),
                          {wings, IntervalUnion::interval(4.5, 5.5), wings});
  }
  throw DomainError("unknown figure name: " + name);
}

}  // namespace msvf
