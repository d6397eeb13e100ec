// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <vector>

#include "msvf/operators.hpp"

namespace msvf {

/// Rendering parameters for set-valued interpolant figures.
struct FigureSpec {
  std::size_t grid = 161;        // x samples per curve, >= 2
  std::size_t per_segment = 16;  // parameter samples per chain family segment
  double width = 720;
  double height = 480;
};

/// One drawn selection curve: (x, y) samples of x -> sum_i c_i(x) f_i for a
/// sampled chain (f_0, ..., f_N).
using FigureCurve = std::vector<std::pair<double, double>>;

/// The gray interpolant curves of a figure: one curve per sampled chain.
/// Their pointwise union covers the operator's set-valued graph; segment
/// end parameters are always sampled, so per-x extremes are exact.
std::vector<FigureCurve> figure_curves(const SampledSVF& f, const OperatorSpec& op,
                                       const FigureSpec& spec, const Tolerance& tol = {});

/// SVG with the knot sets drawn as black vertical segments and the
/// interpolant selection curves in gray.
std::string render_figure_svg(const SampledSVF& f, const OperatorSpec& op,
                              const FigureSpec& spec, const Tolerance& tol = {});

/// The two built-in parabolic interpolation data sets:
///   parabolic-1: knots (0, 2, 6), sets [2,8], {5}, {5}
///   parabolic-2: knots (0, 4, 8), sets [2,4]u[6,8], [4.5,5.5], [2,4]u[6,8]
/// Throws DomainError for unknown names.
SampledSVF builtin_figure_data(const std::string& name);

}  // namespace msvf
