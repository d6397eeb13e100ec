// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msvf/svf.hpp"

namespace msvf {

/// On-disk description of a sampled set-valued function. JSON schema
/// (version 1):
///   {
///     "schema_version": 1,
///     "domain": [a, b],                      // optional, must match knots
///     "partition": [x0, x1, ...],
///     "sets": [ [[lo,hi], ...]               // interval union per knot
///             | {"dim": d, "points": [[...], ...]} ],
///     "metadata": { ... }                    // optional, free-form
///   }
struct SVFDocument {
  int schema_version = 1;
  std::vector<double> partition;
  std::vector<CompactSet> sets;
  std::string metadata_json = "{}";

  static SVFDocument from_json_text(const std::string& text);
  static SVFDocument from_file(const std::string& path);
  static SVFDocument from_svf(const SampledSVF& f);

  std::string to_json_text() const;
  void to_file(const std::string& path) const;

  SampledSVF to_svf() const;
};

/// CSV for evaluated sets: header "x,lo,hi" and one row per component for
/// interval unions, or "x,p0,p1,..." rows for point clouds. Rows are ordered
/// by (x, lo/point), numbers printed as shortest round-trip decimals.
std::string eval_csv(const std::vector<std::pair<double, CompactSet>>& results);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace msvf
