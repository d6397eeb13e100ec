// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cmath>

#include "msvf/errors.hpp"

namespace msvf {

/// Numeric tolerances shared by the set operations.
///
/// tie_eps    -- absolute slack used to detect equidistant projections; must
///               be strictly positive so genuine ties are never split by
///               rounding.
/// merge_eps  -- intervals whose gap is at most merge_eps are merged during
///               normalization.
/// dedupe_eps -- points closer than dedupe_eps are considered identical.
struct Tolerance {
  double tie_eps = 1e-9;
  double merge_eps = 1e-12;
  double dedupe_eps = 1e-12;

  void validate() const {
    if (!(std::isfinite(tie_eps) && std::isfinite(merge_eps) && std::isfinite(dedupe_eps)))
      throw Error("tolerance values must be finite");
    if (!(tie_eps > 0)) throw Error("tie_eps must be > 0");
    if (merge_eps < 0 || dedupe_eps < 0) throw Error("merge_eps/dedupe_eps must be >= 0");
  }
};

}  // namespace msvf
