/*
 * Copyright 2026 The uninorm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <string>

#include "uninorm/errors.hpp"

namespace uninorm {

/// Piecewise-linear embedding of [0,1] into a summand frame.
///
/// With neutral element e of the source operator, [0,e) goes linearly onto
/// [a,b), e goes to the pivot v, and (e,1] goes linearly onto (c,d].
/// Requires 0 <= a <= b <= c <= d <= 1 and v in [b,c]. A side with a == b
/// (or c == d) collapses; only the other half of the source is transported.
struct ScaleMap {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double d = 1.0;
  double v = 0.5;
  double e = 0.5;

  bool lower_empty() const { return !(a < b); }
  bool upper_empty() const { return !(c < d); }

  double forward(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("scale map: argument outside [0,1]");
    if (x == e) return v;
    if (x < e) return std::clamp(a + (b - a) * (x / e), a, b);
    return std::clamp(c + (d - c) * ((x - e) / (1.0 - e)), c, d);
  }

  /// Strict inverse on [a,b) u {v} u (c,d].
  double inverse(double y) const {
    if (y == v) return e;
    if (!lower_empty() && y >= a && y < b) return std::clamp(e * ((y - a) / (b - a)), 0.0, e);
    if (!upper_empty() && y > c && y <= d) {
      return std::clamp(e + (1.0 - e) * ((y - c) / (d - c)), e, 1.0);
    }
    throw DomainError("scale map: " + std::to_string(y) + " is outside the image");
  }

  /// Total inverse that snaps values slightly outside the image (rounding
  /// residue from evaluating a summand in place) onto the nearest piece.
  double inverse_nearest(double y) const {
    if (y == v) return e;
    if (y <= b) {
      if (lower_empty()) return 0.0;
      return std::clamp(e * ((y - a) / (b - a)), 0.0, e);
    }
    if (y >= c) {
      if (upper_empty()) return 1.0;
      return std::clamp(e + (1.0 - e) * ((y - c) / (d - c)), e, 1.0);
    }
    return e;
  }

  friend bool operator==(const ScaleMap&, const ScaleMap&) = default;
};

inline double scale_forward(const ScaleMap& map, double x) { return map.forward(x); }
inline double scale_inverse(const ScaleMap& map, double y) { return map.inverse(y); }

}  // namespace uninorm
