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
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "uninorm/errors.hpp"

namespace uninorm {

struct LocusPoint {
  double x = 0.0;
  double y_low = 0.0;
  double y_high = 0.0;

  friend bool operator==(const LocusPoint&, const LocusPoint&) = default;
};

struct ValueRange {
  double low = 0.0;
  double high = 0.0;
  bool contains(double y, double tol = 0.0) const { return y >= low - tol && y <= high + tol; }
};

/// A non-increasing relation on [0,1] sampled at finitely many abscissae.
///
/// Each sample carries a closed y-range; a range of positive length is a
/// vertical segment. Between samples the relation is the straight line from
/// the lower end of the left sample to the upper end of the right one.
///
/// The container does not insist on monotonicity, because measured loci of
/// arbitrary operators need not be monotone; use the predicates below, or
/// `checked`, where the invariant matters.
class PseudoFunction {
 public:
  PseudoFunction() = default;

  explicit PseudoFunction(std::vector<LocusPoint> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
      if (!(p.y_low <= p.y_high)) throw ConstructionError("pseudo-function: y_low > y_high");
      if (!std::isfinite(p.x) || !std::isfinite(p.y_low) || !std::isfinite(p.y_high)) {
        throw ConstructionError("pseudo-function: non-finite sample");
      }
    }
    std::stable_sort(points_.begin(), points_.end(),
                     [](const LocusPoint& a, const LocusPoint& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i].x == points_[i - 1].x) {
        throw ConstructionError("pseudo-function: duplicate abscissa");
      }
    }
  }

  /// Single-valued curve through the given (x, y) vertices.
  static PseudoFunction from_curve(const std::vector<std::pair<double, double>>& vertices) {
    std::vector<LocusPoint> pts;
    pts.reserve(vertices.size());
    for (auto [x, y] : vertices) pts.push_back({x, y, y});
    return PseudoFunction(std::move(pts));
  }

  /// Like the constructor, but also rejects increasing pieces.
  static PseudoFunction checked(std::vector<LocusPoint> points, double tol = 0.0) {
    PseudoFunction f(std::move(points));
    if (!f.is_non_increasing(tol)) throw ConstructionError("pseudo-function is not non-increasing");
    return f;
  }

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<LocusPoint>& points() const { return points_; }

  ValueRange range_at(double x) const {
    if (points_.empty()) throw DomainError("pseudo-function is empty");
    if (x <= points_.front().x) {
      const auto& p = points_.front();
      return x == p.x ? ValueRange{p.y_low, p.y_high} : ValueRange{p.y_high, p.y_high};
    }
    if (x >= points_.back().x) {
      const auto& p = points_.back();
      return x == p.x ? ValueRange{p.y_low, p.y_high} : ValueRange{p.y_low, p.y_low};
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const LocusPoint& p, double v) { return p.x < v; });
    if (it->x == x) return {it->y_low, it->y_high};
    const auto& right = *it;
    const auto& left = *(it - 1);
    double t = (x - left.x) / (right.x - left.x);
    double y = left.y_low + t * (right.y_high - left.y_low);
    return {y, y};
  }

  /// Midpoint of range_at; the value itself for single-valued stretches.
  double operator()(double x) const {
    auto r = range_at(x);
    return 0.5 * (r.low + r.high);
  }

  bool is_non_increasing(double tol = 0.0) const {
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i - 1].y_low + tol < points_[i].y_high) return false;
    }
    return true;
  }

  bool has_vertical_segments(double tol = 0.0) const {
    return std::any_of(points_.begin(), points_.end(),
                       [tol](const LocusPoint& p) { return p.y_high - p.y_low > tol; });
  }

  /// Non-increasing, no vertical segments and every step drops by more than tol.
  bool is_strictly_decreasing(double tol = 0.0) const {
    if (has_vertical_segments(tol)) return false;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].y_low - points_[i].y_high > tol)) return false;
    }
    return true;
  }

  /// The abscissa whose range meets the diagonal, located by bisection on
  /// high(x) - x, which is strictly decreasing for a non-increasing relation.
  std::optional<double> fixed_point() const {
    if (points_.empty()) return std::nullopt;
    double lo = points_.front().x;
    double hi = points_.back().x;
    auto above = [this](double x) { return range_at(x).high >= x; };
    if (!above(lo)) return std::nullopt;
    if (above(hi)) return range_at(hi).contains(hi) ? std::optional<double>(hi) : std::nullopt;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (above(mid) ? lo : hi) = mid;
    }
    if (range_at(lo).contains(lo, 1e-12)) return lo;
    if (range_at(hi).contains(hi, 1e-12)) return hi;
    return lo;
  }

  friend bool operator==(const PseudoFunction&, const PseudoFunction&) = default;

 private:
  std::vector<LocusPoint> points_;
};

}  // namespace uninorm
