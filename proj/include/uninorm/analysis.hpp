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
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uninorm/operator.hpp"
#include "uninorm/pseudo_function.hpp"

namespace uninorm {

struct AxiomEntry {
  double max_violation = 0.0;
  std::array<double, 3> witness{};  // (x, y) or (x, y, z)
  bool pass = true;
};

struct AxiomReport {
  double tolerance = 0.0;
  AxiomEntry commutativity;
  AxiomEntry monotonicity;
  AxiomEntry associativity;
  AxiomEntry neutrality;
  AxiomEntry annihilator;

  bool all_pass() const {
    return commutativity.pass && monotonicity.pass && associativity.pass && neutrality.pass && annihilator.pass;
  }
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double length() const { return upper - lower; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Detected idempotent set as a sorted union of closed intervals.
struct IdempotentReport {
  std::vector<Interval> intervals;
  double tolerance = 0.0;

  bool contains(double x, double slack = 1e-9) const {
    return std::any_of(intervals.begin(), intervals.end(),
                       [&](const Interval& i) { return x >= i.lower - slack && x <= i.upper + slack; });
  }
  /// Intervals longer than min_length.
  std::vector<Interval> stretches(double min_length = 1e-6) const {
    std::vector<Interval> out;
    for (const auto& i : intervals) {
      if (i.length() > min_length) out.push_back(i);
    }
    return out;
  }
};

struct ClassFlags {
  bool conjunctive = false;
  bool disjunctive = false;
  bool in_N = false;
  bool in_U = false;
  bool internal = false;
  bool s_internal = false;
  bool n_min = false;
  bool n_max = false;
};

inline constexpr double kDefaultJumpThreshold = 1e-3;
inline constexpr int kJumpBisections = 40;

namespace detail {

inline std::vector<double> uniform_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

/// Raise `entry` to `violation` keeping the first (lexicographically smallest
/// in scan order) witness on ties.
inline void record(AxiomEntry& entry, double violation, std::array<double, 3> witness) {
  if (violation > entry.max_violation) {
    entry.max_violation = violation;
    entry.witness = witness;
  }
}

/// Minimises a unimodal function on [lo, hi] by ternary search.
inline double argmin_unimodal(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (m1 <= lo || m2 >= hi) break;
    if (f(m1) <= f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  double mid = 0.5 * (lo + hi);
  double best = lo;
  for (double c : {mid, hi}) {
    if (f(c) < f(best)) best = c;
  }
  return best;
}

/// Last point in [ok, bad] satisfying pred, given pred(ok) && !pred(bad).
inline double bisect_boundary(const std::function<bool(double)>& pred, double ok, double bad, int iterations = 60) {
  for (int i = 0; i < iterations; ++i) {
    double mid = 0.5 * (ok + bad);
    if (mid == ok || mid == bad) break;
    (pred(mid) ? ok : bad) = mid;
  }
  return ok;
}

}  // namespace detail

/// Numerical check of the uninorm axioms on a uniform grid of grid_n points
/// per axis (grid_n^3 triples for associativity).
inline AxiomReport axiom_report(const Operator& op, int grid_n, double tol) {
  if (grid_n < 3) throw std::invalid_argument("axiom_report: grid_n must be at least 3");
  const auto g = detail::uniform_grid(grid_n);
  const std::size_t n = g.size();
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = op.eval(g[i], g[j]);
  }
  AxiomReport r;
  r.tolerance = tol;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double u = table[i * n + j];
      detail::record(r.commutativity, std::abs(u - table[j * n + i]), {g[i], g[j], 0.0});
      if (j + 1 < n) detail::record(r.monotonicity, u - table[i * n + j + 1], {g[i], g[j], g[j + 1]});
      if (i + 1 < n) detail::record(r.monotonicity, u - table[(i + 1) * n + j], {g[i], g[i + 1], g[j]});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double xy = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        double lhs = op.eval(xy, g[k]);
        double rhs = op.eval(g[i], table[j * n + k]);
        detail::record(r.associativity, std::abs(lhs - rhs), {g[i], g[j], g[k]});
      }
    }
  }
  const double e = op.neutral();
  for (double x : g) {
    detail::record(r.neutrality, std::abs(op.eval(x, e) - x), {x, e, 0.0});
    detail::record(r.neutrality, std::abs(op.eval(e, x) - x), {e, x, 0.0});
  }
  double a = op.eval(1.0, 0.0);
  detail::record(r.annihilator, std::min(std::abs(a), std::abs(a - 1.0)), {1.0, 0.0, 0.0});
  for (AxiomEntry* entry : {&r.commutativity, &r.monotonicity, &r.associativity, &r.neutrality, &r.annihilator}) {
    entry->pass = entry->max_violation <= tol;
  }
  return r;
}

/// Samples u_x(z) = U(x, z) on a uniform grid of z.
inline std::vector<double> section(const Operator& op, double x, int grid_n) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("section: x outside [0,1]");
  std::vector<double> out;
  for (double z : detail::uniform_grid(grid_n)) out.push_back(op.eval(x, z));
  return out;
}

/// The rescaled restrictions of a proper uninorm to [0,e]^2 and [e,1]^2.
inline std::pair<Operator, Operator> underlying_ops(const Operator& op) {
  if (const auto* comp = std::get_if<node::UComposite>(&op.node().value); comp && op.is_proper()) {
    return {comp->tnorm, comp->tconorm};
  }
  double e = op.neutral();
  if (e <= 0.0) throw std::invalid_argument("underlying_ops: neutral element 0, the operator is itself a t-conorm");
  if (e >= 1.0) throw std::invalid_argument("underlying_ops: neutral element 1, the operator is itself a t-norm");
  return {restricted(op, 0.0, e), restricted(op, e, 1.0)};
}

/// Positions of the jumps larger than `threshold` in z -> U(x, z).
///
/// Sampled steps above the threshold are bisected; a step that is still above
/// the threshold after kJumpBisections halvings is a genuine discontinuity.
inline std::vector<double> section_jumps(const Operator& op, double x, int resolution,
                                         double threshold = kDefaultJumpThreshold) {
  std::vector<double> jumps;
  double prev_z = 0.0;
  double prev_u = op.eval(x, 0.0);
  for (int j = 1; j <= resolution; ++j) {
    double z = static_cast<double>(j) / resolution;
    double u = op.eval(x, z);
    if (u - prev_u > threshold) {
      double lo = prev_z, hi = z, ulo = prev_u, uhi = u;
      for (int it = 0; it < kJumpBisections; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double um = op.eval(x, mid);
        if (um - ulo >= uhi - um) {
          hi = mid;
          uhi = um;
        } else {
          lo = mid;
          ulo = um;
        }
      }
      if (uhi - ulo > threshold) {
        double at = 0.5 * (lo + hi);
        if (jumps.empty() || at - jumps.back() > 1e-9) jumps.push_back(at);
      }
    }
    prev_z = z;
    prev_u = u;
  }
  return jumps;
}

/// Discontinuity locus of a commutative operator, assembled from the jumps of
/// every grid row and their mirror images. Samples sharing an abscissa (to
/// within 1e-9) collapse into one vertical range.
inline PseudoFunction jump_locus(const Operator& op, int resolution, double threshold = kDefaultJumpThreshold) {
  if (resolution < 2) throw std::invalid_argument("jump_locus: resolution too small");
  std::vector<std::pair<double, double>> hits;
  for (int i = 0; i <= resolution; ++i) {
    double x = static_cast<double>(i) / resolution;
    for (double y : section_jumps(op, x, resolution, threshold)) {
      hits.emplace_back(x, y);
      hits.emplace_back(y, x);
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<LocusPoint> pts;
  for (auto [x, y] : hits) {
    if (!pts.empty() && x - pts.back().x <= 1e-9) {
      pts.back().y_low = std::min(pts.back().y_low, y);
      pts.back().y_high = std::max(pts.back().y_high, y);
    } else {
      pts.push_back({x, y, y});
    }
  }
  return PseudoFunction(std::move(pts));
}

/// Level curve U(x, r(x)) = e of a representable uninorm, r(x) = g^-1(-g(x)).
inline PseudoFunction curve_of_representable(const Generator& gen, int samples = 1025) {
  if (gen.kind() != GeneratorKind::kUninorm) throw ConstructionError("curve_of_representable: not a uninorm generator");
  std::vector<std::pair<double, double>> v;
  for (double x : detail::uniform_grid(samples)) v.emplace_back(x, gen.pseudo_inverse(-gen.forward(x)));
  return PseudoFunction::from_curve(v);
}

/// Grid scan of |U(x,x) - x| <= tol. Runs of hits become intervals whose ends
/// are bisected; isolated minima of |U(x,x) - x| between grid points are
/// polished by ternary search and kept when they reach the tolerance.
inline IdempotentReport idempotent_set(const Operator& op, int resolution, double tol) {
  if (resolution < 64) throw std::invalid_argument("idempotent_set: resolution must be at least 64");
  auto h = [&op](double x) { return std::abs(op.eval(x, x) - x); };
  const double kEdgeTol = std::min(tol, 1e-13);
  std::function<bool(double)> hit = [&](double x) { return h(x) <= tol; };
  std::function<bool(double)> exact = [&](double x) { return h(x) <= kEdgeTol; };
  const int n = resolution + 1;
  std::vector<double> xs(static_cast<std::size_t>(n));
  std::vector<double> hs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i] = static_cast<double>(i) / resolution;
    hs[i] = h(xs[i]);
  }
  std::vector<Interval> found;
  for (int i = 0; i < n;) {
    if (hs[i] > tol) {
      bool local_min = i > 0 && i + 1 < n && hs[i] <= hs[i - 1] && hs[i] <= hs[i + 1];
      if (local_min) {
        double p = detail::argmin_unimodal(h, xs[i - 1], xs[i + 1]);
        if (h(p) <= tol) found.push_back({p, p});
      }
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && hs[j + 1] <= tol) ++j;
    if (i == j) {
      double p = xs[i];
      if (hs[i] != 0.0 && i > 0 && i + 1 < n) {
        double q = detail::argmin_unimodal(h, xs[i - 1], xs[i + 1]);
        if (h(q) < hs[i]) p = q;
      }
      found.push_back({p, p});
    } else {
      // Edges are located with a predicate near rounding level when the run
      // allows it; the looser tolerance alone would widen every stretch by
      // about tol / slope.
      auto edge = [&](int inside, int outside) {
        auto& pred = h(xs[inside]) <= kEdgeTol ? exact : hit;
        return detail::bisect_boundary(pred, xs[inside], xs[outside]);
      };
      double lo = i > 0 ? edge(i, i - 1) : xs[i];
      double hi = j + 1 < n ? edge(j, j + 1) : xs[j];
      found.push_back({lo, hi});
    }
    i = j + 1;
  }
  for (double p : {0.0, op.neutral(), 1.0}) found.push_back({p, p});
  std::sort(found.begin(), found.end(), [](const Interval& l, const Interval& r) { return l.lower < r.lower; });
  IdempotentReport report;
  report.tolerance = tol;
  for (const auto& iv : found) {
    if (!report.intervals.empty() && iv.lower <= report.intervals.back().upper + 1e-9) {
      report.intervals.back().upper = std::max(report.intervals.back().upper, iv.upper);
    } else {
      report.intervals.push_back(iv);
    }
  }
  return report;
}

/// U(x,y) in {x,y} (within tol) at every point of an n x n grid.
inline bool internal_on_grid(const Operator& op, int n, double tol) {
  auto g = detail::uniform_grid(n);
  for (double x : g) {
    for (double y : g) {
      double u = op.eval(x, y);
      if (std::abs(u - x) > tol && std::abs(u - y) > tol) return false;
    }
  }
  return true;
}

/// For an internal operator: the point where the row z -> U(x,z) switches
/// from min to max. Rows below e are searched on [e,1], rows above on [0,e].
inline double switch_point(const Operator& op, double x) {
  const double e = op.neutral();
  if (x == e) return e;
  if (x < e) {
    auto min_mode = [&](double z) {
      double u = op.eval(x, z);
      return std::abs(u - x) <= std::abs(u - z);
    };
    if (min_mode(1.0)) return 1.0;
    return detail::bisect_boundary(min_mode, e, 1.0);
  }
  auto min_mode = [&](double z) {
    double u = op.eval(x, z);
    return std::abs(u - z) <= std::abs(u - x);
  };
  if (!min_mode(0.0)) return 0.0;
  return detail::bisect_boundary(min_mode, 0.0, e);
}

/// Switch curve of an internal operator sampled at resolution + 1 rows.
inline PseudoFunction switch_curve(const Operator& op, int resolution) {
  std::vector<std::pair<double, double>> v;
  for (int i = 0; i <= resolution; ++i) {
    double x = static_cast<double>(i) / resolution;
    v.emplace_back(x, switch_point(op, x));
  }
  return PseudoFunction::from_curve(v);
}

/// Whether the switch curve is continuous and strictly decreasing: every
/// sampled step drops, and refining a step by halving keeps shrinking it.
inline bool switch_is_strictly_decreasing(const Operator& op, int resolution) {
  auto curve = switch_curve(op, resolution);
  const auto& p = curve.points();
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p[i - 1].y_low - p[i].y_low > 1e-12)) return false;
    double lo = p[i - 1].x, hi = p[i].x;
    double vlo = p[i - 1].y_low, vhi = p[i].y_low;
    for (int it = 0; it < 30; ++it) {
      double mid = 0.5 * (lo + hi);
      double vm = switch_point(op, mid);
      if (vlo - vm >= vm - vhi) {
        hi = mid;
        vhi = vm;
      } else {
        lo = mid;
        vlo = vm;
      }
    }
    if (vlo - vhi > 1e-6) return false;
  }
  return true;
}

/// max - min of U over an m x m sample of the box [c-delta, c+delta]^2
/// clipped to the unit square.
inline double oscillation(const Operator& op, double cx, double cy, double delta, int m = 21) {
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double x = std::clamp(cx - delta + 2.0 * delta * i / (m - 1), 0.0, 1.0);
      double y = std::clamp(cy - delta + 2.0 * delta * j / (m - 1), 0.0, 1.0);
      double u = op.eval(x, y);
      lo = std::min(lo, u);
      hi = std::max(hi, u);
    }
  }
  return hi - lo;
}

/// Class membership flags from sampled evaluations at the given resolution.
inline ClassFlags classify(const Operator& op, int resolution, double tol) {
  ClassFlags f;
  double a = op.eval(1.0, 0.0);
  f.conjunctive = std::abs(a) <= tol;
  f.disjunctive = std::abs(a - 1.0) <= tol;

  f.in_N = true;
  for (int i = 0; i <= resolution && f.in_N; ++i) {
    double x = static_cast<double>(i) / resolution;
    if (i < resolution && std::abs(op.eval(x, 0.0)) > tol) f.in_N = false;
    if (i > 0 && std::abs(op.eval(x, 1.0) - 1.0) > tol) f.in_N = false;
  }

  if (op.is_proper()) {
    auto [t, c] = underlying_ops(op);
    f.in_U = jump_locus(t, resolution).empty() && jump_locus(c, resolution).empty();
  } else {
    f.in_U = jump_locus(op, resolution).empty();
  }

  f.internal = internal_on_grid(op, resolution + 1, tol);
  f.s_internal = f.internal && op.is_proper() && switch_is_strictly_decreasing(op, resolution);

  if (f.in_N && op.is_proper()) {
    auto [t, c] = underlying_ops(op);
    auto umin = u_min_max(t, c, op.neutral(), Composite::kMin);
    auto umax = u_min_max(t, c, op.neutral(), Composite::kMax);
    bool agree_min = true, agree_max = true;
    for (int i = 1; i < resolution; ++i) {
      for (int j = 1; j < resolution; ++j) {
        double x = static_cast<double>(i) / resolution;
        double y = static_cast<double>(j) / resolution;
        double u = op.eval(x, y);
        if (std::abs(u - umin.eval(x, y)) > tol) agree_min = false;
        if (std::abs(u - umax.eval(x, y)) > tol) agree_max = false;
      }
    }
    f.n_min = agree_min;
    f.n_max = agree_max;
  }
  return f;
}

}  // namespace uninorm
