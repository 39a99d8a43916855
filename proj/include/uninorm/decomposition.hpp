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
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "uninorm/analysis.hpp"
#include "uninorm/operator.hpp"

namespace uninorm {

enum class SummandClass { kRepresentable, kSInternal, kInternalOther };

inline const char* to_string(SummandClass c) {
  switch (c) {
    case SummandClass::kRepresentable:
      return "REPRESENTABLE";
    case SummandClass::kSInternal:
      return "S_INTERNAL";
    case SummandClass::kInternalOther:
      return "INTERNAL_OTHER";
  }
  return "?";
}

struct SummandFrame {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double d = 1.0;
  double pairing_residual = 0.0;  // |r(b) - c| + |r(a) - d|
};

/// Non-idempotent gaps and idempotent stretches on either side of e.
struct GapSet {
  std::vector<Interval> lower;
  std::vector<Interval> upper;
  std::vector<Interval> lower_stretches;
  std::vector<Interval> upper_stretches;
};

struct Diagnostic {
  std::string code;
  std::string message;
};

struct DecomposeOptions {
  int resolution = 256;             // classification and jump scans
  int idempotent_resolution = 4096;
  int summand_resolution = 128;
  double tol = 1e-9;
  double pair_tol = 1e-4;
  double recompose_tol = 1e-6;      // sup-distance allowed between input and rebuilt sum
  double jump_threshold = kDefaultJumpThreshold;
  std::uint64_t verify_seed = 20240611;
};

struct DecompositionResult {
  double e = 0.5;
  std::vector<SummandFrame> frames;
  std::vector<SummandClass> classes;
  std::vector<Operator> normalized_ops;
  std::vector<double> pivots;  // measured U(b, c) per frame
  double recomposition_error = std::numeric_limits<double>::infinity();
  std::vector<Diagnostic> diagnostics;

  bool refused() const { return !diagnostics.empty(); }
  bool has(const std::string& code) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) { return d.code == code; });
  }
};

/// Complement of the idempotent set, split at e. Intervals of positive length
/// in the report are returned as stretches, clipped to each side.
inline GapSet gap_intervals(const IdempotentReport& report, double e, double min_stretch = 1e-6) {
  const auto& iv = report.intervals;
  if (iv.empty() || iv.front().lower > 0.0 || iv.back().upper < 1.0) {
    throw DecompositionError("gap_intervals: idempotent report must contain 0 and 1");
  }
  GapSet g;
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
    Interval gap{iv[i].upper, iv[i + 1].lower};
    (gap.upper <= e ? g.lower : g.upper).push_back(gap);
  }
  for (const auto& i : iv) {
    if (std::min(i.upper, e) - i.lower > min_stretch) g.lower_stretches.push_back({i.lower, std::min(i.upper, e)});
    if (i.upper - std::max(i.lower, e) > min_stretch) g.upper_stretches.push_back({std::max(i.lower, e), i.upper});
  }
  return g;
}

namespace detail {

inline std::string interval_text(const Interval& i) { return "(" + detail::fmt(i.lower) + ", " + detail::fmt(i.upper) + ")"; }

inline void pair_side(const std::vector<Interval>& lower, const std::vector<Interval>& upper,
                      const std::function<double(double)>& r, double tol, const char* what,
                      std::vector<SummandFrame>& out) {
  std::vector<bool> used(upper.size(), false);
  for (const auto& lo : lower) {
    double rc = r(lo.upper);
    double rd = r(lo.lower);
    bool matched = false;
    for (std::size_t j = 0; j < upper.size(); ++j) {
      if (used[j]) continue;
      double res = std::abs(rc - upper[j].lower) + std::abs(rd - upper[j].upper);
      if (std::abs(rc - upper[j].lower) <= tol && std::abs(rd - upper[j].upper) <= tol) {
        used[j] = true;
        matched = true;
        out.push_back({lo.lower, lo.upper, upper[j].lower, upper[j].upper, res});
        break;
      }
    }
    if (!matched) {
      throw DecompositionError(std::string("unpaired ") + what + " " + interval_text(lo) + ": r maps it to " +
                               interval_text({rc, rd}));
    }
  }
  for (std::size_t j = 0; j < upper.size(); ++j) {
    if (!used[j]) throw DecompositionError(std::string("unpaired ") + what + " " + interval_text(upper[j]));
  }
}

}  // namespace detail

/// Matches each gap (a,b) below e with the gap (c,d) above e for which
/// c = r(b) and d = r(a); idempotent stretches pair the same way.
inline std::vector<SummandFrame> pair_intervals(const GapSet& gaps, const std::function<double(double)>& r,
                                                double tol) {
  std::vector<SummandFrame> frames;
  detail::pair_side(gaps.lower, gaps.upper, r, tol, "gap", frames);
  detail::pair_side(gaps.lower_stretches, gaps.upper_stretches, r, tol, "idempotent stretch", frames);
  std::sort(frames.begin(), frames.end(), [](const SummandFrame& l, const SummandFrame& r) { return l.a < r.a; });
  return frames;
}

inline std::vector<SummandFrame> pair_intervals(const GapSet& gaps, const PseudoFunction& r, double tol) {
  return pair_intervals(gaps, [&r](double x) { return r(x); }, tol);
}

/// Neutral element given to a summand pulled back from `frame`: the share of
/// the frame's length that lies below e.
inline double normalized_neutral(const SummandFrame& f) { return (f.b - f.a) / ((f.b - f.a) + (f.d - f.c)); }

/// Pulls op back from ([a,b) u {U(b,c)} u (c,d])^2 to the unit square.
inline Operator extract_summand(const Operator& op, const SummandFrame& f, double tol = 1e-9, int samples = 21) {
  if (!(f.a < f.b && f.b <= f.c && f.c < f.d)) {
    throw DecompositionError("degenerate frame (" + detail::fmt(f.a) + ", " + detail::fmt(f.b) + ", " + detail::fmt(f.c) + ", " + detail::fmt(f.d) +
                             ")");
  }
  for (double p : {f.a, f.b, f.c, f.d}) {
    if (std::abs(op.eval(p, p) - p) > tol) throw DecompositionError("frame endpoint " + detail::fmt(p) + " is not idempotent");
  }
  std::vector<double> pts;
  for (int i = 0; i < samples; ++i) {
    double t = static_cast<double>(i) / (samples - 1);
    pts.push_back(f.a + t * (f.b - f.a));
    pts.push_back(f.c + t * (f.d - f.c));
  }
  auto inside = [&](double u) {
    return (u >= f.a - tol && u <= f.b + tol) || (u >= f.c - tol && u <= f.d + tol);
  };
  for (double x : pts) {
    for (double y : pts) {
      double u = op.eval(x, y);
      if (!inside(u)) {
        throw DecompositionError("frame not closed: U(" + detail::fmt(x) + ", " + detail::fmt(y) + ") = " + detail::fmt(u));
      }
    }
  }
  ScaleMap map{f.a, f.b, f.c, f.d, op.eval(f.b, f.c), normalized_neutral(f)};
  return transformed(op, map);
}

inline SummandClass classify_summand(const Operator& op_norm, int resolution = 128, double tol = 1e-9) {
  if (internal_on_grid(op_norm, resolution + 1, tol)) {
    return op_norm.is_proper() && switch_is_strictly_decreasing(op_norm, resolution) ? SummandClass::kSInternal
                                                                                     : SummandClass::kInternalOther;
  }
  auto locus = jump_locus(op_norm, resolution);
  auto near_corner = [](const LocusPoint& p) {
    return (p.x <= 1e-6 && p.y_low >= 1.0 - 1e-6) || (p.x >= 1.0 - 1e-6 && p.y_high <= 1e-6);
  };
  const auto& pts = locus.points();
  return std::all_of(pts.begin(), pts.end(), near_corner) ? SummandClass::kRepresentable
                                                          : SummandClass::kInternalOther;
}

/// Sup-distance between two operators on a (grid x grid) lattice plus
/// `random_points` seeded uniform samples.
inline double sup_distance(const Operator& lhs, const Operator& rhs, int grid, int random_points, std::uint64_t seed) {
  double worst = 0.0;
  for (double x : detail::uniform_grid(grid)) {
    for (double y : detail::uniform_grid(grid)) worst = std::max(worst, std::abs(lhs.eval(x, y) - rhs.eval(x, y)));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < random_points; ++i) {
    double x = unit(rng);
    double y = unit(rng);
    worst = std::max(worst, std::abs(lhs.eval(x, y) - rhs.eval(x, y)));
  }
  return worst;
}

/// Rebuilds the ordinal sum described by a successful decomposition.
inline Operator recompose(const DecompositionResult& result) {
  if (result.refused()) throw DecompositionError("cannot recompose a refused decomposition");
  OrdinalSumUninormSpec spec;
  spec.e = result.e;
  for (std::size_t k = 0; k < result.frames.size(); ++k) {
    const auto& f = result.frames[k];
    spec.summands.push_back({f.a, f.b, f.c, f.d, result.normalized_ops[k], result.pivots[k]});
  }
  return ordinal_sum_uninorm(std::move(spec));
}

namespace detail {

/// r at an idempotent p: where the row through p jumps across e.
inline double locus_at(const Operator& op, const PseudoFunction& locus, double p, const DecomposeOptions& o) {
  const double e = op.neutral();
  if (p == e) return e;
  double guess = locus(p);
  double best = guess;
  double best_dist = std::numeric_limits<double>::infinity();
  for (double z : section_jumps(op, p, o.resolution, o.jump_threshold)) {
    if ((p < e) != (z > e)) continue;
    if (std::abs(z - guess) < best_dist) {
      best_dist = std::abs(z - guess);
      best = z;
    }
  }
  if (best_dist == std::numeric_limits<double>::infinity()) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return 0.0;
  }
  return best;
}

}  // namespace detail

/// Recovers the ordinal-sum structure of a uninorm from evaluations alone.
/// Preconditions that fail are reported as diagnostics instead of thrown.
inline DecompositionResult decompose(const Operator& op, const DecomposeOptions& o = {}) {
  DecompositionResult res;
  res.e = op.neutral();
  auto refuse = [&res](std::string code, std::string message) {
    res.diagnostics.push_back({std::move(code), std::move(message)});
    return res;
  };
  if (!op.is_proper()) return refuse("not_proper", "neutral element " + detail::fmt(res.e) + " is not in (0,1)");

  auto flags = classify(op, o.resolution, o.tol);
  if (!flags.in_N) res.diagnostics.push_back({"not_in_N", "boundary rows U(x,0)=0, U(x,1)=1 fail"});
  if (!flags.in_U) res.diagnostics.push_back({"not_in_U", "underlying t-norm or t-conorm is not continuous"});
  if (res.refused()) return res;

  auto raw = jump_locus(op, o.resolution, o.jump_threshold);
  std::vector<LocusPoint> pts = raw.points();
  bool has_e = std::any_of(pts.begin(), pts.end(), [&](const LocusPoint& p) { return std::abs(p.x - res.e) <= 1e-9; });
  if (!has_e) pts.push_back({res.e, res.e, res.e});
  PseudoFunction locus(std::move(pts));
  if (!locus.is_strictly_decreasing(o.tol)) {
    return refuse("locus_not_strictly_decreasing", "discontinuity locus is not a strictly decreasing curve");
  }
  const auto& lp = locus.points();
  if (!(lp.front().x <= o.pair_tol && lp.front().y_high >= 1.0 - o.pair_tol && lp.back().x >= 1.0 - o.pair_tol &&
        lp.back().y_low <= o.pair_tol)) {
    return refuse("locus_endpoints", "discontinuity locus does not run from (0,1) to (1,0)");
  }
  if (std::abs(locus(res.e) - res.e) > o.pair_tol) {
    return refuse("locus_endpoints", "discontinuity locus misses (e,e)");
  }

  auto idem = idempotent_set(op, o.idempotent_resolution, o.tol);
  auto gaps = gap_intervals(idem, res.e);
  try {
    res.frames = pair_intervals(gaps, [&](double p) { return detail::locus_at(op, locus, p, o); }, o.pair_tol);
  } catch (const DecompositionError& err) {
    return refuse("unpaired_interval", err.what());
  }
  for (const auto& f : res.frames) {
    if (!(f.b - f.a > o.tol && f.d - f.c > o.tol)) {
      return refuse("degenerate_frame", "frame (" + detail::fmt(f.a) + ", " + detail::fmt(f.b) + ", " + detail::fmt(f.c) + ", " + detail::fmt(f.d) +
                                            ") has an empty side");
    }
  }
  for (const auto& f : res.frames) {
    try {
      res.normalized_ops.push_back(extract_summand(op, f, o.tol));
    } catch (const DecompositionError& err) {
      res.frames.clear();
      res.normalized_ops.clear();
      return refuse("closure_violation", err.what());
    }
    res.pivots.push_back(op.eval(f.b, f.c));
    res.classes.push_back(classify_summand(res.normalized_ops.back(), o.summand_resolution, o.tol));
  }
  try {
    res.recomposition_error = sup_distance(op, recompose(res), 101, 100, o.verify_seed);
  } catch (const ConstructionError& err) {
    return refuse("recomposition_invalid", err.what());
  }
  // Catches inputs that look like a sum but are not uninorms (e.g. a forced pivot).
  if (!(res.recomposition_error <= o.recompose_tol)) {
    return refuse("recomposition_mismatch", "rebuilt sum differs from the input by " + detail::fmt(res.recomposition_error));
  }
  return res;
}

}  // namespace uninorm
