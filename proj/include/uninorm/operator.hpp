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
#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uninorm/errors.hpp"
#include "uninorm/extended_real.hpp"
#include "uninorm/generator.hpp"
#include "uninorm/pseudo_function.hpp"
#include "uninorm/scale_map.hpp"

namespace uninorm {

enum class Annihilator { kConjunctive, kDisjunctive };
enum class Composite { kMin, kMax };

enum class OperatorKind {
  kMin,
  kMax,
  kGeneratedTNorm,
  kGeneratedTConorm,
  kOrdinalSumTNorm,
  kOrdinalSumTConorm,
  kRepresentable,
  kUMin,
  kUMax,
  kInternal,
  kOrdinalSumUninorm,
  kRestricted,
  kTransformed,
};

/// An immutable binary operation on [0,1]^2 with a (claimed) neutral element.
///
/// Operators are cheap handles onto a shared, immutable expression tree, so
/// they can be copied freely and evaluated concurrently.
class Operator {
 public:
  struct Node;

  /// The minimum t-norm.
  Operator();

  /// The neutral element's row and column are returned verbatim for every
  /// construction except bare min/max, which evaluate literally so that a
  /// wrongly claimed neutral element stays observable.
  double eval(double x, double y) const;
  double operator()(double x, double y) const { return eval(x, y); }

  double neutral() const { return neutral_; }
  OperatorKind kind() const;
  const Node& node() const { return *node_; }

  /// U(1,0), which is 0 or 1 for any uninorm.
  double annihilator_value() const { return eval(1.0, 0.0); }
  bool is_disjunctive() const { return annihilator_value() >= 0.5; }
  bool is_tnorm() const { return neutral_ == 1.0; }
  bool is_tconorm() const { return neutral_ == 0.0; }
  bool is_proper() const { return neutral_ > 0.0 && neutral_ < 1.0; }

  std::string describe() const;

  static Operator make(Node node, double neutral);

  friend bool operator==(const Operator& lhs, const Operator& rhs);

 private:
  Operator(std::shared_ptr<const Node> node, double neutral) : node_(std::move(node)), neutral_(neutral) {}

  std::shared_ptr<const Node> node_;
  double neutral_ = 0.0;
};

// --- ordinal sum specifications ---------------------------------------------

/// One frame of an ordinal sum of uninorms: the operator acts, rescaled, on
/// [a,b) u (c,d].
struct SummandSpec {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double d = 1.0;
  Operator op;
  std::optional<double> v_override;

  bool lower_empty() const { return !(a < b); }
  bool upper_empty() const { return !(c < d); }

  friend bool operator==(const SummandSpec&, const SummandSpec&) = default;
};

/// A corner value n(b) for the point (b, c) of the summand ending at b.
struct BoundaryValue {
  double b = 0.0;
  double value = 0.0;
  friend bool operator==(const BoundaryValue&, const BoundaryValue&) = default;
};

struct OrdinalSumUninormSpec {
  double e = 0.5;
  std::vector<SummandSpec> summands;
  std::vector<BoundaryValue> boundary_values;

  friend bool operator==(const OrdinalSumUninormSpec&, const OrdinalSumUninormSpec&) = default;
};

struct IntervalSummand {
  double lo = 0.0;
  double hi = 1.0;
  Operator op;
  friend bool operator==(const IntervalSummand&, const IntervalSummand&) = default;
};

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::size_t> summands;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
  }
};

// --- nodes --------------------------------------------------------------------

namespace node {

struct Min {
  friend bool operator==(const Min&, const Min&) = default;
};
struct Max {
  friend bool operator==(const Max&, const Max&) = default;
};
struct GeneratedTNorm {
  Generator gen;
  friend bool operator==(const GeneratedTNorm&, const GeneratedTNorm&) = default;
};
struct GeneratedTConorm {
  Generator gen;
  friend bool operator==(const GeneratedTConorm&, const GeneratedTConorm&) = default;
};
struct OrdinalSumTNorm {
  std::vector<IntervalSummand> summands;
  friend bool operator==(const OrdinalSumTNorm&, const OrdinalSumTNorm&) = default;
};
struct OrdinalSumTConorm {
  std::vector<IntervalSummand> summands;
  friend bool operator==(const OrdinalSumTConorm&, const OrdinalSumTConorm&) = default;
};
struct Representable {
  Generator gen;
  Annihilator mode = Annihilator::kConjunctive;
  friend bool operator==(const Representable&, const Representable&) = default;
};
struct UComposite {
  Operator tnorm;
  Operator tconorm;
  Composite which = Composite::kMin;
  friend bool operator==(const UComposite&, const UComposite&) = default;
};
/// min below the switch relation, max above it; ties resolve to min.
struct Internal {
  PseudoFunction boundary;
  bool strict = true;
  friend bool operator==(const Internal&, const Internal&) = default;
};
struct OrdinalSumUninorm {
  OrdinalSumUninormSpec spec;
  std::vector<ScaleMap> maps;  // one per summand, pivots resolved
  friend bool operator==(const OrdinalSumUninorm& lhs, const OrdinalSumUninorm& rhs) {
    return lhs.spec == rhs.spec;
  }
};
/// The source on [lo,hi]^2 rescaled to the unit square.
struct Restricted {
  Operator source;
  double lo = 0.0;
  double hi = 1.0;
  friend bool operator==(const Restricted&, const Restricted&) = default;
};
/// The source on a summand frame pulled back to the unit square.
struct Transformed {
  Operator source;
  ScaleMap map;
  friend bool operator==(const Transformed&, const Transformed&) = default;
};

}  // namespace node

struct Operator::Node {
  std::variant<node::Min, node::Max, node::GeneratedTNorm, node::GeneratedTConorm, node::OrdinalSumTNorm,
               node::OrdinalSumTConorm, node::Representable, node::UComposite, node::Internal,
               node::OrdinalSumUninorm, node::Restricted, node::Transformed>
      value;
};

inline Operator::Operator() : node_(std::make_shared<const Node>(Node{node::Min{}})), neutral_(1.0) {}

inline Operator Operator::make(Node node, double neutral) {
  return Operator(std::make_shared<const Node>(std::move(node)), neutral);
}

inline bool operator==(const Operator& lhs, const Operator& rhs) {
  if (lhs.node_ == rhs.node_) return lhs.neutral_ == rhs.neutral_;
  if (!lhs.node_ || !rhs.node_) return false;
  return lhs.neutral_ == rhs.neutral_ && lhs.node_->value == rhs.node_->value;
}

// --- evaluation ---------------------------------------------------------------

namespace detail {

/// Values of a proper summand this close to its neutral element are read as
/// the neutral element itself, i.e. as lying on the summand's level curve.
inline constexpr double kCurveSnap = 1e-12;
inline constexpr double kFrameTol = 1e-12;

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

inline double eval_ordinal_t(const std::vector<IntervalSummand>& summands, double x, double y) {
  for (const auto& s : summands) {
    if (x >= s.lo && x < s.hi && y >= s.lo && y < s.hi) {
      double w = s.hi - s.lo;
      double z = s.op.eval((x - s.lo) / w, (y - s.lo) / w);
      return std::clamp(s.lo + w * z, s.lo, s.hi);
    }
  }
  return std::min(x, y);
}

inline double eval_ordinal_c(const std::vector<IntervalSummand>& summands, double x, double y) {
  for (const auto& s : summands) {
    if (x > s.lo && x <= s.hi && y > s.lo && y <= s.hi) {
      double w = s.hi - s.lo;
      double z = s.op.eval((x - s.lo) / w, (y - s.lo) / w);
      return std::clamp(s.lo + w * z, s.lo, s.hi);
    }
  }
  return std::max(x, y);
}

inline bool in_frame(const SummandSpec& s, double x) {
  return (x >= s.a && x < s.b) || (x > s.c && x <= s.d);
}

/// Pull-back of a frame point: the caller guarantees x is in [a,b) u (c,d].
inline double frame_inverse(const ScaleMap& m, double x) {
  if (x < m.b) return std::clamp(m.e * ((x - m.a) / (m.b - m.a)), 0.0, m.e);
  return std::clamp(m.e + (1.0 - m.e) * ((x - m.c) / (m.d - m.c)), m.e, 1.0);
}

inline double eval_scaled_summand(const SummandSpec& s, const ScaleMap& m, double x, double y) {
  const Operator& op = s.op;
  double z = op.eval(frame_inverse(m, x), frame_inverse(m, y));
  double ek = op.neutral();
  if (op.is_tnorm()) {
    // The neutral 1 is only reached at x = y = e of the whole sum.
    return z >= 1.0 ? m.b : std::clamp(m.a + (m.b - m.a) * z, m.a, m.b);
  }
  if (op.is_tconorm()) {
    return z <= 0.0 ? m.c : std::clamp(m.c + (m.d - m.c) * z, m.c, m.d);
  }
  if (std::abs(z - ek) <= kCurveSnap) return m.v;
  return m.forward(z);
}

inline double eval_ordinal_uninorm(const node::OrdinalSumUninorm& n, double x, double y) {
  const auto& sums = n.spec.summands;
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (in_frame(sums[k], x) && in_frame(sums[k], y)) return eval_scaled_summand(sums[k], n.maps[k], x, y);
  }
  for (const auto& s : sums) {
    bool x_inner = x >= s.b && x <= s.c;
    bool y_inner = y >= s.b && y <= s.c;
    bool x_outer = x >= s.a && x <= s.d && !x_inner;
    bool y_outer = y >= s.a && y <= s.d && !y_inner;
    if (y_inner && x_outer) return x;
    if (x_inner && y_outer) return y;
  }
  for (const auto& s : sums) {
    bool corner = (x == s.b && y == s.c) || (x == s.c && y == s.b);
    if (!corner) continue;
    for (const auto& bv : n.spec.boundary_values) {
      if (bv.b == s.b) return bv.value;
    }
  }
  // A finite, validated frame system assigns every point to one of the cases
  // above; the accumulation-point cases cannot occur.
  throw std::logic_error("ordinal sum of uninorms: point (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") matched no case");
}

struct EvalVisitor {
  double x;
  double y;
  double e;

  double operator()(const node::Min&) const { return std::min(x, y); }
  double operator()(const node::Max&) const { return std::max(x, y); }

  double operator()(const node::GeneratedTNorm& n) const {
    ExtendedReal sum = n.gen.forward(x) + n.gen.forward(y);
    return n.gen.pseudo_inverse(ExtendedReal::min(n.gen.forward(0.0), sum));
  }
  double operator()(const node::GeneratedTConorm& n) const {
    ExtendedReal sum = n.gen.forward(x) + n.gen.forward(y);
    return n.gen.pseudo_inverse(ExtendedReal::min(n.gen.forward(1.0), sum));
  }
  double operator()(const node::OrdinalSumTNorm& n) const { return eval_ordinal_t(n.summands, x, y); }
  double operator()(const node::OrdinalSumTConorm& n) const { return eval_ordinal_c(n.summands, x, y); }

  double operator()(const node::Representable& n) const {
    ExtendedReal gx = n.gen.forward(x);
    ExtendedReal gy = n.gen.forward(y);
    if ((gx.is_neg_inf() && gy.is_pos_inf()) || (gx.is_pos_inf() && gy.is_neg_inf())) {
      return n.mode == Annihilator::kConjunctive ? 0.0 : 1.0;
    }
    return n.gen.pseudo_inverse(gx + gy);
  }

  double operator()(const node::UComposite& n) const {
    if (x <= e && y <= e) return e * n.tnorm.eval(x / e, y / e);
    if (x >= e && y >= e) return e + (1.0 - e) * n.tconorm.eval((x - e) / (1.0 - e), (y - e) / (1.0 - e));
    return n.which == Composite::kMin ? std::min(x, y) : std::max(x, y);
  }

  double operator()(const node::Internal& n) const {
    double lo = std::min(x, y);
    double hi = std::max(x, y);
    if (lo == hi) return lo;
    return hi > n.boundary.range_at(lo).high ? hi : lo;
  }

  double operator()(const node::OrdinalSumUninorm& n) const { return eval_ordinal_uninorm(n, x, y); }

  double operator()(const node::Restricted& n) const {
    double w = n.hi - n.lo;
    double z = n.source.eval(n.lo + w * x, n.lo + w * y);
    return clamp01((z - n.lo) / w);
  }

  double operator()(const node::Transformed& n) const {
    return n.map.inverse_nearest(n.source.eval(n.map.forward(x), n.map.forward(y)));
  }
};

}  // namespace detail

inline double Operator::eval(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("operator argument outside [0,1]");
  }
  bool literal = std::holds_alternative<node::Min>(node_->value) || std::holds_alternative<node::Max>(node_->value);
  if (!literal) {
    if (x == neutral_) return y;
    if (y == neutral_) return x;
  }
  return std::visit(detail::EvalVisitor{x, y, neutral_}, node_->value);
}

inline OperatorKind Operator::kind() const {
  struct Kind {
    OperatorKind operator()(const node::Min&) const { return OperatorKind::kMin; }
    OperatorKind operator()(const node::Max&) const { return OperatorKind::kMax; }
    OperatorKind operator()(const node::GeneratedTNorm&) const { return OperatorKind::kGeneratedTNorm; }
    OperatorKind operator()(const node::GeneratedTConorm&) const { return OperatorKind::kGeneratedTConorm; }
    OperatorKind operator()(const node::OrdinalSumTNorm&) const { return OperatorKind::kOrdinalSumTNorm; }
    OperatorKind operator()(const node::OrdinalSumTConorm&) const { return OperatorKind::kOrdinalSumTConorm; }
    OperatorKind operator()(const node::Representable&) const { return OperatorKind::kRepresentable; }
    OperatorKind operator()(const node::UComposite& n) const {
      return n.which == Composite::kMin ? OperatorKind::kUMin : OperatorKind::kUMax;
    }
    OperatorKind operator()(const node::Internal&) const { return OperatorKind::kInternal; }
    OperatorKind operator()(const node::OrdinalSumUninorm&) const { return OperatorKind::kOrdinalSumUninorm; }
    OperatorKind operator()(const node::Restricted&) const { return OperatorKind::kRestricted; }
    OperatorKind operator()(const node::Transformed&) const { return OperatorKind::kTransformed; }
  };
  return std::visit(Kind{}, node_->value);
}

inline std::string Operator::describe() const {
  switch (kind()) {
    case OperatorKind::kMin: return "min";
    case OperatorKind::kMax: return "max";
    case OperatorKind::kGeneratedTNorm: return "generated t-norm";
    case OperatorKind::kGeneratedTConorm: return "generated t-conorm";
    case OperatorKind::kOrdinalSumTNorm: return "ordinal sum of t-norms";
    case OperatorKind::kOrdinalSumTConorm: return "ordinal sum of t-conorms";
    case OperatorKind::kRepresentable: return "representable uninorm";
    case OperatorKind::kUMin: return "U_min composite";
    case OperatorKind::kUMax: return "U_max composite";
    case OperatorKind::kInternal: return "internal uninorm";
    case OperatorKind::kOrdinalSumUninorm: return "ordinal sum of uninorms";
    case OperatorKind::kRestricted: return "restriction";
    case OperatorKind::kTransformed: return "extracted summand";
  }
  return "operator";
}

// --- constructors -------------------------------------------------------------

inline Operator min_tnorm() { return Operator::make({node::Min{}}, 1.0); }
inline Operator max_tconorm() { return Operator::make({node::Max{}}, 0.0); }

/// min or max carrying an arbitrary claimed neutral element; evaluation stays
/// literal, so the axiom checks can catch a wrong claim.
inline Operator min_with_neutral(double claimed) { return Operator::make({node::Min{}}, claimed); }
inline Operator max_with_neutral(double claimed) { return Operator::make({node::Max{}}, claimed); }

inline Operator tnorm_from_generator(const Generator& gen) {
  if (gen.kind() != GeneratorKind::kTNorm) throw ConstructionError("t-norm needs a t-norm generator");
  return Operator::make({node::GeneratedTNorm{gen}}, 1.0);
}

inline Operator tconorm_from_generator(const Generator& gen) {
  if (gen.kind() != GeneratorKind::kTConorm) throw ConstructionError("t-conorm needs a t-conorm generator");
  return Operator::make({node::GeneratedTConorm{gen}}, 0.0);
}

inline Operator product_tnorm() { return tnorm_from_generator(Generator::product()); }
inline Operator prob_sum_tconorm() { return tconorm_from_generator(Generator::prob_sum()); }

namespace detail {

inline void check_interval_summands(const std::vector<IntervalSummand>& summands, double neutral,
                                    const char* what) {
  std::vector<IntervalSummand> sorted = summands;
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) { return l.lo < r.lo; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& s = sorted[i];
    if (!(s.lo >= 0.0 && s.lo < s.hi && s.hi <= 1.0)) {
      throw ConstructionError(std::string(what) + ": summand interval must be a non-empty subinterval of [0,1]");
    }
    if (s.op.neutral() != neutral) {
      throw ConstructionError(std::string(what) + ": summand has the wrong neutral element");
    }
    if (i > 0 && s.lo < sorted[i - 1].hi) {
      throw ConstructionError(std::string(what) + ": summand intervals overlap");
    }
  }
}

}  // namespace detail

inline Operator ordinal_sum_tnorm(std::vector<IntervalSummand> summands) {
  detail::check_interval_summands(summands, 1.0, "ordinal sum of t-norms");
  return Operator::make({node::OrdinalSumTNorm{std::move(summands)}}, 1.0);
}

inline Operator ordinal_sum_tconorm(std::vector<IntervalSummand> summands) {
  detail::check_interval_summands(summands, 0.0, "ordinal sum of t-conorms");
  return Operator::make({node::OrdinalSumTConorm{std::move(summands)}}, 0.0);
}

inline Operator representable_uninorm(const Generator& gen, Annihilator mode) {
  if (gen.kind() != GeneratorKind::kUninorm) throw ConstructionError("representable uninorm needs a uninorm generator");
  return Operator::make({node::Representable{gen, mode}}, gen.neutral());
}

inline Operator u_min_max(const Operator& tnorm, const Operator& tconorm, double e, Composite which) {
  if (!tnorm.is_tnorm()) throw ConstructionError("composite: first operand must be a t-norm");
  if (!tconorm.is_tconorm()) throw ConstructionError("composite: second operand must be a t-conorm");
  if (!(e >= 0.0 && e <= 1.0)) throw ConstructionError("composite: neutral element outside [0,1]");
  return Operator::make({node::UComposite{tnorm, tconorm, which}}, e);
}

namespace detail {

inline void check_symmetric(const PseudoFunction& f) {
  for (const auto& p : f.points()) {
    for (double y : {p.y_low, p.y_high}) {
      if (!f.range_at(y).contains(p.x, 1e-9)) {
        throw ConstructionError("switch relation is not symmetric about the diagonal");
      }
    }
  }
}

inline Operator make_internal(const PseudoFunction& boundary, bool strict) {
  if (boundary.size() < 2 || boundary.points().front().x != 0.0 || boundary.points().back().x != 1.0) {
    throw ConstructionError("switch relation must be sampled on [0,1] including both ends");
  }
  if (!boundary.is_non_increasing()) throw ConstructionError("switch relation must be non-increasing");
  check_symmetric(boundary);
  auto e = boundary.fixed_point();
  if (!e) throw ConstructionError("switch relation does not meet the diagonal");
  return Operator::make({node::Internal{boundary, strict}}, *e);
}

}  // namespace detail

/// Internal uninorm switching from min to max across a continuous, strictly
/// decreasing, symmetric curve with boundary(0) = 1 and boundary(1) = 0.
inline Operator s_internal(const PseudoFunction& boundary) {
  if (!boundary.is_strictly_decreasing()) {
    throw ConstructionError("s-internal boundary must be strictly decreasing");
  }
  const auto& pts = boundary.points();
  if (pts.empty() || pts.front().y_low != 1.0 || pts.back().y_low != 0.0) {
    throw ConstructionError("s-internal boundary must run from (0,1) to (1,0)");
  }
  return detail::make_internal(boundary, true);
}

/// Internal uninorm for a general symmetric non-increasing switch relation,
/// vertical segments allowed (points on a segment evaluate to min).
inline Operator internal_uninorm(const PseudoFunction& relation) { return detail::make_internal(relation, false); }

inline Operator restricted(const Operator& source, double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) throw ConstructionError("restriction needs 0 <= lo < hi <= 1");
  double e = source.neutral();
  double neutral = e <= lo ? 0.0 : (e >= hi ? 1.0 : (e - lo) / (hi - lo));
  return Operator::make({node::Restricted{source, lo, hi}}, neutral);
}

inline Operator transformed(const Operator& source, const ScaleMap& map) {
  return Operator::make({node::Transformed{source, map}}, map.e);
}

// --- ordinal sums of uninorms ---------------------------------------------------

namespace detail {

inline bool near(double lhs, double rhs) { return std::abs(lhs - rhs) <= kFrameTol; }

/// Shortest text that reads back as the same double.
inline std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Index of the summand nested directly inside summand k: it starts where k's
/// lower interval ends and its upper interval ends where k's begins.
inline std::optional<std::size_t> successor(const OrdinalSumUninormSpec& spec, std::size_t k) {
  const auto& sk = spec.summands[k];
  std::optional<std::size_t> loose;
  for (std::size_t i = 0; i < spec.summands.size(); ++i) {
    if (i == k) continue;
    const auto& si = spec.summands[i];
    if (!near(si.a, sk.b)) continue;
    if (near(si.d, sk.c)) return i;
    if (!loose) loose = i;
  }
  return loose;
}

inline std::optional<double> resolve_pivot(const OrdinalSumUninormSpec& spec, std::size_t k) {
  const auto& s = spec.summands[k];
  if (s.v_override) return *s.v_override;
  for (const auto& bv : spec.boundary_values) {
    if (near(bv.b, s.b)) return bv.value;
  }
  if (near(s.b, s.c)) return s.b;
  auto next = successor(spec, k);
  if (!next) return std::nullopt;
  return spec.summands[*next].op.is_disjunctive() ? s.c : s.b;
}

struct Side {
  double lo;
  double hi;
  std::size_t index;
};

inline void check_cover(std::vector<Side> sides, double from, double to, const std::string& label,
                        ValidationReport& report) {
  std::sort(sides.begin(), sides.end(), [](const Side& l, const Side& r) { return l.lo < r.lo; });
  if (sides.empty()) {
    report.violations.push_back({"coverage_" + label, label + " side [" + fmt(from) + "," + fmt(to) +
                                                          "] is not covered by any summand", {}});
    return;
  }
  double reach = from;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const auto& s = sides[i];
    if (i > 0 && s.lo < sides[i - 1].hi - kFrameTol) {
      report.violations.push_back({"disjoint_" + label,
                                   label + " intervals of summands " + std::to_string(sides[i - 1].index + 1) +
                                       " and " + std::to_string(s.index + 1) + " overlap",
                                   {sides[i - 1].index, s.index}});
    }
    if (s.lo > reach + kFrameTol) {
      report.violations.push_back({"coverage_" + label,
                                   label + " side has an uncovered gap (" + fmt(reach) + "," + fmt(s.lo) + ")",
                                   {s.index}});
    }
    reach = std::max(reach, s.hi);
  }
  if (reach < to - kFrameTol) {
    report.violations.push_back(
        {"coverage_" + label, label + " side has an uncovered gap (" + fmt(reach) + "," + fmt(to) + ")", {}});
  }
}

}  // namespace detail

/// Checks a frame system against the ordinal-sum construction rules. Returns
/// every violated condition with the summands (0-based) that witness it.
inline ValidationReport validate_spec(const OrdinalSumUninormSpec& spec) {
  using detail::fmt;
  using detail::kFrameTol;
  ValidationReport report;
  const double e = spec.e;
  if (!(e > 0.0 && e < 1.0)) {
    report.violations.push_back({"neutral_range", "neutral element " + fmt(e) + " must lie in (0,1)", {}});
  }
  if (spec.summands.empty()) {
    report.violations.push_back({"no_summands", "ordinal sum needs at least one summand", {}});
    return report;
  }

  std::vector<detail::Side> lower;
  std::vector<detail::Side> upper;
  bool frames_ok = true;
  for (std::size_t k = 0; k < spec.summands.size(); ++k) {
    const auto& s = spec.summands[k];
    std::string tag = "summand " + std::to_string(k + 1);
    bool ordered = s.a >= -kFrameTol && s.a <= s.b && s.b <= e + kFrameTol && e - kFrameTol <= s.c && s.c <= s.d &&
                   s.d <= 1.0 + kFrameTol;
    if (!ordered) {
      frames_ok = false;
      report.violations.push_back(
          {"frame_order", tag + ": need 0 <= a <= b <= e <= c <= d <= 1, got (" + fmt(s.a) + ", " + fmt(s.b) +
                              ", " + fmt(s.c) + ", " + fmt(s.d) + ")",
           {k}});
    }
    if (s.lower_empty() && s.upper_empty()) {
      report.violations.push_back({"empty_summand", tag + ": both (a,b) and (c,d) are empty", {k}});
    }
    if (!s.lower_empty()) lower.push_back({s.a, s.b, k});
    if (!s.upper_empty()) upper.push_back({s.c, s.d, k});

    const Operator& op = s.op;
    if (!s.lower_empty() && !s.upper_empty() && !op.is_proper()) {
      report.violations.push_back({"properness", tag + ": both sides non-empty, so the summand must be a proper uninorm", {k}});
    } else if (!s.lower_empty() && s.upper_empty() && !(op.is_proper() || op.is_tnorm())) {
      report.violations.push_back({"properness", tag + ": only (a,b) non-empty, so the summand must be a t-norm or a proper uninorm", {k}});
    } else if (s.lower_empty() && !s.upper_empty() && !(op.is_proper() || op.is_tconorm())) {
      report.violations.push_back({"properness", tag + ": only (c,d) non-empty, so the summand must be a t-conorm or a proper uninorm", {k}});
    }
    if (s.v_override && !(*s.v_override >= s.b - kFrameTol && *s.v_override <= s.c + kFrameTol)) {
      report.violations.push_back({"pivot_range", tag + ": v must lie in [b,c]", {k}});
    }
  }
  detail::check_cover(lower, 0.0, e, "lower", report);
  detail::check_cover(upper, e, 1.0, "upper", report);

  // b_k <= a_i exactly when the whole upper part of i sits below c_k.
  for (std::size_t k = 0; k < spec.summands.size(); ++k) {
    for (std::size_t i = k + 1; i < spec.summands.size(); ++i) {
      const auto& sk = spec.summands[k];
      const auto& si = spec.summands[i];
      bool ki = (sk.b <= si.a + kFrameTol) == (sk.c + kFrameTol >= std::max(si.c, si.d));
      bool ik = (si.b <= sk.a + kFrameTol) == (si.c + kFrameTol >= std::max(sk.c, sk.d));
      if (!ki || !ik) {
        report.violations.push_back({"anti_comonotone",
                                     "summands " + std::to_string(k + 1) + " and " + std::to_string(i + 1) +
                                         " are not anti-comonotone",
                                     {k, i}});
      }
    }
  }

  if (frames_ok && report.violations.empty()) {
    for (std::size_t k = 0; k < spec.summands.size(); ++k) {
      if (!detail::resolve_pivot(spec, k)) {
        report.violations.push_back({"unresolved_pivot",
                                     "summand " + std::to_string(k + 1) + ": no successor starts at boundary b = " +
                                         fmt(spec.summands[k].b) + " and no explicit v is given",
                                     {k}});
      }
    }
  }
  return report;
}

inline Operator ordinal_sum_uninorm(OrdinalSumUninormSpec spec) {
  auto report = validate_spec(spec);
  if (!report.ok()) {
    std::vector<ConstructionError::Item> items;
    std::string what = "invalid ordinal sum:";
    for (const auto& v : report.violations) {
      items.push_back({v.code, v.message, v.summands});
      what += " " + v.message + ";";
    }
    throw ConstructionError(what, std::move(items));
  }
  node::OrdinalSumUninorm n;
  n.maps.reserve(spec.summands.size());
  for (std::size_t k = 0; k < spec.summands.size(); ++k) {
    const auto& s = spec.summands[k];
    n.maps.push_back(ScaleMap{s.a, s.b, s.c, s.d, *detail::resolve_pivot(spec, k), s.op.neutral()});
  }
  double e = spec.e;
  n.spec = std::move(spec);
  return Operator::make({std::move(n)}, e);
}

/// Resolved pivot v_k of every summand, in summand order.
inline std::vector<double> resolved_pivots(const Operator& op) {
  const auto* n = std::get_if<node::OrdinalSumUninorm>(&op.node().value);
  if (!n) throw std::invalid_argument("resolved_pivots: not an ordinal sum of uninorms");
  std::vector<double> out;
  for (const auto& m : n->maps) out.push_back(m.v);
  return out;
}

}  // namespace uninorm
