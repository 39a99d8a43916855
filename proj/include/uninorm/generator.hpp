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

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "uninorm/errors.hpp"
#include "uninorm/extended_real.hpp"

namespace uninorm {

enum class GeneratorFamily {
  kProductT,       // t(x) = -ln x
  kLukasiewiczT,   // t(x) = 1 - x
  kProbSumC,       // c(x) = -ln(1 - x)
  kLukasiewiczC,   // c(x) = x
  kLogRatioU,      // f(x) = ln(x / (1 - x))
  kSplitLogU,      // f(x) = ln(2x) on [0, 1/2], -ln(2 - 2x) on (1/2, 1]
  kAffineComposed  // base generator after a piecewise-linear bijection of [0,1]
};

enum class GeneratorKind { kTNorm, kTConorm, kUninorm };

/// A named additive generator together with its clamped pseudo-inverse.
///
/// Generators are small immutable values. The composed family shares its
/// base through a shared_ptr so copies stay cheap.
class Generator {
 public:
  static Generator product() { return Generator(GeneratorFamily::kProductT, GeneratorKind::kTNorm); }
  static Generator lukasiewicz_tnorm() {
    return Generator(GeneratorFamily::kLukasiewiczT, GeneratorKind::kTNorm);
  }
  static Generator prob_sum() { return Generator(GeneratorFamily::kProbSumC, GeneratorKind::kTConorm); }
  static Generator lukasiewicz_tconorm() {
    return Generator(GeneratorFamily::kLukasiewiczC, GeneratorKind::kTConorm);
  }
  static Generator log_ratio() { return Generator(GeneratorFamily::kLogRatioU, GeneratorKind::kUninorm); }
  static Generator split_log() { return Generator(GeneratorFamily::kSplitLogU, GeneratorKind::kUninorm); }

  /// `base` evaluated after the increasing bijection sending [0,knot_x] onto
  /// [0,knot_y] and [knot_x,1] onto [knot_y,1], both linearly.
  static Generator composed(const Generator& base, double knot_x, double knot_y) {
    if (!(knot_x > 0.0 && knot_x < 1.0 && knot_y > 0.0 && knot_y < 1.0)) {
      throw ConstructionError("composed generator: knot must lie in (0,1)^2");
    }
    Generator gen(GeneratorFamily::kAffineComposed, base.kind_);
    gen.base_ = std::make_shared<const Generator>(base);
    gen.knot_x_ = knot_x;
    gen.knot_y_ = knot_y;
    return gen;
  }

  GeneratorFamily family() const { return family_; }
  GeneratorKind kind() const { return kind_; }
  double knot_x() const { return knot_x_; }
  double knot_y() const { return knot_y_; }
  const Generator& base() const {
    if (!base_) throw std::logic_error("generator has no base");
    return *base_;
  }

  ExtendedReal forward(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("generator argument outside [0,1]");
    switch (family_) {
      case GeneratorFamily::kProductT:
        if (x == 0.0) return ExtendedReal::pos_inf();
        return -std::log(x);
      case GeneratorFamily::kLukasiewiczT:
        return 1.0 - x;
      case GeneratorFamily::kProbSumC:
        if (x == 1.0) return ExtendedReal::pos_inf();
        return -std::log1p(-x);
      case GeneratorFamily::kLukasiewiczC:
        return x;
      case GeneratorFamily::kLogRatioU:
        if (x == 0.0) return ExtendedReal::neg_inf();
        if (x == 1.0) return ExtendedReal::pos_inf();
        return std::log(x) - std::log1p(-x);
      case GeneratorFamily::kSplitLogU:
        if (x == 0.0) return ExtendedReal::neg_inf();
        if (x == 1.0) return ExtendedReal::pos_inf();
        if (x <= 0.5) return std::log(2.0 * x);
        return -std::log(2.0 - 2.0 * x);
      case GeneratorFamily::kAffineComposed:
        return base_->forward(inner(x));
    }
    throw std::logic_error("unknown generator family");
  }

  /// Inverse of forward, clamped to [0,1] outside the generator's range.
  double pseudo_inverse(const ExtendedReal& s) const {
    switch (family_) {
      case GeneratorFamily::kProductT:
        if (s.is_pos_inf()) return 0.0;
        if (s <= ExtendedReal(0.0)) return 1.0;
        return std::exp(-s.value());
      case GeneratorFamily::kLukasiewiczT:
        if (s.is_pos_inf()) return 0.0;
        if (s.is_neg_inf()) return 1.0;
        return clamp01(1.0 - s.value());
      case GeneratorFamily::kProbSumC:
        if (s.is_pos_inf()) return 1.0;
        if (s <= ExtendedReal(0.0)) return 0.0;
        return -std::expm1(-s.value());
      case GeneratorFamily::kLukasiewiczC:
        if (s.is_pos_inf()) return 1.0;
        if (s.is_neg_inf()) return 0.0;
        return clamp01(s.value());
      case GeneratorFamily::kLogRatioU: {
        if (s.is_pos_inf()) return 1.0;
        if (s.is_neg_inf()) return 0.0;
        double v = s.value();
        if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
        double ev = std::exp(v);
        return ev / (1.0 + ev);
      }
      case GeneratorFamily::kSplitLogU: {
        if (s.is_pos_inf()) return 1.0;
        if (s.is_neg_inf()) return 0.0;
        double v = s.value();
        if (v <= 0.0) return 0.5 * std::exp(v);
        return 1.0 - 0.5 * std::exp(-v);
      }
      case GeneratorFamily::kAffineComposed:
        return inner_inverse(base_->pseudo_inverse(s));
    }
    throw std::logic_error("unknown generator family");
  }

  /// The point mapped to 0: 1 for t-norm generators, 0 for t-conorm ones.
  double neutral() const {
    switch (kind_) {
      case GeneratorKind::kTNorm: return 1.0;
      case GeneratorKind::kTConorm: return 0.0;
      case GeneratorKind::kUninorm: break;
    }
    return pseudo_inverse(ExtendedReal(0.0));
  }

  std::string name() const {
    switch (family_) {
      case GeneratorFamily::kProductT: return "product";
      case GeneratorFamily::kLukasiewiczT: return "lukasiewicz";
      case GeneratorFamily::kProbSumC: return "probsum";
      case GeneratorFamily::kLukasiewiczC: return "bounded_sum";
      case GeneratorFamily::kLogRatioU: return "logratio";
      case GeneratorFamily::kSplitLogU: return "split_log";
      case GeneratorFamily::kAffineComposed: return "affine";
    }
    return "?";
  }

  friend bool operator==(const Generator& lhs, const Generator& rhs) {
    if (lhs.family_ != rhs.family_ || lhs.kind_ != rhs.kind_) return false;
    if (lhs.family_ != GeneratorFamily::kAffineComposed) return true;
    return lhs.knot_x_ == rhs.knot_x_ && lhs.knot_y_ == rhs.knot_y_ && *lhs.base_ == *rhs.base_;
  }

 private:
  Generator(GeneratorFamily family, GeneratorKind kind) : family_(family), kind_(kind) {}

  static double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

  double inner(double x) const {
    if (x <= knot_x_) return knot_y_ * (x / knot_x_);
    return knot_y_ + (1.0 - knot_y_) * ((x - knot_x_) / (1.0 - knot_x_));
  }

  double inner_inverse(double y) const {
    if (y <= knot_y_) return clamp01(knot_x_ * (y / knot_y_));
    return clamp01(knot_x_ + (1.0 - knot_x_) * ((y - knot_y_) / (1.0 - knot_y_)));
  }

  GeneratorFamily family_;
  GeneratorKind kind_;
  std::shared_ptr<const Generator> base_;
  double knot_x_ = 0.5;
  double knot_y_ = 0.5;
};

/// Free-function spellings used throughout the analysis code.
inline ExtendedReal gen_eval(const Generator& gen, double x) { return gen.forward(x); }
inline double gen_pseudo_inverse(const Generator& gen, const ExtendedReal& s) {
  return gen.pseudo_inverse(s);
}

}  // namespace uninorm
