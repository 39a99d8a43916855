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
#include <compare>
#include <limits>
#include <string>

#include "uninorm/errors.hpp"

namespace uninorm {

/// A real number or one of the two symbolic infinities.
///
/// Addition is total except for -inf + +inf, which throws: the only place
/// such a clash is meaningful (the corners of a representable uninorm) is
/// resolved by the caller before adding.
class ExtendedReal {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  constexpr ExtendedReal() = default;

  /// Non-finite doubles are folded into the symbols; NaN is rejected.
  ExtendedReal(double value) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(value)) throw DomainError("ExtendedReal: NaN");
    if (std::isinf(value)) {
      kind_ = value > 0 ? Kind::kPosInf : Kind::kNegInf;
    } else {
      value_ = value;
    }
  }

  static constexpr ExtendedReal neg_inf() { return ExtendedReal(Kind::kNegInf); }
  static constexpr ExtendedReal pos_inf() { return ExtendedReal(Kind::kPosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  double value() const {
    if (!is_finite()) throw DomainError("ExtendedReal: value() of an infinity");
    return value_;
  }

  /// IEEE view, infinities included.
  double to_double() const {
    switch (kind_) {
      case Kind::kNegInf: return -std::numeric_limits<double>::infinity();
      case Kind::kPosInf: return std::numeric_limits<double>::infinity();
      case Kind::kFinite: break;
    }
    return value_;
  }

  ExtendedReal operator-() const {
    switch (kind_) {
      case Kind::kNegInf: return pos_inf();
      case Kind::kPosInf: return neg_inf();
      case Kind::kFinite: break;
    }
    return ExtendedReal(-value_);
  }

  friend ExtendedReal operator+(const ExtendedReal& lhs, const ExtendedReal& rhs) {
    if ((lhs.is_neg_inf() && rhs.is_pos_inf()) || (lhs.is_pos_inf() && rhs.is_neg_inf())) {
      throw DomainError("ExtendedReal: -inf + +inf is undefined");
    }
    if (!lhs.is_finite()) return lhs;
    if (!rhs.is_finite()) return rhs;
    double sum = lhs.value_ + rhs.value_;
    // Overflow of two finite values is a numeric artefact, not a symbol.
    if (std::isinf(sum)) throw DomainError("ExtendedReal: finite overflow");
    return ExtendedReal(sum);
  }

  friend bool operator==(const ExtendedReal& lhs, const ExtendedReal& rhs) {
    return lhs.kind_ == rhs.kind_ && (!lhs.is_finite() || lhs.value_ == rhs.value_);
  }

  friend std::partial_ordering operator<=>(const ExtendedReal& lhs, const ExtendedReal& rhs) {
    return lhs.to_double() <=> rhs.to_double();
  }

  static ExtendedReal min(const ExtendedReal& lhs, const ExtendedReal& rhs) {
    return (lhs <= rhs) ? lhs : rhs;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::kNegInf: return "-inf";
      case Kind::kPosInf: return "+inf";
      case Kind::kFinite: break;
    }
    return std::to_string(value_);
  }

 private:
  explicit constexpr ExtendedReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

}  // namespace uninorm
