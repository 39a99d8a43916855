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

// Shared fixtures for the test suites: the operator catalog, a seeded
// generator of complete ordinal sums, and closed-form reference formulas
// written independently of the library's generator code.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uninorm/operator.hpp"

namespace fixtures {

using namespace uninorm;

// --- closed forms ---------------------------------------------------------------

inline double logratio_closed(double x, double y, bool disjunctive) {
  if ((x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0)) return disjunctive ? 1.0 : 0.0;
  double num = x * y;
  return num / (num + (1.0 - x) * (1.0 - y));
}

// ln(2x) below 1/2, -ln(2-2x) above: products of 2x and of 2(1-x) combine.
inline double split_log_closed(double x, double y, bool disjunctive) {
  if ((x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0)) return disjunctive ? 1.0 : 0.0;
  if (x > y) std::swap(x, y);
  if (y <= 0.5) return 2.0 * x * y;
  if (x > 0.5) return 1.0 - 2.0 * (1.0 - x) * (1.0 - y);
  if (x <= 1.0 - y) return x / (2.0 * (1.0 - y));
  return 1.0 - (1.0 - y) / (2.0 * x);
}

// --- catalog --------------------------------------------------------------------

inline Operator worked_example() {
  auto u = representable_uninorm(Generator::split_log(), Annihilator::kDisjunctive);
  OrdinalSumUninormSpec s;
  s.e = 0.5;
  s.summands.push_back({0.0, 0.25, 0.75, 1.0, u, {}});
  s.summands.push_back({0.25, 0.5, 0.5, 0.75, u, {}});
  return ordinal_sum_uninorm(s);
}

// Independent evaluation of the worked example straight from its frames.
inline double worked_example_oracle(double x, double y) {
  auto f = [](double a, double b, double c, double d, double t) {  // [0,1/2) -> [a,b), (1/2,1] -> (c,d]
    return t < 0.5 ? a + (b - a) * 2.0 * t : c + (d - c) * (2.0 * t - 1.0);
  };
  auto finv = [](double a, double b, double c, double d, double s) {
    return s < b ? 0.5 * (s - a) / (b - a) : 0.5 + 0.5 * (s - c) / (d - c);
  };
  auto in = [](double a, double b, double c, double d, double s) { return (s >= a && s < b) || (s > c && s <= d); };
  if (x == 0.5) return y;
  if (y == 0.5) return x;
  struct F {
    double a, b, c, d, v;
  };
  for (F fr : {F{0.0, 0.25, 0.75, 1.0, 0.75}, F{0.25, 0.5, 0.5, 0.75, 0.5}}) {
    if (in(fr.a, fr.b, fr.c, fr.d, x) && in(fr.a, fr.b, fr.c, fr.d, y)) {
      double z = split_log_closed(finv(fr.a, fr.b, fr.c, fr.d, x), finv(fr.a, fr.b, fr.c, fr.d, y), true);
      if (std::abs(z - 0.5) <= 1e-12) return fr.v;
      return f(fr.a, fr.b, fr.c, fr.d, z);
    }
  }
  // Mixed points: the outer-frame coordinate wins.
  bool x_outer = x < 0.25 || x > 0.75;
  return x_outer ? x : y;
}

inline Operator anti_diagonal_s_internal() {
  return s_internal(PseudoFunction::from_curve({{0.0, 1.0}, {1.0, 0.0}}));
}

struct RandomSum {
  OrdinalSumUninormSpec spec;
  Operator op;
};

inline std::vector<double> sorted_cuts(std::mt19937_64& rng, double lo, double hi, int pieces, double min_gap) {
  std::uniform_real_distribution<double> pick(lo, hi);
  for (;;) {
    std::vector<double> cuts{lo, hi};
    for (int i = 1; i < pieces; ++i) cuts.push_back(pick(rng));
    std::sort(cuts.begin(), cuts.end());
    bool ok = true;
    for (std::size_t i = 1; i < cuts.size(); ++i) ok = ok && cuts[i] - cuts[i - 1] >= min_gap;
    if (ok) return cuts;
  }
}

inline Operator random_representable(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> knot(0.25, 0.75);
  Generator base = coin(rng) ? Generator::log_ratio() : Generator::split_log();
  Generator gen = base;
  switch (family(rng)) {
    case 0: gen = Generator::log_ratio(); break;
    case 1: gen = Generator::split_log(); break;
    default: {
      double kx = knot(rng);
      double ky = knot(rng);
      gen = Generator::composed(base, kx, ky);
    }
  }
  return representable_uninorm(gen, coin(rng) ? Annihilator::kDisjunctive : Annihilator::kConjunctive);
}

/// A complete ordinal sum of K nested representable summands (K drawn from
/// [1, max_k] unless fixed_k > 0) with a random neutral element.
inline RandomSum random_ordinal_sum(std::uint64_t seed, int max_k = 4, int fixed_k = 0) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, max_k);
  std::uniform_real_distribution<double> neutral(0.35, 0.65);
  int k_count = fixed_k > 0 ? fixed_k : count(rng);
  double e = neutral(rng);
  auto p = sorted_cuts(rng, 0.0, e, k_count, 0.03);
  auto q = sorted_cuts(rng, e, 1.0, k_count, 0.03);
  RandomSum out;
  out.spec.e = e;
  for (int k = 0; k < k_count; ++k) {
    out.spec.summands.push_back({p[k], p[k + 1], q[k_count - k - 1], q[k_count - k], random_representable(rng), {}});
  }
  out.op = ordinal_sum_uninorm(out.spec);
  return out;
}

struct Named {
  std::string name;
  Operator op;
  double assoc_tol;  // 1e-9 for closed forms, 1e-6 for composed sums
};

inline std::vector<Named> catalog() {
  return {
      {"logratio", representable_uninorm(Generator::log_ratio(), Annihilator::kConjunctive), 1e-9},
      {"split_log", representable_uninorm(Generator::split_log(), Annihilator::kDisjunctive), 1e-9},
      {"umin", u_min_max(product_tnorm(), prob_sum_tconorm(), 0.5, Composite::kMin), 1e-9},
      {"umax", u_min_max(product_tnorm(), prob_sum_tconorm(), 0.5, Composite::kMax), 1e-9},
      {"s_internal", anti_diagonal_s_internal(), 1e-9},
      {"worked_example", worked_example(), 1e-6},
      {"random_sum_7", random_ordinal_sum(7, 2, 2).op, 1e-6},
      {"random_sum_11", random_ordinal_sum(11, 2, 2).op, 1e-6},
  };
}

inline std::vector<double> grid(int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(static_cast<double>(i) / (n - 1));
  return g;
}

}  // namespace fixtures
