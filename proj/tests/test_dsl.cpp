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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "uninorm/dsl.hpp"

namespace {

using namespace uninorm;
namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

dsl::DslError parse_error(const std::string& text) {
  try {
    dsl::parse_spec(text);
  } catch (const dsl::DslError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return dsl::DslError(dsl::DslError::Kind::kSyntax, {});
}

const char* kWorked = R"(# nested frames
uninorm ordinal {
  e = 0.5
  summand { a = 0; b = 0.25; c = 0.75; d = 1
            op = uninorm representable { gen = split_log; mode = disjunctive } }
  summand { a = 0.25; b = 0.5; c = 0.5; d = 0.75
            op = uninorm representable { gen = split_log; mode = disjunctive } }
}
)";

TEST(ParseSpec, Representable) {
  auto doc = dsl::parse_spec("uninorm representable { gen = logratio; mode = conjunctive }");
  EXPECT_EQ(doc.op, representable_uninorm(Generator::log_ratio(), Annihilator::kConjunctive));
  EXPECT_EQ(doc.span.line, 1u);
  EXPECT_EQ(doc.span.column, 1u);
}

TEST(ParseSpec, WorkedExampleDocument) {
  auto doc = dsl::parse_spec(kWorked);
  EXPECT_EQ(doc.op, fixtures::worked_example());
  EXPECT_EQ(doc.op.eval(0.375, 0.625), 0.5);
  ASSERT_EQ(doc.summand_spans.size(), 2u);
  EXPECT_EQ(doc.summand_spans[0].line, 4u);
  EXPECT_EQ(doc.summand_spans[1].line, 6u);
}

TEST(ParseSpec, AntiComonotoneReportsBothSummands) {
  auto e = parse_error(
      "uninorm ordinal { e=0.5\n"
      " summand { a=0 b=0.3 c=0.5 d=1 op = uninorm representable { gen = logratio mode = conjunctive } }\n"
      "  summand { a=0.3 b=0.5 c=0.6 d=0.5 op = uninorm representable { gen = logratio mode = conjunctive } } }");
  EXPECT_EQ(e.kind(), dsl::DslError::Kind::kSemantic);
  bool found = false;
  for (const auto& d : e.diagnostics()) {
    if (d.code != "anti_comonotone") continue;
    found = true;
    ASSERT_EQ(d.spans.size(), 2u);
    EXPECT_EQ(d.spans[0].line, 2u);
    EXPECT_EQ(d.spans[0].column, 2u);
    EXPECT_EQ(d.spans[1].line, 3u);
    EXPECT_EQ(d.spans[1].column, 3u);
  }
  EXPECT_TRUE(found) << e.what();
}

TEST(ParseSpec, OtherKinds) {
  auto umin = dsl::parse_spec(
      "uninorm umin { e = 0.5; tnorm = tnorm generated { gen = product }; tconorm = tconorm generated { gen = probsum } }");
  EXPECT_EQ(umin.op, u_min_max(product_tnorm(), prob_sum_tconorm(), 0.5, Composite::kMin));
  auto umax = dsl::parse_spec("uninorm umax { e = 0.25; tnorm = tnorm min {}; tconorm = tconorm max {} }");
  EXPECT_EQ(umax.op, u_min_max(min_tnorm(), max_tconorm(), 0.25, Composite::kMax));
  auto si = dsl::parse_spec("uninorm sinternal { curve = [(0,1),(0.5,0.5),(1,0)] }");
  EXPECT_EQ(si.op.eval(0.2, 0.7), 0.2);
  EXPECT_EQ(si.op.eval(0.4, 0.7), 0.7);
  auto shifted = dsl::parse_spec("uninorm representable { gen = affine(0.3, 0.5, logratio); mode = disjunctive }");
  EXPECT_DOUBLE_EQ(shifted.op.neutral(), 0.3);
  auto tn = dsl::parse_spec("tnorm ordinal { summand { a = 0.2, b = 0.6, op = tnorm generated { gen = lukasiewicz } } }");
  EXPECT_TRUE(tn.op.is_tnorm());
  EXPECT_EQ(tn.op.eval(0.1, 0.5), 0.1);
}

TEST(ParseSpec, CornerAndPivotEntries) {
  auto doc = dsl::parse_spec(
      "uninorm ordinal { e = 0.5\n"
      "  summand { a = 0; b = 0.5; c = 0.5; d = 1; op = uninorm representable { gen = logratio; mode = conjunctive } }\n"
      "  corner b = 0.5 value = 0.5 }");
  EXPECT_EQ(doc.op.eval(0.5, 0.5), 0.5);
  auto again = dsl::parse_spec(dsl::print(doc.op));
  EXPECT_EQ(again.op, doc.op);
}

TEST(ParseSpec, NumbersAndComments) {
  auto doc = dsl::parse_spec("# leading\nuninorm umax { e = 2.5e-1 # trailing\n tnorm = tnorm min {}; tconorm = tconorm max {} }");
  EXPECT_EQ(doc.op.neutral(), 0.25);
}

TEST(ParseErrors, SyntaxCarriesPositionAndExpectation) {
  auto e = parse_error("uninorm representable { gen = logratio mode = }");
  EXPECT_EQ(e.kind(), dsl::DslError::Kind::kSyntax);
  ASSERT_EQ(e.diagnostics().size(), 1u);
  EXPECT_EQ(e.diagnostics()[0].spans[0].line, 1u);
  EXPECT_EQ(e.diagnostics()[0].spans[0].column, 47u);
  EXPECT_NE(e.diagnostics()[0].message.find("expected number"), std::string::npos);

  EXPECT_EQ(parse_error("uninorm representable {\n gen = logratio\n").diagnostics()[0].spans[0].line, 3u);
  EXPECT_EQ(parse_error("").kind(), dsl::DslError::Kind::kSyntax);
  EXPECT_EQ(parse_error("uninorm umax { e = 0.5 } extra").kind(), dsl::DslError::Kind::kSyntax);
  EXPECT_EQ(parse_error("uninorm sinternal { curve = [(0,1) (1,0)] }").kind(), dsl::DslError::Kind::kSyntax);
  EXPECT_EQ(parse_error("uninorm umax { e = 0.5 $ }").kind(), dsl::DslError::Kind::kSyntax);
}

TEST(ParseErrors, SemanticFieldChecks) {
  struct Case {
    const char* text;
    const char* needle;
  } cases[] = {
      {"uninorm representable { gen = logratio }", "missing field 'mode'"},
      {"uninorm representable { gen = logratio; mode = conjunctive; gen = product }", "duplicate field 'gen'"},
      {"uninorm representable { gen = logratio; mode = conjunctive; e = 0.5 }", "unknown field 'e'"},
      {"uninorm representable { gen = logratio; mode = sideways }", "mode must be"},
      {"uninorm representable { gen = nope; mode = conjunctive }", "unknown generator 'nope'"},
      {"uninorm representable { gen = product; mode = conjunctive }", "generator 'product' is a"},
      {"uninorm blob { }", "unknown uninorm kind 'blob'"},
      {"uninorm umax { e = 0.5; tnorm = tconorm max {}; tconorm = tconorm max {} }", "expects a tnorm"},
      {"uninorm umax { e = low; tnorm = tnorm min {}; tconorm = tconorm max {} }", "expects a number"},
  };
  for (const auto& c : cases) {
    auto e = parse_error(c.text);
    EXPECT_EQ(e.kind(), dsl::DslError::Kind::kSemantic) << c.text;
    EXPECT_NE(std::string(e.what()).find(c.needle), std::string::npos) << c.text << " -> " << e.what();
  }
}

TEST(ParseErrors, ConstructionFailuresPointAtTheBlock) {
  // Curves must be strictly decreasing; e must be inside (0,1).
  auto flat = parse_error("uninorm sinternal {\n  curve = [(0,1),(0.4,0.5),(0.6,0.5),(1,0)] }");
  EXPECT_EQ(flat.diagnostics()[0].code, "construction");
  EXPECT_EQ(flat.diagnostics()[0].spans[0].line, 1u);
  auto e_out = parse_error("uninorm umin { e = 1.5; tnorm = tnorm min {}; tconorm = tconorm max {} }");
  EXPECT_EQ(e_out.kind(), dsl::DslError::Kind::kSemantic);
}

TEST(Print, CanonicalForms) {
  auto op = representable_uninorm(Generator::log_ratio(), Annihilator::kConjunctive);
  EXPECT_EQ(dsl::print(op, true), "uninorm representable { gen = logratio; mode = conjunctive }");
  EXPECT_EQ(dsl::print(op), "uninorm representable {\n  gen = logratio\n  mode = conjunctive\n}\n");
  EXPECT_THROW(dsl::print(restricted(op, 0.0, 0.5)), std::invalid_argument);
}

// parse . print . parse is a fixed point on every sample that parses.
TEST(RoundTrip, SampleCorpus) {
  int parsed = 0;
  for (const auto& entry : fs::directory_iterator(UNINORM_SAMPLES_DIR)) {
    if (entry.path().extension() != ".op") continue;
    dsl::OperatorDocument doc;
    try {
      doc = dsl::parse_spec(slurp(entry.path()));
    } catch (const dsl::DslError&) {
      EXPECT_EQ(entry.path().filename().string().rfind("invalid_", 0), 0u) << entry.path();
      continue;
    }
    ++parsed;
    for (bool compact : {false, true}) {
      auto text = dsl::print(doc.op, compact);
      auto again = dsl::parse_spec(text);
      EXPECT_EQ(again.op, doc.op) << entry.path();
      EXPECT_EQ(dsl::print(again.op, compact), text) << entry.path();
    }
  }
  EXPECT_GE(parsed, 8);
}

TEST(RoundTrip, RandomOrdinalSums) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto sum = fixtures::random_ordinal_sum(seed);
    auto text = dsl::print(sum.op);
    auto again = dsl::parse_spec(text);
    ASSERT_EQ(again.op, sum.op) << text;
    EXPECT_EQ(dsl::print(again.op), text);
    // Shortest round-trip number formatting keeps values bit-exact.
    for (double x : {0.013, 0.37, 0.5, 0.81}) EXPECT_EQ(again.op.eval(x, 1.0 - x), sum.op.eval(x, 1.0 - x));
  }
}

}  // namespace
