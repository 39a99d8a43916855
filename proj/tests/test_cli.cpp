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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"
#include "uninorm/cli.hpp"

namespace {

using namespace uninorm;
namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string sample(const std::string& name) { return std::string(UNINORM_SAMPLES_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

void expect_error_lines(const std::string& err) {
  ASSERT_FALSE(err.empty());
  for (const auto& l : lines(err)) EXPECT_EQ(l.rfind("E: ", 0), 0u) << l;
}

TEST(Format, SeventeenSignificantDigits) {
  EXPECT_EQ(cli::num(0.1), "0.10000000000000001");
  EXPECT_EQ(cli::num(0.5), "0.5");
  EXPECT_EQ(cli::num(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(std::strtod(cli::num(0.7).c_str(), nullptr), 0.7);
}

TEST(Eval, WorkedExampleValues) {
  auto a = run({"eval", sample("worked_example.op"), "0.375", "0.625"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "0.5\n");
  auto b = run({"eval", sample("worked_example.op"), "0.125", "0.875"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "0.75\n");
  EXPECT_TRUE(b.err.empty());
}

TEST(Eval, OutOfDomainIsAValidationError) {
  auto r = run({"eval", sample("worked_example.op"), "1.5", "0.5"});
  EXPECT_EQ(r.code, 1);
  expect_error_lines(r.err);
}

TEST(Table, CsvIsRowMajorAndMatchesTheOracle) {
  auto r = run({"table", sample("worked_example.op"), "--n", "9"});
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 82u);
  EXPECT_EQ(ls[0], "x,y,value");
  auto g = fixtures::grid(9);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      double x, y, v;
      ASSERT_EQ(std::sscanf(ls[1 + 9 * i + j].c_str(), "%lf,%lf,%lf", &x, &y, &v), 3);
      EXPECT_EQ(x, g[i]);
      EXPECT_EQ(y, g[j]);
      EXPECT_NEAR(v, fixtures::worked_example_oracle(x, y), 1e-12) << x << "," << y;
    }
  }
}

TEST(Table, JsonEnvelope) {
  auto r = run({"table", sample("representable.op"), "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["op"], "uninorm representable { gen = logratio; mode = conjunctive }");
  ASSERT_EQ(j["results"].size(), 25u);
  const auto& cell = j["results"][7];  // (0.25, 0.5)
  EXPECT_EQ(cell["x"].get<double>(), 0.25);
  EXPECT_EQ(cell["y"].get<double>(), 0.5);
  EXPECT_NEAR(cell["value"].get<double>(), fixtures::logratio_closed(0.25, 0.5, false), 1e-15);
  EXPECT_EQ(j["results"][4]["value"].get<double>(), 0.0);  // conjunctive corner (0, 1)
}

TEST(Table, OutputIsDeterministic) {
  EXPECT_EQ(run({"table", sample("umin.op"), "--n", "13"}).out, run({"table", sample("umin.op"), "--n", "13"}).out);
}

TEST(Check, PassingAndFailingOperators) {
  auto ok = run({"check", sample("worked_example.op"), "--grid", "21", "--tol", "1e-9"});
  EXPECT_EQ(ok.code, 0);
  auto ls = lines(ok.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "axiom,max_violation,witness_x,witness_y,witness_z,pass");
  for (std::size_t k = 1; k < ls.size(); ++k) EXPECT_NE(ls[k].find(",true"), std::string::npos) << ls[k];

  auto bad = run({"check", sample("invalid_pivot.op")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("associativity,0.5,"), std::string::npos);
  expect_error_lines(bad.err);
  EXPECT_NE(bad.err.find("associativity"), std::string::npos);
}

TEST(Idempotents, WorkedExampleHasFivePoints) {
  auto r = run({"idempotents", sample("worked_example.op")});
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  const double expected[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int k = 0; k < 5; ++k) {
    double lo, hi;
    ASSERT_EQ(std::sscanf(ls[k + 1].c_str(), "%lf,%lf", &lo, &hi), 2);
    EXPECT_NEAR(lo, expected[k], 1e-9);
    EXPECT_NEAR(hi, expected[k], 1e-9);
  }
  auto s = run({"idempotents", sample("sinternal.op")});
  EXPECT_EQ(lines(s.out).size(), 2u);  // one interval: all of [0, 1]
}

TEST(Curve, WorkedExampleLiesOnTheAntiDiagonal) {
  auto r = run({"curve", sample("worked_example.op"), "--resolution", "128"});
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "x,y_low,y_high");
  ASSERT_GT(ls.size(), 20u);
  double first = 1.0, last = 0.0;
  for (std::size_t k = 1; k < ls.size(); ++k) {
    double x, lo, hi;
    ASSERT_EQ(std::sscanf(ls[k].c_str(), "%lf,%lf,%lf", &x, &lo, &hi), 3);
    EXPECT_LE(lo, 1.0 - x + 1e-9);
    EXPECT_GE(hi, 1.0 - x - 1e-9);
    first = std::min(first, x);
    last = std::max(last, x);
  }
  EXPECT_LT(first, 0.02);
  EXPECT_GT(last, 0.98);
}

TEST(Classify, FlagsAsJson) {
  auto j = nlohmann::json::parse(run({"classify", sample("sinternal.op")}).out);
  EXPECT_TRUE(j["results"]["s_internal"].get<bool>());
  EXPECT_TRUE(j["results"]["in_N"].get<bool>());
  auto m = nlohmann::json::parse(run({"classify", sample("umax.op")}).out);
  EXPECT_FALSE(m["results"]["in_N"].get<bool>());
  EXPECT_TRUE(m["results"]["disjunctive"].get<bool>());
}

TEST(Decompose, CompositesAreRefused) {
  for (const char* name : {"umax.op", "umin.op"}) {
    auto r = run({"decompose", sample(name)});
    EXPECT_EQ(r.code, 3) << name;
    EXPECT_TRUE(r.out.empty());
    expect_error_lines(r.err);
    EXPECT_NE(r.err.find("E: not_in_N:"), std::string::npos) << r.err;
  }
}

TEST(Decompose, WritesJsonToFile) {
  auto path = fs::temp_directory_path() / "uninorm_cli_decompose.json";
  auto r = run({"decompose", sample("worked_example.op"), "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto j = nlohmann::json::parse(slurp(path));
  fs::remove(path);
  ASSERT_EQ(j["results"]["frames"].size(), 2u);
  const auto& outer = j["results"]["frames"][0];
  EXPECT_NEAR(outer["b"].get<double>(), 0.25, 1e-4);
  EXPECT_NEAR(outer["c"].get<double>(), 0.75, 1e-4);
  EXPECT_EQ(outer["v"].get<double>(), 0.75);
  EXPECT_EQ(outer["class"], "REPRESENTABLE");
  EXPECT_LE(j["results"]["recomposition_error"].get<double>(), 1e-6);
}

TEST(Golden, TableAndDecomposeAreByteIdentical) {
  auto table = run({"table", sample("worked_example.op"), "--n", "9"});
  EXPECT_EQ(table.out, slurp(fs::path(UNINORM_GOLDEN_DIR) / "table_worked_example_n9.csv"));
  auto dec = run({"decompose", sample("worked_example.op")});
  EXPECT_EQ(dec.out, slurp(fs::path(UNINORM_GOLDEN_DIR) / "decompose_worked_example.json"));
}

TEST(Golden, DecomposeGoldenAgreesWithTheKnownStructure) {
  auto j = nlohmann::json::parse(slurp(fs::path(UNINORM_GOLDEN_DIR) / "decompose_worked_example.json"));
  EXPECT_EQ(j["results"]["e"].get<double>(), 0.5);
  const double frames[2][5] = {{0.0, 0.25, 0.75, 1.0, 0.75}, {0.25, 0.5, 0.5, 0.75, 0.5}};
  for (int k = 0; k < 2; ++k) {
    const auto& f = j["results"]["frames"][k];
    EXPECT_NEAR(f["a"].get<double>(), frames[k][0], 1e-12);
    EXPECT_NEAR(f["b"].get<double>(), frames[k][1], 1e-12);
    EXPECT_NEAR(f["c"].get<double>(), frames[k][2], 1e-12);
    EXPECT_NEAR(f["d"].get<double>(), frames[k][3], 1e-12);
    EXPECT_EQ(f["v"].get<double>(), frames[k][4]);
    EXPECT_EQ(f["class"], "REPRESENTABLE");
  }
}

// Every documented exit path is reached by some sample document.
TEST(ExitCodes, SampleCorpusCoversEveryPath) {
  EXPECT_EQ(run({"check", sample("worked_example.op")}).code, 0);
  EXPECT_EQ(run({"check", sample("invalid_syntax.op")}).code, 1);
  EXPECT_EQ(run({"check", sample("invalid_anticomonotone.op")}).code, 1);
  EXPECT_EQ(run({"check", sample("invalid_pivot.op")}).code, 2);
  EXPECT_EQ(run({"decompose", sample("umax.op")}).code, 3);
  EXPECT_EQ(run({"decompose", sample("invalid_pivot.op")}).code, 3);
  EXPECT_EQ(run({"decompose", sample("internal_vertical.op")}).code, 3);
  EXPECT_EQ(run({"decompose", sample("tnorm_ordinal.op")}).code, 3);
}

TEST(ExitCodes, DiagnosticsCarryPositions) {
  auto syn = run({"eval", sample("invalid_syntax.op"), "0.5", "0.5"});
  EXPECT_EQ(syn.code, 1);
  expect_error_lines(syn.err);
  EXPECT_NE(syn.err.find("invalid_syntax.op:16:"), std::string::npos) << syn.err;
  auto anti = run({"eval", sample("invalid_anticomonotone.op"), "0.5", "0.5"});
  expect_error_lines(anti.err);
  EXPECT_NE(anti.err.find("not anti-comonotone (see "), std::string::npos) << anti.err;
}

TEST(ExitCodes, ArgumentErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"eval", sample("worked_example.op"), "0.5"},
           {"eval", sample("worked_example.op"), "x", "0.5"},
           {"table", sample("worked_example.op"), "--format", "xml"},
           {"table", sample("worked_example.op"), "--n", "1"},
           {"eval", sample("does_not_exist.op"), "0.5", "0.5"},
       }) {
    auto r = run(args);
    EXPECT_EQ(r.code, 1);
    expect_error_lines(r.err);
  }
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("decompose"), std::string::npos);
}

}  // namespace
