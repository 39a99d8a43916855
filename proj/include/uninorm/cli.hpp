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

// Command-line front end. run_command does all the work so tests can drive it
// in-process; tools/uninorm_cli.cpp only forwards argv.

#pragma once

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uninorm/analysis.hpp"
#include "uninorm/decomposition.hpp"
#include "uninorm/dsl.hpp"

namespace uninorm::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kCheckFailed = 2, kRefused = 3 };

/// Fixed 17-significant-digit rendering used by every numeric output.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Minimal JSON tree; numbers go through num() so output is byte-stable.
struct Json {
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;
  std::variant<std::nullptr_t, bool, double, long long, std::string, Array, Object> v;

  Json() : v(nullptr) {}
  Json(bool b) : v(b) {}
  Json(double d) : v(d) {}
  Json(int i) : v(static_cast<long long>(i)) {}
  Json(std::size_t i) : v(static_cast<long long>(i)) {}
  Json(const char* s) : v(std::string(s)) {}
  Json(std::string s) : v(std::move(s)) {}
  Json(Array a) : v(std::move(a)) {}
  Json(Object o) : v(std::move(o)) {}

  std::string dump() const {
    std::string out;
    write(out, 0);
    out += "\n";
    return out;
  }

 private:
  static void quote(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out += buf;
          } else {
            out += ch;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out, int depth) const {
    std::string pad(2 * (depth + 1), ' ');
    std::string end_pad(2 * depth, ' ');
    if (std::holds_alternative<std::nullptr_t>(v)) {
      out += "null";
    } else if (const auto* b = std::get_if<bool>(&v)) {
      out += *b ? "true" : "false";
    } else if (const auto* d = std::get_if<double>(&v)) {
      out += std::isfinite(*d) ? num(*d) : "null";
    } else if (const auto* i = std::get_if<long long>(&v)) {
      out += std::to_string(*i);
    } else if (const auto* s = std::get_if<std::string>(&v)) {
      quote(out, *s);
    } else if (const auto* a = std::get_if<Array>(&v)) {
      if (a->empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < a->size(); ++k) {
        out += pad;
        (*a)[k].write(out, depth + 1);
        out += k + 1 < a->size() ? ",\n" : "\n";
      }
      out += end_pad + "]";
    } else if (const auto* o = std::get_if<Object>(&v)) {
      if (o->empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t k = 0; k < o->size(); ++k) {
        out += pad;
        quote(out, (*o)[k].first);
        out += ": ";
        (*o)[k].second.write(out, depth + 1);
        out += k + 1 < o->size() ? ",\n" : "\n";
      }
      out += end_pad + "}";
    }
  }
};

namespace detail {

struct Failure {
  int code;
};

inline dsl::OperatorDocument load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "E: cannot read " << path << "\n";
    throw Failure{kInvalidInput};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return dsl::parse_spec(buf.str());
  } catch (const dsl::DslError& e) {
    for (const auto& d : e.diagnostics()) {
      err << "E: " << path;
      if (!d.spans.empty()) err << ":" << d.spans.front().line << ":" << d.spans.front().column;
      err << ": " << d.message;
      for (std::size_t k = 1; k < d.spans.size(); ++k) err << " (see " << d.spans[k].line << ":" << d.spans[k].column << ")";
      err << "\n";
    }
    throw Failure{kInvalidInput};
  }
}

inline std::string op_text(const Operator& op) {
  try {
    return dsl::print(op, true);
  } catch (const std::invalid_argument&) {
    return op.describe();
  }
}

inline Json envelope(const Operator& op, Json results) {
  return Json(Json::Object{{"op", op_text(op)}, {"results", std::move(results)}});
}

inline Json flags_json(const ClassFlags& f) {
  return Json(Json::Object{{"conjunctive", f.conjunctive},
                           {"disjunctive", f.disjunctive},
                           {"in_N", f.in_N},
                           {"in_U", f.in_U},
                           {"internal", f.internal},
                           {"s_internal", f.s_internal},
                           {"N_min", f.n_min},
                           {"N_max", f.n_max}});
}

inline Json decomposition_json(const DecompositionResult& r) {
  Json::Array frames;
  for (std::size_t k = 0; k < r.frames.size(); ++k) {
    const auto& f = r.frames[k];
    frames.push_back(Json(Json::Object{{"a", f.a},
                                       {"b", f.b},
                                       {"c", f.c},
                                       {"d", f.d},
                                       {"v", r.pivots[k]},
                                       {"neutral", normalized_neutral(f)},
                                       {"class", to_string(r.classes[k])},
                                       {"pairing_residual", f.pairing_residual}}));
  }
  return Json(Json::Object{{"e", r.e}, {"frames", std::move(frames)}, {"recomposition_error", r.recomposition_error}});
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err` as lines starting with "E:".
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate, check and decompose uninorms described in the operator format", "uninorm"};
  app.require_subcommand(1);

  std::string file;
  double x = 0.0, y = 0.0;
  auto* eval = app.add_subcommand("eval", "Evaluate U(x, y)");
  eval->add_option("file", file, "Operator file")->required();
  eval->add_option("x", x)->required();
  eval->add_option("y", y)->required();

  int n = 11;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Evaluate on an n x n grid");
  table->add_option("file", file, "Operator file")->required();
  table->add_option("--n", n, "Grid points per axis")->check(CLI::Range(2, 10001));
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  int check_grid = 41;
  double tol = 1e-9;
  auto* check = app.add_subcommand("check", "Check the uninorm axioms on a grid");
  check->add_option("file", file, "Operator file")->required();
  check->add_option("--grid", check_grid, "Grid points per axis")->check(CLI::Range(3, 1001));
  check->add_option("--tol", tol, "Tolerance")->check(CLI::NonNegativeNumber);

  int resolution = 4096;
  auto* idem = app.add_subcommand("idempotents", "List the idempotent set as closed intervals");
  idem->add_option("file", file, "Operator file")->required();
  idem->add_option("--resolution", resolution, "Scan resolution")->check(CLI::Range(64, 1 << 20));
  idem->add_option("--tol", tol, "Tolerance")->check(CLI::NonNegativeNumber);

  int curve_resolution = 256;
  double threshold = kDefaultJumpThreshold;
  auto* curve = app.add_subcommand("curve", "Print the discontinuity locus");
  curve->add_option("file", file, "Operator file")->required();
  curve->add_option("--resolution", curve_resolution, "Rows scanned")->check(CLI::Range(64, 1 << 16));
  curve->add_option("--threshold", threshold, "Smallest jump reported")->check(CLI::PositiveNumber);

  std::string out_path;
  auto* dec = app.add_subcommand("decompose", "Recover the ordinal-sum structure");
  dec->add_option("file", file, "Operator file")->required();
  dec->add_option("--out", out_path, "Write the JSON result here instead of stdout");

  int classify_resolution = 128;
  auto* cls = app.add_subcommand("classify", "Report class membership flags");
  cls->add_option("file", file, "Operator file")->required();
  cls->add_option("--resolution", classify_resolution, "Scan resolution")->check(CLI::Range(8, 4096));
  cls->add_option("--tol", tol, "Tolerance")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "E: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    auto doc = detail::load(file, err);
    const Operator& op = doc.op;

    if (*eval) {
      out << num(op.eval(x, y)) << "\n";
      return kOk;
    }
    if (*table) {
      auto g = uninorm::detail::uniform_grid(n);
      if (format == "csv") {
        out << "x,y,value\n";
        for (double gx : g) {
          for (double gy : g) out << num(gx) << "," << num(gy) << "," << num(op.eval(gx, gy)) << "\n";
        }
      } else {
        Json::Array rows;
        for (double gx : g) {
          for (double gy : g) rows.push_back(Json(Json::Object{{"x", gx}, {"y", gy}, {"value", op.eval(gx, gy)}}));
        }
        out << detail::envelope(op, Json(std::move(rows))).dump();
      }
      return kOk;
    }
    if (*check) {
      auto r = axiom_report(op, check_grid, tol);
      out << "axiom,max_violation,witness_x,witness_y,witness_z,pass\n";
      std::pair<const char*, const AxiomEntry*> rows[] = {{"commutativity", &r.commutativity},
                                                          {"monotonicity", &r.monotonicity},
                                                          {"associativity", &r.associativity},
                                                          {"neutrality", &r.neutrality},
                                                          {"annihilator", &r.annihilator}};
      for (auto [name, a] : rows) {
        out << name << "," << num(a->max_violation) << "," << num(a->witness[0]) << "," << num(a->witness[1]) << ","
            << num(a->witness[2]) << "," << (a->pass ? "true" : "false") << "\n";
        if (!a->pass) err << "E: " << name << " fails: violation " << num(a->max_violation) << "\n";
      }
      return r.all_pass() ? kOk : kCheckFailed;
    }
    if (*idem) {
      auto r = idempotent_set(op, resolution, tol);
      out << "lower,upper\n";
      for (const auto& i : r.intervals) out << num(i.lower) << "," << num(i.upper) << "\n";
      return kOk;
    }
    if (*curve) {
      auto loc = jump_locus(op, curve_resolution, threshold);
      out << "x,y_low,y_high\n";
      for (const auto& p : loc.points()) out << num(p.x) << "," << num(p.y_low) << "," << num(p.y_high) << "\n";
      return kOk;
    }
    if (*dec) {
      auto r = decompose(op);
      if (r.refused()) {
        for (const auto& d : r.diagnostics) err << "E: " << d.code << ": " << d.message << "\n";
        return kRefused;
      }
      std::string text = detail::envelope(op, detail::decomposition_json(r)).dump();
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << text)) {
          err << "E: cannot write " << out_path << "\n";
          return kInvalidInput;
        }
      }
      return kOk;
    }
    if (*cls) {
      out << detail::envelope(op, detail::flags_json(classify(op, classify_resolution, tol))).dump();
      return kOk;
    }
  } catch (const detail::Failure& f) {
    return f.code;
  } catch (const DomainError& e) {
    err << "E: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace uninorm::cli
