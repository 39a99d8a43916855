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

// Text format for operators.
//
//   document  := op_def
//   op_def    := category kind "{" entry* "}"
//   category  := "uninorm" | "tnorm" | "tconorm"
//   entry     := name "=" value | "summand" "{" entry* "}" | "corner" name "=" value name "=" value
//   value     := number | word | word "(" value ("," value)* ")" | "[" tuple ("," tuple)* "]" | op_def
//   tuple     := "(" number ("," number)* ")"
//
// Entries may be separated by ";" or ",". "#" starts a comment.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "uninorm/operator.hpp"

namespace uninorm::dsl {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t end_line = 1;
  std::size_t end_column = 1;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct DslDiagnostic {
  std::string code;
  std::string message;
  std::vector<SourceSpan> spans;
};

class DslError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kSemantic };

  DslError(Kind kind, std::vector<DslDiagnostic> diagnostics)
      : std::runtime_error(render(diagnostics)), kind_(kind), diagnostics_(std::move(diagnostics)) {}

  Kind kind() const { return kind_; }
  const std::vector<DslDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  static std::string render(const std::vector<DslDiagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) {
      if (!out.empty()) out += "\n";
      if (!d.spans.empty()) {
        out += std::to_string(d.spans.front().line) + ":" + std::to_string(d.spans.front().column) + ": ";
      }
      out += d.message;
      for (std::size_t i = 1; i < d.spans.size(); ++i) {
        out += " (see " + std::to_string(d.spans[i].line) + ":" + std::to_string(d.spans[i].column) + ")";
      }
    }
    return out;
  }

  Kind kind_;
  std::vector<DslDiagnostic> diagnostics_;
};

struct OperatorDocument {
  std::string source;
  Operator op;
  SourceSpan span;                         // the top-level definition
  std::vector<SourceSpan> summand_spans;   // top-level ordinal sums only
};

// --- lexer ---------------------------------------------------------------------------

namespace detail {

enum class Tok { kWord, kNumber, kLBrace, kRBrace, kLParen, kRParen, kLBracket, kRBracket, kEquals, kComma, kSemi, kEnd };

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::kWord: return "name";
    case Tok::kNumber: return "number";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kEquals: return "'='";
    case Tok::kComma: return "','";
    case Tok::kSemi: return "';'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  double number = 0.0;
  SourceSpan span;
};

[[noreturn]] inline void syntax_error(const SourceSpan& at, const std::string& message) {
  throw DslError(DslError::Kind::kSyntax, {{"syntax", message, {at}}});
}

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t;
    t.span = {line, col, line, col};
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance(1);
      t.type = Tok::kWord;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '.') {
      std::size_t j = i;
      if (src[j] == '-' || src[j] == '+') ++j;
      while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) ++j;
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '-' || src[k] == '+')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          j = k;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
      }
      const char* first = src.data() + i + (src[i] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, src.data() + j, t.number);
      if (ec != std::errc() || ptr != src.data() + j) {
        syntax_error(t.span, "malformed number '" + src.substr(i, std::max<std::size_t>(j - i, 1)) + "'");
      }
      advance(j - i);
      t.type = Tok::kNumber;
    } else {
      switch (ch) {
        case '{': t.type = Tok::kLBrace; break;
        case '}': t.type = Tok::kRBrace; break;
        case '(': t.type = Tok::kLParen; break;
        case ')': t.type = Tok::kRParen; break;
        case '[': t.type = Tok::kLBracket; break;
        case ']': t.type = Tok::kRBracket; break;
        case '=': t.type = Tok::kEquals; break;
        case ',': t.type = Tok::kComma; break;
        case ';': t.type = Tok::kSemi; break;
        default: syntax_error(t.span, std::string("unexpected character '") + ch + "'");
      }
      advance(1);
    }
    t.text = src.substr(start, i - start);
    t.span.end_line = line;
    t.span.end_column = col;
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Tok::kEnd;
  end.span = {line, col, line, col};
  out.push_back(end);
  return out;
}

// --- syntax tree ---------------------------------------------------------------------------

struct Value;
struct Entry;

struct Block {
  std::string category;  // empty for summand blocks
  std::string kind;
  SourceSpan span;
  std::vector<Entry> entries;
};

struct Call {
  std::string name;
  std::vector<Value> args;
};

using Tuple = std::vector<double>;

struct Value {
  SourceSpan span;
  std::variant<double, std::string, Call, std::vector<Tuple>, std::shared_ptr<Block>> v;
};

struct Entry {
  std::string key;
  SourceSpan span;
  Value value;
};

inline SourceSpan join(const SourceSpan& from, const SourceSpan& to) {
  return {from.line, from.column, to.end_line, to.end_column};
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  Block document() {
    Block b = op_def();
    expect(Tok::kEnd);
    return b;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::initializer_list<std::string> expected) const {
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
    const Token& t = peek();
    std::string found = t.type == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    syntax_error(t.span, "expected " + list + "; found " + found);
  }

  const Token& expect(Tok type) {
    if (peek().type != type) fail({tok_name(type)});
    return take();
  }

  static bool is_category(const std::string& w) { return w == "uninorm" || w == "tnorm" || w == "tconorm"; }

  Block op_def() {
    if (peek().type != Tok::kWord || !is_category(peek().text)) fail({"'uninorm'", "'tnorm'", "'tconorm'"});
    const Token& cat = take();
    Block b;
    b.category = cat.text;
    if (peek().type != Tok::kWord) fail({"operator kind"});
    b.kind = take().text;
    body(b);
    b.span = join(cat.span, toks_[pos_ - 1].span);
    return b;
  }

  void body(Block& b) {
    expect(Tok::kLBrace);
    for (;;) {
      while (peek().type == Tok::kSemi || peek().type == Tok::kComma) take();
      if (peek().type == Tok::kRBrace) break;
      if (peek().type != Tok::kWord) fail({"field name", "'}'"});
      b.entries.push_back(entry());
    }
    take();
  }

  Entry entry() {
    const Token& key = take();
    Entry e;
    e.key = key.text;
    if (key.text == "summand" && peek().type == Tok::kLBrace) {
      auto inner = std::make_shared<Block>();
      inner->kind = "summand";
      body(*inner);
      inner->span = join(key.span, toks_[pos_ - 1].span);
      e.span = inner->span;
      e.value = {inner->span, inner};
      return e;
    }
    if (key.text == "corner") {
      auto inner = std::make_shared<Block>();
      inner->kind = "corner";
      for (int k = 0; k < 2; ++k) {
        while (peek().type == Tok::kComma) take();
        if (peek().type != Tok::kWord) fail({"'b'", "'value'"});
        const Token& name = take();
        expect(Tok::kEquals);
        Value v = value();
        inner->entries.push_back({name.text, join(name.span, v.span), v});
      }
      inner->span = join(key.span, toks_[pos_ - 1].span);
      e.span = inner->span;
      e.value = {inner->span, inner};
      return e;
    }
    expect(Tok::kEquals);
    e.value = value();
    e.span = join(key.span, e.value.span);
    return e;
  }

  Value value() {
    const Token& t = peek();
    if (t.type == Tok::kNumber) {
      take();
      return {t.span, t.number};
    }
    if (t.type == Tok::kLBracket) return list();
    if (t.type == Tok::kWord) {
      if (is_category(t.text)) {
        auto b = std::make_shared<Block>(op_def());
        return {b->span, b};
      }
      take();
      if (peek().type != Tok::kLParen) return {t.span, t.text};
      take();
      Call c{t.text, {}};
      c.args.push_back(value());
      while (peek().type == Tok::kComma) {
        take();
        c.args.push_back(value());
      }
      expect(Tok::kRParen);
      return {join(t.span, toks_[pos_ - 1].span), c};
    }
    fail({"number", "name", "'['", "operator definition"});
  }

  Value list() {
    const Token& open = take();
    std::vector<Tuple> items;
    while (peek().type != Tok::kRBracket) {
      if (!items.empty()) expect(Tok::kComma);
      expect(Tok::kLParen);
      Tuple tup;
      tup.push_back(expect(Tok::kNumber).number);
      while (peek().type == Tok::kComma) {
        take();
        tup.push_back(expect(Tok::kNumber).number);
      }
      expect(Tok::kRParen);
      items.push_back(std::move(tup));
    }
    take();
    return {join(open.span, toks_[pos_ - 1].span), items};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// --- interpretation ---------------------------------------------------------------------------

[[noreturn]] inline void semantic_error(const SourceSpan& at, const std::string& message,
                                        const std::string& code = "semantic") {
  throw DslError(DslError::Kind::kSemantic, {{code, message, {at}}});
}

/// Field access for one block with unknown/duplicate/missing checks.
class Fields {
 public:
  Fields(const Block& b, std::set<std::string> allowed, std::set<std::string> repeatable = {}) : block_(b) {
    std::set<std::string> seen;
    for (const auto& e : b.entries) {
      if (!allowed.count(e.key)) {
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
        semantic_error(e.span, "unknown field '" + e.key + "' in " + what() + " (allowed: " + list + ")");
      }
      if (!repeatable.count(e.key) && !seen.insert(e.key).second) {
        semantic_error(e.span, "duplicate field '" + e.key + "' in " + what());
      }
    }
  }

  std::string what() const {
    return block_.category.empty() ? block_.kind : block_.category + " " + block_.kind;
  }

  const Entry* find(const std::string& key) const {
    for (const auto& e : block_.entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  }

  const Entry& need(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) semantic_error(block_.span, "missing field '" + key + "' in " + what());
    return *e;
  }

  double number(const std::string& key) const { return as_number(need(key)); }

  std::optional<double> opt_number(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    return as_number(*e);
  }

  std::string word(const std::string& key) const {
    const Entry& e = need(key);
    const auto* w = std::get_if<std::string>(&e.value.v);
    if (!w) semantic_error(e.value.span, "field '" + key + "' expects a name");
    return *w;
  }

  static double as_number(const Entry& e) {
    const auto* d = std::get_if<double>(&e.value.v);
    if (!d) semantic_error(e.value.span, "field '" + e.key + "' expects a number");
    return *d;
  }

  const Block& block() const { return block_; }

 private:
  const Block& block_;
};

inline Generator generator(const Value& v, GeneratorKind want) {
  auto check = [&](const Generator& g) {
    if (g.kind() != want) {
      const char* names[] = {"t-norm", "t-conorm", "uninorm"};
      semantic_error(v.span, "generator '" + g.name() + "' is a " + names[static_cast<int>(g.kind())] +
                                 " generator; a " + names[static_cast<int>(want)] + " generator is needed here");
    }
    return g;
  };
  if (const auto* w = std::get_if<std::string>(&v.v)) {
    static const std::map<std::string, Generator (*)()> table{
        {"product", &Generator::product},   {"lukasiewicz", &Generator::lukasiewicz_tnorm},
        {"probsum", &Generator::prob_sum},  {"bounded_sum", &Generator::lukasiewicz_tconorm},
        {"logratio", &Generator::log_ratio}, {"split_log", &Generator::split_log}};
    auto it = table.find(*w);
    if (it == table.end()) semantic_error(v.span, "unknown generator '" + *w + "'");
    return check(it->second());
  }
  if (const auto* c = std::get_if<Call>(&v.v)) {
    if (c->name != "affine") semantic_error(v.span, "unknown generator '" + c->name + "'");
    if (c->args.size() != 3) semantic_error(v.span, "affine(knot_x, knot_y, base) takes three arguments");
    const auto* kx = std::get_if<double>(&c->args[0].v);
    const auto* ky = std::get_if<double>(&c->args[1].v);
    if (!kx || !ky) semantic_error(v.span, "affine knots must be numbers");
    Generator base = generator(c->args[2], want);
    try {
      return Generator::composed(base, *kx, *ky);
    } catch (const ConstructionError& err) {
      semantic_error(v.span, err.what());
    }
  }
  semantic_error(v.span, "expected a generator");
}

inline Operator build(const Block& b, std::vector<SourceSpan>* summand_spans);
inline Operator build_any(const Entry& e);

inline Operator nested(const Entry& e, const char* category) {
  const auto* b = std::get_if<std::shared_ptr<Block>>(&e.value.v);
  if (!b || (*b)->category.empty()) semantic_error(e.value.span, "field '" + e.key + "' expects an operator definition");
  if ((*b)->category != category) {
    semantic_error(e.value.span, "field '" + e.key + "' expects a " + category + ", got a " + (*b)->category);
  }
  return build(**b, nullptr);
}

inline Annihilator mode_of(const Fields& f) {
  std::string m = f.word("mode");
  if (m == "conjunctive") return Annihilator::kConjunctive;
  if (m == "disjunctive") return Annihilator::kDisjunctive;
  semantic_error(f.need("mode").value.span, "mode must be 'conjunctive' or 'disjunctive'");
}

inline const std::vector<Tuple>& tuples(const Entry& e, std::size_t arity) {
  const auto* list = std::get_if<std::vector<Tuple>>(&e.value.v);
  if (!list) semantic_error(e.value.span, "field '" + e.key + "' expects a point list");
  for (const auto& t : *list) {
    if (t.size() != arity) {
      semantic_error(e.value.span, "field '" + e.key + "' expects tuples of " + std::to_string(arity) + " numbers");
    }
  }
  return *list;
}

inline Operator ordinal_uninorm(const Block& b, std::vector<SourceSpan>* summand_spans) {
  Fields f(b, {"e", "summand", "corner"}, {"summand", "corner"});
  OrdinalSumUninormSpec spec;
  spec.e = f.number("e");
  std::vector<SourceSpan> spans;
  for (const auto& e : b.entries) {
    if (e.key == "e") continue;
    const auto* ptr = std::get_if<std::shared_ptr<Block>>(&e.value.v);
    if (!ptr) semantic_error(e.value.span, "'" + e.key + "' must be a block");
    const auto& inner = **ptr;
    if (e.key == "summand") {
      Fields s(inner, {"a", "b", "c", "d", "op", "v"});
      spec.summands.push_back(
          {s.number("a"), s.number("b"), s.number("c"), s.number("d"), build_any(s.need("op")), s.opt_number("v")});
      spans.push_back(e.span);
    } else if (e.key == "corner") {
      Fields c(inner, {"b", "value"});
      spec.boundary_values.push_back({c.number("b"), c.number("value")});
    }
  }
  auto report = validate_spec(spec);
  if (!report.ok()) {
    std::vector<DslDiagnostic> ds;
    for (const auto& v : report.violations) {
      DslDiagnostic d{v.code, v.message, {}};
      for (auto k : v.summands) d.spans.push_back(spans[k]);
      if (d.spans.empty()) d.spans.push_back(b.span);
      ds.push_back(std::move(d));
    }
    throw DslError(DslError::Kind::kSemantic, std::move(ds));
  }
  if (summand_spans) *summand_spans = spans;
  return ordinal_sum_uninorm(std::move(spec));
}

inline Operator build_any(const Entry& e) {
  const auto* b = std::get_if<std::shared_ptr<Block>>(&e.value.v);
  if (!b || (*b)->category.empty()) semantic_error(e.value.span, "field '" + e.key + "' expects an operator definition");
  return build(**b, nullptr);
}

inline Operator interval_sum(const Block& b, bool tnorm) {
  Fields f(b, {"summand"}, {"summand"});
  std::vector<IntervalSummand> parts;
  const char* lo = tnorm ? "a" : "c";
  const char* hi = tnorm ? "b" : "d";
  for (const auto& e : b.entries) {
    const auto* ptr = std::get_if<std::shared_ptr<Block>>(&e.value.v);
    if (!ptr) semantic_error(e.value.span, "'summand' must be a block");
    Fields s(**ptr, {lo, hi, "op"});
    parts.push_back({s.number(lo), s.number(hi), nested(s.need("op"), tnorm ? "tnorm" : "tconorm")});
  }
  return tnorm ? ordinal_sum_tnorm(std::move(parts)) : ordinal_sum_tconorm(std::move(parts));
}

inline Operator build(const Block& b, std::vector<SourceSpan>* summand_spans) {
  auto unknown_kind = [&](const char* kinds) {
    semantic_error(b.span, "unknown " + b.category + " kind '" + b.kind + "' (expected " + kinds + ")");
  };
  try {
    if (b.category == "tnorm") {
      if (b.kind == "generated") return tnorm_from_generator(generator(Fields(b, {"gen"}).need("gen").value, GeneratorKind::kTNorm));
      if (b.kind == "min") {
        Fields(b, {});
        return min_tnorm();
      }
      if (b.kind == "ordinal") return interval_sum(b, true);
      unknown_kind("generated, min, ordinal");
    }
    if (b.category == "tconorm") {
      if (b.kind == "generated") return tconorm_from_generator(generator(Fields(b, {"gen"}).need("gen").value, GeneratorKind::kTConorm));
      if (b.kind == "max") {
        Fields(b, {});
        return max_tconorm();
      }
      if (b.kind == "ordinal") return interval_sum(b, false);
      unknown_kind("generated, max, ordinal");
    }
    if (b.kind == "representable") {
      Fields f(b, {"gen", "mode"});
      return representable_uninorm(generator(f.need("gen").value, GeneratorKind::kUninorm), mode_of(f));
    }
    if (b.kind == "ordinal") return ordinal_uninorm(b, summand_spans);
    if (b.kind == "umin" || b.kind == "umax") {
      Fields f(b, {"e", "tnorm", "tconorm"});
      return u_min_max(nested(f.need("tnorm"), "tnorm"), nested(f.need("tconorm"), "tconorm"), f.number("e"),
                       b.kind == "umin" ? Composite::kMin : Composite::kMax);
    }
    if (b.kind == "sinternal") {
      Fields f(b, {"curve"});
      std::vector<std::pair<double, double>> pts;
      for (const auto& t : tuples(f.need("curve"), 2)) pts.emplace_back(t[0], t[1]);
      return s_internal(PseudoFunction::from_curve(pts));
    }
    if (b.kind == "internal") {
      Fields f(b, {"relation"});
      std::vector<LocusPoint> pts;
      for (const auto& t : tuples(f.need("relation"), 3)) pts.push_back({t[0], t[1], t[2]});
      return internal_uninorm(PseudoFunction(std::move(pts)));
    }
    unknown_kind("representable, ordinal, umin, umax, sinternal, internal");
  } catch (const ConstructionError& err) {
    semantic_error(b.span, err.what(), "construction");
  } catch (const DomainError& err) {
    semantic_error(b.span, err.what(), "construction");
  }
  throw std::logic_error("unreachable");
}

// --- printing ------------------------------------------------------------------------------

inline std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline std::string gen_text(const Generator& g) {
  if (g.family() == GeneratorFamily::kAffineComposed) {
    return "affine(" + number(g.knot_x()) + ", " + number(g.knot_y()) + ", " + gen_text(g.base()) + ")";
  }
  return g.name();
}

class Printer {
 public:
  explicit Printer(bool compact) : compact_(compact) {}

  std::string run(const Operator& op) {
    emit_op(op);
    if (!compact_) out_ += "\n";
    return out_;
  }

 private:
  void open(const std::string& head) {
    out_ += head + " {";
    ++depth_;
    first_ = true;
  }
  void close() {
    --depth_;
    if (compact_) {
      out_ += first_ ? "}" : " }";
    } else {
      out_ += first_ ? "}" : "\n" + std::string(2 * depth_, ' ') + "}";
    }
    first_ = false;
  }
  void start_entry() {
    if (compact_) {
      out_ += first_ ? " " : "; ";
    } else {
      out_ += "\n" + std::string(2 * depth_, ' ');
    }
    first_ = false;
  }
  void field(const std::string& key, const std::string& value) {
    start_entry();
    out_ += key + " = " + value;
  }
  void field_op(const std::string& key, const Operator& op) {
    start_entry();
    out_ += key + " = ";
    emit_op(op);
  }

  void emit_op(const Operator& op) {
    std::visit([&](const auto& n) { emit(n, op); }, op.node().value);
  }

  void emit(const node::Min&, const Operator& op) {
    if (op.neutral() != 1.0) throw std::invalid_argument("min with neutral element other than 1 has no text form");
    open("tnorm min");
    close();
  }
  void emit(const node::Max&, const Operator& op) {
    if (op.neutral() != 0.0) throw std::invalid_argument("max with neutral element other than 0 has no text form");
    open("tconorm max");
    close();
  }
  void emit(const node::GeneratedTNorm& n, const Operator&) {
    open("tnorm generated");
    field("gen", gen_text(n.gen));
    close();
  }
  void emit(const node::GeneratedTConorm& n, const Operator&) {
    open("tconorm generated");
    field("gen", gen_text(n.gen));
    close();
  }
  void emit(const node::OrdinalSumTNorm& n, const Operator&) { interval_sum(n.summands, "tnorm ordinal", "a", "b"); }
  void emit(const node::OrdinalSumTConorm& n, const Operator&) {
    interval_sum(n.summands, "tconorm ordinal", "c", "d");
  }
  void interval_sum(const std::vector<IntervalSummand>& parts, const char* head, const char* lo, const char* hi) {
    open(head);
    for (const auto& p : parts) {
      start_entry();
      open("summand");
      field(lo, number(p.lo));
      field(hi, number(p.hi));
      field_op("op", p.op);
      close();
    }
    close();
  }
  void emit(const node::Representable& n, const Operator&) {
    open("uninorm representable");
    field("gen", gen_text(n.gen));
    field("mode", n.mode == Annihilator::kConjunctive ? "conjunctive" : "disjunctive");
    close();
  }
  void emit(const node::UComposite& n, const Operator& op) {
    open(n.which == Composite::kMin ? "uninorm umin" : "uninorm umax");
    field("e", number(op.neutral()));
    field_op("tnorm", n.tnorm);
    field_op("tconorm", n.tconorm);
    close();
  }
  void emit(const node::Internal& n, const Operator&) {
    std::string list = "[";
    for (const auto& p : n.boundary.points()) {
      if (list.size() > 1) list += ", ";
      list += "(" + number(p.x) + ", " + number(p.y_low);
      if (!n.strict) list += ", " + number(p.y_high);
      list += ")";
    }
    list += "]";
    open(n.strict ? "uninorm sinternal" : "uninorm internal");
    field(n.strict ? "curve" : "relation", list);
    close();
  }
  void emit(const node::OrdinalSumUninorm& n, const Operator&) {
    open("uninorm ordinal");
    field("e", number(n.spec.e));
    for (const auto& s : n.spec.summands) {
      start_entry();
      open("summand");
      field("a", number(s.a));
      field("b", number(s.b));
      field("c", number(s.c));
      field("d", number(s.d));
      if (s.v_override) field("v", number(*s.v_override));
      field_op("op", s.op);
      close();
    }
    for (const auto& bv : n.spec.boundary_values) {
      start_entry();
      out_ += "corner b = " + number(bv.b) + " value = " + number(bv.value);
    }
    close();
  }
  void emit(const node::Restricted&, const Operator&) {
    throw std::invalid_argument("restrictions have no text form");
  }
  void emit(const node::Transformed&, const Operator&) {
    throw std::invalid_argument("extracted summands have no text form");
  }

  bool compact_;
  std::string out_;
  int depth_ = 0;
  bool first_ = true;
};

}  // namespace detail

/// Parses one operator definition. Throws DslError with line/column spans.
inline OperatorDocument parse_spec(const std::string& text) {
  detail::Parser parser(text);
  detail::Block root = parser.document();
  OperatorDocument doc;
  doc.source = text;
  doc.span = root.span;
  doc.op = detail::build(root, &doc.summand_spans);
  return doc;
}

/// Canonical text of an operator: one field per line, shortest round-trip
/// numbers. `compact` puts everything on a single line.
inline std::string print(const Operator& op, bool compact = false) { return detail::Printer(compact).run(op); }

}  // namespace uninorm::dsl
