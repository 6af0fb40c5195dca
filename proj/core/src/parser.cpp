// Copyright 2026 The wstl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wstl/parser.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "numfmt.hpp"

namespace wstl {
namespace {

enum class Tok {
  ident,
  number,
  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  comma,
  bang,
  and_op,
  or_op,
  ge,
  gt,
  le,
  lt,
  plus,
  minus,
  star,
  end,
};

struct Token {
  Tok kind;
  std::size_t start;
  std::size_t end;
  std::string_view text;
};

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}
bool ident_char(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

bool is_keyword(std::string_view s) {
  return s == "G" || s == "F" || s == "TRUE" || s == "FALSE" || s == "bool";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { tokenize(); }

  Formula parse() {
    Formula f = chain();
    if (peek().kind != Tok::end) {
      fail_unexpected(peek(), "'&&', '||' or end of input");
    }
    return f;
  }

 private:
  // --- diagnostics ---------------------------------------------------------

  SourceSpan span(std::size_t start, std::size_t end) const {
    SourceSpan s{start, end, 1, 1};
    for (std::size_t i = 0; i < start && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  [[noreturn]] void fail(ParseError::Kind kind, std::size_t start, std::size_t end,
                         const std::string& message) const {
    throw ParseError(kind, span(start, end), message);
  }

  [[noreturn]] void fail_unexpected(const Token& t, const std::string& expected) const {
    std::string found = t.kind == Tok::end ? "end of input" : "'" + std::string(t.text) + "'";
    fail(ParseError::Kind::unexpected_token, t.start, t.end,
         "expected " + expected + ", found " + found);
  }

  // --- lexer ---------------------------------------------------------------

  void tokenize() {
    std::size_t i = 0;
    auto push = [&](Tok kind, std::size_t len) {
      tokens_.push_back({kind, i, i + len, text_.substr(i, len)});
      i += len;
    };
    while (i < text_.size()) {
      const char c = text_[i];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i;
        continue;
      }
      if (c == '#') {
        while (i < text_.size() && text_[i] != '\n') ++i;
        continue;
      }
      const char next = i + 1 < text_.size() ? text_[i + 1] : '\0';
      if (ident_start(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && ident_char(static_cast<unsigned char>(text_[j]))) ++j;
        push(Tok::ident, j - i);
        continue;
      }
      if (digit(c) || (c == '.' && digit(next))) {
        std::size_t j = i;
        while (j < text_.size() && digit(text_[j])) ++j;
        if (j < text_.size() && text_[j] == '.') {
          ++j;
          while (j < text_.size() && digit(text_[j])) ++j;
        }
        if (j < text_.size() && (text_[j] == 'e' || text_[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
          if (k < text_.size() && digit(text_[k])) {
            while (k < text_.size() && digit(text_[k])) ++k;
            j = k;
          }
        }
        push(Tok::number, j - i);
        continue;
      }
      switch (c) {
        case '(': push(Tok::lparen, 1); continue;
        case ')': push(Tok::rparen, 1); continue;
        case '[': push(Tok::lbracket, 1); continue;
        case ']': push(Tok::rbracket, 1); continue;
        case '{': push(Tok::lbrace, 1); continue;
        case '}': push(Tok::rbrace, 1); continue;
        case ',': push(Tok::comma, 1); continue;
        case '!': push(Tok::bang, 1); continue;
        case '+': push(Tok::plus, 1); continue;
        case '-': push(Tok::minus, 1); continue;
        case '*': push(Tok::star, 1); continue;
        case '>':
          if (next == '=') push(Tok::ge, 2);
          else push(Tok::gt, 1);
          continue;
        case '<':
          if (next == '=') push(Tok::le, 2);
          else push(Tok::lt, 1);
          continue;
        case '&':
          if (next == '&') {
            push(Tok::and_op, 2);
            continue;
          }
          break;
        case '|':
          if (next == '|') {
            push(Tok::or_op, 2);
            continue;
          }
          break;
        default: break;
      }
      fail(ParseError::Kind::unexpected_token, i, i + 1,
           "unexpected character '" + std::string(1, c) + "'");
    }
    tokens_.push_back({Tok::end, text_.size(), text_.size(), {}});
  }

  // --- token stream --------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool peek_ident(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::ident && peek(ahead).text == word;
  }
  const Token& expect(Tok kind, const std::string& expected) {
    if (peek().kind != kind) fail_unexpected(peek(), expected);
    return advance();
  }

  // --- grammar -------------------------------------------------------------

  struct OperandWeights {
    WeightFn fn;
    std::size_t start;
    std::size_t end;
  };

  Formula chain() {
    std::vector<Formula> operands{unary()};
    const Tok op = peek().kind;
    if (op != Tok::and_op && op != Tok::or_op) return operands.front();
    const Tok other = op == Tok::and_op ? Tok::or_op : Tok::and_op;

    std::optional<OperandWeights> weights;
    while (peek().kind == op) {
      advance();
      if (peek().kind == Tok::lbracket || peek().kind == Tok::lbrace) {
        const std::size_t start = peek().start;
        if (weights) {
          fail(ParseError::Kind::bad_weight, start, start + 1,
               "weights given twice in one chain; put a single weight list on one operator");
        }
        WeightFn fn = peek().kind == Tok::lbracket ? WeightFn::vector(weight_list()) : weight_spec();
        weights = OperandWeights{std::move(fn), start, tokens_[pos_ - 1].end};
      }
      operands.push_back(unary());
      if (peek().kind == other) {
        fail(ParseError::Kind::unexpected_token, peek().start, peek().end,
             "cannot mix '&&' and '||' without parentheses");
      }
    }

    WeightFn fn = weights ? weights->fn : WeightFn{};
    if (weights) {
      try {
        (void)fn.realize(operands.size());
      } catch (const Error& e) {
        fail(ParseError::Kind::bad_weight, weights->start, weights->end,
             std::string("operand weights: ") + e.what());
      }
    }
    return op == Tok::and_op ? Formula::conjunction(std::move(operands), std::move(fn))
                             : Formula::disjunction(std::move(operands), std::move(fn));
  }

  Formula unary() {
    if (peek().kind == Tok::bang) {
      advance();
      return Formula::negation(unary());
    }
    if ((peek_ident("G") || peek_ident("F")) && peek(1).kind == Tok::lbracket) {
      const bool always = advance().text == "G";
      const TimeInterval interval = parse_interval();
      WeightFn weights;
      if (peek().kind == Tok::lbrace) {
        const std::size_t start = peek().start;
        weights = weight_spec();
        try {
          (void)weights.realize(interval);
        } catch (const Error& e) {
          fail(ParseError::Kind::bad_weight, start, tokens_[pos_ - 1].end,
               std::string("interval weights: ") + e.what());
        }
      }
      Formula sub = unary();
      return always ? Formula::always(interval, std::move(sub), std::move(weights))
                    : Formula::eventually(interval, std::move(sub), std::move(weights));
    }
    return atom();
  }

  Formula atom() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      advance();
      Formula f = chain();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (t.kind == Tok::ident) {
      if (t.text == "TRUE") {
        advance();
        return Formula::truth();
      }
      if (t.text == "FALSE") {
        advance();
        return Formula::falsity();
      }
      if (t.text == "bool" && (peek(1).kind == Tok::lparen || peek(1).kind == Tok::lbrace)) {
        advance();
        double magnitude = 1.0;
        if (peek().kind == Tok::lbrace) {
          advance();
          auto [value, start, end] = signed_number("Boolean magnitude");
          if (!(value > 0.0)) {
            fail(ParseError::Kind::bad_predicate, start, end, "Boolean magnitude must be > 0");
          }
          magnitude = value;
          expect(Tok::rbrace, "'}'");
        }
        expect(Tok::lparen, "'('");
        Formula f = predicate(PredicateMode::boolean(magnitude));
        expect(Tok::rparen, "')'");
        return f;
      }
      if (t.text == "G" || t.text == "F") {
        fail_unexpected(peek(1), "'[' after temporal operator " + std::string(t.text));
      }
    }
    if (t.kind == Tok::ident || t.kind == Tok::number || t.kind == Tok::minus ||
        t.kind == Tok::plus) {
      return predicate(PredicateMode::metric());
    }
    fail_unexpected(t, "formula (TRUE, FALSE, '!', 'G', 'F', '(' or a predicate)");
  }

  struct Affine {
    std::map<std::string, double> coefficients;
    double constant = 0.0;
  };

  Formula predicate(PredicateMode mode) {
    const std::size_t start = peek().start;
    Affine lhs = affine();
    const Tok rel = peek().kind;
    if (rel != Tok::ge && rel != Tok::gt && rel != Tok::le && rel != Tok::lt) {
      const Token& t = peek();
      fail(ParseError::Kind::bad_predicate, t.start, t.end,
           "expected comparison operator ('>=', '>', '<=' or '<'), found " +
               (t.kind == Tok::end ? std::string("end of input") : "'" + std::string(t.text) + "'"));
    }
    advance();
    Affine rhs = affine();
    const std::size_t end = tokens_[pos_ - 1].end;

    // Rearrange to l >= 0.
    const bool greater = rel == Tok::ge || rel == Tok::gt;
    const Affine& pos = greater ? lhs : rhs;
    const Affine& neg = greater ? rhs : lhs;
    AffineExpr expr;
    expr.coefficients = pos.coefficients;
    for (const auto& [name, c] : neg.coefficients) expr.coefficients[name] -= c;
    expr.offset = pos.constant - neg.constant;
    std::erase_if(expr.coefficients, [](const auto& kv) { return kv.second == 0.0; });
    if (expr.coefficients.empty()) {
      fail(ParseError::Kind::bad_predicate, start, end,
           "predicate must mention at least one signal component");
    }
    if (!std::isfinite(expr.offset) ||
        std::any_of(expr.coefficients.begin(), expr.coefficients.end(),
                    [](const auto& kv) { return !std::isfinite(kv.second); })) {
      fail(ParseError::Kind::bad_predicate, start, end, "predicate coefficients overflow");
    }
    return Formula::predicate(std::move(expr), mode);
  }

  Affine affine() {
    Affine out;
    bool first = true;
    while (true) {
      double sign = 1.0;
      if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        sign = advance().kind == Tok::minus ? -1.0 : 1.0;
      } else if (!first) {
        break;
      }
      first = false;
      const Token& t = peek();
      if (t.kind == Tok::number) {
        const double value = number_value(advance());
        if (peek().kind == Tok::star) {
          advance();
          const Token& name = component_name();
          out.coefficients[std::string(name.text)] += sign * value;
        } else {
          out.constant += sign * value;
        }
      } else if (t.kind == Tok::ident) {
        const Token& name = component_name();
        out.coefficients[std::string(name.text)] += sign;
      } else {
        fail(ParseError::Kind::bad_predicate, t.start, t.end,
             "expected number or signal component in predicate, found " +
                 (t.kind == Tok::end ? std::string("end of input") : "'" + std::string(t.text) + "'"));
      }
    }
    return out;
  }

  const Token& component_name() {
    const Token& t = peek();
    if (t.kind != Tok::ident) {
      fail(ParseError::Kind::bad_predicate, t.start, t.end, "expected signal component name");
    }
    if (is_keyword(t.text)) {
      fail(ParseError::Kind::bad_predicate, t.start, t.end,
           "'" + std::string(t.text) + "' is a keyword, not a signal component");
    }
    return advance();
  }

  double number_value(const Token& t) const {
    auto v = detail::parse_double(t.text);
    if (!v || !std::isfinite(*v)) {
      fail(ParseError::Kind::unexpected_token, t.start, t.end,
           "malformed number '" + std::string(t.text) + "'");
    }
    return *v;
  }

  std::tuple<double, std::size_t, std::size_t> signed_number(const std::string& what) {
    const std::size_t start = peek().start;
    double sign = 1.0;
    if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
      sign = advance().kind == Tok::minus ? -1.0 : 1.0;
    }
    const Token& t = expect(Tok::number, what);
    return {sign * number_value(t), start, t.end};
  }

  TimeStep integer(const Token& t) {
    for (char c : t.text) {
      if (!digit(c)) {
        fail(ParseError::Kind::bad_interval, t.start, t.end,
             "interval bounds must be non-negative integers, found '" + std::string(t.text) + "'");
      }
    }
    TimeStep value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{}) {
      fail(ParseError::Kind::bad_interval, t.start, t.end, "interval bound out of range");
    }
    return value;
  }

  const Token& interval_bound() {
    const Token& t = peek();
    if (t.kind == Tok::minus) {
      fail(ParseError::Kind::bad_interval, t.start, peek(1).end,
           "interval bounds must be non-negative integers");
    }
    if (t.kind != Tok::number) {
      fail(ParseError::Kind::bad_interval, t.start, t.end,
           "expected integer interval bound, found " +
               (t.kind == Tok::end ? std::string("end of input") : "'" + std::string(t.text) + "'"));
    }
    return advance();
  }

  TimeInterval parse_interval() {
    const std::size_t start = expect(Tok::lbracket, "'['").start;
    const TimeStep lo = integer(interval_bound());
    expect(Tok::comma, "','");
    const TimeStep hi = integer(interval_bound());
    const std::size_t end = expect(Tok::rbracket, "']'").end;
    if (hi < lo) {
      fail(ParseError::Kind::bad_interval, start, end,
           "interval [" + std::to_string(lo) + "," + std::to_string(hi) + "] has a > b");
    }
    return {lo, hi};
  }

  std::vector<double> weight_list() {
    std::vector<double> values;
    expect(Tok::lbracket, "'['");
    while (true) {
      auto [value, start, end] = signed_number("weight");
      if (!(value > 0.0)) {
        fail(ParseError::Kind::bad_weight, start, end, "weights must be > 0");
      }
      values.push_back(value);
      if (peek().kind == Tok::comma) {
        advance();
        continue;
      }
      expect(Tok::rbracket, "',' or ']'");
      return values;
    }
  }

  WeightFn weight_spec() {
    const std::size_t start = expect(Tok::lbrace, "'{'").start;
    const Token& kind = peek();
    if (kind.kind != Tok::ident) fail_unexpected(kind, "weight kind (const, disc, vec, gauss)");
    advance();
    auto positive = [&](const char* what) {
      auto [value, s, e] = signed_number(what);
      if (!(value > 0.0)) fail(ParseError::Kind::bad_weight, s, e, std::string(what) + " must be > 0");
      return value;
    };
    WeightFn fn;
    if (kind.text == "const") {
      fn = WeightFn::constant(positive("constant weight"));
    } else if (kind.text == "disc") {
      fn = WeightFn::discount(positive("discount factor"));
    } else if (kind.text == "vec") {
      fn = WeightFn::vector(weight_list());
    } else if (kind.text == "gauss") {
      std::vector<double> centers = number_list();
      std::vector<double> widths = number_list();
      auto [floor, s, e] = signed_number("gaussian floor");
      try {
        fn = WeightFn::gaussian(std::move(centers), std::move(widths), floor);
      } catch (const Error& err) {
        fail(ParseError::Kind::bad_weight, start, e, err.what());
      }
    } else {
      fail(ParseError::Kind::bad_weight, kind.start, kind.end,
           "unknown weight kind '" + std::string(kind.text) + "'; expected const, disc, vec or gauss");
    }
    expect(Tok::rbrace, "'}'");
    return fn;
  }

  std::vector<double> number_list() {
    std::vector<double> values;
    expect(Tok::lbracket, "'['");
    while (true) {
      values.push_back(std::get<0>(signed_number("number")));
      if (peek().kind == Tok::comma) {
        advance();
        continue;
      }
      expect(Tok::rbracket, "',' or ']'");
      return values;
    }
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// --- printing --------------------------------------------------------------

std::string number_list_text(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += detail::shortest(values[i]);
  }
  return out + "]";
}

std::string spec_text(const WeightFn& w) {
  switch (w.kind()) {
    case WeightFn::Kind::constant: return "{const " + detail::shortest(w.scalar()) + "}";
    case WeightFn::Kind::discount: return "{disc " + detail::shortest(w.scalar()) + "}";
    case WeightFn::Kind::explicit_vector: return "{vec " + number_list_text(w.values()) + "}";
    case WeightFn::Kind::gaussian:
      return "{gauss " + number_list_text(w.centers()) + " " + number_list_text(w.widths()) + " " +
             detail::shortest(w.scalar()) + "}";
  }
  return {};
}

std::string operand_weights_text(const WeightFn& w) {
  if (w.is_unit()) return {};
  if (w.kind() == WeightFn::Kind::explicit_vector) return number_list_text(w.values());
  return spec_text(w);
}

std::string affine_text(const AffineExpr& e) {
  std::string out;
  bool first = true;
  for (const auto& [name, c] : e.coefficients) {
    const double mag = std::abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1.0) out += detail::shortest(mag) + "*";
    out += name;
    first = false;
  }
  return out + " >= " + detail::shortest(e.offset == 0.0 ? 0.0 : -e.offset);
}

std::string print(const Formula& f);

std::string operand(const Formula& f) {
  const auto& n = f.node();
  const bool bare_predicate =
      std::holds_alternative<Predicate>(n) &&
      std::get<Predicate>(n).mode.kind == PredicateMode::Kind::metric;
  if (bare_predicate || std::holds_alternative<And>(n) || std::holds_alternative<Or>(n)) {
    return "(" + print(f) + ")";
  }
  return print(f);
}

std::string print_chain(const std::vector<Formula>& subs, const WeightFn& w, const char* op) {
  std::string out = operand(subs[0]);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    out += " ";
    out += op;
    if (i == 1) out += operand_weights_text(w);
    out += " " + operand(subs[i]);
  }
  return out;
}

std::string temporal_prefix(const char* op, const TimeInterval& i, const WeightFn& w) {
  std::string out = std::string(op) + "[" + std::to_string(i.lo()) + "," + std::to_string(i.hi()) + "]";
  if (!w.is_unit()) out += spec_text(w);
  return out + " ";
}

std::string print(const Formula& f) {
  return std::visit(
      overloaded{
          [](const True&) { return std::string("TRUE"); },
          [](const False&) { return std::string("FALSE"); },
          [](const Predicate& p) {
            if (p.mode.kind == PredicateMode::Kind::metric) return affine_text(p.expr);
            const std::string mag =
                p.mode.magnitude == 1.0 ? "" : "{" + detail::shortest(p.mode.magnitude) + "}";
            return "bool" + mag + "(" + affine_text(p.expr) + ")";
          },
          [](const Not& n) { return "!" + operand(n.sub); },
          [](const And& n) { return print_chain(n.subs, n.weights, "&&"); },
          [](const Or& n) { return print_chain(n.subs, n.weights, "||"); },
          [](const Always& n) { return temporal_prefix("G", n.interval, n.weights) + operand(n.sub); },
          [](const Eventually& n) {
            return temporal_prefix("F", n.interval, n.weights) + operand(n.sub);
          },
      },
      f.node());
}

void dump(const Formula& f, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  std::visit(overloaded{
                 [&](const True&) { out << "True\n"; },
                 [&](const False&) { out << "False\n"; },
                 [&](const Predicate& p) {
                   out << "Predicate " << affine_text(p.expr);
                   if (p.mode.kind == PredicateMode::Kind::boolean) {
                     out << " [boolean " << detail::shortest(p.mode.magnitude) << "]";
                   }
                   out << "\n";
                 },
                 [&](const Not&) { out << "Not\n"; },
                 [&](const And& n) { out << "And" << (n.weights.is_unit() ? "" : " p=" + spec_text(n.weights)) << "\n"; },
                 [&](const Or& n) { out << "Or" << (n.weights.is_unit() ? "" : " p=" + spec_text(n.weights)) << "\n"; },
                 [&](const Always& n) {
                   out << "Always [" << n.interval.lo() << "," << n.interval.hi() << "]"
                       << (n.weights.is_unit() ? "" : " w=" + spec_text(n.weights)) << "\n";
                 },
                 [&](const Eventually& n) {
                   out << "Eventually [" << n.interval.lo() << "," << n.interval.hi() << "]"
                       << (n.weights.is_unit() ? "" : " w=" + spec_text(n.weights)) << "\n";
                 },
             },
             f.node());
  for (const auto& c : children(f)) dump(c, depth + 1, out);
}

std::string location_prefix(const SourceSpan& span) {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": ";
}

}  // namespace

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : Error(Errc::parse, location_prefix(span) + message), kind_(kind), span_(span), message_(message) {}

const char* to_string(ParseError::Kind kind) noexcept {
  switch (kind) {
    case ParseError::Kind::unexpected_token: return "UnexpectedToken";
    case ParseError::Kind::bad_weight: return "BadWeight";
    case ParseError::Kind::bad_interval: return "BadInterval";
    case ParseError::Kind::bad_predicate: return "BadPredicate";
  }
  return "ParseError";
}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) { return print(f); }

std::string ast_dump(const Formula& f) {
  std::ostringstream out;
  dump(f, 0, out);
  return out.str();
}

std::string format_number(double value) { return detail::shortest(value); }

}  // namespace wstl
