#include "tropcheck/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace tropcheck {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Plus, Minus, Star, Slash, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
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
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::set<std::string> kKeywords = {"map", "min", "max", "param"};

// A factor while parsing products: either a known constant or an expression.
struct Value {
  std::optional<Rational> constant;
  std::optional<Expr> expr;

  Expr as_expr(std::size_t dim) const {
    return constant ? Expr::lin(LinearForm::constant_form(dim, *constant)) : *expr;
  }
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options) : toks_(std::move(tokens)), options_(options) {}

  ParsedMap parse_file() {
    while (peek_keyword("param")) parse_param();
    for (const auto& [name, value] : options_.params)
      if (!params_.contains(name))
        throw std::invalid_argument("parameter '" + name + "' is not declared in the map source");

    expect_keyword("map");
    ParsedMap out;
    out.name = expect(Tok::Ident, "map name").text;
    expect(Tok::LParen, "'('");
    while (true) {
      const Token& t = expect(Tok::Ident, "variable name");
      if (kKeywords.contains(t.text)) throw error(t, "'" + t.text + "' is reserved");
      if (std::find(out.variables.begin(), out.variables.end(), t.text) != out.variables.end())
        throw error(t, "duplicate variable '" + t.text + "'");
      if (params_.contains(t.text)) throw error(t, "'" + t.text + "' is already a parameter");
      out.variables.push_back(t.text);
      if (!accept(Tok::Comma)) break;
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Equals, "'='");
    expect(Tok::LParen, "'('");
    vars_ = out.variables;
    do {
      out.coords.push_back(parse_expr());
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "')' or ','");
    if (peek().kind != Tok::End) throw error(peek(), "unexpected input after map definition");
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  static ParseError error(const Token& t, const std::string& msg) {
    const std::string where = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    return ParseError(t.line, t.column, msg + " at " + where);
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw error(peek(), "expected " + what);
    return next();
  }

  bool peek_keyword(const std::string& kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  void expect_keyword(const std::string& kw) {
    if (!peek_keyword(kw)) throw error(peek(), "expected '" + kw + "'");
    next();
  }

  Rational parse_rational_literal() {
    const Token& num = expect(Tok::Number, "number");
    mpz_class n(num.text, 10);
    mpz_class d = 1;
    if (accept(Tok::Slash)) {
      const Token& den = expect(Tok::Number, "denominator");
      d = mpz_class(den.text, 10);
      if (d == 0) throw error(den, "zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  void parse_param() {
    next();
    const Token& name = expect(Tok::Ident, "parameter name");
    if (kKeywords.contains(name.text)) throw error(name, "'" + name.text + "' is reserved");
    if (params_.contains(name.text)) throw error(name, "duplicate parameter '" + name.text + "'");
    expect(Tok::Equals, "'='");
    const bool negative = accept(Tok::Minus);
    Rational v = parse_rational_literal();
    if (negative) v = -v;
    if (auto it = options_.params.find(name.text); it != options_.params.end()) v = it->second;
    params_.emplace(name.text, v);
  }

  Expr parse_expr() {
    Expr acc = parse_term().as_expr(dim());
    while (true) {
      if (accept(Tok::Plus)) {
        acc = Expr::sum(std::move(acc), parse_term().as_expr(dim()));
      } else if (accept(Tok::Minus)) {
        acc = Expr::sum(std::move(acc), Expr::neg(parse_term().as_expr(dim())));
      } else {
        return acc;
      }
    }
  }

  bool starts_atom(const Token& t) const {
    return t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen;
  }

  Value parse_term() {
    if (accept(Tok::Minus)) {
      Value v = parse_term();
      if (v.constant) return {Rational(-*v.constant), std::nullopt};
      return {std::nullopt, Expr::neg(std::move(*v.expr))};
    }
    Value acc = parse_atom();
    while (true) {
      const Token& at = peek();
      if (accept(Tok::Star)) {
        acc = multiply(std::move(acc), parse_atom(), at);
      } else if (starts_atom(peek())) {
        acc = multiply(std::move(acc), parse_atom(), at);
      } else {
        return acc;
      }
    }
  }

  Value multiply(Value a, Value b, const Token& at) {
    if (a.constant && b.constant) return {Rational(*a.constant * *b.constant), std::nullopt};
    if (a.constant) return {std::nullopt, Expr::scale(*a.constant, *b.expr)};
    if (b.constant) return {std::nullopt, Expr::scale(*b.constant, *a.expr)};
    throw error(at, "product of two non-constant expressions");
  }

  Value parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return {parse_rational_literal(), std::nullopt};
      case Tok::LParen: {
        next();
        Expr e = parse_expr();
        expect(Tok::RParen, "')'");
        return {std::nullopt, std::move(e)};
      }
      case Tok::Ident: {
        next();
        if (t.text == "min" || t.text == "max") {
          expect(Tok::LParen, "'(' after " + t.text);
          std::vector<Expr> args;
          do {
            args.push_back(parse_expr());
          } while (accept(Tok::Comma));
          expect(Tok::RParen, "')' or ','");
          return {std::nullopt, t.text == "min" ? Expr::min(std::move(args)) : Expr::max(std::move(args))};
        }
        if (auto it = params_.find(t.text); it != params_.end()) return {it->second, std::nullopt};
        auto var = std::find(vars_.begin(), vars_.end(), t.text);
        if (var == vars_.end()) throw error(t, "unknown identifier");
        const auto index = static_cast<std::size_t>(var - vars_.begin());
        return {std::nullopt, Expr::lin(LinearForm::variable(dim(), index))};
      }
      default:
        throw error(t, "expected an expression");
    }
  }

  std::size_t dim() const { return vars_.size(); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
  std::map<std::string, Rational> params_;
  std::vector<std::string> vars_;
};

std::string format_set(const FormSet& s, const std::vector<std::string>& names) {
  std::string out = "min(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_form(s[i], names);
  }
  return out + ")";
}

}  // namespace

ParsedMap parse_source(std::string_view text, const ParseOptions& options) {
  Parser p(tokenize(text), options);
  return p.parse_file();
}

TropicalMap parse_map(std::string_view text, const ParseOptions& options) {
  ParsedMap raw = parse_source(text, options);
  std::vector<NormalForm> coords;
  coords.reserve(raw.coords.size());
  for (const auto& e : raw.coords) coords.push_back(normalize(e, raw.variables.size()));
  return TropicalMap(std::move(raw.name), std::move(raw.variables), std::move(coords));
}

std::string print_map(const TropicalMap& f) {
  std::string out = "map " + f.name + "(";
  for (std::size_t i = 0; i < f.variables.size(); ++i) out += (i ? ", " : "") + f.variables[i];
  out += ") = (";
  const LinearForm zero(f.dim());
  for (std::size_t k = 0; k < f.coords.size(); ++k) {
    const auto& c = f.coords[k];
    if (k > 0) out += ",\n    ";
    out += c.numer.size() == 1 ? format_form(c.numer.front(), f.variables) : format_set(c.numer, f.variables);
    if (c.denom.size() == 1 && c.denom.front() == zero) continue;
    out += " - ";
    out += c.denom.size() == 1 ? "(" + format_form(c.denom.front(), f.variables) + ")"
                               : format_set(c.denom, f.variables);
  }
  return out + ")\n";
}

}  // namespace tropcheck
