#pragma once

#include "tropcheck/normal_form.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropcheck {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  /// Overrides for `param NAME = VALUE` declarations in the source. Naming a
  /// parameter the source does not declare is an error.
  std::map<std::string, Rational> params;
};

/// Parsed source before normalization: one raw expression per coordinate.
struct ParsedMap {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Expr> coords;
};

/// Grammar:
///   file   := { "param" IDENT "=" ["-"] RATIONAL } map
///   map    := "map" IDENT "(" IDENT {"," IDENT} ")" "=" "(" expr {"," expr} ")"
///   expr   := term {("+" | "-") term}
///   term   := "-" term | atom {["*"] atom}
///   atom   := RATIONAL | IDENT | ("min" | "max") "(" expr {"," expr} ")" | "(" expr ")"
/// A product may contain at most one non-constant factor. "#" starts a comment.
ParsedMap parse_source(std::string_view text, const ParseOptions& options = {});

/// parse_source followed by normalization of every coordinate.
TropicalMap parse_map(std::string_view text, const ParseOptions& options = {});

/// Source text that parses back to an identical map.
std::string print_map(const TropicalMap& f);

}  // namespace tropcheck
