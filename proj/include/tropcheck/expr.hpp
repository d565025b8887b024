#pragma once

#include "tropcheck/linear_form.hpp"

#include <vector>

namespace tropcheck {

/// Min-plus expression tree. Leaves are affine forms; max is expressed as
/// -min(-.) by the builders so the tree only ever holds these four kinds.
class Expr {
 public:
  enum class Kind { Lin, Min, Sum, Neg };

  static Expr lin(LinearForm f);
  static Expr min(std::vector<Expr> args);
  static Expr max(std::vector<Expr> args);
  static Expr sum(Expr a, Expr b);
  static Expr neg(Expr e);
  /// s * e for a constant s; a negative factor turns min into -min(|s| .).
  static Expr scale(const Rational& s, const Expr& e);

  Kind kind() const { return kind_; }
  const LinearForm& form() const { return form_; }
  const std::vector<Expr>& children() const { return children_; }

  /// Direct recursive evaluation of the tree.
  Rational evaluate(std::span<const Rational> x) const;

 private:
  Expr(Kind k, LinearForm f, std::vector<Expr> ch) : kind_(k), form_(std::move(f)), children_(std::move(ch)) {}

  Kind kind_;
  LinearForm form_;
  std::vector<Expr> children_;
};

}  // namespace tropcheck
