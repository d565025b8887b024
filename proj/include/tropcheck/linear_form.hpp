#pragma once

#include "tropcheck/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tropcheck {

/// Affine function x -> coeffs . x + constant over a fixed ambient dimension.
/// Equality is exact and unscaled: 2x and x are different forms.
struct LinearForm {
  Vector coeffs;
  Rational constant = 0;

  LinearForm() = default;
  explicit LinearForm(std::size_t dim) : coeffs(dim, Rational(0)) {}
  LinearForm(Vector c, Rational k) : coeffs(std::move(c)), constant(std::move(k)) {}

  static LinearForm variable(std::size_t dim, std::size_t index, const Rational& scale = 1);
  static LinearForm constant_form(std::size_t dim, const Rational& value);

  std::size_t dim() const { return coeffs.size(); }
  bool is_constant() const;

  Rational operator()(std::span<const Rational> x) const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& s);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }

  friend bool operator==(const LinearForm& a, const LinearForm& b);
  /// Lexicographic on (coeffs..., constant); the canonical order of form sets.
  friend bool operator<(const LinearForm& a, const LinearForm& b);
};

/// Positive rescaling to coprime integer coefficients (the zero form is unchanged).
LinearForm primitive(const LinearForm& f);

/// Renders the form over the given variable names, e.g. "x - 2*y + 1/2".
std::string format_form(const LinearForm& f, const std::vector<std::string>& names);

}  // namespace tropcheck
