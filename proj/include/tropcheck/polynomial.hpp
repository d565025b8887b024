#pragma once

#include "tropcheck/rational.hpp"

#include <optional>
#include <vector>

namespace tropcheck {

/// Dense univariate polynomial, coefficients from the constant term upward.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs);

  /// Interpolates the unique polynomial of degree < xs.size() through (xs, ys).
  static Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vector& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  /// Remainder of Euclidean division; divisor must be nonzero.
  Polynomial remainder(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  Vector coeffs_;
};

/// Sturm chain p, p', -rem(p, p'), ... for a nonzero polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int variations(const Rational& t) const;
  /// Number of distinct real roots in (lo, hi]; requires lo < hi and p(lo) != 0.
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Polynomial> chain_;
};

/// A real root located either exactly or inside an isolating open interval.
struct RootLocation {
  std::optional<Rational> exact;
  Rational lo;
  Rational hi;
};

/// Locates one root of p in the open interval (lo, hi), if there is any.
/// Rational roots are always returned exactly; irrational ones as an
/// isolating interval narrowed by bisection.
std::optional<RootLocation> find_root_in(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace tropcheck
