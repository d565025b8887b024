#pragma once

#include "tropcheck/expr.hpp"

#include <string>
#include <vector>

namespace tropcheck {

/// A form set is kept sorted and duplicate free.
using FormSet = std::vector<LinearForm>;

/// min(numer) - min(denom) over dimension dim. Both sets are nonempty, sorted,
/// and pruned: every member is the unique minimiser of its set somewhere on an
/// open region.
struct NormalForm {
  std::size_t dim = 0;
  FormSet numer;
  FormSet denom;

  Rational operator()(std::span<const Rational> x) const;
  /// The denominator is a single affine form, so the function is concave.
  bool concave() const { return denom.size() == 1; }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Removes every form that is not the strict unique minimiser of the set on a
/// region with nonempty interior. The pointwise minimum is unchanged.
FormSet prune_redundant(FormSet forms);

/// Sorts, deduplicates and prunes.
FormSet canonical_set(FormSet forms);

/// {s + t : s in a, t in b}, canonicalised.
FormSet sumset(const FormSet& a, const FormSet& b);

/// Rewrites an expression into min(A) - min(B) form, pruning after each step.
NormalForm normalize(const Expr& e, std::size_t dim);

/// Min of a finite set of forms at x.
Rational min_value(const FormSet& forms, std::span<const Rational> x);

/// A tropical rational map R^n -> R^m, one normal form per output coordinate.
struct TropicalMap {
  std::string name;
  std::vector<std::string> variables;
  std::vector<NormalForm> coords;

  TropicalMap() = default;
  TropicalMap(std::string name, std::vector<std::string> variables, std::vector<NormalForm> coords);

  std::size_t dim() const { return variables.size(); }
  std::size_t outputs() const { return coords.size(); }
  bool square() const { return outputs() == dim(); }
  /// Every coordinate is concave (a plain min of affine forms up to an affine shift).
  bool tropical_polynomial() const;

  friend bool operator==(const TropicalMap&, const TropicalMap&) = default;
};

/// Exact coordinatewise evaluation. Throws std::invalid_argument on a
/// dimension mismatch.
Vector eval_expr(const TropicalMap& f, std::span<const Rational> x);

}  // namespace tropcheck
