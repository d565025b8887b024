#pragma once

#include "tropcheck/matrix.hpp"
#include "tropcheck/normal_form.hpp"
#include "tropcheck/polyhedron.hpp"

#include <optional>
#include <vector>

namespace tropcheck {

/// For every output coordinate, the index of the achieving form in its
/// numerator set and in its denominator set.
struct Selection {
  std::vector<std::size_t> numer;
  std::vector<std::size_t> denom;
};

/// Affine map x -> matrix x + offset valid on a closed full-dimensional cell.
struct LinearPiece {
  std::size_t id = 0;  // 1-based, in enumeration order
  MatrixQ matrix;
  Vector offset;
  Polyhedron cell;
  std::optional<Rational> jac;  // det(matrix) for square maps
  Selection selection;

  Vector apply(std::span<const Rational> x) const;
};

struct Decomposition {
  std::size_t dim = 0;      // input dimension n
  std::size_t outputs = 0;  // output dimension m
  std::vector<LinearPiece> pieces;

  std::size_t size() const { return pieces.size(); }
  const LinearPiece& piece(std::size_t id) const { return pieces.at(id - 1); }
};

/// Depth-first search over per-min selections; partial selections whose
/// cell has empty interior are abandoned. Sets are visited by ascending size.
Decomposition enumerate_pieces(const TropicalMap& f);

/// Pieces whose closed cell contains x.
std::vector<const LinearPiece*> pieces_at(const Decomposition& d, std::span<const Rational> x);

/// Evaluates the piecewise affine map at x using the first containing piece.
Vector evaluate(const Decomposition& d, std::span<const Rational> x);

/// One polyhedron per constraint of the (canonical) cell: the cell with that
/// constraint tightened to equality.
std::vector<Polyhedron> facets_of(const LinearPiece& p);

}  // namespace tropcheck
