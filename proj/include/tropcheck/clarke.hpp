#pragma once

#include "tropcheck/pieces.hpp"
#include "tropcheck/polynomial.hpp"

#include <optional>
#include <vector>

namespace tropcheck {

enum class ClarkeVerdict { ContainsSingular, NonsingularCertified, UnknownNoSingularFound };

const char* to_string(ClarkeVerdict v);

/// A singular member of the hull. When the singular point has rational
/// weights they are given exactly; otherwise the singular member is
/// t*from + (1-t)*to (as weight vectors) for some t in the open interval (lo, hi).
struct SingularWitness {
  std::optional<Vector> weights;
  Vector from;
  Vector to;
  Rational lo = 0;
  Rational hi = 1;
};

/// Convex hull of the differentials of the pieces containing a point.
struct ClarkeSet {
  Vector point;
  std::vector<std::size_t> piece_ids;
  std::vector<MatrixQ> matrices;
  ClarkeVerdict verdict = ClarkeVerdict::UnknownNoSingularFound;
  std::optional<SingularWitness> witness;
};

/// det(t*a + (1-t)*b) as a polynomial in t, by exact interpolation.
Polynomial segment_det_polynomial(const MatrixQ& a, const MatrixQ& b);

/// A t in [0, 1] with det(t*a + (1-t)*b) = 0, if one exists.
std::optional<RootLocation> segment_singularity(const MatrixQ& a, const MatrixQ& b);

/// Decides whether conv(matrices) contains a singular matrix: exactly for
/// n <= 2 or at most two matrices, pairwise-only otherwise.
ClarkeSet clarke_of(std::vector<MatrixQ> matrices);

ClarkeSet clarke_at(const Decomposition& d, std::span<const Rational> x);

}  // namespace tropcheck
