#pragma once

#include "tropcheck/pieces.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropcheck {

/// Counts of piece Jacobian signs, with the first offending pieces.
struct SignSummary {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;
  std::optional<std::size_t> zero_piece;
  std::optional<std::pair<std::size_t, std::size_t>> mixed_pair;  // (positive id, negative id)

  bool uniform_nonzero() const { return zero == 0 && (pos == 0 || neg == 0); }
  /// +1 or -1 when uniform and nonzero, 0 otherwise.
  int common_sign() const;
};

SignSummary jacobian_signs(const Decomposition& d);

/// y0 lies outside f(F) for every facet F of every cell.
struct RegularValueCertificate {
  Vector y0;
  std::size_t checked_facets = 0;
  Vector source_point;  // y0 = f(source_point)
};

class RetriesExhausted : public std::runtime_error {
 public:
  RetriesExhausted(std::size_t piece, std::size_t facet, int attempts);
  std::size_t piece() const { return piece_; }
  std::size_t facet() const { return facet_; }

 private:
  std::size_t piece_;
  std::size_t facet_;
};

struct AnalysisOptions {
  std::uint64_t seed = 0;
  int retries = 32;
};

/// Runs the facet battery for y0: every system {x in F, M x + c = y0} must be
/// infeasible. On failure returns nullopt and reports the offending piece id
/// and facet index through `failing` when given.
std::optional<RegularValueCertificate> certify_regular_value(
    const Decomposition& d, Vector y0, Vector source_point,
    std::pair<std::size_t, std::size_t>* failing = nullptr);

/// Samples x0 from a large integer box plus a small random rational, moves it
/// into the interior of a cell, and certifies y0 = f(x0). Throws
/// RetriesExhausted after options.retries failed attempts.
RegularValueCertificate find_regular_value(const Decomposition& d, const AnalysisOptions& options);

struct PreimagePoint {
  Vector point;
  std::vector<std::size_t> pieces;  // ids of every cell containing the point
};

struct Preimage {
  std::vector<PreimagePoint> points;
  /// Singular pieces whose affine solution set meets their cell.
  std::vector<std::size_t> degenerate_pieces;

  bool degenerate() const { return !degenerate_pieces.empty(); }
};

Preimage preimage(const Decomposition& d, std::span<const Rational> y);

/// Signed count of the fiber over a certified regular value.
int degree(const Decomposition& d, const RegularValueCertificate& cert);

enum class Verdict { Isomorphism, NotIsomorphism, Unknown };
enum class Reason { ZeroJacobian, MixedSigns, MultiplePreimages, SingletonPreimage, EmptyPreimage, RetriesExhausted, FastPathDisagreement };

const char* to_string(Verdict v);
const char* to_string(Reason r);

struct AnalysisReport {
  Verdict verdict = Verdict::Unknown;
  Reason reason = Reason::RetriesExhausted;
  std::size_t piece_count = 0;
  SignSummary signs;
  std::optional<int> degree;
  std::optional<RegularValueCertificate> regular_value;
  std::vector<Vector> fiber;      // preimage of the regular value
  std::vector<Vector> witnesses;  // distinct points with equal image, for MultiplePreimages
  std::optional<Decomposition> inverse;
  std::optional<Verdict> fast_path;  // plane criterion, when eligible
  std::string diagnostics;
};

/// Zero and mixed Jacobian screens, then a certified regular value and its
/// fiber: a singleton fiber means isomorphism, anything larger a witness pair.
AnalysisReport decide_isomorphism(const TropicalMap& f, const Decomposition& d, const AnalysisOptions& options = {});
AnalysisReport decide_isomorphism(const TropicalMap& f, const AnalysisOptions& options = {});

class NotInvertible : public std::logic_error {
 public:
  explicit NotInvertible(const std::string& what) : std::logic_error(what) {}
};

/// Inverse pieces (M^-1, -M^-1 c) on the image cells f(C_i). Throws
/// NotInvertible if a piece is singular.
Decomposition invert(const Decomposition& d);

/// Inverse of f; throws NotInvertible unless decide_isomorphism says Isomorphism.
Decomposition invert(const TropicalMap& f, const AnalysisOptions& options = {});

/// For planar maps with concave coordinates uniform nonzero Jacobian signs
/// already imply isomorphism. Returns nullopt when not eligible or when the
/// signs do not settle it.
std::optional<Verdict> plane_fast_path(const TropicalMap& f, const Decomposition& d);

}  // namespace tropcheck
