#pragma once

#include "tropcheck/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace tropcheck {

/// Dense row-major matrix of exact rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Vector operator*(std::span<const Rational> x) const;
  MatrixQ operator*(const MatrixQ& other) const;
  MatrixQ operator+(const MatrixQ& other) const;
  MatrixQ operator-(const MatrixQ& other) const;
  MatrixQ operator*(const Rational& s) const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// integer matrix obtained by clearing row denominators.
/// Throws std::invalid_argument for non-square input.
Rational det(const MatrixQ& m);

/// Solution set of M x + c = y.
struct AffineSolution {
  enum class Kind { Unique, Inconsistent, Family };
  Kind kind = Kind::Inconsistent;
  Vector particular;            // valid for Unique and Family
  std::vector<Vector> kernel;   // basis of ker M, nonempty for Family

  bool consistent() const { return kind != Kind::Inconsistent; }
};

AffineSolution solve_affine(const MatrixQ& m, std::span<const Rational> c, std::span<const Rational> y);

/// Basis of the null space of m (possibly empty).
std::vector<Vector> kernel_basis(const MatrixQ& m);

std::optional<MatrixQ> inverse(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

}  // namespace tropcheck
