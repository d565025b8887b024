#include "tropcheck/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tropcheck {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("MatrixQ: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<Vector>& rows) {
  MatrixQ m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("MatrixQ: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector MatrixQ::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector MatrixQ::col(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vector MatrixQ::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("MatrixQ * vector: dimension mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

MatrixQ MatrixQ::operator*(const MatrixQ& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("MatrixQ * MatrixQ: dimension mismatch");
  MatrixQ out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    }
  return out;
}

MatrixQ MatrixQ::operator+(const MatrixQ& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("MatrixQ +: dimension mismatch");
  MatrixQ out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

MatrixQ MatrixQ::operator-(const MatrixQ& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("MatrixQ -: dimension mismatch");
  MatrixQ out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

MatrixQ MatrixQ::operator*(const Rational& s) const {
  MatrixQ out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

Rational det(const MatrixQ& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row: det(m) = det(a) / prod(scale).
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale_product *= l;
  }

  int sign_flip = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational result(a[n - 1][n - 1] * sign_flip, scale_product);
  result.canonicalize();
  return result;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(MatrixQ& a, std::size_t active_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < active_cols && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const Rational piv = a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) /= piv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

AffineSolution solve_affine(const MatrixQ& m, std::span<const Rational> c, std::span<const Rational> y) {
  if (c.size() != m.rows() || y.size() != m.rows())
    throw std::invalid_argument("solve_affine: dimension mismatch");
  const std::size_t n = m.cols();
  MatrixQ aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < n; ++k) aug(r, k) = m(r, k);
    aug(r, n) = y[r] - c[r];
  }
  const auto pivots = rref(aug, n);

  AffineSolution sol;
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, n) != 0) return sol;

  sol.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, n);

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector k(n, Rational(0));
    k[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -aug(i, free_col);
    sol.kernel.push_back(std::move(k));
  }
  sol.kind = sol.kernel.empty() ? AffineSolution::Kind::Unique : AffineSolution::Kind::Family;
  return sol;
}

std::vector<Vector> kernel_basis(const MatrixQ& m) {
  const Vector zero(m.rows(), Rational(0));
  return solve_affine(m, zero, zero).kernel;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (rref(aug, n).size() != n) return std::nullopt;
  MatrixQ out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::size_t rank(const MatrixQ& m) {
  MatrixQ copy = m;
  return rref(copy, m.cols()).size();
}

}  // namespace tropcheck
