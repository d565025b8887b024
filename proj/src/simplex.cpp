#include "tropcheck/polyhedron.hpp"

#include <limits>

namespace tropcheck {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for: minimise cost . z subject to rows . z = rhs, z >= 0.
// cost_ holds reduced costs; its last entry is minus the current objective.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, Vector(cols + 1, Rational(0))), cost_(cols + 1, Rational(0)), basis_(rows, kNone) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = a_[r][c];
    for (auto& v : a_[r])
      if (v != 0) v /= piv;
    auto eliminate = [&](Vector& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t k = 0; k <= cols_; ++k)
        if (a_[r][k] != 0) row[k] -= factor * a_[r][k];
    };
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (i != r) eliminate(a_[i]);
    eliminate(cost_);
    basis_[r] = c;
  }

  // Bland's rule: smallest improving column enters, ratio ties leave by
  // smallest basic index. Returns false when the LP is unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void set_cost(const Vector& c) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = j < c.size() ? c[j] : Rational(0);
    cost_[cols_] = 0;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      const Rational cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k <= cols_; ++k)
        if (a_[r][k] != 0) cost_[k] -= cb * a_[r][k];
    }
  }

  Rational objective() const { return -cost_[cols_]; }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Vector solution() const {
    Vector z(cols_, Rational(0));
    for (std::size_t r = 0; r < a_.size(); ++r) z[basis_[r]] = a_[r][cols_];
    return z;
  }

 private:
  std::size_t cols_;
  std::vector<Vector> a_;
  Vector cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_solve(const LinearForm& objective, const Polyhedron& p, Sense sense) {
  const std::size_t n = p.dim;
  if (objective.dim() != n) throw std::invalid_argument("lp_solve: objective dimension mismatch");
  for (const auto& c : p.constraints)
    if (c.form.dim() != n) throw std::invalid_argument("lp_solve: constraint dimension mismatch");

  // Standard form: x = u - v with u, v >= 0; one surplus column per inequality
  // and one artificial column per row that has no natural starting basic.
  const std::size_t m = p.constraints.size();
  std::size_t n_slack = 0;
  for (const auto& c : p.constraints)
    if (c.rel == Relation::GreaterEq) ++n_slack;

  std::vector<bool> needs_artificial(m, false);
  std::size_t n_art = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = p.constraints[r];
    // form . x + b >= 0 becomes -form . x + s = b, feasible with s = b when b >= 0.
    if (c.rel == Relation::Equal || c.form.constant < 0) {
      needs_artificial[r] = true;
      ++n_art;
    }
  }

  const std::size_t first_slack = 2 * n;
  const std::size_t first_art = first_slack + n_slack;
  const std::size_t cols = first_art + n_art;
  Tableau t(m, cols);

  std::size_t slack = first_slack;
  std::size_t art = first_art;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = p.constraints[r];
    // Row: -form . (u - v) [+ s] = constant.
    for (std::size_t j = 0; j < n; ++j) {
      t.at(r, j) = -c.form.coeffs[j];
      t.at(r, n + j) = c.form.coeffs[j];
    }
    t.rhs(r) = c.form.constant;
    std::size_t own_slack = kNone;
    if (c.rel == Relation::GreaterEq) {
      own_slack = slack++;
      t.at(r, own_slack) = 1;
    }
    if (t.rhs(r) < 0) {
      for (std::size_t k = 0; k < cols; ++k) t.at(r, k) = -t.at(r, k);
      t.rhs(r) = -t.rhs(r);
    }
    if (needs_artificial[r]) {
      t.at(r, art) = 1;
      t.basic(r) = art++;
    } else {
      t.basic(r) = own_slack;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    Vector phase1(cols, Rational(0));
    for (std::size_t j = first_art; j < cols; ++j) phase1[j] = 1;
    t.set_cost(phase1);
    t.optimize(allowed);
    if (t.objective() > 0) return {LpStatus::Infeasible, std::nullopt, std::nullopt};

    // Pivot remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are linearly dependent and get dropped.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basic(r) < first_art) {
        ++r;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_art; ++j)
        if (t.at(r, j) != 0) {
          col = j;
          break;
        }
      if (col == kNone) {
        t.drop_row(r);
      } else {
        t.pivot(r, col);
        ++r;
      }
    }
    for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
  }

  Vector cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Rational cj = sense == Sense::Minimize ? objective.coeffs[j] : Rational(-objective.coeffs[j]);
    cost[j] = cj;
    cost[n + j] = -cj;
  }
  t.set_cost(cost);
  if (!t.optimize(allowed)) return {LpStatus::Unbounded, std::nullopt, std::nullopt};

  const Vector z = t.solution();
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
  Rational value = objective(x);
  return {LpStatus::Optimal, std::move(value), std::move(x)};
}

}  // namespace tropcheck
