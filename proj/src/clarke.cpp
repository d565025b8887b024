#include "tropcheck/clarke.hpp"

#include <stdexcept>

namespace tropcheck {

const char* to_string(ClarkeVerdict v) {
  switch (v) {
    case ClarkeVerdict::ContainsSingular: return "ContainsSingular";
    case ClarkeVerdict::NonsingularCertified: return "NonsingularCertified";
    case ClarkeVerdict::UnknownNoSingularFound: return "UnknownNoSingularFound";
  }
  return "?";
}

Polynomial segment_det_polynomial(const MatrixQ& a, const MatrixQ& b) {
  const std::size_t n = a.rows();
  Vector ts, values;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational t(static_cast<long>(i));
    ts.push_back(t);
    values.push_back(det(a * t + b * Rational(1 - t)));
  }
  return Polynomial::interpolate(ts, values);
}

std::optional<RootLocation> segment_singularity(const MatrixQ& a, const MatrixQ& b) {
  if (det(b) == 0) return RootLocation{Rational(0), 0, 0};
  if (det(a) == 0) return RootLocation{Rational(1), 1, 1};
  return find_root_in(segment_det_polynomial(a, b), 0, 1);
}

namespace {

constexpr std::size_t kMaxHullMatrices = 16;

Vector unit(std::size_t k, std::size_t i) {
  Vector e(k, Rational(0));
  e[i] = 1;
  return e;
}

MatrixQ combine(const std::vector<MatrixQ>& ms, const Vector& w) {
  MatrixQ out(ms.front().rows(), ms.front().cols());
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (w[i] != 0) out = out + ms[i] * w[i];
  return out;
}

Vector blend(const Rational& t, const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = t * a[i] + (1 - t) * b[i];
  return out;
}

// Witness on the segment from weights `a` (t = 1) to weights `b` (t = 0),
// whose endpoints have determinants of opposite sign or zero.
SingularWitness segment_witness(const Vector& a, const Vector& b, const RootLocation& root) {
  SingularWitness w;
  if (root.exact) {
    w.weights = blend(*root.exact, a, b);
  } else {
    w.from = a;
    w.to = b;
    w.lo = root.lo;
    w.hi = root.hi;
  }
  return w;
}

// Symmetric bilinear form with B(A, A) = det A for 2x2 matrices.
Rational mixed_det(const MatrixQ& p, const MatrixQ& q) {
  return (p(0, 0) * q(1, 1) + q(0, 0) * p(1, 1) - p(0, 1) * q(1, 0) - q(0, 1) * p(1, 0)) / 2;
}

struct Extremum {
  Rational value;
  Vector weights;
};

// Range of det over the hull of 2x2 matrices: det(sum w_i A_i) = w' D w is a
// quadratic form, so its extremes over the simplex are critical points of
// the restriction to some face (including vertices).
std::pair<Extremum, Extremum> det_range_2x2(const std::vector<MatrixQ>& ms) {
  const std::size_t k = ms.size();
  std::vector<Vector> dmat(k, Vector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) dmat[i][j] = dmat[j][i] = mixed_det(ms[i], ms[j]);

  Extremum lo{dmat[0][0], unit(k, 0)}, hi = lo;
  auto consider = [&](const Rational& v, const Vector& w) {
    if (v < lo.value) lo = {v, w};
    if (v > hi.value) hi = {v, w};
  };
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) face.push_back(i);
    const std::size_t s = face.size();
    if (s == 1) {
      consider(dmat[face[0]][face[0]], unit(k, face[0]));
      continue;
    }
    // [D_ff  -1; 1' 0] [w; lambda] = [0; 1]
    MatrixQ kkt(s + 1, s + 1);
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) kkt(r, c) = dmat[face[r]][face[c]];
      kkt(r, s) = -1;
      kkt(s, r) = 1;
    }
    Vector rhs(s + 1, Rational(0));
    rhs[s] = 1;
    const AffineSolution sol = solve_affine(kkt, Vector(s + 1, Rational(0)), rhs);
    // Singular systems have their critical values attained on a smaller face.
    if (sol.kind != AffineSolution::Kind::Unique) continue;
    bool interior = true;
    for (std::size_t r = 0; r < s; ++r) interior = interior && sol.particular[r] > 0;
    if (!interior) continue;
    Vector w(k, Rational(0));
    for (std::size_t r = 0; r < s; ++r) w[face[r]] = sol.particular[r];
    consider(sol.particular[s], w);
  }
  return {lo, hi};
}

}  // namespace

ClarkeSet clarke_of(std::vector<MatrixQ> matrices) {
  if (matrices.empty()) throw std::invalid_argument("clarke_of: no matrices");
  const std::size_t n = matrices.front().rows();
  for (const auto& m : matrices)
    if (!m.square() || m.rows() != n) throw std::invalid_argument("clarke_of: matrices must be n x n");

  ClarkeSet out;
  out.matrices = std::move(matrices);
  const auto& ms = out.matrices;
  const std::size_t k = ms.size();

  for (std::size_t i = 0; i < k; ++i)
    if (det(ms[i]) == 0) {
      out.verdict = ClarkeVerdict::ContainsSingular;
      out.witness = SingularWitness{unit(k, i), {}, {}, 0, 1};
      return out;
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (ms[i] == ms[j]) continue;
      const auto root = find_root_in(segment_det_polynomial(ms[i], ms[j]), 0, 1);
      if (!root) continue;
      out.verdict = ClarkeVerdict::ContainsSingular;
      out.witness = segment_witness(unit(k, i), unit(k, j), *root);
      return out;
    }

  // Distinct matrices, for the complete hull test.
  std::vector<std::size_t> uniq;
  for (std::size_t i = 0; i < k; ++i) {
    bool seen = false;
    for (auto u : uniq) seen = seen || ms[u] == ms[i];
    if (!seen) uniq.push_back(i);
  }

  if (uniq.size() <= 2 || n == 1) {
    out.verdict = ClarkeVerdict::NonsingularCertified;
    return out;
  }
  if (n != 2 || uniq.size() > kMaxHullMatrices) {
    out.verdict = ClarkeVerdict::UnknownNoSingularFound;
    return out;
  }

  std::vector<MatrixQ> distinct;
  for (auto u : uniq) distinct.push_back(ms[u]);
  const auto [lo, hi] = det_range_2x2(distinct);
  if (lo.value > 0 || hi.value < 0) {
    out.verdict = ClarkeVerdict::NonsingularCertified;
    return out;
  }

  auto lift = [&](const Vector& w) {
    Vector full(k, Rational(0));
    for (std::size_t r = 0; r < uniq.size(); ++r) full[uniq[r]] = w[r];
    return full;
  };
  out.verdict = ClarkeVerdict::ContainsSingular;
  if (lo.value == 0) {
    out.witness = SingularWitness{lift(lo.weights), {}, {}, 0, 1};
  } else if (hi.value == 0) {
    out.witness = SingularWitness{lift(hi.weights), {}, {}, 0, 1};
  } else {
    const auto root = find_root_in(
        segment_det_polynomial(combine(distinct, hi.weights), combine(distinct, lo.weights)), 0, 1);
    if (!root) throw std::logic_error("clarke_of: sign change without a root");
    out.witness = segment_witness(lift(hi.weights), lift(lo.weights), *root);
  }
  return out;
}

ClarkeSet clarke_at(const Decomposition& d, std::span<const Rational> x) {
  if (d.dim != d.outputs) throw std::invalid_argument("clarke_at: map is not square");
  const auto containing = pieces_at(d, x);
  std::vector<MatrixQ> ms;
  std::vector<std::size_t> ids;
  for (const auto* p : containing) {
    ms.push_back(p->matrix);
    ids.push_back(p->id);
  }
  ClarkeSet out = clarke_of(std::move(ms));
  out.point.assign(x.begin(), x.end());
  out.piece_ids = std::move(ids);
  return out;
}

}  // namespace tropcheck
