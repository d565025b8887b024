#include "tropcheck/analysis.hpp"

#include <algorithm>
#include <random>

namespace tropcheck {

int SignSummary::common_sign() const {
  if (!uniform_nonzero()) return 0;
  return pos > 0 ? 1 : -1;
}

SignSummary jacobian_signs(const Decomposition& d) {
  if (d.dim != d.outputs) throw std::invalid_argument("jacobian_signs: map is not square");
  SignSummary s;
  std::optional<std::size_t> first_pos, first_neg;
  for (const auto& p : d.pieces) {
    switch (sgn(*p.jac)) {
      case 1:
        ++s.pos;
        if (!first_pos) first_pos = p.id;
        break;
      case -1:
        ++s.neg;
        if (!first_neg) first_neg = p.id;
        break;
      default:
        ++s.zero;
        if (!s.zero_piece) s.zero_piece = p.id;
    }
  }
  if (first_pos && first_neg) s.mixed_pair = std::make_pair(*first_pos, *first_neg);
  return s;
}

RetriesExhausted::RetriesExhausted(std::size_t piece, std::size_t facet, int attempts)
    : std::runtime_error("no certified regular value after " + std::to_string(attempts) +
                         " attempts; last failure on piece " + std::to_string(piece) + ", facet " +
                         std::to_string(facet)),
      piece_(piece),
      facet_(facet) {}

namespace {

// {x : M x + c = y} as equality constraints.
Polyhedron fiber_constraints(const LinearPiece& p, std::span<const Rational> y, const Polyhedron& base) {
  Polyhedron out = base;
  for (std::size_t k = 0; k < p.matrix.rows(); ++k) {
    LinearForm row(p.matrix.row(k), p.offset[k] - y[k]);
    out.add_eq(std::move(row));
  }
  return out;
}

bool strictly_inside(const Polyhedron& cell, std::span<const Rational> x) {
  return std::all_of(cell.constraints.begin(), cell.constraints.end(),
                     [&](const Constraint& c) { return c.form(x) > 0; });
}

}  // namespace

std::optional<RegularValueCertificate> certify_regular_value(const Decomposition& d, Vector y0, Vector source_point,
                                                             std::pair<std::size_t, std::size_t>* failing) {
  if (y0.size() != d.outputs) throw std::invalid_argument("certify_regular_value: dimension mismatch");
  RegularValueCertificate cert{std::move(y0), 0, std::move(source_point)};
  for (const auto& p : d.pieces) {
    const auto facets = facets_of(p);
    for (std::size_t i = 0; i < facets.size(); ++i) {
      ++cert.checked_facets;
      if (feasible(fiber_constraints(p, cert.y0, facets[i]))) {
        if (failing) *failing = {p.id, i};
        return std::nullopt;
      }
    }
  }
  return cert;
}

RegularValueCertificate find_regular_value(const Decomposition& d, const AnalysisOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::pair<std::size_t, std::size_t> failing{0, 0};
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    Vector x0(d.dim);
    for (auto& v : x0) {
      const auto den = random_int(rng, 1000, 9999);
      Rational frac(static_cast<long>(random_int(rng, -(den - 1), den - 1)), static_cast<unsigned long>(den));
      frac.canonicalize();
      v = Rational(static_cast<long>(random_int(rng, -1000, 1000))) + frac;
    }
    const auto containing = pieces_at(d, x0);
    if (containing.empty()) throw std::logic_error("find_regular_value: sample point not covered");
    const LinearPiece& piece = *containing.front();
    if (containing.size() > 1 || !strictly_inside(piece.cell, x0)) {
      const auto inner = interior_point(piece.cell);
      for (std::size_t j = 0; j < d.dim; ++j) x0[j] = (x0[j] + (*inner)[j]) / 2;
    }
    Vector y0 = piece.apply(x0);
    if (auto cert = certify_regular_value(d, std::move(y0), x0, &failing)) return *cert;
  }
  throw RetriesExhausted(failing.first, failing.second, options.retries);
}

Preimage preimage(const Decomposition& d, std::span<const Rational> y) {
  if (y.size() != d.outputs) throw std::invalid_argument("preimage: point dimension mismatch");
  Preimage out;
  for (const auto& p : d.pieces) {
    const AffineSolution sol = solve_affine(p.matrix, p.offset, y);
    if (sol.kind == AffineSolution::Kind::Inconsistent) continue;
    if (sol.kind == AffineSolution::Kind::Family) {
      if (feasible(fiber_constraints(p, y, p.cell))) out.degenerate_pieces.push_back(p.id);
      continue;
    }
    if (!membership(p.cell, sol.particular)) continue;
    auto same = std::find_if(out.points.begin(), out.points.end(),
                             [&](const PreimagePoint& q) { return q.point == sol.particular; });
    if (same != out.points.end()) {
      same->pieces.push_back(p.id);
    } else {
      out.points.push_back({sol.particular, {p.id}});
    }
  }
  return out;
}

int degree(const Decomposition& d, const RegularValueCertificate& cert) {
  const Preimage fiber = preimage(d, cert.y0);
  if (fiber.degenerate()) throw std::domain_error("degree: degenerate fiber over a regular value");
  int total = 0;
  for (const auto& q : fiber.points) {
    if (q.pieces.size() != 1) throw std::logic_error("degree: fiber point on a cell boundary");
    total += sgn(*d.piece(q.pieces.front()).jac);
  }
  return total;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Isomorphism: return "Isomorphism";
    case Verdict::NotIsomorphism: return "NotIsomorphism";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::ZeroJacobian: return "ZeroJacobian";
    case Reason::MixedSigns: return "MixedSigns";
    case Reason::MultiplePreimages: return "MultiplePreimages";
    case Reason::SingletonPreimage: return "SingletonPreimage";
    case Reason::EmptyPreimage: return "EmptyPreimage";
    case Reason::RetriesExhausted: return "RetriesExhausted";
    case Reason::FastPathDisagreement: return "FastPathDisagreement";
  }
  return "?";
}

AnalysisReport decide_isomorphism(const TropicalMap& f, const Decomposition& d, const AnalysisOptions& options) {
  if (!f.square()) throw std::invalid_argument("decide_isomorphism: map is not square");
  AnalysisReport r;
  r.piece_count = d.size();
  r.signs = jacobian_signs(d);
  r.fast_path = plane_fast_path(f, d);

  if (r.signs.zero > 0) {
    r.verdict = Verdict::NotIsomorphism;
    r.reason = Reason::ZeroJacobian;
    r.diagnostics = "piece " + std::to_string(*r.signs.zero_piece) + " has zero Jacobian";
    return r;
  }
  if (!r.signs.uniform_nonzero()) {
    r.verdict = Verdict::NotIsomorphism;
    r.reason = Reason::MixedSigns;
    r.diagnostics = "pieces " + std::to_string(r.signs.mixed_pair->first) + " and " +
                    std::to_string(r.signs.mixed_pair->second) + " have Jacobians of opposite sign";
    return r;
  }

  try {
    r.regular_value = find_regular_value(d, options);
  } catch (const RetriesExhausted& e) {
    r.verdict = Verdict::Unknown;
    r.reason = Reason::RetriesExhausted;
    r.diagnostics = e.what();
    return r;
  }

  const Preimage fiber = preimage(d, r.regular_value->y0);
  for (const auto& q : fiber.points) r.fiber.push_back(q.point);
  r.degree = degree(d, *r.regular_value);

  if (fiber.points.size() == 1) {
    r.verdict = Verdict::Isomorphism;
    r.reason = Reason::SingletonPreimage;
    r.inverse = invert(d);
  } else if (fiber.points.empty()) {
    r.verdict = Verdict::NotIsomorphism;
    r.reason = Reason::EmptyPreimage;
  } else {
    r.verdict = Verdict::NotIsomorphism;
    r.reason = Reason::MultiplePreimages;
    r.witnesses = r.fiber;
  }

  if (r.verdict == Verdict::Isomorphism && *r.degree != r.signs.common_sign())
    throw std::logic_error("decide_isomorphism: degree does not match the Jacobian sign");

  if (r.fast_path && *r.fast_path != r.verdict) {
    r.diagnostics = std::string("plane criterion says ") + to_string(*r.fast_path) + ", fiber count says " +
                    to_string(r.verdict);
    r.verdict = Verdict::Unknown;
    r.reason = Reason::FastPathDisagreement;
    r.inverse.reset();
  }
  return r;
}

AnalysisReport decide_isomorphism(const TropicalMap& f, const AnalysisOptions& options) {
  return decide_isomorphism(f, enumerate_pieces(f), options);
}

Decomposition invert(const Decomposition& d) {
  if (d.dim != d.outputs) throw NotInvertible("invert: map is not square");
  Decomposition inv;
  inv.dim = d.outputs;
  inv.outputs = d.dim;
  for (const auto& p : d.pieces) {
    const auto m_inv = inverse(p.matrix);
    if (!m_inv) throw NotInvertible("invert: piece " + std::to_string(p.id) + " is singular");
    LinearPiece q;
    q.id = p.id;
    q.matrix = *m_inv;
    q.offset = *m_inv * p.offset;
    for (auto& v : q.offset) v = -v;
    // x = M^-1 y + offset, so a . x + b >= 0 becomes (a M^-1) . y + (a . offset + b) >= 0.
    Polyhedron cell(inv.dim);
    for (const auto& c : p.cell.constraints) {
      LinearForm g(inv.dim);
      for (std::size_t j = 0; j < inv.dim; ++j)
        for (std::size_t k = 0; k < d.dim; ++k) g.coeffs[j] += c.form.coeffs[k] * q.matrix(k, j);
      g.constant = dot(c.form.coeffs, q.offset) + c.form.constant;
      cell.constraints.push_back({std::move(g), c.rel});
    }
    q.cell = canonicalize(cell);
    q.jac = Rational(1 / *p.jac);
    q.selection = p.selection;
    inv.pieces.push_back(std::move(q));
  }
  return inv;
}

Decomposition invert(const TropicalMap& f, const AnalysisOptions& options) {
  const AnalysisReport r = decide_isomorphism(f, options);
  if (r.verdict != Verdict::Isomorphism)
    throw NotInvertible(std::string("invert: map is not an isomorphism (") + to_string(r.reason) + ")");
  return *r.inverse;
}

std::optional<Verdict> plane_fast_path(const TropicalMap& f, const Decomposition& d) {
  if (f.dim() != 2 || !f.square() || !f.tropical_polynomial()) return std::nullopt;
  if (!jacobian_signs(d).uniform_nonzero()) return std::nullopt;
  return Verdict::Isomorphism;
}

}  // namespace tropcheck
