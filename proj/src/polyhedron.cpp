#include "tropcheck/polyhedron.hpp"

#include <algorithm>

namespace tropcheck {

bool Constraint::satisfied_by(std::span<const Rational> x) const {
  const Rational v = form(x);
  return rel == Relation::Equal ? v == 0 : v >= 0;
}

Polyhedron& Polyhedron::add_ge(LinearForm f) {
  if (f.dim() != dim) throw std::invalid_argument("Polyhedron: constraint dimension mismatch");
  constraints.push_back({std::move(f), Relation::GreaterEq});
  return *this;
}

Polyhedron& Polyhedron::add_eq(LinearForm f) {
  if (f.dim() != dim) throw std::invalid_argument("Polyhedron: constraint dimension mismatch");
  constraints.push_back({std::move(f), Relation::Equal});
  return *this;
}

bool Polyhedron::has_equalities() const {
  return std::any_of(constraints.begin(), constraints.end(),
                     [](const Constraint& c) { return c.rel == Relation::Equal; });
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.dim != dim) throw std::invalid_argument("Polyhedron::intersect: dimension mismatch");
  Polyhedron out = *this;
  out.constraints.insert(out.constraints.end(), other.constraints.begin(), other.constraints.end());
  return out;
}

bool membership(const Polyhedron& p, std::span<const Rational> x) {
  if (x.size() != p.dim) throw std::invalid_argument("membership: dimension mismatch");
  return std::all_of(p.constraints.begin(), p.constraints.end(),
                     [&](const Constraint& c) { return c.satisfied_by(x); });
}

bool feasible(const Polyhedron& p) {
  return lp_solve(LinearForm(p.dim), p, Sense::Minimize).status != LpStatus::Infeasible;
}

std::optional<Vector> interior_point(const Polyhedron& p) {
  if (p.has_equalities()) return std::nullopt;
  // Variables (x, s): maximise s subject to form(x) - s >= 0 and 1 - s >= 0.
  const std::size_t n = p.dim;
  Polyhedron lifted(n + 1);
  for (const auto& c : p.constraints) {
    LinearForm f(n + 1);
    std::copy(c.form.coeffs.begin(), c.form.coeffs.end(), f.coeffs.begin());
    f.coeffs[n] = -1;
    f.constant = c.form.constant;
    lifted.add_ge(std::move(f));
  }
  LinearForm cap(n + 1);
  cap.coeffs[n] = -1;
  cap.constant = 1;
  lifted.add_ge(cap);

  const LpResult r = lp_solve(LinearForm::variable(n + 1, n), lifted, Sense::Maximize);
  if (r.status != LpStatus::Optimal || *r.value <= 0) return std::nullopt;
  return Vector(r.witness->begin(), r.witness->begin() + static_cast<std::ptrdiff_t>(n));
}

namespace {

struct HullProbe {
  std::vector<std::size_t> implicit;  // indices of inequalities tight on all of p
  std::vector<Vector> witnesses;      // one strictly-slack point per other inequality
};

// `any` is a point of p.
HullProbe probe_inequalities(const Polyhedron& p, const Vector& any) {
  HullProbe probe;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    if (c.rel != Relation::GreaterEq) continue;
    Polyhedron capped = p;
    capped.add_ge(LinearForm::constant_form(p.dim, 1) - c.form);
    const LpResult r = lp_solve(c.form, capped, Sense::Maximize);
    if (r.status == LpStatus::Infeasible) {
      // The form exceeds 1 on all of p.
      probe.witnesses.push_back(any);
    } else if (r.status != LpStatus::Optimal) {
      throw std::logic_error("probe_inequalities: capped LP unbounded");
    } else if (*r.value > 0) {
      probe.witnesses.push_back(*r.witness);
    } else {
      probe.implicit.push_back(i);
    }
  }
  return probe;
}

}  // namespace

std::optional<Vector> relative_interior_point(const Polyhedron& p) {
  const LpResult base = lp_solve(LinearForm(p.dim), p, Sense::Minimize);
  if (base.status == LpStatus::Infeasible) return std::nullopt;
  const HullProbe probe = probe_inequalities(p, *base.witness);
  if (probe.witnesses.empty()) return base.witness;
  Vector mean(p.dim, Rational(0));
  for (const auto& w : probe.witnesses)
    for (std::size_t j = 0; j < p.dim; ++j) mean[j] += w[j];
  const Rational count(static_cast<long>(probe.witnesses.size()));
  for (auto& v : mean) v /= count;
  return mean;
}

std::vector<LinearForm> affine_hull_equations(const Polyhedron& p) {
  const LpResult base = lp_solve(LinearForm(p.dim), p, Sense::Minimize);
  if (base.status == LpStatus::Infeasible) throw std::invalid_argument("affine_hull_equations: empty polyhedron");
  std::vector<LinearForm> eqs;
  for (const auto& c : p.constraints)
    if (c.rel == Relation::Equal) eqs.push_back(c.form);
  for (auto i : probe_inequalities(p, *base.witness).implicit) eqs.push_back(p.constraints[i].form);
  return eqs;
}

Polyhedron canonicalize(const Polyhedron& p) {
  if (!interior_point(p)) throw NotFullDimensional("canonicalize: polyhedron is not full-dimensional");

  std::vector<Constraint> kept = p.constraints;
  for (std::size_t i = 0; i < kept.size();) {
    Polyhedron others(p.dim);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.constraints.push_back(kept[j]);
    const LpResult r = lp_solve(kept[i].form, others, Sense::Minimize);
    if (r.status == LpStatus::Optimal && *r.value >= 0) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  Polyhedron out(p.dim);
  for (const auto& c : kept) out.add_ge(primitive(c.form));
  std::sort(out.constraints.begin(), out.constraints.end(),
            [](const Constraint& a, const Constraint& b) { return a.form < b.form; });
  return out;
}

}  // namespace tropcheck
