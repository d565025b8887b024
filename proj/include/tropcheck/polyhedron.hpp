#pragma once

#include "tropcheck/linear_form.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tropcheck {

enum class Relation { GreaterEq, Equal };

/// form(x) >= 0 or form(x) == 0.
struct Constraint {
  LinearForm form;
  Relation rel = Relation::GreaterEq;

  bool satisfied_by(std::span<const Rational> x) const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Closed convex set {x : every constraint holds}, in H-representation.
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<Constraint> constraints;

  Polyhedron() = default;
  explicit Polyhedron(std::size_t d) : dim(d) {}

  Polyhedron& add_ge(LinearForm f);
  Polyhedron& add_eq(LinearForm f);
  bool has_equalities() const;

  /// Intersection; both operands must share the dimension.
  Polyhedron intersect(const Polyhedron& other) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

/// Exact point-in-polyhedron test on the closed set.
bool membership(const Polyhedron& p, std::span<const Rational> x);

class NotFullDimensional : public std::domain_error {
 public:
  explicit NotFullDimensional(const std::string& what) : std::domain_error(what) {}
};

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Minimize, Maximize };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rational> value;
  std::optional<Vector> witness;
};

/// Exact two-phase primal simplex with Bland's rule. The objective constant is
/// included in the reported value.
LpResult lp_solve(const LinearForm& objective, const Polyhedron& p, Sense sense);

bool feasible(const Polyhedron& p);

/// Maximises the common slack s (capped at 1) of all >= constraints. Returns
/// the maximising point when s > 0, i.e. when p has nonempty interior.
/// Polyhedra with equality constraints have empty interior by convention.
std::optional<Vector> interior_point(const Polyhedron& p);

/// Point in the relative interior of a nonempty polyhedron (handles equalities
/// and implicit equalities); nullopt when p is empty.
std::optional<Vector> relative_interior_point(const Polyhedron& p);

/// The affine hull of p as the solution set of returned equalities
/// (explicit ones plus every inequality that is tight on all of p).
/// Requires p nonempty.
std::vector<LinearForm> affine_hull_equations(const Polyhedron& p);

/// Irredundant, primitive-integer, sorted H-representation of a full-dimensional
/// polyhedron; each remaining constraint supports a facet.
/// Throws NotFullDimensional otherwise.
Polyhedron canonicalize(const Polyhedron& p);

}  // namespace tropcheck
