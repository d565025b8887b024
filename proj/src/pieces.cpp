#include "tropcheck/pieces.hpp"

#include <algorithm>
#include <numeric>

namespace tropcheck {

Vector LinearPiece::apply(std::span<const Rational> x) const {
  Vector y = matrix * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
  return y;
}

namespace {

struct MinSet {
  std::size_t coord;
  bool numer;
  const FormSet* forms;
};

class PieceSearch {
 public:
  explicit PieceSearch(const TropicalMap& f) : f_(f) {
    for (std::size_t k = 0; k < f.outputs(); ++k) {
      sets_.push_back({k, true, &f.coords[k].numer});
      sets_.push_back({k, false, &f.coords[k].denom});
    }
    std::stable_sort(sets_.begin(), sets_.end(),
                     [](const MinSet& a, const MinSet& b) { return a.forms->size() < b.forms->size(); });
    choice_.assign(sets_.size(), 0);
    out_.dim = f.dim();
    out_.outputs = f.outputs();
  }

  Decomposition run() {
    descend(0, Polyhedron(f_.dim()));
    return std::move(out_);
  }

 private:
  void descend(std::size_t level, const Polyhedron& region) {
    if (level == sets_.size()) {
      emit(region);
      return;
    }
    const FormSet& forms = *sets_[level].forms;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      Polyhedron next = region;
      for (std::size_t j = 0; j < forms.size(); ++j)
        if (j != i) next.add_ge(forms[j] - forms[i]);
      if (forms.size() > 1 && !interior_point(next)) continue;
      choice_[level] = i;
      descend(level + 1, next);
    }
  }

  void emit(const Polyhedron& region) {
    const std::size_t n = f_.dim(), m = f_.outputs();
    LinearPiece piece;
    piece.selection.numer.assign(m, 0);
    piece.selection.denom.assign(m, 0);
    std::vector<LinearForm> rows(m, LinearForm(n));
    for (std::size_t level = 0; level < sets_.size(); ++level) {
      const auto& s = sets_[level];
      const LinearForm& chosen = (*s.forms)[choice_[level]];
      if (s.numer) {
        rows[s.coord] += chosen;
        piece.selection.numer[s.coord] = choice_[level];
      } else {
        rows[s.coord] -= chosen;
        piece.selection.denom[s.coord] = choice_[level];
      }
    }
    piece.matrix = MatrixQ(m, n);
    piece.offset.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) piece.matrix(k, j) = rows[k].coeffs[j];
      piece.offset[k] = rows[k].constant;
    }
    piece.cell = canonicalize(region);
    if (std::any_of(out_.pieces.begin(), out_.pieces.end(),
                    [&](const LinearPiece& p) { return p.cell == piece.cell; }))
      return;
    if (piece.matrix.square()) piece.jac = det(piece.matrix);
    piece.id = out_.pieces.size() + 1;
    out_.pieces.push_back(std::move(piece));
  }

  const TropicalMap& f_;
  std::vector<MinSet> sets_;
  std::vector<std::size_t> choice_;
  Decomposition out_;
};

}  // namespace

Decomposition enumerate_pieces(const TropicalMap& f) { return PieceSearch(f).run(); }

std::vector<const LinearPiece*> pieces_at(const Decomposition& d, std::span<const Rational> x) {
  if (x.size() != d.dim) throw std::invalid_argument("pieces_at: point dimension mismatch");
  std::vector<const LinearPiece*> out;
  for (const auto& p : d.pieces)
    if (membership(p.cell, x)) out.push_back(&p);
  return out;
}

Vector evaluate(const Decomposition& d, std::span<const Rational> x) {
  const auto containing = pieces_at(d, x);
  if (containing.empty()) throw std::domain_error("evaluate: point is not covered by any piece");
  return containing.front()->apply(x);
}

std::vector<Polyhedron> facets_of(const LinearPiece& p) {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < p.cell.constraints.size(); ++i) {
    Polyhedron facet = p.cell;
    facet.constraints[i].rel = Relation::Equal;
    out.push_back(std::move(facet));
  }
  return out;
}

}  // namespace tropcheck
