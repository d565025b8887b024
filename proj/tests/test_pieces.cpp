#include "random_maps.hpp"

#include "tropcheck/pieces.hpp"

#include <doctest.h>

using namespace tropcheck;
using namespace tropcheck::testing;

namespace {

LinearForm lf(std::initializer_list<Rational> coeffs, Rational constant = 0) { return LinearForm(Vector(coeffs), constant); }

Polyhedron cell(std::initializer_list<LinearForm> forms) {
  Polyhedron p(forms.begin()->dim());
  for (const auto& f : forms) p.add_ge(f);
  return canonicalize(p);
}

}  // namespace

TEST_CASE("example1 splits into four sectors") {
  const Decomposition d = enumerate_pieces(load_fixture("example1.trop"));
  REQUIRE(d.size() == 4);
  const MatrixQ expected[] = {MatrixQ::identity(2), {{1, 2}, {0, 1}}, {{1, 0}, {2, 1}}, {{5, 2}, {2, 1}}};
  const Polyhedron cells[] = {cell({lf({1, 0}), lf({0, 1})}), cell({lf({1, 0}), lf({0, -1})}),
                              cell({lf({-1, 0}), lf({2, 1})}), cell({lf({-1, 0}), lf({-2, -1})})};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(d.pieces[i].id == i + 1);
    CHECK(d.pieces[i].matrix == expected[i]);
    CHECK(d.pieces[i].offset == Vector{0, 0});
    CHECK(d.pieces[i].cell == cells[i]);
    REQUIRE(d.pieces[i].jac);
    CHECK(*d.pieces[i].jac == 1);
  }

  CHECK(pieces_at(d, Vector{0, 0}).size() == 4);
  const auto smooth = pieces_at(d, Vector{1, 1});
  REQUIRE(smooth.size() == 1);
  CHECK(smooth.front()->matrix == MatrixQ::identity(2));
}

TEST_CASE("single-piece and constant-Jacobian maps") {
  const Decomposition id = enumerate_pieces(load_fixture("identity.trop"));
  REQUIRE(id.size() == 1);
  CHECK(id.pieces[0].matrix == MatrixQ::identity(2));
  CHECK(id.pieces[0].cell.constraints.empty());
  CHECK(pieces_at(id, Vector{Rational(7, 3), -2}).size() == 1);

  for (const char* name : {"example2.trop", "g2d.trop"}) {
    const Decomposition d = enumerate_pieces(load_fixture(name));
    CHECK(d.size() > 1);
    for (const auto& p : d.pieces) {
      REQUIRE(p.jac);
      CHECK(*p.jac == 2);
    }
  }

  const Decomposition two = enumerate_pieces(parse_map("map m(x, y) = (min(x, 2x), y)"));
  REQUIRE(two.size() == 2);
  CHECK(*two.pieces[0].jac * *two.pieces[1].jac == 2);
}

TEST_CASE("facets are tightened constraints") {
  LinearPiece quadrant;
  quadrant.cell = cell({lf({1, 0}), lf({0, 1})});
  const auto facets = facets_of(quadrant);
  REQUIRE(facets.size() == 2);
  for (const auto& f : facets) {
    CHECK(f.has_equalities());
    CHECK(membership(f, Vector{0, 0}));
    CHECK(membership(f, Vector{0, 3}) != membership(f, Vector{3, 0}));
    CHECK_FALSE(membership(f, Vector{1, 1}));
  }

  LinearPiece everywhere;
  everywhere.cell = Polyhedron(2);
  CHECK(facets_of(everywhere).empty());

  const Decomposition d = enumerate_pieces(load_fixture("example1.trop"));
  const auto f2 = facets_of(d.piece(2));
  REQUIRE(f2.size() == 2);
  int on_axis_y = 0, on_axis_x = 0;
  for (const auto& f : f2) {
    if (membership(f, Vector{0, -3})) ++on_axis_y;
    if (membership(f, Vector{3, 0})) ++on_axis_x;
    CHECK_FALSE(membership(f, Vector{0, 3}));
  }
  CHECK(on_axis_y == 1);
  CHECK(on_axis_x == 1);
}

TEST_CASE("decompositions cover, agree, and do not overlap") {
  std::mt19937_64 rng(61);
  std::vector<std::pair<std::vector<Expr>, TropicalMap>> maps;
  for (const char* name : {"example1.trop", "g2d.trop", "example2.trop"}) {
    const ParsedMap parsed = parse_source(read_fixture(name));
    maps.emplace_back(parsed.coords, load_fixture(name));
  }
  for (int i = 0; i < 8; ++i) {
    auto r = random_map(rng, 2 + i % 2, 2);
    maps.emplace_back(r.exprs, r.map);
  }

  for (const auto& [exprs, f] : maps) {
    const Decomposition d = enumerate_pieces(f);
    for (int s = 0; s < 100; ++s) {
      const Vector x = random_point(rng, f.dim());
      const auto here = pieces_at(d, x);
      REQUIRE_FALSE(here.empty());
      for (const auto* p : here) CHECK(p->apply(x) == eval_raw(exprs, x));
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(interior_point(d.pieces[i].cell));
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const Polyhedron both = d.pieces[i].cell.intersect(d.pieces[j].cell);
        CHECK_FALSE(interior_point(both));
        const auto w = relative_interior_point(both);
        if (w) CHECK(d.pieces[i].apply(*w) == d.pieces[j].apply(*w));
      }
    }
  }
}

TEST_CASE("difference quotients recover the piece matrix") {
  std::mt19937_64 rng(62);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = random_map(rng, 2 + trial % 2, 2);
    const Decomposition d = enumerate_pieces(r.map);
    for (int s = 0; s < 5; ++s) {
      const Vector x = random_point(rng, d.dim);
      const auto here = pieces_at(d, x);
      if (here.size() != 1) continue;
      const LinearPiece& p = *here.front();
      const Vector fx = eval_raw(r.exprs, x);
      for (std::size_t j = 0; j < d.dim; ++j) {
        Rational h = 1;
        Vector xh = x;
        for (xh[j] += h; !membership(p.cell, xh); xh[j] = x[j] + h) h /= 2;
        const Vector fh = eval_raw(r.exprs, xh);
        for (std::size_t i = 0; i < d.outputs; ++i) CHECK((fh[i] - fx[i]) / h == p.matrix(i, j));
      }
      ++checked;
    }
  }
  CHECK(checked > 50);
}
