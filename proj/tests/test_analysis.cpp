#include "random_maps.hpp"

#include "tropcheck/analysis.hpp"
#include "tropcheck/clarke.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tropcheck;
using namespace tropcheck::testing;

namespace {

MatrixQ complex_matrix(const Rational& re, const Rational& im) { return MatrixQ{{re, -im}, {im, re}}; }

MatrixQ combination(const std::vector<MatrixQ>& ms, const Vector& w) {
  MatrixQ acc(ms.front().rows(), ms.front().cols());
  for (std::size_t i = 0; i < ms.size(); ++i) acc = acc + ms[i] * w[i];
  return acc;
}

void check_witness(const ClarkeSet& c) {
  REQUIRE(c.witness);
  if (!c.witness->weights) return;
  const Vector& w = *c.witness->weights;
  Rational total = 0;
  for (const auto& v : w) {
    CHECK(v >= 0);
    total += v;
  }
  CHECK(total == 1);
  CHECK(det(combination(c.matrices, w)) == 0);
}

// Sign pattern of det over barycentric weights with denominator k.
std::set<int> grid_signs(const std::vector<MatrixQ>& ms, int k) {
  std::set<int> signs;
  const std::size_t m = ms.size();
  std::vector<int> parts(m, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == m) {
      parts[i] = left;
      Vector w;
      for (int p : parts) w.push_back(Rational(p, k));
      signs.insert(sign(det(combination(ms, w))));
      return;
    }
    for (int p = 0; p <= left; ++p) {
      parts[i] = p;
      self(self, i + 1, left - p);
    }
  };
  rec(rec, 0, k);
  return signs;
}

}  // namespace

TEST_CASE("Jacobian sign screens") {
  const SignSummary e2 = jacobian_signs(enumerate_pieces(load_fixture("example2.trop")));
  CHECK(e2.pos == 8);
  CHECK(e2.neg == 0);
  CHECK(e2.uniform_nonzero());
  CHECK(e2.common_sign() == 1);

  const SignSummary both_pos = jacobian_signs(enumerate_pieces(parse_map("map m(x, y) = (min(x, 2x), y)")));
  CHECK(both_pos.pos == 2);
  CHECK(both_pos.uniform_nonzero());

  const SignSummary mixed = jacobian_signs(enumerate_pieces(parse_map("map m(x, y) = (min(x, -x), y)")));
  CHECK(mixed.pos == 1);
  CHECK(mixed.neg == 1);
  CHECK(mixed.mixed_pair);
  CHECK_FALSE(mixed.uniform_nonzero());

  const SignSummary flat = jacobian_signs(enumerate_pieces(parse_map("map m(x, y) = (min(x, 0), y)")));
  CHECK(flat.zero == 1);
  CHECK(flat.zero_piece);
}

TEST_CASE("Clarke sets") {
  const Decomposition e1 = enumerate_pieces(load_fixture("example1.trop"));
  const ClarkeSet origin = clarke_at(e1, Vector{0, 0});
  CHECK(origin.verdict == ClarkeVerdict::ContainsSingular);
  CHECK(origin.piece_ids == std::vector<std::size_t>{1, 2, 3, 4});
  check_witness(origin);
  REQUIRE(origin.witness->weights);
  CHECK(*origin.witness->weights == Vector{0, Rational(1, 2), Rational(1, 2), 0});

  const ClarkeSet smooth = clarke_at(e1, Vector{1, 1});
  CHECK(smooth.verdict == ClarkeVerdict::NonsingularCertified);
  CHECK(smooth.piece_ids == std::vector<std::size_t>{1});

  const Decomposition id = enumerate_pieces(load_fixture("identity.trop"));
  CHECK(clarke_at(id, Vector{Rational(-4, 9), 2}).verdict == ClarkeVerdict::NonsingularCertified);

  // The cube-roots configuration: segments avoid singularity but the hull does not.
  const std::vector<MatrixQ> triangle{complex_matrix(1, 0), complex_matrix(-1, 1), complex_matrix(-1, -1)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK_FALSE(segment_singularity(triangle[i], triangle[j]));
  const ClarkeSet hull = clarke_of(triangle);
  CHECK(hull.verdict == ClarkeVerdict::ContainsSingular);
  check_witness(hull);
  CHECK(*hull.witness->weights == Vector{Rational(1, 2), Rational(1, 4), Rational(1, 4)});

  const std::vector<MatrixQ> arc{complex_matrix(1, 0), complex_matrix(1, 1), complex_matrix(0, 1)};
  CHECK(clarke_of(arc).verdict == ClarkeVerdict::NonsingularCertified);

  CHECK(clarke_of({MatrixQ{{1, 1}, {1, 1}}}).verdict == ClarkeVerdict::ContainsSingular);

  // Three dimensions with no singular segment stays undecided.
  const MatrixQ i3 = MatrixQ::identity(3);
  const MatrixQ s3{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, t3{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK(clarke_of({i3, s3, t3}).verdict == ClarkeVerdict::UnknownNoSingularFound);
  CHECK(clarke_of({i3, s3}).verdict == ClarkeVerdict::NonsingularCertified);

  SUBCASE("planar hull verdicts agree with a weight grid") {
    std::mt19937_64 rng(71);
    int certified = 0, singular = 0;
    for (int trial = 0; trial < 120; ++trial) {
      std::vector<MatrixQ> ms;
      const auto k = random_int(rng, 2, 4);
      const bool near_identity = trial % 2 == 0;
      for (std::int64_t i = 0; i < k; ++i) {
        MatrixQ m(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c)
            m(r, c) = small_int(rng, -3, 3) + (near_identity && r == c ? 4 : 0);
        ms.push_back(m);
      }
      const ClarkeSet c = clarke_of(ms);
      const auto signs = grid_signs(ms, 12);
      if (c.verdict == ClarkeVerdict::NonsingularCertified) {
        ++certified;
        CHECK(signs.size() == 1);
        CHECK_FALSE(signs.count(0));
      } else {
        REQUIRE(c.verdict == ClarkeVerdict::ContainsSingular);
        ++singular;
        if (c.witness->weights) check_witness(c);
      }
      if (signs.size() > 1 || signs.count(0)) CHECK(c.verdict == ClarkeVerdict::ContainsSingular);
    }
    CHECK(certified > 10);
    CHECK(singular > 10);
  }
}

TEST_CASE("mixed signs meet along singular segments") {
  std::mt19937_64 rng(72);
  int found = 0;
  for (int trial = 0; trial < 60 && found < 15; ++trial) {
    const auto r = random_map(rng, 2, 2);
    const Decomposition d = enumerate_pieces(r.map);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const auto &a = d.pieces[i], &b = d.pieces[j];
        if (sign(*a.jac) * sign(*b.jac) >= 0) continue;
        const auto x = relative_interior_point(a.cell.intersect(b.cell));
        if (!x) continue;
        ++found;
        const auto root = segment_singularity(a.matrix, b.matrix);
        REQUIRE(root);
        CHECK(root->lo >= 0);
        CHECK(root->hi <= 1);
        CHECK(clarke_at(d, *x).verdict == ClarkeVerdict::ContainsSingular);
      }
  }
  CHECK(found > 0);
}

TEST_CASE("regular values") {
  const Decomposition id = enumerate_pieces(load_fixture("identity.trop"));
  const auto idc = certify_regular_value(id, Vector{3, Rational(-1, 2)}, Vector{3, Rational(-1, 2)});
  REQUIRE(idc);
  CHECK(idc->checked_facets == 0);

  const Decomposition e1 = enumerate_pieces(load_fixture("example1.trop"));
  const auto e1c = certify_regular_value(e1, Vector{1, 1}, Vector{1, 1});
  REQUIRE(e1c);
  CHECK(e1c->checked_facets == 8);
  CHECK_FALSE(certify_regular_value(e1, Vector{0, 0}, Vector{0, 0}));
  CHECK_FALSE(certify_regular_value(e1, Vector{3, 0}, Vector{3, 0}));

  // f(1,1,0) lies on the crease x = y of the second coordinate, so its image is not regular.
  const Decomposition e2 = enumerate_pieces(load_fixture("example2.trop"));
  std::pair<std::size_t, std::size_t> failing{0, 0};
  CHECK_FALSE(certify_regular_value(e2, Vector{1, 3, 1}, Vector{1, 1, 0}, &failing));
  CHECK(failing.first >= 1);

  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const RegularValueCertificate c = find_regular_value(e2, {seed, 32});
    CHECK(certify_regular_value(e2, c.y0, c.source_point));
    CHECK(evaluate(e2, c.source_point) == c.y0);
  }
}

TEST_CASE("preimages and degree") {
  const TropicalMap f2 = load_fixture("example2.trop");
  const Decomposition e2 = enumerate_pieces(f2);
  const Preimage p = preimage(e2, Vector{1, 3, 1});
  std::set<Vector> pts;
  for (const auto& q : p.points) pts.insert(q.point);
  CHECK(pts == std::set<Vector>{{1, 1, 0}, {-1, -1, 8}});
  CHECK_FALSE(p.degenerate());

  const Decomposition id = enumerate_pieces(load_fixture("identity.trop"));
  const Preimage pi = preimage(id, Vector{Rational(5, 3), 0});
  REQUIRE(pi.points.size() == 1);
  CHECK(pi.points[0].point == Vector{Rational(5, 3), 0});
  CHECK(degree(id, find_regular_value(id, {})) == 1);
  CHECK(degree(e2, find_regular_value(e2, {})) == 2);

  const Decomposition flip = enumerate_pieces(parse_map("map m(x, y) = (-x, y)"));
  CHECK(degree(flip, find_regular_value(flip, {})) == -1);

  const Decomposition e1 = enumerate_pieces(load_fixture("example1.trop"));
  CHECK(preimage(e1, find_regular_value(e1, {4, 32}).y0).points.size() == 1);

  // A singular piece whose solution set meets its cell.
  const Decomposition flat = enumerate_pieces(parse_map("map m(x, y) = (min(x, 0), y)"));
  CHECK(preimage(flat, Vector{0, 1}).degenerate());
  CHECK_FALSE(preimage(flat, Vector{-1, 1}).degenerate());
  CHECK_THROWS(preimage(flat, Vector{1, 2, 3}));
}

TEST_CASE("deciding isomorphism") {
  const TropicalMap e1 = load_fixture("example1.trop");
  const AnalysisReport r1 = decide_isomorphism(e1);
  CHECK(r1.verdict == Verdict::Isomorphism);
  CHECK(r1.reason == Reason::SingletonPreimage);
  CHECK(r1.degree == 1);
  REQUIRE(r1.fast_path);
  CHECK(*r1.fast_path == Verdict::Isomorphism);
  CHECK(clarke_at(enumerate_pieces(e1), Vector{0, 0}).verdict == ClarkeVerdict::ContainsSingular);

  const AnalysisReport r2 = decide_isomorphism(load_fixture("example2.trop"));
  CHECK(r2.verdict == Verdict::NotIsomorphism);
  CHECK(r2.reason == Reason::MultiplePreimages);
  CHECK(r2.degree == 2);
  REQUIRE(r2.witnesses.size() == 2);
  const Vector &u = r2.witnesses[0], &v = r2.witnesses[1];
  const bool related = (v == Vector{-u[0], -u[1], u[2] + 4 * u[0] + 4 * u[1]}) ||
                       (u == Vector{-v[0], -v[1], v[2] + 4 * v[0] + 4 * v[1]});
  CHECK(related);

  const AnalysisReport ri = decide_isomorphism(load_fixture("identity.trop"));
  CHECK(ri.verdict == Verdict::Isomorphism);
  CHECK(ri.degree == 1);

  const AnalysisReport rg = decide_isomorphism(load_fixture("g2d.trop"));
  CHECK(rg.verdict == Verdict::NotIsomorphism);
  CHECK_FALSE(rg.fast_path);

  const AnalysisReport rm = decide_isomorphism(parse_map("map m(x, y) = (min(x, -x), y)"));
  CHECK(rm.verdict == Verdict::NotIsomorphism);
  CHECK(rm.reason == Reason::MixedSigns);
  CHECK_FALSE(rm.degree);

  const AnalysisReport rz = decide_isomorphism(parse_map("map m(x, y) = (min(x, 0), y)"));
  CHECK(rz.verdict == Verdict::NotIsomorphism);
  CHECK(rz.reason == Reason::ZeroJacobian);

  const TropicalMap shear = parse_map("map m(x, y) = (min(x, x + y), y)");
  CHECK(plane_fast_path(shear, enumerate_pieces(shear)) == Verdict::Isomorphism);
  CHECK(decide_isomorphism(shear).verdict == Verdict::Isomorphism);

  // One-dimensional maps, the second one collapses to x after normalization.
  const AnalysisReport rs = decide_isomorphism(parse_map("map m(x) = (min(x, 3x))"));
  CHECK(rs.verdict == Verdict::Isomorphism);
  const AnalysisReport rf = decide_isomorphism(parse_map("map m(x) = (min(x, 0) - min(-x, 0))"));
  CHECK(rf.verdict == Verdict::Isomorphism);
}

TEST_CASE("inverses") {
  const Decomposition id = invert(load_fixture("identity.trop"));
  REQUIRE(id.size() == 1);
  CHECK(id.pieces[0].matrix == MatrixQ::identity(2));

  const Decomposition lin = invert(parse_map("map m(x, y) = (x + 2y, y)"));
  REQUIRE(lin.size() == 1);
  CHECK(lin.pieces[0].matrix == MatrixQ{{1, -2}, {0, 1}});

  const TropicalMap e1 = load_fixture("example1.trop");
  const Decomposition fwd = enumerate_pieces(e1);
  const Decomposition inv = invert(e1);
  CHECK(inv.size() == 4);
  for (const Vector& x : {Vector{5, 3}, Vector{-2, -7}}) CHECK(evaluate(inv, eval_expr(e1, x)) == x);
  CHECK(eval_expr(e1, Vector{-2, -7}) == Vector{-24, -11});
  for (const auto& q : inv.pieces) CHECK(*q.jac * *fwd.piece(q.id).jac == 1);

  CHECK_THROWS_AS(invert(load_fixture("example2.trop")), NotInvertible);
}

TEST_CASE("report invariants on random maps") {
  std::mt19937_64 rng(73);
  int iso = 0, multi = 0;
  std::vector<RandomMap> maps;
  for (const char* name : {"g2d.trop", "h3d.trop", "example2.trop", "example1.trop"}) {
    const std::string text = read_fixture(name);
    maps.push_back({parse_source(text).coords, parse_map(text)});
  }
  for (int trial = 0; trial < 60; ++trial) maps.push_back(trial % 2 ? random_concave_plane_map(rng) : random_map(rng, 2, 2));
  for (std::size_t trial = 0; trial < maps.size(); ++trial) {
    const RandomMap& r = maps[trial];
    const std::size_t n = r.map.dim();
    const Decomposition d = enumerate_pieces(r.map);
    const AnalysisReport rep = decide_isomorphism(r.map, d, {static_cast<std::uint64_t>(trial), 32});
    REQUIRE(rep.verdict != Verdict::Unknown);
    if (rep.verdict == Verdict::Isomorphism) {
      ++iso;
      CHECK(rep.signs.uniform_nonzero());
      CHECK(rep.degree == rep.signs.common_sign());
      REQUIRE(rep.inverse);
      for (int s = 0; s < 10; ++s) {
        const Vector x = random_point(rng, n);
        CHECK(evaluate(*rep.inverse, eval_raw(r.exprs, x)) == x);
      }
    }
    if (rep.reason == Reason::MultiplePreimages) {
      ++multi;
      REQUIRE(rep.regular_value);
      for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
        CHECK(eval_raw(r.exprs, rep.witnesses[i]) == rep.regular_value->y0);
        for (std::size_t j = i + 1; j < rep.witnesses.size(); ++j) CHECK(rep.witnesses[i] != rep.witnesses[j]);
      }
    }
    if (rep.fast_path) CHECK(*rep.fast_path == rep.verdict);
    for (int s = 0; s < 10; ++s) CHECK(preimage(d, random_point(rng, n)).points.size() <= d.size());
  }
  CHECK(iso > 5);
  CHECK(multi >= 3);
}

TEST_CASE("degree does not depend on the regular value") {
  for (const char* name : {"identity.trop", "example1.trop", "g2d.trop", "h3d.trop", "example2.trop"}) {
    const Decomposition d = enumerate_pieces(load_fixture(name));
    std::set<int> degrees;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) degrees.insert(degree(d, find_regular_value(d, {seed, 32})));
    CHECK(degrees.size() == 1);
  }
}
