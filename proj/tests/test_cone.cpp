#include <doctest.h>

#include "pargeo/cone.hpp"
#include "pargeo/grading.hpp"

using namespace pargeo;

namespace {

Vec unit(int n, int i) {
  Vec v(size_t(n), Rational(0));
  v[size_t(i)] = Rational(1);
  return v;
}

Matrix cols(int n, std::vector<Vec> vs) {
  Matrix m(n, int(vs.size()));
  for (size_t c = 0; c < vs.size(); ++c) m.set_col(int(c), vs[c]);
  return m;
}

}  // namespace

TEST_CASE("cone decomposition for the conformal model around a positive line") {
  LieAlgebra g = construct(AlgebraSpec::so(2, 3));
  Grading gr = grade(g, canonical_grading(g, "conformal"));
  const int n = g.rep_dim();
  Involution sig = involution_from_subspace(g, Subspace::span_of(unit(n, 0) + unit(n, 4)));
  REQUIRE(is_einstein(g, sig, gr).einstein);
  EinsteinExtraction x = extract(g, sig, gr);
  // the fixed part of the zero block is the middle so(1,2)
  CHECK(x.C_plus ==
        Subspace::from_vectors(g.dim(), {unit(g.dim(), 1), unit(g.dim(), 3), unit(g.dim(), 4)}));
  CHECK(x.P == Matrix{{Rational(0), Rational(0), Rational(1)},
                      {Rational(0), Rational(-1), Rational(0)},
                      {Rational(1), Rational(0), Rational(0)}});
  CHECK(x.P_bilinear == Matrix{{Rational(0), Rational(0), Rational(6)},
                               {Rational(0), Rational(-6), Rational(0)},
                               {Rational(6), Rational(0), Rational(0)}});

  Matrix piece = cols(n, {unit(n, 1), unit(n, 2), unit(n, 3)});
  Matrix line = Matrix::column(unit(n, 0) - unit(n, 4));
  ConeHypotheses hyp = check_cone_hypotheses(x, {piece}, line);
  CHECK(hyp.checks.ok());
  CHECK(hyp.checks.witness.empty());
  CHECK(hyp.B_algebra.dim() == 3);
  CHECK(hyp.H_part.dim() == 3);
  CHECK(hyp.L_part.dim() == 1);
  CHECK(hyp.U.dim() == 4);  // a proper invariant summand of the 5-dim rep
  CHECK(hyp.eta == unit(n, 0) - unit(n, 4));

  Calibration cal = calibrate_scaling(x, hyp, {piece}, hyp.eta);
  REQUIRE(cal.per_piece.size() == 1);
  CHECK(cal.per_piece[0].scale == Rational(1, 2));
  CHECK(cal.per_piece[0].embedding == Matrix{{Rational(0), Rational(0), Rational(-1, 2)},
                                             {Rational(0), Rational(1, 2), Rational(0)},
                                             {Rational(-1, 2), Rational(0), Rational(0)}});
  // feeding the piece rescaled by the inverse scale back is calibrated exactly
  Calibration doubled = calibrate_scaling(x, hyp, {piece.scaled(Rational(2))}, hyp.eta);
  CHECK(doubled.per_piece[0].scale == Rational(1));

  ConeConnectionTable t = cone_connection_table(x, hyp, cal);
  CHECK(t.ok());
  Matrix expected(4, 3);
  for (int i = 0; i < 3; ++i) expected.at(i, i) = Rational(1);
  CHECK(t.horizontal_on_section == expected);
  CHECK(t.vertical_on_horizontal == expected);
  CHECK(t.vertical_on_vertical == Matrix::column(unit(4, 3)));
  CHECK(t.horizontal_on_vertical.is_zero());

  SUBCASE("a proper summand the fixed subalgebra moves is rejected") {
    Matrix short_piece = cols(n, {unit(n, 1), unit(n, 2)});
    ConeHypotheses h = check_cone_hypotheses(x, {short_piece}, line);
    CHECK(h.checks.direct_sum);
    CHECK_FALSE(h.checks.ambient_invariant);
    CHECK_FALSE(h.checks.b_invariant);
    CHECK(h.checks.witness == "proper summand is not stable under the fixed subalgebra");
  }
  SUBCASE("a piece outside the reach of the embedded action is rejected") {
    Matrix kpiece = Matrix::column(unit(n, 0) + unit(n, 4));
    ConeHypotheses h = check_cone_hypotheses(x, {piece, kpiece}, line);
    CHECK(h.checks.direct_sum);
    CHECK(h.checks.ambient_invariant);
    CHECK(h.checks.b_trivial_line);
    CHECK(h.checks.b_invariant);
    CHECK_FALSE(h.checks.p_nondegenerate);
    CHECK_FALSE(h.checks.surjective);
    CHECK(h.checks.witness == "a piece vector has no horizontal preimage");
  }
}

TEST_CASE("cone decomposition for the path geometry with two horizontal pieces") {
  LieAlgebra g = construct(AlgebraSpec::sl(4));
  Grading gr = grade(g, canonical_grading(g, "path"));
  const int n = g.rep_dim();
  EinsteinExtraction x = extract(g, cartan_involution(g), gr);
  REQUIRE(x.C_plus.dim() == 1);
  // the fixed zero block is the rotation of the last two rep directions
  Matrix rot(n, n);
  rot.at(2, 3) = Rational(1);
  rot.at(3, 2) = Rational(-1);
  CHECK(g.element(x.C_plus.basis_vec(0)) == rot);

  Matrix p0 = Matrix::column(unit(n, 0));
  Matrix p1 = cols(n, {unit(n, 2), unit(n, 3)});
  Matrix line = Matrix::column(unit(n, 1));
  ConeHypotheses hyp = check_cone_hypotheses(x, {p0, p1}, line);
  CHECK(hyp.checks.ok());
  CHECK(hyp.B_algebra.dim() == 1);
  CHECK(hyp.U.dim() == 4);  // the whole rep: no projection is involved

  Calibration cal = calibrate_scaling(x, hyp, {p0, p1}, hyp.eta);
  REQUIRE(cal.per_piece.size() == 2);
  CHECK(cal.per_piece[0].scale == Rational(1));
  CHECK(cal.per_piece[0].embedding == Matrix::column(Rational(-1) * unit(5, 2)));
  CHECK(cal.per_piece[1].scale == Rational(1));
  CHECK(cal.per_piece[1].embedding == cols(5, {unit(5, 3), unit(5, 4)}));
  ConeConnectionTable t = cone_connection_table(x, hyp, cal);
  CHECK(t.ok());

  SUBCASE("rescaling one piece shows up as its calibration content") {
    Matrix p0s = p0.scaled(Rational(2));
    ConeHypotheses hs = check_cone_hypotheses(x, {p0s, p1}, line);
    REQUIRE(hs.checks.ok());
    Calibration cs = calibrate_scaling(x, hs, {p0s, p1}, hs.eta);
    CHECK(cs.per_piece[0].scale == Rational(2));
    CHECK(cs.per_piece[1].scale == Rational(1));
    CHECK(cone_connection_table(x, hs, cs).ok());
  }
  SUBCASE("swapping the line with the first piece is another valid proposal") {
    // this one reaches the horizontals through the depth-two part
    Matrix q0 = Matrix::column(unit(n, 1));
    Matrix lalt = Matrix::column(unit(n, 0));
    ConeHypotheses h = check_cone_hypotheses(x, {q0, p1}, lalt);
    REQUIRE(h.checks.ok());
    Calibration c = calibrate_scaling(x, h, {q0, p1}, h.eta);
    CHECK(c.per_piece[0].embedding == Matrix::column(unit(5, 2)));
    CHECK(c.per_piece[1].embedding == cols(5, {unit(5, 0), unit(5, 1)}));
    CHECK(cone_connection_table(x, h, c).ok());
  }
  SUBCASE("duplicated pieces are not a direct sum") {
    ConeHypotheses h = check_cone_hypotheses(x, {p0, p0}, line);
    CHECK_FALSE(h.checks.direct_sum);
    CHECK(h.checks.witness == "proposed pieces and line do not sum directly");
  }
  SUBCASE("a rank-two vertical part is reported, not thrown") {
    Matrix fat = cols(n, {unit(n, 1), unit(n, 0)});
    ConeHypotheses h = check_cone_hypotheses(x, {p1}, fat);
    CHECK_FALSE(h.checks.b_trivial_line);
    CHECK(h.checks.direct_sum);
    CHECK(h.checks.p_nondegenerate);
    CHECK(h.checks.surjective);
    CHECK(h.checks.witness == "vertical part is not a line");
  }
  SUBCASE("a line the fixed zero block rotates fails, and downstream ops refuse it") {
    Matrix badline = Matrix::column(unit(n, 3));
    Matrix r1 = cols(n, {unit(n, 1), unit(n, 2)});
    ConeHypotheses h = check_cone_hypotheses(x, {p0, r1}, badline);
    CHECK_FALSE(h.checks.b_trivial_line);
    CHECK_FALSE(h.checks.b_invariant);
    CHECK(h.checks.witness == "the zero-block fixed algebra acts nontrivially on the line");
    CHECK_THROWS_AS(calibrate_scaling(x, h, {p0, r1}, h.eta), math_error);
    CHECK_THROWS_AS(cone_connection_table(x, h, Calibration{}), math_error);
  }
}

TEST_CASE("cone decomposition for the free distribution from its positive part") {
  LieAlgebra g = construct(AlgebraSpec::so(4, 3));
  Grading gr = grade(g, canonical_grading(g, "free_distribution"));
  const int n = g.rep_dim();
  Matrix kb = cols(n, {unit(n, 0) + unit(n, 6), unit(n, 1) + unit(n, 5), unit(n, 2) + unit(n, 4),
                       unit(n, 3)});
  Involution sig = involution_from_subspace(g, Subspace::from_columns(kb));
  CHECK(is_cartan(g, sig));
  REQUIRE(is_einstein(g, sig, gr).einstein);
  EinsteinExtraction x = extract(g, sig, gr);
  CHECK(x.F_plus.dim() == 9);
  CHECK(x.C_plus.dim() == 3);
  CHECK(x.minus_basis.size() == 6);

  // inside the chosen positive part, the fixed zero block pins exactly one line
  Subspace K = Subspace::from_columns(kb);
  Subspace fixed = K;
  Subspace moved = Subspace::zero(n);
  for (int i = 0; i < x.C_plus.dim(); ++i) {
    Matrix rep = g.element(x.C_plus.basis_vec(i));
    fixed = fixed.intersect(Subspace::from_columns(rep.kernel()));
    moved = moved.sum(map_subspace(rep, K));
  }
  REQUIRE(fixed.dim() == 1);
  CHECK(fixed.basis_vec(0) == unit(n, 3));
  REQUIRE(moved.dim() == 3);
  CHECK(moved == Subspace::from_vectors(
                     n, {unit(n, 0) + unit(n, 6), unit(n, 1) + unit(n, 5), unit(n, 2) + unit(n, 4)}));

  ConeHypotheses hyp = check_cone_hypotheses(x, {moved.basis()}, fixed.basis());
  CHECK(hyp.checks.ok());
  CHECK(hyp.B_algebra.dim() == 3);
  CHECK(hyp.H_part.dim() == 3);
  CHECK(hyp.U.dim() == 4);
  CHECK(hyp.eta == unit(n, 3));

  Calibration cal = calibrate_scaling(x, hyp, {moved.basis()}, hyp.eta);
  CHECK(cal.per_piece[0].scale == Rational(1));
  Matrix emb(6, 3);
  emb.at(3, 2) = Rational(1);
  emb.at(4, 1) = Rational(1);
  emb.at(5, 0) = Rational(1);
  CHECK(cal.per_piece[0].embedding == emb);
  CHECK(cone_connection_table(x, hyp, cal).ok());
}

TEST_CASE("the embedding map lands in the fixed subalgebra and closes under brackets") {
  SUBCASE("smallest example by hand") {
    LieAlgebra g = construct(AlgebraSpec::sl(2));
    EinsteinExtraction x = extract(g, cartan_involution(g), grade(g, canonical_grading(g, "projective")));
    CHECK(embed_i(x, Vec{Rational(1)}) == Vec{Rational(-1), Rational(1), Rational(0)});
    CHECK_THROWS_AS(embed_i(x, Vec(size_t(2), Rational(1))), math_error);
  }
  SUBCASE("bracket closure across the path geometry") {
    LieAlgebra g = construct(AlgebraSpec::sl(4));
    EinsteinExtraction x = extract(g, cartan_involution(g), grade(g, canonical_grading(g, "path")));
    const int nm = int(x.minus_basis.size());
    for (int a = 0; a < nm; ++a) {
      Vec wa = embed_i(x, unit(nm, a));
      CHECK(x.F_plus.contains(wa));
      for (int b = a + 1; b < nm; ++b)
        CHECK(x.F_plus.contains(g.bracket(wa, embed_i(x, unit(nm, b)))));
    }
  }
}
