#include <doctest.h>

#include "pargeo/algebra.hpp"
#include "pargeo/grading.hpp"

using namespace pargeo;

namespace {

// Independent oracle: characteristic polynomial by the Faddeev-LeVerrier
// recursion, root multiplicities by repeated synthetic division. No kernel
// computations anywhere on this path.
std::vector<Rational> char_poly(const Matrix& a) {
  const int n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  Matrix m = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    Matrix am = a * m;
    Rational ck = Rational(-1) * am.trace() / Rational(k);
    c[n - k] = ck;
    m = am + Matrix::identity(n).scaled(ck);
  }
  return c;
}

int root_multiplicity(std::vector<Rational> p, const Rational& r) {
  int mult = 0;
  while (p.size() > 1) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry = p.back();
    for (int i = (int)p.size() - 2; i >= 0; --i) {
      q[i] = carry;
      carry = p[i] + r * carry;
    }
    if (!carry.is_zero()) break;
    ++mult;
    p = q;
  }
  return mult;
}

struct GradedInstance {
  LieAlgebra g;
  GradingElement e;
  Grading gr;
  RepGrading rg;
};

GradedInstance make(const AlgebraSpec& spec, const std::string& geometry, int block = 0) {
  LieAlgebra g = construct(spec);
  GradingElement e = canonical_grading(g, geometry, block);
  Grading gr = grade(g, e);
  RepGrading rg = rep_grade(g, e);
  return {std::move(g), std::move(e), std::move(gr), std::move(rg)};
}

}  // namespace

TEST_CASE("ad eigenvalue multiplicities match the characteristic polynomial oracle") {
  struct Row {
    AlgebraSpec spec;
    const char* geometry;
  };
  const Row rows[] = {
      {AlgebraSpec::so(2, 3), "conformal"},    {AlgebraSpec::sl(3), "projective"},
      {AlgebraSpec::sp(2), "contact_projective"}, {AlgebraSpec::su(1, 2), "cr"},
      {AlgebraSpec::sl(4), "path"},            {AlgebraSpec::so_star(2), "isotropic_line"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.geometry);
    auto inst = make(row.spec, row.geometry);
    auto p = char_poly(inst.g.ad_matrix(inst.e.algebra_coords));
    int covered = 0;
    for (int j = -inst.gr.depth(); j <= inst.gr.depth(); ++j) {
      CHECK(root_multiplicity(p, Rational(j)) == inst.gr.component_dim(j));
      covered += inst.gr.component_dim(j);
    }
    CHECK(covered == inst.g.dim());

    auto pr = char_poly(inst.e.rep_matrix);
    int rep_covered = 0;
    for (const auto& piece : inst.rg.pieces()) {
      CHECK(root_multiplicity(pr, piece.nu) == piece.space.dim());
      rep_covered += piece.space.dim();
    }
    CHECK(rep_covered == inst.g.rep_dim());
  }
}

TEST_CASE("canonical grading dimension catalog") {
  struct Row {
    AlgebraSpec spec;
    const char* geometry;
    int block;
    int k;
    std::vector<int> dims;
    std::vector<std::pair<const char*, int>> rep;  // homogeneity -> dimension
  };
  const Row rows[] = {
      {AlgebraSpec::so(2, 3), "conformal", 0, 1, {3, 4, 3}, {{"-1", 1}, {"0", 3}, {"1", 1}}},
      {AlgebraSpec::so(1, 4), "conformal", 0, 1, {3, 4, 3}, {{"-1", 1}, {"0", 3}, {"1", 1}}},
      {AlgebraSpec::so_C(4), "conformal", 0, 1, {4, 4, 4}, {{"-1", 2}, {"0", 4}, {"1", 2}}},
      {AlgebraSpec::so_C(5), "conformal", 0, 1, {6, 8, 6}, {{"-1", 2}, {"0", 6}, {"1", 2}}},
      {AlgebraSpec::sl(3), "projective", 0, 1, {2, 4, 2}, {{"-1/3", 2}, {"2/3", 1}}},
      {AlgebraSpec::sl(2, FieldTag::C), "projective", 0, 1, {2, 2, 2}, {{"-1/2", 2}, {"1/2", 2}}},
      {AlgebraSpec::sl(2, FieldTag::H), "projective", 0, 1, {4, 7, 4}, {{"-1/2", 4}, {"1/2", 4}}},
      {AlgebraSpec::sl(4), "almost_grassmannian", 2, 1, {4, 7, 4}, {{"-1/2", 2}, {"1/2", 2}}},
      {AlgebraSpec::sp(2), "contact_projective", 0, 2, {1, 2, 4, 2, 1},
       {{"-1", 1}, {"0", 2}, {"1", 1}}},
      {AlgebraSpec::sp(2, FieldTag::C), "contact_projective", 0, 2, {2, 4, 8, 4, 2},
       {{"-1", 2}, {"0", 4}, {"1", 2}}},
      {AlgebraSpec::su(1, 2), "cr", 0, 2, {1, 2, 2, 2, 1}, {{"-1", 2}, {"0", 2}, {"1", 2}}},
      {AlgebraSpec::so(4, 3), "free_distribution", 0, 2, {3, 3, 9, 3, 3},
       {{"-1", 3}, {"0", 1}, {"1", 3}}},
      {AlgebraSpec::so(3, 4), "free_distribution", 0, 2, {3, 3, 9, 3, 3},
       {{"-1", 3}, {"0", 1}, {"1", 3}}},
      {AlgebraSpec::sl(4), "path", 0, 2, {2, 3, 5, 3, 2},
       {{"-3/4", 2}, {"1/4", 1}, {"5/4", 1}}},
      {AlgebraSpec::sp_pq(1, 1), "isotropic_line", 0, 1, {3, 4, 3}, {{"-1/2", 4}, {"1/2", 4}}},
      {AlgebraSpec::sp_pq(1, 2), "isotropic_line", 0, 2, {3, 4, 7, 4, 3},
       {{"-1", 4}, {"0", 4}, {"1", 4}}},
      {AlgebraSpec::so_star(2), "isotropic_line", 0, 1, {1, 4, 1}, {{"-1/2", 4}, {"1/2", 4}}},
      {AlgebraSpec::so_star(3), "isotropic_line", 0, 2, {1, 4, 5, 4, 1},
       {{"-1", 4}, {"0", 4}, {"1", 4}}},
  };
  for (const auto& row : rows) {
    auto inst = make(row.spec, row.geometry, row.block);
    INFO(inst.g.name(), " / ", row.geometry);
    CHECK(inst.gr.depth() == row.k);
    CHECK(inst.gr.dims() == row.dims);
    REQUIRE(inst.rg.pieces().size() == row.rep.size());
    for (size_t i = 0; i < row.rep.size(); ++i) {
      CHECK(inst.rg.pieces()[i].nu == Rational::parse(row.rep[i].first));
      CHECK(inst.rg.pieces()[i].space.dim() == row.rep[i].second);
    }
  }
}

TEST_CASE("graded structure invariants") {
  struct Row {
    AlgebraSpec spec;
    const char* geometry;
  };
  const Row rows[] = {
      {AlgebraSpec::so(2, 3), "conformal"},          {AlgebraSpec::su(1, 2), "cr"},
      {AlgebraSpec::so(4, 3), "free_distribution"},  {AlgebraSpec::sl(4), "path"},
      {AlgebraSpec::so_star(3), "isotropic_line"},   {AlgebraSpec::sl(2, FieldTag::H), "projective"},
  };
  for (const auto& row : rows) {
    auto inst = make(row.spec, row.geometry);
    INFO(inst.g.name(), " / ", row.geometry);
    std::string why;
    CHECK_MESSAGE(bracket_homogeneity_ok(inst.g, inst.gr, &why), why);
    CHECK_MESSAGE(killing_pairing_ok(inst.g, inst.gr, &why), why);
    CHECK_MESSAGE(rep_compatibility_ok(inst.g, inst.gr, inst.rg, &why), why);
    CHECK(reconstruct_grading_element(inst.g, inst.gr) == inst.e.algebra_coords);
  }
}

TEST_CASE("image degree catalog") {
  struct Row {
    AlgebraSpec spec;
    const char* geometry;
    int block;
    const char* degree;
    bool exact;
  };
  const Row rows[] = {
      {AlgebraSpec::so(2, 3), "conformal", 0, "1", true},
      {AlgebraSpec::so(1, 4), "conformal", 0, "1", true},
      {AlgebraSpec::so_C(4), "conformal", 0, "1", true},
      {AlgebraSpec::sl(3), "projective", 0, "2/3", true},
      {AlgebraSpec::sl(2, FieldTag::H), "projective", 0, "1/2", true},
      {AlgebraSpec::sl(4), "almost_grassmannian", 2, "1/2", true},
      {AlgebraSpec::sl(4), "path", 0, "1/4", false},
      {AlgebraSpec::su(1, 2), "cr", 0, "1", false},
      {AlgebraSpec::sp(2), "contact_projective", 0, "1", false},
      {AlgebraSpec::sp_pq(1, 1), "isotropic_line", 0, "1/2", false},
      {AlgebraSpec::so(4, 3), "free_distribution", 0, "1", false},
      {AlgebraSpec::so_star(2), "isotropic_line", 0, "1/2", false},
      {AlgebraSpec::so_star(3), "isotropic_line", 0, "1", false},
  };
  for (const auto& row : rows) {
    auto inst = make(row.spec, row.geometry, row.block);
    INFO(inst.g.name(), " / ", row.geometry);
    auto deg = image_degree(inst.g, inst.gr, inst.rg, row.geometry, 12345);
    CHECK(deg.degree == Rational::parse(row.degree));
    CHECK(deg.exact == row.exact);
    CHECK(deg.degree.sign() > 0);
    // the witness really attains the reported degree
    CHECK(inst.gr.filtrand(1).contains(deg.witness));
  }
}

TEST_CASE("image degree is stable under reseeding for sampled instances") {
  auto inst = make(AlgebraSpec::su(1, 2), "cr");
  auto a = image_degree(inst.g, inst.gr, inst.rg, "cr", 1);
  auto b = image_degree(inst.g, inst.gr, inst.rg, "cr", 987654321);
  CHECK(a.degree == b.degree);
}

TEST_CASE("rank bound reports") {
  {
    auto inst = make(AlgebraSpec::so_star(3), "isotropic_line");
    auto rep = rank_bound_check(inst.gr, inst.rg, 3);
    CHECK(rep.r_V == 12);
    CHECK(rep.r_g_minus == 5);
    CHECK(rep.r_V_top == 4);
    CHECK(rep.ok);
    CHECK_FALSE(rank_bound_check(inst.gr, inst.rg, 2).ok);  // 12 > 5 + 4 + 2
  }
  {
    auto inst = make(AlgebraSpec::so(2, 3), "conformal");
    auto rep = rank_bound_check(inst.gr, inst.rg, 1);
    CHECK(rep.r_V == 5);
    CHECK(rep.r_g_minus == 3);
    CHECK(rep.r_V_top == 1);
    CHECK(rep.ok);
  }
  {
    auto inst = make(AlgebraSpec::sl(3), "projective");
    auto rep = rank_bound_check(inst.gr, inst.rg, 0);
    CHECK(rep.r_V == 3);
    CHECK(rep.r_g_minus == 2);
    CHECK(rep.r_V_top == 1);
    CHECK(rep.ok);
  }
}

TEST_CASE("filtrands nest correctly") {
  auto inst = make(AlgebraSpec::so(2, 3), "conformal");
  CHECK(inst.gr.filtrand(1).dim() == 3);
  CHECK(inst.gr.filtrand(0).dim() == 7);
  CHECK(inst.gr.filtrand(-1).dim() == 10);
  CHECK(inst.gr.filtrand(-5).dim() == 10);
  CHECK(inst.gr.filtrand(2).dim() == 0);
  CHECK(inst.gr.filtrand(0).contains(inst.gr.filtrand(1)));
  CHECK(inst.gr.component(7).dim() == 0);

  CHECK(inst.rg.filtrand(Rational(1)).dim() == 1);
  CHECK(inst.rg.filtrand(Rational(0)).dim() == 4);
  CHECK(inst.rg.filtrand(Rational(-1)).dim() == 5);
  CHECK(inst.rg.piece_at(Rational(5)).dim() == 0);
  CHECK(inst.rg.top().nu == Rational(1));
}

TEST_CASE("degenerate and invalid grading elements") {
  LieAlgebra sl2 = construct(AlgebraSpec::sl(2));
  {
    // zero element: everything sits in degree zero
    GradingElement zero{Vec(sl2.dim(), Rational(0)), Matrix::zero(2, 2)};
    Grading gr = grade(sl2, zero);
    CHECK(gr.depth() == 0);
    CHECK(gr.dims() == std::vector<int>{3});
  }
  {
    // nilpotent: not diagonalizable
    Matrix e12 = Matrix::zero(2, 2);
    e12.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(grade(sl2, element_from_rep(sl2, e12)), math_error);
  }
  {
    LieAlgebra sl3 = construct(AlgebraSpec::sl(3));
    Matrix half = Matrix::diagonal({Rational(1, 2), Rational(0), Rational(-1, 2)});
    auto e = element_from_rep(sl3, half);
    CHECK_THROWS_AS(grade(sl3, e), math_error);           // ad eigenvalues not integers
    CHECK_THROWS_AS(rep_grade(sl3, e), math_error);       // homogeneities differ by 1/2
  }
  {
    // coordinates and matrix must agree
    GradingElement bad{Vec(sl2.dim(), Rational(0)), Matrix::identity(2)};
    CHECK_THROWS_AS(grade(sl2, bad), math_error);
  }
}

TEST_CASE("geometry and family compatibility is enforced") {
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::sl(3)), "conformal"), math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::so(2, 3)), "cr"), math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::so(3, 3)), "free_distribution"),
                  math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::sp(1)), "contact_projective"),
                  math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::so(5, 0)), "conformal"), math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::sl(4)), "almost_grassmannian", 0),
                  math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::sl(4)), "almost_grassmannian", 4),
                  math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::sl(3)), "florble"), math_error);
  CHECK_THROWS_AS(canonical_grading(construct(AlgebraSpec::su(0, 3)), "cr"), math_error);
}
