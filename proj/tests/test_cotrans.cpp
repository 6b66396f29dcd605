#include <doctest.h>

#include <random>

#include "pargeo/cotrans.hpp"

using namespace pargeo;

namespace {

Quaternion random_quat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  return Quaternion(Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng)));
}

QuatVec random_qvec(int m, std::mt19937_64& rng) {
  QuatVec v(m);
  for (auto& q : v) q = random_quat(rng);
  return v;
}

// direct slot formula, independent of the component-matrix assembly
Quaternion htilde_direct(const QuatVec& v, const QuatVec& w) {
  Quaternion total;
  for (size_t l = 0; l < v.size(); ++l) total = total + v[l].conj() * Quaternion::j() * w[l];
  return total;
}

Vec random_vec(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  Vec v(n);
  for (auto& x : v) x = Rational(c(rng));
  return v;
}

}  // namespace

TEST_CASE("cotransitivity degrees reproduce the classification") {
  const AlgebraSpec specs[] = {
      AlgebraSpec::sl(2),
      AlgebraSpec::sl(3),
      AlgebraSpec::sl(2, FieldTag::C),
      AlgebraSpec::sl(2, FieldTag::H),
      AlgebraSpec::sp(2),
      AlgebraSpec::sp(2, FieldTag::C),
      AlgebraSpec::so(2, 3),
      AlgebraSpec::so(1, 4),
      AlgebraSpec::so(5, 0),
      AlgebraSpec::su(1, 2),
      AlgebraSpec::su(0, 2),
      AlgebraSpec::sp_pq(1, 1),
      AlgebraSpec::sp_pq(1, 2),
      AlgebraSpec::so_C(4),
      AlgebraSpec::so_C(5),
      AlgebraSpec::so_star(2),
      AlgebraSpec::so_star(3),
  };
  for (const auto& spec : specs) {
    LieAlgebra g = construct(spec);
    INFO(g.name());
    CotransitivityResult res = cotransitivity_degree(g, 2718);
    CHECK(res.d == expected_cotransitivity(spec));
    CHECK(res.exact);
    CHECK(res.tested > 50);
    // the witness reproduces the degree on recomputation
    OrbitReport again = orbit_codim(g, res.witness.vector);
    CHECK(again.codim == res.d);
    CHECK(again.orbit_dim + again.codim == g.rep_dim());
  }
}

TEST_CASE("orbit of the zero vector is rejected") {
  LieAlgebra g = construct(AlgebraSpec::sl(2));
  CHECK_THROWS_AS(orbit_codim(g, Vec(2, Rational(0))), math_error);
}

TEST_CASE("representatives carry the documented norm types") {
  {
    LieAlgebra g = construct(AlgebraSpec::so(2, 3));
    auto reps = orbit_type_representatives(g);
    REQUIRE(reps.size() == 3);
    const Matrix& h = *g.invariant_form();
    auto norm = [&](const Vec& v) {
      Rational s(0);
      Vec hv = h.apply(v);
      for (size_t i = 0; i < v.size(); ++i) s += v[i] * hv[i];
      return s;
    };
    CHECK(norm(reps[0]).is_zero());
    CHECK(norm(reps[1]).sign() > 0);
    CHECK(norm(reps[2]).sign() < 0);
  }
  {
    LieAlgebra g = construct(AlgebraSpec::so_star(3));
    auto reps = orbit_type_representatives(g);
    REQUIRE(reps.size() == 2);
    QuaternionicForm q = QuaternionicForm::standard(3);
    CHECK_FALSE(htilde(q, reps[0], reps[0]).is_zero());
    CHECK(htilde(q, reps[1], reps[1]).is_zero());
  }
}

TEST_CASE("orbits equal the form-orthogonal complement") {
  const AlgebraSpec specs[] = {
      AlgebraSpec::so(2, 3),   AlgebraSpec::so(1, 4),  AlgebraSpec::su(1, 2),
      AlgebraSpec::sp_pq(1, 1), AlgebraSpec::so_C(4),  AlgebraSpec::so_star(2),
      AlgebraSpec::so_star(3),
  };
  std::mt19937_64 rng(424242);
  for (const auto& spec : specs) {
    LieAlgebra g = construct(spec);
    INFO(g.name());
    std::vector<Vec> vectors = orbit_type_representatives(g);
    for (int i = 0; i < 10; ++i) {
      Vec v = random_vec(g.rep_dim(), rng);
      if (!is_zero(v)) vectors.push_back(v);
    }
    for (const Vec& v : vectors) CHECK(orbit_space(g, v) == form_perp(g, v));
  }
}

TEST_CASE("transitive families have no invariant form and full orbits") {
  for (const auto& spec : {AlgebraSpec::sl(3), AlgebraSpec::sp(2)}) {
    LieAlgebra g = construct(spec);
    CHECK_THROWS_AS(form_perp(g, orbit_type_representatives(g)[0]), math_error);
    CHECK(orbit_codim(g, orbit_type_representatives(g)[0]).codim == 0);
  }
}

TEST_CASE("quaternionic form assembly matches the direct slot formula") {
  std::mt19937_64 rng(5150);
  for (int m : {1, 2, 3}) {
    QuaternionicForm q = QuaternionicForm::standard(m);
    for (int trial = 0; trial < 20; ++trial) {
      QuatVec a = random_qvec(m, rng);
      QuatVec b = random_qvec(m, rng);
      CHECK(htilde(q, realify_vec(a), realify_vec(b)) == htilde_direct(a, b));
    }
  }
}

TEST_CASE("htilde hermitian properties") {
  std::mt19937_64 rng(31415);
  const int m = 2;
  QuaternionicForm q = QuaternionicForm::standard(m);
  for (int trial = 0; trial < 25; ++trial) {
    Vec v = random_vec(4 * m, rng);
    Vec w = random_vec(4 * m, rng);
    Quaternion a = random_quat(rng);
    Quaternion b = random_quat(rng);
    // scalars act through the structure maps: htilde(a.v, b.w) = a htilde(v,w) conj(b)
    Vec av = structure_map(a, m).apply(v);
    Vec bw = structure_map(b, m).apply(w);
    CHECK(htilde(q, av, bw) == a * htilde(q, v, w) * b.conj());
    CHECK(htilde(q, v, w) == -(htilde(q, w, v).conj()));
    CHECK(htilde(q, v, v).w.is_zero());  // purely imaginary norm
  }
}

TEST_CASE("htilde maps onto the imaginary quaternions against any nonzero vector") {
  std::mt19937_64 rng(1618);
  for (int m : {2, 3}) {
    QuaternionicForm q = QuaternionicForm::standard(m);
    std::vector<Vec> vectors;
    for (int i = 0; i < 5; ++i) {
      Vec v = random_vec(4 * m, rng);
      if (!is_zero(v)) vectors.push_back(v);
    }
    Vec null_rep(4 * m, Rational(0));
    null_rep[0] = Rational(1);
    null_rep[5] = Rational(1);
    vectors.push_back(null_rep);
    for (const Vec& v : vectors) {
      // rows of w -> Im htilde(w, v)
      std::vector<Vec> rows = {q.g0_k.apply(v), q.g0.apply(v), q.g0_i.apply(v)};
      Matrix rmat(3, 4 * m);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4 * m; ++c) rmat.at(r, c) = rows[r][c];
      CHECK(rmat.rank() == 3);
    }
  }
}

TEST_CASE("adapted basis in the non-null case") {
  struct Probe {
    int m;
    Vec u;
  };
  std::vector<Probe> probes;
  {
    Vec u(4, Rational(0));
    u[0] = Rational(1);  // htilde(u,u) = j, rational unit norm
    probes.push_back({1, u});
  }
  {
    Vec u(8, Rational(0));
    u[0] = Rational(1);
    u[4] = Rational(1);
    u[5] = Rational(1);  // htilde(u,u) = j - 2k, norm^2 = 5 not a square
    probes.push_back({2, u});
  }
  {
    Vec u(12, Rational(0));
    u[0] = Rational(2);
    u[6] = Rational(1);
    u[11] = Rational(-3);
    probes.push_back({3, u});
  }
  for (const auto& probe : probes) {
    INFO("m = ", probe.m);
    QuaternionicForm q = QuaternionicForm::standard(probe.m);
    AdaptedBasis ab = adapted_basis(q, probe.u);
    REQUIRE_FALSE(ab.null_case);
    CHECK_FALSE(ab.z.is_zero());
    CHECK(ab.z.w.is_zero());

    // u = first basis vector
    REQUIRE((int)ab.vectors.size() == 4 * probe.m);
    Vec expected(4 * probe.m, Rational(0));
    expected[0] = Rational(1);
    CHECK(ab.u_coords == expected);
    CHECK(ab.vectors[0] == probe.u);

    // rotated units satisfy the quaternion relations
    ScaledQuaternion minus_one(Quaternion(Rational(-1)), Rational(1));
    CHECK(ab.i_rot * ab.i_rot == minus_one);
    CHECK(ab.j_rot * ab.j_rot == minus_one);
    CHECK(ab.k_rot * ab.k_rot == minus_one);
    CHECK(ab.i_rot * ab.j_rot == ab.k_rot);
    CHECK(ab.j_rot * ab.k_rot == ab.i_rot);
    CHECK(ab.k_rot * ab.i_rot == ab.j_rot);
    CHECK(ab.i_rot * ab.j_rot == -(ab.j_rot * ab.i_rot));

    // j' is the direction of z
    CHECK(ab.j_rot == ScaledQuaternion::unit(ab.z));

    // h' = -Re(z htilde(.,.)) is positive on the frame vectors and the frame
    // is htilde-orthogonal
    for (int a = 0; a < probe.m; ++a) {
      Quaternion za = htilde(q, ab.vectors[4 * a], ab.vectors[4 * a]);
      Quaternion prod = ab.z * za;
      CHECK(Rational(-1) * prod.w > Rational(0));
      for (int b = a + 1; b < probe.m; ++b)
        CHECK(htilde(q, ab.vectors[4 * a], ab.vectors[4 * b]).is_zero());
    }
  }
}

TEST_CASE("adapted basis in the null case") {
  for (int m : {2, 3}) {
    INFO("m = ", m);
    QuaternionicForm q = QuaternionicForm::standard(m);
    Vec u(4 * m, Rational(0));
    u[0] = Rational(1);
    u[5] = Rational(1);  // (1, i, 0, ...) is htilde-null
    REQUIRE(htilde(q, u, u).is_zero());

    AdaptedBasis ab = adapted_basis(q, u);
    REQUIRE(ab.null_case);
    CHECK(ab.z.is_zero());
    CHECK_FALSE(ab.pairing.is_zero());
    CHECK(ab.pairing.w.is_zero());

    // coordinate pattern (1,0,0,0,0,1,0,...)
    REQUIRE((int)ab.vectors.size() == 4 * m);
    Vec expected(4 * m, Rational(0));
    expected[0] = Rational(1);
    expected[5] = Rational(1);
    CHECK(ab.u_coords == expected);

    // htilde(v,v) = -htilde(w,w) = 2 htilde(u,u'); vectors[0] = v/2 and
    // vectors[5] = w/2 so the stored norms are scaled by 1/4
    Quaternion zv = htilde(q, ab.vectors[0], ab.vectors[0]);
    Quaternion zw = htilde(q, ab.vectors[5], ab.vectors[5]);
    CHECK(Rational(4) * zv == Rational(2) * ab.pairing);
    CHECK(Rational(4) * zw == Rational(-2) * ab.pairing);
    CHECK(htilde(q, ab.vectors[0], ab.vectors[5]).is_zero());
  }
}

TEST_CASE("adapted basis rejects bad input") {
  QuaternionicForm q1 = QuaternionicForm::standard(1);
  CHECK_THROWS_AS(adapted_basis(q1, Vec(4, Rational(0))), math_error);
  CHECK_THROWS_AS(adapted_basis(q1, Vec(7, Rational(1))), math_error);
}

TEST_CASE("orbit codimension of adapted-basis inputs is three for so*") {
  LieAlgebra g = construct(AlgebraSpec::so_star(2));
  for (Vec u : {Vec{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                    Rational(0), Rational(0)},
                Vec{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1),
                    Rational(0), Rational(0)}}) {
    CHECK(orbit_codim(g, u).codim == 3);
  }
}
