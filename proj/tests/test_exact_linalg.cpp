#include <random>

#include "doctest.h"
#include "pargeo/matrix.hpp"
#include "pargeo/quatmat.hpp"
#include "pargeo/subspace.hpp"

using namespace pargeo;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(num(rng), den(rng));
  return m;
}

Quaternion random_quat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  return {rat(num(rng)), rat(num(rng)), rat(num(rng)), rat(num(rng))};
}

QuatMatrix random_quat_matrix(std::mt19937_64& rng, int rows, int cols) {
  QuatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_quat(rng);
  return m;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(-4, -2).str() == "2");
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), math_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), math_error);
  CHECK_THROWS_AS(Rational::parse(""), math_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), math_error);
  CHECK(Rational::parse("1000000000000000000000/3").denominator_str() == "3");
}

TEST_CASE("rational arithmetic") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(1, 2) * rat(2, 3) == rat(1, 3));
  CHECK(rat(7, 3).inv() == rat(3, 7));
  CHECK(rat(-5, 4).abs() == rat(5, 4));
  CHECK(rat(-5, 4).sign() == -1);
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(rat(6, 3).is_integer());
  CHECK(rat(6, 3).to_long() == 2);
  CHECK_THROWS_AS(rat(1, 2).to_long(), math_error);
}

TEST_CASE("quaternion multiplication table") {
  Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == -Quaternion::one());
  CHECK(i * j * k == -Quaternion::one());
}

TEST_CASE("quaternion conj, norm, inverse") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 50; ++t) {
    Quaternion p = random_quat(rng), q = random_quat(rng);
    CHECK((p * q).conj() == q.conj() * p.conj());
    CHECK((p * q).norm2() == p.norm2() * q.norm2());
    if (!p.is_zero()) CHECK(p * p.inv() == Quaternion::one());
  }
}

TEST_CASE("scaled quaternion tracks irrational norms exactly") {
  // ((1+i)/sqrt(2))^2 = i
  ScaledQuaternion u = ScaledQuaternion::unit(Quaternion{1, 1, 0, 0});
  CHECK(u.norm2() == Rational(1));
  CHECK(u * u == ScaledQuaternion(Quaternion::i(), Rational(1)));
  // representative equivalence: (2,0,0,0)/sqrt(4) == 1
  CHECK(ScaledQuaternion(Quaternion(Rational(2)), Rational(4)) ==
        ScaledQuaternion(Quaternion::one(), Rational(1)));
  CHECK(ScaledQuaternion(Quaternion(Rational(-2)), Rational(4)) !=
        ScaledQuaternion(Quaternion::one(), Rational(1)));
  // sqrt(2) != sqrt(3)
  CHECK(ScaledQuaternion(Quaternion::one(), Rational(2)) !=
        ScaledQuaternion(Quaternion::one(), Rational(3)));
}

TEST_CASE("rref on frozen examples") {
  Matrix m{{rat(2), rat(4)}, {rat(1), rat(2)}};
  auto rr = m.rref();
  CHECK(rr.r == Matrix{{rat(1), rat(2)}, {rat(0), rat(0)}});
  CHECK(rr.pivots == std::vector<int>{0});

  Matrix a{{rat(1), rat(2), rat(3)}, {rat(4), rat(5), rat(6)}, {rat(7), rat(8), rat(9)}};
  auto ra = a.rref();
  CHECK(ra.r == Matrix{{rat(1), rat(0), rat(-1)}, {rat(0), rat(1), rat(2)}, {rat(0), rat(0), rat(0)}});
  CHECK(a.rank() == 2);
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 4, 6);
    Matrix r = m.rref().r;
    CHECK(r.rref().r == r);
  }
}

TEST_CASE("kernel spans the null space") {
  Matrix m{{rat(1), rat(1)}};
  CHECK(m.kernel() == Matrix{{rat(-1)}, {rat(1)}});

  std::mt19937_64 rng(31337);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(rng, 3, 5);
    Matrix k = a.kernel();
    CHECK((a * k).is_zero());
    CHECK(a.rank() + k.cols() == a.cols());
    CHECK(k.rank() == k.cols());
  }
}

TEST_CASE("determinant and inverse") {
  Matrix m{{rat(1), rat(2)}, {rat(3), rat(4)}};
  CHECK(m.det() == rat(-2));
  CHECK(m.inverse() == Matrix{{rat(-2), rat(1)}, {rat(3, 2), rat(-1, 2)}});
  CHECK(m * m.inverse() == Matrix::identity(2));
  Matrix sing{{rat(1), rat(2)}, {rat(2), rat(4)}};
  CHECK(sing.det() == rat(0));
  CHECK_THROWS_AS(sing.inverse(), math_error);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(rng, 4, 4);
    Matrix b = random_matrix(rng, 4, 4);
    CHECK(a.det() * b.det() == (a * b).det());
    if (!a.det().is_zero()) CHECK(a * a.inverse() == Matrix::identity(4));
  }
}

TEST_CASE("solve returns the deterministic particular solution") {
  Matrix a{{rat(1), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
  auto x = a.solve({rat(3), rat(5)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{rat(3), rat(0), rat(5)});  // free variable pinned to 0
  CHECK(a.apply(*x) == Vec{rat(3), rat(5)});

  Matrix bad{{rat(1), rat(1)}, {rat(2), rat(2)}};
  CHECK_FALSE(bad.solve(Vec{rat(1), rat(3)}).has_value());
}

TEST_CASE("matrix content") {
  Matrix m{{rat(2, 3), rat(4, 3)}, {rat(0), rat(2)}};
  CHECK(content(m) == rat(2, 3));
  CHECK(content(Matrix(2, 2)) == rat(1));
  Matrix scaled = m.scaled(content(m).inv());
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(scaled.at(r, c).is_integer());
}

TEST_CASE("subspace canonicalisation and membership") {
  Subspace s = Subspace::from_vectors(2, {{rat(2), rat(4)}, {rat(1), rat(2)}});
  CHECK(s.dim() == 1);
  CHECK(s.basis() == Matrix{{rat(1)}, {rat(2)}});
  CHECK(s.contains(Vec{rat(-3), rat(-6)}));
  CHECK_FALSE(s.contains(Vec{rat(1), rat(0)}));
  CHECK(s.coords_of(Vec{rat(-3), rat(-6)}) == Vec{rat(-3)});
  CHECK_THROWS_AS(s.coords_of(Vec{rat(1), rat(0)}), math_error);

  // Same span, different spanning sets -> identical canonical object.
  Subspace t = Subspace::from_vectors(2, {{rat(-5), rat(-10)}});
  CHECK(s == t);
}

TEST_CASE("subspace intersection frozen example") {
  Subspace u = Subspace::from_vectors(3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}});
  Subspace w = Subspace::from_vectors(3, {{rat(0), rat(1), rat(1)}, {rat(1), rat(0), rat(1)}});
  Subspace meet = u.intersect(w);
  CHECK(meet.dim() == 1);
  CHECK(meet == Subspace::span_of(Vec{rat(1), rat(-1), rat(0)}));
  CHECK(u.sum(w) == Subspace::full(3));
}

TEST_CASE("dimension formula for sums and intersections") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    Subspace a = Subspace::from_columns(random_matrix(rng, 6, 3));
    Subspace b = Subspace::from_columns(random_matrix(rng, 6, 3));
    Subspace meet = a.intersect(b), join = a.sum(b);
    CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(join.contains(a));
    CHECK(join.contains(b));
    CHECK(join.is_direct_sum_of(a, b) == (meet.dim() == 0));
  }
}

TEST_CASE("left multiplication realifies to a homomorphism") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 10; ++t) {
    QuatMatrix a = random_quat_matrix(rng, 2, 3);
    QuatMatrix b = random_quat_matrix(rng, 3, 2);
    CHECK(realify(a * b) == realify(a) * realify(b));
    QuatVec v = {random_quat(rng), random_quat(rng), random_quat(rng)};
    CHECK(realify(a).apply(realify_vec(v)) == realify_vec(a.apply(v)));
    CHECK(quaternion_slots(realify_vec(v)) == v);
  }
}

TEST_CASE("right multiplication realifies contravariantly") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 20; ++t) {
    Quaternion p = random_quat(rng), q = random_quat(rng);
    CHECK(right_mult_matrix(p) * right_mult_matrix(q) == right_mult_matrix(q * p));
    CHECK(left_mult_matrix(p) * right_mult_matrix(q) == right_mult_matrix(q) * left_mult_matrix(p));
  }
}

TEST_CASE("structure maps form a left action commuting with matrices") {
  Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const int m = 2;
  CHECK(structure_map(i, m) * structure_map(j, m) == structure_map(k, m));
  CHECK(structure_map(j, m) * structure_map(k, m) == structure_map(i, m));
  CHECK(structure_map(i, m) * structure_map(i, m) == -Matrix::identity(4 * m));
  Quaternion a{0, 1, 2, -1};
  CHECK(structure_map(a, m) * structure_map(a, m) == Matrix::identity(4 * m).scaled(-a.norm2()));

  std::mt19937_64 rng(808);
  for (int t = 0; t < 10; ++t) {
    QuatMatrix mat = random_quat_matrix(rng, m, m);
    Quaternion q = random_quat(rng);
    CHECK(structure_map(q, m) * realify(mat) == realify(mat) * structure_map(q, m));
  }
}

TEST_CASE("complex structure matrix squares to minus identity") {
  Matrix j = complex_structure_matrix(3);
  CHECK(j * j == -Matrix::identity(6));
  CHECK(j.transpose() == -j);
}
