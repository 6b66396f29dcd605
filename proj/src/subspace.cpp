#include "pargeo/subspace.hpp"

namespace pargeo {

namespace {

// Canonical form: rref the transposed spanning set and keep the nonzero rows
// as columns again.
Matrix canonical_basis(const Matrix& cols) {
  RrefResult rr = cols.transpose().rref();
  int r = int(rr.pivots.size());
  return rr.r.submatrix(0, 0, r, rr.r.cols()).transpose();
}

}  // namespace

Subspace Subspace::full(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

Subspace Subspace::from_columns(const Matrix& cols) {
  return Subspace(cols.rows(), canonical_basis(cols));
}

Subspace Subspace::from_vectors(int ambient, const std::vector<Vec>& vs) {
  if (vs.empty()) return zero(ambient);
  Matrix cols = Matrix::from_columns(vs);
  if (cols.rows() != ambient) throw math_error("from_vectors: ambient mismatch");
  return from_columns(cols);
}

Subspace Subspace::span_of(const Vec& v) { return from_columns(Matrix::column(v)); }

bool Subspace::contains(const Vec& v) const {
  if (int(v.size()) != ambient_) throw math_error("contains: ambient mismatch");
  if (pargeo::is_zero(v)) return true;
  return basis_.solve(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw math_error("contains: ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vec(i))) return false;
  return true;
}

Vec Subspace::coords_of(const Vec& v) const {
  auto x = basis_.solve(v);
  if (!x) throw math_error("coords_of: vector outside subspace");
  return *x;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw math_error("intersect: ambient mismatch");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  // x in both spans: A a = B b, solve [A | -B] (a,b)^t = 0.
  Matrix ab = basis_.hstack(-other.basis_);
  Matrix k = ab.kernel();
  std::vector<Vec> gens;
  for (int j = 0; j < k.cols(); ++j) {
    Vec a(dim());
    for (int i = 0; i < dim(); ++i) a[i] = k.at(i, j);
    gens.push_back(basis_.apply(a));
  }
  return from_vectors(ambient_, gens);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw math_error("sum: ambient mismatch");
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  return from_columns(basis_.hstack(other.basis_));
}

bool Subspace::is_direct_sum_of(const Subspace& a, const Subspace& b) const {
  return a.intersect(b).is_zero() && a.sum(b) == *this;
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  if (s.is_zero()) return Subspace::zero(m.rows());
  return Subspace::from_columns(m * s.basis());
}

}  // namespace pargeo
