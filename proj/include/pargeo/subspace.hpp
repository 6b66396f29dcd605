#pragma once

#include "pargeo/matrix.hpp"

namespace pargeo {

/// Linear subspace of Q^n held in a canonical basis (reduced echelon form of
/// the spanning set), so equality of subspaces is plain equality of bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(int ambient) { return Subspace(ambient, Matrix(ambient, 0)); }
  static Subspace full(int ambient);
  static Subspace from_columns(const Matrix& cols);
  static Subspace from_vectors(int ambient, const std::vector<Vec>& vs);
  static Subspace span_of(const Vec& v);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, one vector per column (ambient x dim).
  const Matrix& basis() const { return basis_; }
  Vec basis_vec(int i) const { return basis_.col(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis; throws when v is outside.
  Vec coords_of(const Vec& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// this = a + b with a ∩ b = 0?
  bool is_direct_sum_of(const Subspace& a, const Subspace& b) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_;
  Matrix basis_;  // canonical
};

/// Image of a subspace under a linear map (columns m * basis).
Subspace map_subspace(const Matrix& m, const Subspace& s);

}  // namespace pargeo
