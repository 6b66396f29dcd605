#pragma once

#include "pargeo/matrix.hpp"
#include "pargeo/quaternion.hpp"

namespace pargeo {

using QuatVec = std::vector<Quaternion>;

/// Dense quaternionic matrix (row-major). Acts on column vectors from the
/// left; scalars act on vectors from the right, so left multiplication is
/// H-linear on the right module H^n.
class QuatMatrix {
 public:
  QuatMatrix() : rows_(0), cols_(0) {}
  QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QuatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Quaternion& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Quaternion& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  QuatMatrix conj_transpose() const;
  QuatVec apply(const QuatVec& v) const;

  friend QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);
  friend QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b);
  friend QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b);
  friend bool operator==(const QuatMatrix& a, const QuatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Quaternion> a_;
};

/// 4x4 real matrix of w -> q*w in coordinates (1,i,j,k).
Matrix left_mult_matrix(const Quaternion& q);
/// 4x4 real matrix of w -> w*q.
Matrix right_mult_matrix(const Quaternion& q);

/// Real 4m x 4n matrix of the left action of a quaternionic matrix on H^n,
/// slot l occupying coordinates 4l..4l+3 in basis (1,i,j,k).
Matrix realify(const QuatMatrix& m);

/// Block diagonal right scalar multiplication v -> v*q on H^slots.
Matrix realify_right_scalar(const Quaternion& q, int slots);

/// rho(a): v -> v * conj(a). A left H-action (rho(a)rho(b) = rho(ab)) that
/// commutes with every realified left matrix action.
Matrix structure_map(const Quaternion& a, int slots);

Vec realify_vec(const QuatVec& v);
QuatVec quaternion_slots(const Vec& v);

/// Real 2m x 2m block diagonal of [[0,-1],[1,0]]: multiplication by i on C^m
/// realified with interleaved (re, im) coordinates.
Matrix complex_structure_matrix(int m);

}  // namespace pargeo
