#include "pargeo/quatmat.hpp"

namespace pargeo {

QuatMatrix QuatMatrix::identity(int n) {
  QuatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
  return m;
}

QuatMatrix QuatMatrix::conj_transpose() const {
  QuatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c).conj();
  return t;
}

QuatVec QuatMatrix::apply(const QuatVec& v) const {
  if (int(v.size()) != cols_) throw math_error("quat apply size mismatch");
  QuatVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Quaternion s;
    for (int j = 0; j < cols_; ++j) s = s + at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.cols_ != b.rows_) throw math_error("quat mul size mismatch");
  QuatMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return m;
}

QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("quat add size mismatch");
  QuatMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
  return m;
}

QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("quat sub size mismatch");
  QuatMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
  return m;
}

Matrix left_mult_matrix(const Quaternion& q) {
  const Rational &a = q.w, &b = q.x, &c = q.y, &d = q.z;
  return Matrix{{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
}

Matrix right_mult_matrix(const Quaternion& q) {
  const Rational &a = q.w, &b = q.x, &c = q.y, &d = q.z;
  return Matrix{{a, -b, -c, -d}, {b, a, d, -c}, {c, -d, a, b}, {d, c, -b, a}};
}

Matrix realify(const QuatMatrix& m) {
  Matrix out(4 * m.rows(), 4 * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      Matrix blk = left_mult_matrix(m.at(r, c));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(4 * r + i, 4 * c + j) = blk.at(i, j);
    }
  return out;
}

Matrix realify_right_scalar(const Quaternion& q, int slots) {
  Matrix blk = right_mult_matrix(q);
  Matrix out(4 * slots, 4 * slots);
  for (int l = 0; l < slots; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.at(4 * l + i, 4 * l + j) = blk.at(i, j);
  return out;
}

Matrix structure_map(const Quaternion& a, int slots) {
  return realify_right_scalar(a.conj(), slots);
}

Vec realify_vec(const QuatVec& v) {
  Vec out(4 * v.size());
  for (size_t l = 0; l < v.size(); ++l)
    for (int i = 0; i < 4; ++i) out[4 * l + i] = v[l].comp(i);
  return out;
}

QuatVec quaternion_slots(const Vec& v) {
  if (v.size() % 4 != 0) throw math_error("quaternion_slots: size not divisible by 4");
  QuatVec out(v.size() / 4);
  for (size_t l = 0; l < out.size(); ++l)
    out[l] = Quaternion{v[4 * l], v[4 * l + 1], v[4 * l + 2], v[4 * l + 3]};
  return out;
}

Matrix complex_structure_matrix(int m) {
  Matrix out(2 * m, 2 * m);
  for (int l = 0; l < m; ++l) {
    out.at(2 * l, 2 * l + 1) = Rational(-1);
    out.at(2 * l + 1, 2 * l) = Rational(1);
  }
  return out;
}

}  // namespace pargeo
