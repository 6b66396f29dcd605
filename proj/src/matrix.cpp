#include "pargeo/matrix.hpp"

#include <stdexcept>

namespace pargeo {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.resize(size_t(rows_) * cols_);
  int r = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != cols_) throw math_error("ragged matrix literal");
    int c = 0;
    for (const auto& x : row) at(r, c++) = x;
    ++r;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(int(cols[0].size()), int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != cols[0].size()) throw math_error("ragged column list");
    for (size_t r = 0; r < cols[c].size(); ++r) m.at(int(r), int(c)) = cols[c][r];
  }
  return m;
}

Matrix Matrix::column(const Vec& v) { return from_columns({v}); }

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_col(int c, const Vec& v) {
  if (int(v.size()) != rows_) throw math_error("column size mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw math_error("hstack row mismatch");
  Matrix m(rows_, cols_ + right.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int c = 0; c < right.cols_; ++c) m.at(r, cols_ + c) = right.at(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw math_error("vstack col mismatch");
  Matrix m(rows_ + below.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (int r = 0; r < below.rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = below.at(r, c);
  return m;
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
    throw math_error("submatrix out of range");
  Matrix m(nrows, ncols);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (at(r, c) != -at(c, r)) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw math_error("trace of non-square matrix");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw math_error("apply size mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = s * a_[i];
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("matrix add size mismatch");
  Matrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("matrix sub size mismatch");
  Matrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw math_error("matrix mul size mismatch");
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult Matrix::rref() const {
  RrefResult out{*this, {}};
  Matrix& m = out.r;
  int lead = 0;
  for (int r = 0; r < rows_ && lead < cols_; ++r) {
    int piv = -1;
    for (; lead < cols_ && piv < 0; ) {
      for (int i = r; i < rows_; ++i)
        if (!m.at(i, lead).is_zero()) { piv = i; break; }
      if (piv < 0) ++lead;
    }
    if (piv < 0) break;
    if (piv != r)
      for (int c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(r, c));
    Rational inv = m.at(r, lead).inv();
    for (int c = lead; c < cols_; ++c) m.at(r, c) = inv * m.at(r, c);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, lead).is_zero()) continue;
      Rational f = m.at(i, lead);
      for (int c = lead; c < cols_; ++c) m.at(i, c) -= f * m.at(r, c);
    }
    out.pivots.push_back(lead);
    ++lead;
  }
  return out;
}

int Matrix::rank() const { return int(rref().pivots.size()); }

Matrix Matrix::kernel() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(cols_, int(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, int(j)) = Rational(1);
    for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
      k.at(rr.pivots[pr], int(j)) = -rr.r.at(int(pr), fc);
  }
  return k;
}

Rational Matrix::det() const {
  if (!is_square()) throw math_error("det of non-square matrix");
  Matrix m = *this;
  Rational d(1);
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      for (int k = 0; k < cols_; ++k) std::swap(m.at(piv, k), m.at(c, k));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = m.at(c, c).inv();
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rational f = inv * m.at(r, c);
      for (int k = c; k < cols_; ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw math_error("inverse of non-square matrix");
  RrefResult rr = hstack(identity(rows_)).rref();
  if (int(rr.pivots.size()) != rows_ || rr.pivots.back() >= rows_)
    throw math_error("matrix not invertible");
  return rr.r.submatrix(0, rows_, rows_, rows_);
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (int(b.size()) != rows_) throw math_error("solve size mismatch");
  RrefResult rr = hstack(column(b)).rref();
  for (int p : rr.pivots)
    if (p == cols_) return std::nullopt;  // row (0..0 | 1): inconsistent
  Vec x(cols_, Rational(0));
  for (size_t pr = 0; pr < rr.pivots.size(); ++pr) x[rr.pivots[pr]] = rr.r.at(int(pr), cols_);
  return x;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows() != rows_) throw math_error("solve size mismatch");
  Matrix x(cols_, b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    auto xc = solve(b.col(c));
    if (!xc) return std::nullopt;
    x.set_col(c, *xc);
  }
  return x;
}

Vec Matrix::vectorize() const { return a_; }

Rational content(const Matrix& m) {
  // gcd of numerators over lcm of denominators, computed incrementally.
  mpz_class num_gcd(0), den_lcm(1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m.at(r, c).raw();
      if (q == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  if (num_gcd == 0) return Rational(1);
  return Rational(mpq_class(num_gcd, den_lcm));
}

}  // namespace pargeo
