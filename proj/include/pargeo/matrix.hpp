#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "pargeo/rational.hpp"

namespace pargeo {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& a);
bool is_zero(const Vec& v);

struct RrefResult;

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix column(const Vec& v);
  static Matrix diagonal(const Vec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_col(int c, const Vec& v);

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  Matrix submatrix(int r0, int c0, int nrows, int ncols) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew() const;
  Rational trace() const;

  Vec apply(const Vec& v) const;          // this * v
  Matrix scaled(const Rational& s) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Commutator a*b - b*a.
  static Matrix commutator(const Matrix& a, const Matrix& b);

  RrefResult rref() const;

  int rank() const;
  /// Columns span the right kernel; one column per free variable, in the
  /// standard rref parametrisation (deterministic).
  Matrix kernel() const;
  Rational det() const;
  Matrix inverse() const;

  /// Exact particular solution of this * x = b with free variables set to 0;
  /// nullopt when inconsistent.
  std::optional<Vec> solve(const Vec& b) const;
  /// Column-wise solve: X with this * X = B; nullopt when any column fails.
  std::optional<Matrix> solve(const Matrix& b) const;

  /// vec(M) row-major, as a column vector.
  Vec vectorize() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix r;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
};

/// Multiplicative content: positive rational g such that m/g has coprime
/// integer entries (zero matrix gives 1).
Rational content(const Matrix& m);

}  // namespace pargeo
