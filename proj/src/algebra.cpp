#include "pargeo/algebra.hpp"

#include <functional>

#include "pargeo/quatmat.hpp"

namespace pargeo {

std::string family_str(Family f) {
  switch (f) {
    case Family::sl: return "sl";
    case Family::su: return "su";
    case Family::so: return "so";
    case Family::so_C: return "so_C";
    case Family::so_star: return "so_star";
    case Family::sp_F: return "sp";
    case Family::sp_pq: return "sp_pq";
  }
  throw math_error("unknown family");
}

std::string field_str(FieldTag f) {
  switch (f) {
    case FieldTag::R: return "R";
    case FieldTag::C: return "C";
    case FieldTag::H: return "H";
  }
  throw math_error("unknown field tag");
}

AlgebraSpec AlgebraSpec::sl(int m, FieldTag f) { return {Family::sl, f, m, 0, 0}; }
AlgebraSpec AlgebraSpec::su(int p, int q) { return {Family::su, FieldTag::C, 0, p, q}; }
AlgebraSpec AlgebraSpec::so(int p, int q) { return {Family::so, FieldTag::R, 0, p, q}; }
AlgebraSpec AlgebraSpec::so_C(int m) { return {Family::so_C, FieldTag::C, m, 0, 0}; }
AlgebraSpec AlgebraSpec::so_star(int m) { return {Family::so_star, FieldTag::H, m, 0, 0}; }
AlgebraSpec AlgebraSpec::sp(int m, FieldTag f) { return {Family::sp_F, f, m, 0, 0}; }
AlgebraSpec AlgebraSpec::sp_pq(int p, int q) { return {Family::sp_pq, FieldTag::H, 0, p, q}; }

void AlgebraSpec::validate() const {
  auto bad = [this](const char* why) {
    throw math_error("invalid parameters for " + family_str(family) + ": " + why);
  };
  switch (family) {
    case Family::sl:
      if (m < 2) bad("need m >= 2");
      break;
    case Family::su:
      if (p < 0 || q < 0 || p + q < 2) bad("need p, q >= 0 and p + q >= 2");
      break;
    case Family::so:
      if (p < 0 || q < 0 || p + q < 3) bad("need p, q >= 0 and p + q >= 3");
      break;
    case Family::so_C:
      if (m < 3) bad("need m >= 3");
      break;
    case Family::so_star:
      if (m < 2) bad("need m >= 2");
      break;
    case Family::sp_F:
      if (m < 1) bad("need m >= 1");
      if (field == FieldTag::H) bad("field must be R or C");
      break;
    case Family::sp_pq:
      if (p < 0 || q < 0 || p + q < 1) bad("need p, q >= 0 and p + q >= 1");
      break;
  }
}

std::string AlgebraSpec::name() const {
  switch (family) {
    case Family::sl: return "sl(" + std::to_string(m) + "," + field_str(field) + ")";
    case Family::su: return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::so: return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::so_C: return "so(" + std::to_string(m) + ",C)";
    case Family::so_star: return "so*(" + std::to_string(2 * m) + ")";
    case Family::sp_F: return "sp(" + std::to_string(2 * m) + "," + field_str(field) + ")";
    case Family::sp_pq: return "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  throw math_error("unknown family");
}

int AlgebraSpec::expected_dim() const {
  int n = p + q;
  switch (family) {
    case Family::sl:
      if (field == FieldTag::R) return m * m - 1;
      if (field == FieldTag::C) return 2 * (m * m - 1);
      return 4 * m * m - 1;
    case Family::su: return n * n - 1;
    case Family::so: return n * (n - 1) / 2;
    case Family::so_C: return m * (m - 1);
    case Family::so_star: return m * (2 * m - 1);
    case Family::sp_F: return (field == FieldTag::R ? 1 : 2) * m * (2 * m + 1);
    case Family::sp_pq: return n * (2 * n + 1);
  }
  throw math_error("unknown family");
}

int AlgebraSpec::rep_dim() const {
  switch (family) {
    case Family::sl: return m * (field == FieldTag::R ? 1 : field == FieldTag::C ? 2 : 4);
    case Family::su: return 2 * (p + q);
    case Family::so: return p + q;
    case Family::so_C: return 2 * m;
    case Family::so_star: return 4 * m;
    case Family::sp_F: return 2 * m * (field == FieldTag::R ? 1 : 2);
    case Family::sp_pq: return 4 * (p + q);
  }
  throw math_error("unknown family");
}

namespace {

// Rows of a linear constraint M -> F(M), F evaluated on matrix units;
// vec() is row-major throughout.
Matrix constraint_rows(int n, const std::function<Matrix(const Matrix&)>& f) {
  Matrix out(n * n, n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Matrix e(n, n);
      e.at(r, c) = Rational(1);
      Vec v = f(e).vectorize();
      for (int i = 0; i < n * n; ++i) out.at(i, r * n + c) = v[i];
    }
  return out;
}

Matrix trace_row(int n) {
  Matrix r(1, n * n);
  for (int i = 0; i < n; ++i) r.at(0, i * n + i) = Rational(1);
  return r;
}

// tr(J M) = 0: coefficient of M(a,b) is J(b,a).
Matrix trace_against_row(const Matrix& j) {
  int n = j.rows();
  Matrix r(1, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.at(0, a * n + b) = j.at(b, a);
  return r;
}

Matrix commute_rows(const Matrix& s) {
  return constraint_rows(s.rows(), [&](const Matrix& m) { return s * m - m * s; });
}

Matrix skew_rows(const Matrix& h) {
  return constraint_rows(h.rows(), [&](const Matrix& m) { return m.transpose() * h + h * m; });
}

std::vector<Matrix> kernel_matrices(const Matrix& constraints, int n) {
  Matrix k = constraints.kernel();
  std::vector<Matrix> out;
  out.reserve(k.cols());
  for (int c = 0; c < k.cols(); ++c) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) m.at(r, cc) = k.at(r * n + cc, c);
    out.push_back(std::move(m));
  }
  return out;
}

// h(e_i, e_{n-1-i}) = 1 on min(p,q) hyperbolic pairs at the outer indices,
// |p-q| diagonal entries of sign(p-q) in the middle. Signature (p,q), and
// null vectors / grading elements stay rational.
Matrix split_orthogonal_form(int p, int q) {
  int n = p + q, r = std::min(p, q);
  Matrix h(n, n);
  for (int i = 0; i < r; ++i) {
    h.at(i, n - 1 - i) = Rational(1);
    h.at(n - 1 - i, i) = Rational(1);
  }
  for (int i = r; i < n - r; ++i) h.at(i, i) = Rational(p > q ? 1 : -1);
  return h;
}

Matrix diag_signature(int p, int q, int per) {
  Matrix g(per * (p + q), per * (p + q));
  for (int i = 0; i < per * (p + q); ++i) g.at(i, i) = Rational(i < per * p ? 1 : -1);
  return g;
}

// Realified matrix of (v,w) -> Re(v^t B w) for a complex bilinear B given by
// real matrices (x = Re B, y = Im B); interleaved (re, im) coordinates.
// Entry block is [[x, -y], [-y, -x]].
Matrix real_part_bilinear(const Matrix& x, const Matrix& y) {
  int n = x.rows();
  Matrix g(2 * n, 2 * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      g.at(2 * k, 2 * l) = x.at(k, l);
      g.at(2 * k, 2 * l + 1) = -y.at(k, l);
      g.at(2 * k + 1, 2 * l) = -y.at(k, l);
      g.at(2 * k + 1, 2 * l + 1) = -x.at(k, l);
    }
  return g;
}

Matrix antidiag_ones(int n) {
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) b.at(i, n - 1 - i) = Rational(1);
  return b;
}

// Symplectic anti-diagonal: +1 on the first m anti-diagonal entries, -1 on
// the last m; squares to -Id.
Matrix antidiag_symplectic(int m) {
  Matrix w(2 * m, 2 * m);
  for (int i = 0; i < 2 * m; ++i) w.at(i, 2 * m - 1 - i) = Rational(i < m ? 1 : -1);
  return w;
}

// so*(2m) block model on H^m with htilde(v,w) = sum conj(v_l) j w_l:
// skewness forces A_rl = j conj(A_lr) j, so the diagonal carries one real
// parameter (along j) and each l < r block a full quaternion.
std::vector<Matrix> so_star_basis(int m) {
  std::vector<Matrix> out;
  for (int l = 0; l < m; ++l) {
    QuatMatrix d(m, m);
    d.at(l, l) = Quaternion::j();
    out.push_back(realify(d));
  }
  const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  Quaternion j = Quaternion::j();
  for (int l = 0; l < m; ++l)
    for (int r = l + 1; r < m; ++r)
      for (const Quaternion& q : units) {
        QuatMatrix e(m, m);
        e.at(l, r) = q;
        e.at(r, l) = j * q.conj() * j;
        out.push_back(realify(e));
      }
  return out;
}

// j-component of htilde: per H-slot diag(1,-1,1,-1) in (1,i,j,k) coordinates;
// signature (2m, 2m).
Matrix so_star_form(int m) {
  Matrix h(4 * m, 4 * m);
  for (int l = 0; l < 4 * m; ++l) h.at(l, l) = Rational(l % 2 == 0 ? 1 : -1);
  return h;
}

std::vector<NamedMap> quaternion_maps(int slots) {
  return {{"I", structure_map(Quaternion::i(), slots)},
          {"J", structure_map(Quaternion::j(), slots)},
          {"K", structure_map(Quaternion::k(), slots)}};
}

}  // namespace

LieAlgebra construct(const AlgebraSpec& spec) {
  spec.validate();
  LieAlgebra g;
  g.spec_ = spec;
  g.name_ = spec.name();
  g.rep_dim_ = spec.rep_dim();
  const int n = g.rep_dim_;

  std::vector<Matrix> constraints;
  switch (spec.family) {
    case Family::sl:
      if (spec.field == FieldTag::R) {
        constraints = {trace_row(n)};
      } else if (spec.field == FieldTag::C) {
        Matrix j = complex_structure_matrix(spec.m);
        g.maps_ = {{"J", j}};
        constraints = {commute_rows(j), trace_row(n), trace_against_row(j)};
      } else {
        g.maps_ = quaternion_maps(spec.m);
        constraints = {commute_rows(realify_right_scalar(Quaternion::i(), spec.m)),
                       commute_rows(realify_right_scalar(Quaternion::j(), spec.m)),
                       trace_row(n)};
      }
      break;
    case Family::su: {
      Matrix j = complex_structure_matrix(spec.p + spec.q);
      g.maps_ = {{"J", j}};
      g.form_ = diag_signature(spec.p, spec.q, 2);
      constraints = {commute_rows(j), skew_rows(*g.form_), trace_row(n), trace_against_row(j)};
      break;
    }
    case Family::so:
      g.form_ = split_orthogonal_form(spec.p, spec.q);
      constraints = {skew_rows(*g.form_)};
      break;
    case Family::so_C: {
      Matrix j = complex_structure_matrix(spec.m);
      g.maps_ = {{"J", j}};
      g.form_ = real_part_bilinear(antidiag_ones(spec.m), Matrix(spec.m, spec.m));
      constraints = {commute_rows(j), skew_rows(*g.form_)};
      break;
    }
    case Family::so_star:
      g.maps_ = quaternion_maps(spec.m);
      g.form_ = so_star_form(spec.m);
      g.basis_ = so_star_basis(spec.m);
      break;
    case Family::sp_F:
      if (spec.field == FieldTag::R) {
        g.skew_form_ = antidiag_symplectic(spec.m);
        constraints = {skew_rows(*g.skew_form_)};
      } else {
        Matrix j = complex_structure_matrix(2 * spec.m);
        g.maps_ = {{"J", j}};
        g.skew_form_ = real_part_bilinear(antidiag_symplectic(spec.m), Matrix(2 * spec.m, 2 * spec.m));
        constraints = {commute_rows(j), skew_rows(*g.skew_form_)};
      }
      break;
    case Family::sp_pq: {
      int slots = spec.p + spec.q;
      g.maps_ = quaternion_maps(slots);
      g.form_ = diag_signature(spec.p, spec.q, 4);
      constraints = {commute_rows(realify_right_scalar(Quaternion::i(), slots)),
                     commute_rows(realify_right_scalar(Quaternion::j(), slots)),
                     skew_rows(*g.form_)};
      break;
    }
  }

  if (g.basis_.empty()) {
    Matrix stacked = constraints.front();
    for (size_t i = 1; i < constraints.size(); ++i) stacked = stacked.vstack(constraints[i]);
    g.basis_ = kernel_matrices(stacked, n);
  }
  if (int(g.basis_.size()) != spec.expected_dim())
    throw math_error(g.name_ + ": basis count " + std::to_string(g.basis_.size()) +
                     " != expected dimension " + std::to_string(spec.expected_dim()));
  g.finalize();
  return g;
}

void LieAlgebra::finalize() {
  const int n = rep_dim_, d = dim();
  Matrix span(n * n, d);
  for (int a = 0; a < d; ++a) span.set_col(a, basis_[a].vectorize());
  RrefResult rr = span.hstack(Matrix::identity(n * n)).rref();
  for (int a = 0; a < d; ++a)
    if (a >= int(rr.pivots.size()) || rr.pivots[a] != a)
      throw math_error(name_ + ": basis matrices not linearly independent");
  coord_op_ = rr.r.submatrix(0, d, n * n, n * n);

  ad_.assign(d, Matrix(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec coords = must_coordinatize(Matrix::commutator(basis_[a], basis_[b]), "bracket closure");
      for (int c = 0; c < d; ++c) ad_[a].at(c, b) = coords[c];
    }

  killing_ = Matrix(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      Rational t;
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) t += ad_[a].at(c, e) * ad_[b].at(e, c);
      killing_.at(a, b) = t;
      killing_.at(b, a) = t;
    }
}

Matrix LieAlgebra::element(const Vec& coords) const {
  if (int(coords.size()) != dim()) throw math_error("element: wrong coordinate length");
  Matrix x(rep_dim_, rep_dim_);
  for (int a = 0; a < dim(); ++a)
    if (!coords[a].is_zero()) x = x + basis_[a].scaled(coords[a]);
  return x;
}

std::optional<Vec> LieAlgebra::coordinatize(const Matrix& x) const {
  if (x.rows() != rep_dim_ || x.cols() != rep_dim_)
    throw math_error("coordinatize: wrong matrix size");
  Vec y = coord_op_.apply(x.vectorize());
  for (size_t i = dim(); i < y.size(); ++i)
    if (!y[i].is_zero()) return std::nullopt;
  return Vec(y.begin(), y.begin() + dim());
}

Vec LieAlgebra::must_coordinatize(const Matrix& x, const char* what) const {
  auto c = coordinatize(x);
  if (!c) throw math_error(name_ + ": " + what + ": matrix outside the algebra span");
  return *c;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim() || int(y.size()) != dim())
    throw math_error("bracket: wrong coordinate length");
  Vec out(dim(), Rational(0));
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    Vec t = ad_[a].apply(y);
    for (int c = 0; c < dim(); ++c) out[c] += x[a] * t[c];
  }
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vec& x) const {
  if (int(x.size()) != dim()) throw math_error("ad_matrix: wrong coordinate length");
  Matrix out(dim(), dim());
  for (int a = 0; a < dim(); ++a)
    if (!x[a].is_zero()) out = out + ad_[a].scaled(x[a]);
  return out;
}

Rational LieAlgebra::killing(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim() || int(y.size()) != dim())
    throw math_error("killing: wrong coordinate length");
  Rational t;
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim(); ++b)
      if (!y[b].is_zero()) t += x[a] * killing_.at(a, b) * y[b];
  }
  return t;
}

StructureReport LieAlgebra::verify_structure() const {
  StructureReport rep;
  const int d = dim();

  rep.closure = true;
  for (int a = 0; a < d && rep.closure; ++a)
    for (int b = 0; b < d; ++b) {
      Matrix c = Matrix::commutator(basis_[a], basis_[b]);
      auto coords = coordinatize(c);
      bool ok = coords.has_value();
      if (ok)
        for (int cc = 0; cc < d && ok; ++cc) ok = (ad_[a].at(cc, b) == (*coords)[cc]);
      if (ok) ok = (element(*coords) == c);
      if (!ok) {
        rep.closure = false;
        rep.witness = "closure/structure-constant mismatch at basis pair (" +
                      std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
    }

  rep.jacobi = true;
  for (int a = 0; a < d && rep.jacobi; ++a)
    for (int b = a + 1; b < d; ++b) {
      // Jacobi <=> ad is a homomorphism: ad_{[x,y]} = [ad_x, ad_y].
      Vec e_a(d, Rational(0)), e_b(d, Rational(0));
      e_a[a] = Rational(1);
      e_b[b] = Rational(1);
      if (ad_matrix(bracket(e_a, e_b)) != Matrix::commutator(ad_[a], ad_[b])) {
        rep.jacobi = false;
        rep.witness = "Jacobi identity fails at basis pair (" + std::to_string(a) + "," +
                      std::to_string(b) + ")";
        break;
      }
    }

  rep.killing_nondeg = !killing_.det().is_zero();
  if (!rep.killing_nondeg && rep.witness.empty()) rep.witness = "Killing matrix is degenerate";

  rep.maps_commute = true;
  for (const NamedMap& nm : maps_) {
    for (int a = 0; a < d; ++a)
      if (basis_[a] * nm.map != nm.map * basis_[a]) {
        rep.maps_commute = false;
        if (rep.witness.empty())
          rep.witness = "basis element " + std::to_string(a) + " does not commute with " + nm.name;
        break;
      }
    if (!rep.maps_commute) break;
  }

  rep.form_skew = true;
  auto check_skew = [&](const Matrix& h, const char* label) {
    for (int a = 0; a < d; ++a)
      if (!(basis_[a].transpose() * h + h * basis_[a]).is_zero()) {
        rep.form_skew = false;
        if (rep.witness.empty())
          rep.witness = "basis element " + std::to_string(a) + " not skew for " + label;
        return;
      }
  };
  if (form_) check_skew(*form_, "the invariant metric");
  if (skew_form_ && rep.form_skew) check_skew(*skew_form_, "the symplectic form");

  return rep;
}

}  // namespace pargeo
