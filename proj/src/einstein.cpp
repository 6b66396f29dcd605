#include "pargeo/einstein.hpp"

#include <string>
#include <utility>

#include "pargeo/quatmat.hpp"

namespace pargeo {

namespace {

// sigma at representation level lifted basis-wise into algebra coordinates.
Matrix lift_images(const LieAlgebra& g, const std::vector<Matrix>& images, const char* what) {
  const int d = g.dim();
  Matrix m(d, d);
  for (int a = 0; a < d; ++a) {
    auto coords = g.coordinatize(images[size_t(a)]);
    if (!coords)
      throw math_error(std::string(what) + ": image of basis element " + std::to_string(a) +
                       " leaves the algebra");
    m.set_col(a, *coords);
  }
  return m;
}

// Projection onto the degree-zero component along the other components.
struct ComponentProjector {
  Matrix full_basis;      // columns: bases of g_{-k}..g_k concatenated
  Matrix full_inverse;
  int zero_offset = 0;
  int zero_dim = 0;
  const Subspace* zero_component;

  explicit ComponentProjector(const Grading& gr) {
    const int d = gr.ambient();
    Matrix b(d, 0);
    for (int j = -gr.depth(); j <= gr.depth(); ++j) {
      if (j == 0) zero_offset = b.cols();
      b = b.hstack(gr.component(j).basis());
    }
    if (b.cols() != d) throw math_error("grading components do not span the algebra");
    full_basis = std::move(b);
    full_inverse = full_basis.inverse();
    zero_dim = gr.component_dim(0);
    zero_component = &gr.component(0);
  }

  Vec project(const Vec& v) const {
    Vec c = full_inverse.apply(v);
    Vec out(v.size());
    for (int i = 0; i < zero_dim; ++i) {
      Vec col = full_basis.col(zero_offset + i);
      out = out + c[size_t(zero_offset + i)] * col;
    }
    return out;
  }
};

bool gram_nondegenerate(const Matrix& metric, const Subspace& s) {
  if (s.is_zero()) return true;
  Matrix b = s.basis();
  Matrix gram = b.transpose() * metric * b;
  return !gram.det().is_zero();
}

}  // namespace

Involution involution_from_metric(const LieAlgebra& g, const Matrix& metric) {
  const int n = g.rep_dim();
  if (metric.rows() != n || metric.cols() != n)
    throw math_error("involution_from_metric: metric size does not match the representation");
  if (!metric.is_symmetric()) throw math_error("involution_from_metric: metric is not symmetric");
  if (metric.det().is_zero()) throw math_error("involution_from_metric: metric is degenerate");

  Matrix ginv = metric.inverse();
  std::vector<Matrix> images;
  images.reserve(size_t(g.dim()));
  for (const Matrix& x : g.basis()) images.push_back(-(ginv * x.transpose() * metric));
  Involution out;
  out.map = lift_images(g, images, "involution_from_metric");
  out.source = Involution::Source::metric;
  out.datum_matrix = metric;
  return out;
}

Involution involution_from_complex_structure(const LieAlgebra& g, const Matrix& j) {
  if (!g.skew_form())
    throw math_error("involution_from_complex_structure: family carries no symplectic form");
  const int n = g.rep_dim();
  if (j.rows() != n || j.cols() != n)
    throw math_error("involution_from_complex_structure: J size does not match");
  if (j * j != -Matrix::identity(n))
    throw math_error("involution_from_complex_structure: J^2 != -1");
  const Matrix& w = *g.skew_form();
  Matrix metric = w * j;
  if (!metric.is_symmetric())
    throw math_error("involution_from_complex_structure: w o J is not symmetric");
  // anti-compatibility w^{-1} g = -g^{-1} w; a consequence of the above, kept
  // as a guard on the form conventions
  if (w.inverse() * metric != -(metric.inverse() * w))
    throw math_error("involution_from_complex_structure: form compatibility failed");
  Involution out = involution_from_metric(g, metric);
  out.source = Involution::Source::complex_structure;
  out.datum_matrix = j;
  return out;
}

Involution involution_from_subspace(const LieAlgebra& g, const Subspace& k) {
  if (!g.invariant_form())
    throw math_error("involution_from_subspace: family carries no invariant metric");
  const int n = g.rep_dim();
  if (k.ambient_dim() != n)
    throw math_error("involution_from_subspace: subspace ambient does not match");
  if (k.is_zero()) throw math_error("involution_from_subspace: subspace is zero");
  for (const NamedMap& m : g.structure_maps()) {
    if (!k.contains(map_subspace(m.map, k)))
      throw math_error("involution_from_subspace: subspace not stable under structure map " +
                       m.name);
  }
  const Matrix& h = *g.invariant_form();
  // h-orthogonal complement: kernel of (basis^T h)
  Matrix perp_rows = k.basis().transpose() * h;
  Subspace kperp = Subspace::from_columns(perp_rows.kernel());
  if (!k.intersect(kperp).is_zero())
    throw math_error("involution_from_subspace: subspace is degenerate for the invariant form");
  if (k.dim() + kperp.dim() != n)
    throw math_error("involution_from_subspace: complement dimension mismatch");

  Matrix b = k.basis().hstack(kperp.basis());
  Vec signs(size_t(n), Rational(0));
  for (int i = 0; i < n; ++i) signs[size_t(i)] = Rational(i < k.dim() ? 1 : -1);
  Matrix s = b * Matrix::diagonal(signs) * b.inverse();

  std::vector<Matrix> images;
  images.reserve(size_t(g.dim()));
  for (const Matrix& x : g.basis()) images.push_back(s * x * s);
  Involution out;
  out.map = lift_images(g, images, "involution_from_subspace");
  out.source = Involution::Source::subspace;
  out.datum_subspace = k;
  return out;
}

Involution cartan_involution(const LieAlgebra& g) {
  return involution_from_metric(g, Matrix::identity(g.rep_dim()));
}

bool is_cartan(const LieAlgebra& g, const Involution& sigma) {
  // -B(sigma X, Y) positive definite <=> all elimination pivots positive
  Matrix m = -(sigma.map.transpose() * g.killing_matrix());
  if (!m.is_symmetric()) return false;
  const int d = m.rows();
  for (int i = 0; i < d; ++i) {
    Rational pivot = m.at(i, i);
    if (pivot.sign() <= 0) return false;
    for (int r = i + 1; r < d; ++r) {
      Rational f = m.at(r, i) / pivot;
      if (f.is_zero()) continue;
      for (int c = i; c < d; ++c) m.at(r, c) -= f * m.at(i, c);
    }
  }
  return true;
}

bool verify_involution(const LieAlgebra& g, const Involution& sigma, std::string* why) {
  const int d = g.dim();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (sigma.map.rows() != d || sigma.map.cols() != d) return fail("map size mismatch");
  if (sigma.map * sigma.map != Matrix::identity(d)) return fail("not an involution");
  for (int a = 0; a < d; ++a) {
    Vec ea(size_t(d), Rational(0));
    Vec sa = sigma.map.col(a);
    ea[size_t(a)] = Rational(1);
    for (int b = a + 1; b < d; ++b) {
      Vec eb(size_t(d), Rational(0));
      Vec sb = sigma.map.col(b);
      eb[size_t(b)] = Rational(1);
      if (sigma.map.apply(g.bracket(ea, eb)) != g.bracket(sa, sb))
        return fail("not an automorphism at basis pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
    }
  }
  if (sigma.map.transpose() * g.killing_matrix() * sigma.map != g.killing_matrix())
    return fail("Killing form not preserved");
  return true;
}

EinsteinReport is_einstein(const LieAlgebra&, const Involution& sigma, const Grading& gr) {
  EinsteinReport out;
  Subspace image = map_subspace(sigma.map, gr.filtrand(1));
  Subspace meet = image.intersect(gr.filtrand(0));
  out.einstein = meet.is_zero();
  if (!out.einstein) out.witness = meet.basis_vec(0);
  out.pi_bijective =
      out.einstein && gr.filtrand(1).dim() + gr.filtrand(0).dim() == gr.ambient();
  return out;
}

EinsteinExtraction extract(const LieAlgebra& g, const Involution& sigma, const Grading& gr) {
  const int d = g.dim();
  EinsteinReport er = is_einstein(g, sigma, gr);
  if (!er.einstein)
    throw math_error("extract: involution is not Einstein for this grading");

  Subspace f_plus = Subspace::from_columns((sigma.map - Matrix::identity(d)).kernel());
  Subspace f_minus = Subspace::from_columns((sigma.map + Matrix::identity(d)).kernel());
  if (f_plus.dim() + f_minus.dim() != d)
    throw math_error("extract: map is not diagonalizable with eigenvalues +-1");

  Subspace c_plus = f_plus.intersect(gr.filtrand(0));
  Subspace c_minus = f_minus.intersect(gr.filtrand(0));
  Subspace c = c_plus.sum(c_minus);

  ComponentProjector pi0(gr);
  if (c.dim() != pi0.zero_dim)
    throw math_error("extract: C does not match the zero component in dimension");
  Matrix proj_cols(d, c.dim());
  for (int i = 0; i < c.dim(); ++i) proj_cols.set_col(i, pi0.project(c.basis_vec(i)));
  if (proj_cols.rank() != pi0.zero_dim)
    throw math_error("extract: projection of C to the zero component is not bijective");

  auto coeff = proj_cols.solve(gr.element_coords());
  if (!coeff) throw math_error("extract: grading element has no preimage in C");
  Vec e_tilde(size_t(d), Rational(0));
  for (int i = 0; i < c.dim(); ++i) e_tilde = e_tilde + (*coeff)[size_t(i)] * c.basis_vec(i);
  if (sigma.map.apply(e_tilde) != Rational(-1) * e_tilde)
    throw math_error("extract: lifted grading element is not anti-fixed");

  Grading ngr = grade(g, GradingElement{e_tilde, g.element(e_tilde)});
  if (ngr.dims() != gr.dims())
    throw math_error("extract: regrading changed the component dimensions");
  if (!(ngr.component(0) == c))
    throw math_error("extract: C is not the zero component of the new splitting");

  std::vector<Vec> minus_basis, plus_basis;
  for (int j = -ngr.depth(); j <= -1; ++j) {
    for (int i = 0; i < ngr.component_dim(j); ++i) minus_basis.push_back(ngr.component(j).basis_vec(i));
    for (int i = 0; i < ngr.component_dim(-j); ++i) plus_basis.push_back(ngr.component(-j).basis_vec(i));
  }
  const int nm = int(minus_basis.size());
  if (int(plus_basis.size()) != nm)
    throw math_error("extract: positive and negative parts differ in dimension");

  Matrix bp = Matrix::from_columns(plus_basis);
  Matrix p(nm, nm);
  for (int a = 0; a < nm; ++a) {
    auto x = bp.solve(sigma.map.apply(minus_basis[size_t(a)]));
    if (!x) throw math_error("extract: map does not exchange the new positive and negative parts");
    p.set_col(a, *x);
  }
  Matrix pb(nm, nm);
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b)
      pb.at(a, b) = g.killing(sigma.map.apply(minus_basis[size_t(a)]), minus_basis[size_t(b)]);

  return EinsteinExtraction{&g,
                            sigma.map,
                            std::move(e_tilde),
                            std::move(f_plus),
                            std::move(f_minus),
                            std::move(c_plus),
                            std::move(c_minus),
                            std::move(c),
                            std::move(ngr),
                            std::move(minus_basis),
                            std::move(plus_basis),
                            std::move(p),
                            std::move(pb)};
}

ExtractionReport verify_extraction(const EinsteinExtraction& x) {
  const LieAlgebra& g = *x.algebra;
  const Grading& ngr = x.new_grading;
  const int nm = int(x.minus_basis.size());
  ExtractionReport rep;
  auto note = [&](const std::string& msg) {
    if (rep.witness.empty()) rep.witness = msg;
  };

  rep.symmetric = x.P_bilinear == x.P_bilinear.transpose();
  if (!rep.symmetric) note("pairing not symmetric");

  rep.nondegenerate = !x.P_bilinear.det().is_zero();
  if (!rep.nondegenerate) note("pairing degenerate");

  rep.homogeneous = true;
  {
    int off = 0;
    for (int j = -ngr.depth(); j <= -1 && rep.homogeneous; ++j) {
      for (int i = 0; i < ngr.component_dim(j); ++i) {
        Vec img = x.sigma.apply(x.minus_basis[size_t(off + i)]);
        if (!ngr.component(-j).contains(img)) {
          rep.homogeneous = false;
          note("image of a degree " + std::to_string(j) + " vector is not homogeneous");
          break;
        }
      }
      off += ngr.component_dim(j);
    }
  }

  rep.equivariant = true;
  for (int a = 0; a < nm && rep.equivariant; ++a) {
    for (int b = a + 1; b < nm; ++b) {
      Vec br = g.bracket(x.minus_basis[size_t(a)], x.minus_basis[size_t(b)]);
      Vec lhs = g.bracket(x.sigma.apply(x.minus_basis[size_t(a)]),
                          x.sigma.apply(x.minus_basis[size_t(b)]));
      if (lhs != x.sigma.apply(br)) {
        rep.equivariant = false;
        note("bracket equivariance failed at pair (" + std::to_string(a) + "," +
             std::to_string(b) + ")");
        break;
      }
    }
  }

  // sigma on C acts on the degree -1 block as minus conjugation by P
  rep.zero_action = rep.homogeneous;
  if (rep.zero_action) {
    const Subspace& m1 = ngr.component(-1);
    const Subspace& p1 = ngr.component(1);
    const int n1 = m1.dim();
    Matrix p_block = x.P.submatrix(nm - n1, nm - n1, n1, n1);
    Matrix gram(n1, n1);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n1; ++b) gram.at(a, b) = g.killing(m1.basis_vec(a), p1.basis_vec(b));
    Matrix p_inv = p_block.inverse();
    Matrix gram_inv = gram.inverse();
    for (int ci = 0; ci < x.C.dim() && rep.zero_action; ++ci) {
      Vec a_vec = x.C.basis_vec(ci);
      Vec sa_vec = x.sigma.apply(a_vec);
      Matrix act_a(n1, n1), act_sa(n1, n1);
      for (int b = 0; b < n1; ++b) {
        act_a.set_col(b, m1.coords_of(g.bracket(a_vec, m1.basis_vec(b))));
        act_sa.set_col(b, m1.coords_of(g.bracket(sa_vec, m1.basis_vec(b))));
      }
      if (act_sa != p_inv * (-(gram_inv * act_a.transpose() * gram)) * p_block) {
        rep.zero_action = false;
        note("zero-block action is not minus P-conjugation at C basis vector " +
             std::to_string(ci));
      }
    }
  } else {
    note("zero-block check skipped: P not homogeneous");
  }

  const int d = g.dim();
  std::vector<Vec> plus_gens, minus_gens;
  for (int a = 0; a < nm; ++a) {
    Vec v = x.minus_basis[size_t(a)];
    Vec sv = x.sigma.apply(v);
    plus_gens.push_back(v + sv);
    minus_gens.push_back(v - sv);
  }
  Subspace closure = Subspace::from_vectors(d, plus_gens);
  for (;;) {
    std::vector<Vec> next;
    for (int a = 0; a < closure.dim(); ++a)
      for (int b = a + 1; b < closure.dim(); ++b)
        next.push_back(g.bracket(closure.basis_vec(a), closure.basis_vec(b)));
    Subspace grown = closure.sum(Subspace::from_vectors(d, next));
    if (grown.dim() == closure.dim()) break;
    closure = grown;
  }
  rep.plus_generated = closure == x.F_plus;
  if (!rep.plus_generated) note("bracket closure of {X + P(X)} is not the plus eigenspace");

  std::vector<Vec> span_minus = minus_gens;
  for (const Vec& u : plus_gens)
    for (const Vec& v : minus_gens) span_minus.push_back(g.bracket(u, v));
  rep.minus_generated = Subspace::from_vectors(d, span_minus) == x.F_minus;
  if (!rep.minus_generated) note("{X - P(X)} and its plus-brackets do not span the minus eigenspace");

  return rep;
}

Involution rebuild_sigma(const EinsteinExtraction& x) {
  const LieAlgebra& g = *x.algebra;
  const int d = g.dim();
  const int nm = int(x.minus_basis.size());
  Matrix bm = Matrix::from_columns(x.minus_basis);
  Matrix bp = Matrix::from_columns(x.plus_basis);
  Matrix minus_images = bp * x.P;         // P on the negative part
  Matrix plus_images = bm * x.P.inverse();  // P^{-1} on the positive part

  // the zero block is spanned by same-degree brackets [X, Y] with X in g_-j
  // and Y in g_j; sigma[X, Y] = [P(X), P^{-1}(Y)] needs no further data
  const int zero_dim = d - 2 * nm;
  Subspace span = Subspace::zero(d);
  std::vector<Vec> chosen, images;
  const Grading& ngr = x.new_grading;
  int off = 0;
  for (int j = -ngr.depth(); j <= -1; ++j) {
    const int sz = ngr.component_dim(j);
    for (int a = off; a < off + sz && span.dim() < zero_dim; ++a) {
      for (int b = off; b < off + sz && span.dim() < zero_dim; ++b) {
        Vec w = g.bracket(x.minus_basis[size_t(a)], x.plus_basis[size_t(b)]);
        if (is_zero(w) || span.contains(w)) continue;
        chosen.push_back(w);
        images.push_back(g.bracket(minus_images.col(a), plus_images.col(b)));
        span = span.sum(Subspace::span_of(w));
      }
    }
    off += sz;
  }
  if (span.dim() != zero_dim)
    throw math_error("rebuild_sigma: mixed brackets do not span the zero component");

  Matrix basis_cols = bm.hstack(bp).hstack(Matrix::from_columns(chosen));
  Matrix image_cols = minus_images.hstack(plus_images).hstack(Matrix::from_columns(images));
  Matrix rebuilt = image_cols * basis_cols.inverse();
  if (rebuilt != x.sigma) throw math_error("rebuild_sigma: reconstruction disagrees");
  Involution out;
  out.map = std::move(rebuilt);
  out.source = Involution::Source::explicit_map;
  return out;
}

FiltrandMetricReport einstein_from_filtrand_metric(const LieAlgebra& g, const Grading& gr,
                                                   const RepGrading& rg, const Matrix& metric) {
  Involution sigma = involution_from_metric(g, metric);
  FiltrandMetricReport out;
  out.degree = image_degree(g, gr, rg).degree;
  out.hypothesis = true;
  for (const Rational& nu : rg.homogeneities()) {
    if (nu < out.degree) continue;
    if (!gram_nondegenerate(metric, rg.filtrand(nu))) {
      out.hypothesis = false;
      out.note = "metric degenerate on the filtrand at homogeneity " + nu.str() +
                 "; criterion inapplicable";
      break;
    }
  }
  out.einstein = is_einstein(g, sigma, gr).einstein;
  out.agrees = !out.hypothesis || out.einstein;
  if (out.hypothesis)
    out.note = "metric nondegenerate on every filtrand at or above homogeneity " +
               out.degree.str();
  return out;
}

Matrix hermitian_split_average(const Matrix& metric, int slots) {
  if (metric.rows() != 4 * slots || metric.cols() != 4 * slots)
    throw math_error("hermitian_split_average: size is not 4 x slots");
  Matrix ri = structure_map(Quaternion::i(), slots);
  Matrix rj = structure_map(Quaternion::j(), slots);
  Matrix rk = structure_map(Quaternion::k(), slots);
  return metric + ri.transpose() * metric * ri - rj.transpose() * metric * rj -
         rk.transpose() * metric * rk;
}

}  // namespace pargeo
