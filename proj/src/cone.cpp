#include "pargeo/cone.hpp"

#include <utility>

namespace pargeo {

namespace {

constexpr const char* kOutOfScope =
    "holonomy equality, the group action on the cone and the e^{-x} section "
    "rescaling are manifold statements with no single-fibre content; piece "
    "distinctness is taken as proposed";

// h-orthogonal projector onto U (identity when U is everything). Requires an
// invariant metric for proper U; reports failure through the witness.
struct Projector {
  bool valid = false;
  bool trivial = false;
  Matrix p;  // N x N
  std::string error;

  Projector(const LieAlgebra& g, const Subspace& u) {
    const int n = g.rep_dim();
    if (u.dim() == n) {
      trivial = valid = true;
      p = Matrix::identity(n);
      return;
    }
    if (!g.invariant_form()) {
      error = "no invariant metric to project onto a proper summand";
      return;
    }
    const Matrix& h = *g.invariant_form();
    Matrix b = u.basis();
    Matrix gram = b.transpose() * h * b;
    if (gram.det().is_zero()) {
      error = "proper summand is degenerate for the invariant metric";
      return;
    }
    p = b * gram.inverse() * b.transpose() * h;
    valid = true;
  }

  Vec apply(const Vec& v) const { return trivial ? v : p.apply(v); }
};

// Columns of X -> pi_U(i(X) . eta) over the negative-part basis.
Matrix action_columns(const EinsteinExtraction& x, const Projector& pi, const Vec& eta) {
  const LieAlgebra& g = *x.algebra;
  const int nm = int(x.minus_basis.size());
  Matrix m(g.rep_dim(), nm);
  for (int a = 0; a < nm; ++a) {
    Vec emb = x.minus_basis[size_t(a)] + x.sigma.apply(x.minus_basis[size_t(a)]);
    m.set_col(a, pi.apply(g.element(emb).apply(eta)));
  }
  return m;
}

}  // namespace

ConeHypotheses check_cone_hypotheses(const EinsteinExtraction& x,
                                     const std::vector<Matrix>& h_pieces, const Matrix& l_basis) {
  const LieAlgebra& g = *x.algebra;
  const int n = g.rep_dim();
  ConeHypotheses out;
  out.out_of_scope = kOutOfScope;
  out.B_algebra = x.C_plus;
  auto fail = [&](const std::string& msg) {
    if (out.checks.witness.empty()) out.checks.witness = msg;
  };

  if (h_pieces.empty()) {
    fail("no horizontal pieces proposed");
    return out;
  }
  int piece_total = 0;
  Subspace h = Subspace::zero(n);
  for (const Matrix& pm : h_pieces) {
    if (pm.rows() != n || pm.cols() == 0) {
      fail("piece basis has the wrong shape");
      return out;
    }
    Subspace s = Subspace::from_columns(pm);
    if (s.dim() != pm.cols()) {
      fail("piece basis is linearly dependent");
      return out;
    }
    out.piece_spans.push_back(s);
    piece_total += s.dim();
    h = h.sum(s);
  }
  if (l_basis.rows() != n || l_basis.cols() < 1) {
    fail("line basis has the wrong shape");
    return out;
  }
  out.eta = l_basis.col(0);
  out.H_part = h;
  out.L_part = Subspace::from_columns(l_basis);
  out.U = h.sum(out.L_part);

  out.checks.direct_sum =
      h.dim() == piece_total && out.U.dim() == h.dim() + out.L_part.dim();
  if (!out.checks.direct_sum) fail("proposed pieces and line do not sum directly");

  out.checks.ambient_invariant = true;
  if (out.U.dim() < n) {
    for (int i = 0; i < x.F_plus.dim() && out.checks.ambient_invariant; ++i) {
      Matrix rep = g.element(x.F_plus.basis_vec(i));
      if (!out.U.contains(map_subspace(rep, out.U))) {
        out.checks.ambient_invariant = false;
        fail("proper summand is not stable under the fixed subalgebra");
      }
    }
  }

  out.checks.b_trivial_line = l_basis.cols() == 1 && !is_zero(out.eta);
  if (!out.checks.b_trivial_line) fail("vertical part is not a line");
  out.checks.b_invariant = true;
  for (int i = 0; i < out.B_algebra.dim(); ++i) {
    Matrix rep = g.element(out.B_algebra.basis_vec(i));
    if (out.checks.b_trivial_line && !is_zero(rep.apply(out.eta))) {
      out.checks.b_trivial_line = false;
      fail("the zero-block fixed algebra acts nontrivially on the line");
    }
    if (!out.L_part.contains(map_subspace(rep, out.L_part)))
      out.checks.b_invariant = false;
    for (const Subspace& s : out.piece_spans)
      if (!s.contains(map_subspace(rep, s))) out.checks.b_invariant = false;
  }
  if (!out.checks.b_invariant) fail("a proposed piece is not stable under the fixed zero block");

  Projector pi(g, out.U);
  if (!pi.valid) {
    fail(pi.error);
    return out;
  }

  // pairing nondegeneracy on the horizontals matched through the embedding
  {
    Matrix cols = action_columns(x, pi, out.eta);
    const int nm = int(x.minus_basis.size());
    Matrix match(nm, piece_total);
    int at = 0;
    bool solvable = true;
    for (const Matrix& pm : h_pieces) {
      for (int c = 0; c < pm.cols(); ++c, ++at) {
        auto sol = cols.solve(pm.col(c));
        if (!sol) {
          solvable = false;
          fail("a piece vector has no horizontal preimage");
          break;
        }
        match.set_col(at, *sol);
      }
      if (!solvable) break;
    }
    if (solvable) {
      Matrix gram = match.transpose() * x.P_bilinear * match;
      out.checks.p_nondegenerate = !gram.det().is_zero();
      if (!out.checks.p_nondegenerate)
        fail("pairing degenerate on the matched horizontal subspace");
    }
  }

  // surjectivity of the negative and positive parts acting on the line
  {
    std::vector<Vec> images;
    for (const Vec& v : x.minus_basis) images.push_back(pi.apply(g.element(v).apply(out.eta)));
    for (const Vec& v : x.plus_basis) images.push_back(pi.apply(g.element(v).apply(out.eta)));
    Subspace reach = Subspace::from_vectors(n, images).sum(out.L_part);
    out.checks.surjective = reach.contains(out.H_part);
    if (!out.checks.surjective) fail("the graded parts do not reach every horizontal direction");
  }
  return out;
}

Vec embed_i(const EinsteinExtraction& x, const Vec& minus_coords) {
  const int nm = int(x.minus_basis.size());
  if (int(minus_coords.size()) != nm)
    throw math_error("embed_i: coordinate size does not match the negative part");
  Vec out(size_t(x.sigma.rows()), Rational(0));
  for (int a = 0; a < nm; ++a)
    out = out + minus_coords[size_t(a)] * x.minus_basis[size_t(a)];
  out = out + x.sigma.apply(out);
  if (!x.F_plus.contains(out)) throw math_error("embed_i: image left the fixed eigenspace");
  return out;
}

Calibration calibrate_scaling(const EinsteinExtraction& x, const ConeHypotheses& hyp,
                              const std::vector<Matrix>& h_pieces, const Vec& eta) {
  if (!hyp.checks.ok())
    throw math_error("calibrate_scaling: cone hypotheses do not hold: " + hyp.checks.witness);
  const LieAlgebra& g = *x.algebra;
  Projector pi(g, hyp.U);
  if (!pi.valid) throw math_error("calibrate_scaling: " + pi.error);
  Matrix cols = action_columns(x, pi, eta);

  Calibration out;
  out.pieces = h_pieces;
  out.eta = eta;
  for (const Matrix& pm : h_pieces) {
    Matrix emb(int(x.minus_basis.size()), pm.cols());
    for (int c = 0; c < pm.cols(); ++c) {
      auto sol = cols.solve(pm.col(c));
      if (!sol || is_zero(*sol))
        throw math_error(
            "calibrate_scaling: embedded action has zero component along a piece");
      emb.set_col(c, *sol);
    }
    Rational s = content(emb);
    out.per_piece.push_back(PieceCalibration{std::move(emb), s});
  }
  return out;
}

ConeConnectionTable cone_connection_table(const EinsteinExtraction& x, const ConeHypotheses& hyp,
                                          const Calibration& cal) {
  if (!hyp.checks.ok())
    throw math_error("cone_connection_table: cone hypotheses do not hold");
  const LieAlgebra& g = *x.algebra;
  int h_dim = 0;
  for (const Matrix& pm : cal.pieces) h_dim += pm.cols();
  Matrix adapted(g.rep_dim(), h_dim + 1);
  int at = 0;
  for (const Matrix& pm : cal.pieces)
    for (int c = 0; c < pm.cols(); ++c, ++at) adapted.set_col(at, pm.col(c));
  adapted.set_col(h_dim, cal.eta);

  Projector pi(g, hyp.U);
  if (!pi.valid) throw math_error("cone_connection_table: " + pi.error);

  ConeConnectionTable out;
  out.horizontal_on_vertical = Matrix::zero(h_dim + 1, h_dim);
  out.horizontal_on_section = Matrix(h_dim + 1, h_dim);
  out.vertical_on_horizontal = Matrix(h_dim + 1, h_dim);
  at = 0;
  for (const auto& pc : cal.per_piece) {
    for (int c = 0; c < pc.embedding.cols(); ++c, ++at) {
      // rule for the section: the embedded horizontal acts on eta inside U
      Vec emb_alg = embed_i(x, pc.embedding.col(c));
      auto direct = adapted.solve(g.element(emb_alg).apply(cal.eta));
      if (!direct)
        throw math_error("cone_connection_table: embedded action left the summand");
      out.horizontal_on_section.set_col(at, *direct);
      // independent route: project first, then express
      auto projected = adapted.solve(pi.apply(g.element(emb_alg).apply(cal.eta)));
      if (!projected)
        throw math_error("cone_connection_table: projected action left the summand");
      out.vertical_on_horizontal.set_col(at, *projected);
    }
  }
  auto eta_coords = adapted.solve(cal.eta);
  if (!eta_coords) throw math_error("cone_connection_table: eta outside its own frame");
  out.vertical_on_vertical = Matrix::column(*eta_coords);

  Matrix expected(h_dim + 1, h_dim);
  for (int i = 0; i < h_dim; ++i) expected.at(i, i) = Rational(1);
  out.mixed_symmetry = out.horizontal_on_section == out.vertical_on_horizontal;
  out.section_identity = out.horizontal_on_section == expected;
  Vec e_last(size_t(h_dim + 1), Rational(0));
  e_last[size_t(h_dim)] = Rational(1);
  out.vertical_identity = out.vertical_on_vertical.col(0) == e_last;
  out.complement_zero = out.horizontal_on_vertical.is_zero();
  if (!out.ok()) throw math_error("cone_connection_table: coefficient identity violated");
  return out;
}

}  // namespace pargeo
