#include "pargeo/cotrans.hpp"

#include <algorithm>
#include <random>

namespace pargeo {

namespace {

Vec unit_vec(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = Rational(1);
  return v;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational bilin(const Matrix& m, const Vec& v, const Vec& w) { return dot(v, m.apply(w)); }

}  // namespace

QuaternionicForm QuaternionicForm::standard(int m) {
  if (m < 1) throw math_error("quaternionic form: need at least one slot");
  QuaternionicForm q;
  q.m = m;
  Vec diag;
  for (int l = 0; l < m; ++l) {
    diag.push_back(Rational(1));
    diag.push_back(Rational(-1));
    diag.push_back(Rational(1));
    diag.push_back(Rational(-1));
  }
  q.g0 = Matrix::diagonal(diag);
  q.g0_i = q.g0 * structure_map(Quaternion::i(), m);
  q.g0_j = q.g0 * structure_map(Quaternion::j(), m);
  q.g0_k = q.g0 * structure_map(Quaternion::k(), m);
  return q;
}

Quaternion htilde(const QuaternionicForm& q, const Vec& v, const Vec& w) {
  return Quaternion(-bilin(q.g0_j, v, w), bilin(q.g0_k, v, w), bilin(q.g0, v, w),
                    -bilin(q.g0_i, v, w));
}

Subspace orbit_space(const LieAlgebra& g, const Vec& v) {
  std::vector<Vec> cols;
  for (const Matrix& x : g.basis()) cols.push_back(x.apply(v));
  return Subspace::from_columns(Matrix::from_columns(cols));
}

OrbitReport orbit_codim(const LieAlgebra& g, const Vec& v) {
  if (is_zero(v)) throw math_error("orbit of the zero vector is not defined");
  OrbitReport rep;
  rep.vector = v;
  rep.orbit_dim = orbit_space(g, v).dim();
  rep.codim = g.rep_dim() - rep.orbit_dim;
  return rep;
}

std::vector<Vec> orbit_type_representatives(const LieAlgebra& g) {
  const AlgebraSpec& s = g.spec();
  const int N = g.rep_dim();
  switch (s.family) {
    case Family::sl:
    case Family::sp_F:
      return {unit_vec(N, 0)};
    case Family::su: {
      std::vector<Vec> out;
      if (s.p >= 1) out.push_back(unit_vec(N, 0));
      if (s.q >= 1) out.push_back(unit_vec(N, 2 * s.p));
      if (s.p >= 1 && s.q >= 1) out.push_back(unit_vec(N, 0) + unit_vec(N, 2 * s.p));
      return out;
    }
    case Family::so: {
      const int r = std::min(s.p, s.q);
      if (r == 0) return {unit_vec(N, 0)};
      Vec null_v = unit_vec(N, 0);
      Vec pos = unit_vec(N, 0) + unit_vec(N, N - 1);
      Vec neg = unit_vec(N, 0) + Rational(-1) * unit_vec(N, N - 1);
      return {null_v, pos, neg};
    }
    case Family::so_C:
      return {unit_vec(N, 0), unit_vec(N, 0) + unit_vec(N, N - 2)};
    case Family::sp_pq: {
      std::vector<Vec> out;
      if (s.p >= 1) out.push_back(unit_vec(N, 0));
      if (s.q >= 1) out.push_back(unit_vec(N, 4 * s.p));
      if (s.p >= 1 && s.q >= 1) out.push_back(unit_vec(N, 0) + unit_vec(N, 4 * s.p));
      return out;
    }
    case Family::so_star:
      // htilde-non-null e_1 and htilde-null (1, i, 0, ...)
      return {unit_vec(N, 0), unit_vec(N, 0) + unit_vec(N, 5)};
  }
  throw math_error("orbit representatives: unknown family");
}

int expected_cotransitivity(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::sl:
    case Family::sp_F:
      return 0;
    case Family::so:
    case Family::su:
    case Family::sp_pq:
      return 1;
    case Family::so_C:
      return 2;
    case Family::so_star:
      return 3;
  }
  throw math_error("cotransitivity classification: unknown family");
}

CotransitivityResult cotransitivity_degree(const LieAlgebra& g, std::uint64_t seed, int samples) {
  CotransitivityResult res;
  const int N = g.rep_dim();
  int rep_max = -1;
  auto consider = [&](const Vec& v, bool representative) {
    OrbitReport rep = orbit_codim(g, v);
    if (representative) rep_max = std::max(rep_max, rep.codim);
    if (rep.codim > res.d || res.tested == 0) {
      res.d = rep.codim;
      res.witness = rep;
    }
    ++res.tested;
  };
  for (const Vec& v : orbit_type_representatives(g)) consider(v, true);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int produced = 0;
  for (int attempt = 0; attempt < 20 * samples && produced < samples; ++attempt) {
    Vec v(N, Rational(0));
    for (int i = 0; i < N; ++i) v[i] = Rational(coeff(rng));
    if (is_zero(v)) continue;
    consider(v, false);
    ++produced;
  }
  // the representative set is complete for every catalog family; a sample
  // beating it would disprove that
  res.exact = (res.d == rep_max);
  return res;
}

Subspace form_perp(const LieAlgebra& g, const Vec& v) {
  const AlgebraSpec& s = g.spec();
  const int N = g.rep_dim();
  std::vector<Vec> rows;
  switch (s.family) {
    case Family::so:
    case Family::su:
    case Family::sp_pq:
      rows.push_back(g.invariant_form()->apply(v));
      break;
    case Family::so_C: {
      const Matrix& form = *g.invariant_form();
      Matrix jmat = complex_structure_matrix(s.m);
      rows.push_back(form.apply(v));
      rows.push_back(form.apply(jmat.apply(v)));
      break;
    }
    case Family::so_star: {
      QuaternionicForm q = QuaternionicForm::standard(s.m);
      rows.push_back(q.g0.apply(v));
      rows.push_back(q.g0_i.apply(v));
      rows.push_back(q.g0_k.apply(v));
      break;
    }
    default:
      throw math_error("form_perp: no invariant form for " + g.name());
  }
  Matrix constraint((int)rows.size(), N);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < N; ++c) constraint.at(r, c) = rows[r][c];
  return Subspace::from_columns(constraint.kernel());
}

namespace {

// slot-wise helpers for quaternionic vectors (right module action)
QuatVec qv_add(const QuatVec& a, const QuatVec& b) {
  QuatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QuatVec qv_sub(const QuatVec& a, const QuatVec& b) {
  QuatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QuatVec qv_scale(const QuatVec& a, const Quaternion& mu) {
  QuatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * mu;
  return out;
}

bool qv_zero(const QuatVec& a) {
  for (const auto& q : a)
    if (!q.is_zero()) return false;
  return true;
}

Rational im_dot(const Quaternion& a, const Quaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Quaternion im_cross(const Quaternion& a, const Quaternion& b) {
  return (a * b - b * a) * Rational(1, 2);
}

Quaternion ht(const QuaternionicForm& q, const QuatVec& a, const QuatVec& b) {
  return htilde(q, realify_vec(a), realify_vec(b));
}

// The 24 rotation classes of the binary octahedral group, as rational
// quaternions up to scale. Conjugating by them moves any nonzero imaginary
// direction across an irreducible orbit.
std::vector<Quaternion> rotation_candidates() {
  std::vector<Quaternion> out;
  const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  for (const auto& u : units) out.push_back(u);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      out.push_back(units[a] + units[b]);
      out.push_back(units[a] - units[b]);
    }
  for (int si = -1; si <= 1; si += 2)
    for (int sj = -1; sj <= 1; sj += 2)
      for (int sk = -1; sk <= 1; sk += 2)
        out.push_back(Quaternion(Rational(1), Rational(si), Rational(sj), Rational(sk)));
  return out;
}

// Find a rational mu so that conj(mu) * zf * mu has positive component
// along the reference direction.
Quaternion align_positive(const Quaternion& reference, const Quaternion& zf) {
  Quaternion fallback;  // a rotation giving a nonzero but negative component
  bool have_fallback = false;
  for (const Quaternion& mu : rotation_candidates()) {
    Quaternion image = mu.conj() * zf * mu;
    Rational s = im_dot(reference, image);
    if (s.sign() > 0) return mu;
    if (s.sign() < 0 && !have_fallback) {
      fallback = mu;
      have_fallback = true;
    }
  }
  if (!have_fallback) throw math_error("adapted basis: alignment search failed");
  // flip by a half-turn about a rational axis orthogonal to the image
  Quaternion image = fallback.conj() * zf * fallback;
  Quaternion axis = im_cross(image, Quaternion::i());
  if (axis.is_zero()) axis = im_cross(image, Quaternion::j());
  return fallback * axis;
}

struct Frame {
  std::vector<QuatVec> vecs;
  std::vector<Quaternion> norms;  // htilde(f,f), imaginary and nonzero
};

// Quaternionic Gram-Schmidt: grow the pairwise-orthogonal frame to `target`
// vectors, aligning each new norm positively along `reference`.
void extend_frame(const QuaternionicForm& q, Frame& fr, const Quaternion& reference, int target) {
  std::vector<QuatVec> pool;
  for (int l = 0; l < q.m; ++l) {
    QuatVec e(q.m);
    e[l] = Quaternion::one();
    pool.push_back(e);
  }
  while ((int)fr.vecs.size() < target) {
    // reduce the pool against the current frame
    std::vector<QuatVec> reduced;
    std::vector<size_t> origin;
    for (size_t p = 0; p < pool.size(); ++p) {
      QuatVec r = pool[p];
      for (size_t a = 0; a < fr.vecs.size(); ++a) {
        Quaternion lambda = fr.norms[a].inv() * ht(q, fr.vecs[a], r);
        r = qv_sub(r, qv_scale(fr.vecs[a], lambda));
      }
      if (!qv_zero(r)) {
        reduced.push_back(r);
        origin.push_back(p);
      }
    }
    if (reduced.empty()) throw math_error("adapted basis: frame cannot be completed");

    QuatVec f;
    size_t used = 0;
    bool found = false;
    for (size_t i = 0; i < reduced.size() && !found; ++i)
      if (!ht(q, reduced[i], reduced[i]).is_zero()) {
        f = reduced[i];
        used = origin[i];
        found = true;
      }
    if (!found) {
      // all reductions null: combine a non-orthogonal pair into a non-null
      // vector via htilde(x + y*conj(t)*i) = 2|t|^2 i
      for (size_t a = 0; a < reduced.size() && !found; ++a)
        for (size_t b = a + 1; b < reduced.size() && !found; ++b) {
          Quaternion t = ht(q, reduced[a], reduced[b]);
          if (t.is_zero()) continue;
          f = qv_add(reduced[a], qv_scale(reduced[b], t.conj() * Quaternion::i()));
          used = origin[a];
          found = true;
        }
      if (!found) throw math_error("adapted basis: form degenerate on the complement");
    }

    Quaternion mu = align_positive(reference, ht(q, f, f));
    f = qv_scale(f, mu);
    Quaternion norm = ht(q, f, f);
    if (im_dot(reference, norm).sign() <= 0)
      throw math_error("adapted basis: alignment postcondition failed");
    fr.vecs.push_back(f);
    fr.norms.push_back(norm);
    pool.erase(pool.begin() + used);
  }
}

// the structure-map action of a quaternion: v -> v . conj(a)
QuatVec rho_apply(const Quaternion& a, const QuatVec& v) { return qv_scale(v, a.conj()); }

}  // namespace

AdaptedBasis adapted_basis(const QuaternionicForm& q, const Vec& u_real) {
  if ((int)u_real.size() != q.real_dim()) throw math_error("adapted basis: dimension mismatch");
  QuatVec u = quaternion_slots(u_real);
  if (qv_zero(u)) throw math_error("adapted basis: zero vector");

  AdaptedBasis out;
  Quaternion z = ht(q, u, u);
  Frame fr;

  if (!z.is_zero()) {
    out.null_case = false;
    out.z = z;
    out.j_rot = ScaledQuaternion(z, z.norm2());
    Quaternion cross = im_cross(z, Quaternion::i());
    out.i_rot = cross.is_zero() ? ScaledQuaternion(Quaternion::j(), Rational(1))
                                : ScaledQuaternion::unit(cross);
    out.k_rot = out.i_rot * out.j_rot;

    fr.vecs.push_back(u);
    fr.norms.push_back(z);
    extend_frame(q, fr, z, q.m);
    for (size_t a = 0; a < fr.vecs.size(); ++a) {
      out.vectors.push_back(realify_vec(fr.vecs[a]));
      out.vectors.push_back(realify_vec(rho_apply(out.i_rot.value, fr.vecs[a])));
      out.vectors.push_back(realify_vec(rho_apply(out.j_rot.value, fr.vecs[a])));
      out.vectors.push_back(realify_vec(rho_apply(out.k_rot.value, fr.vecs[a])));
    }
  } else {
    if (q.m < 2) throw math_error("adapted basis: null vector needs at least two slots");
    out.null_case = true;

    // partner x with htilde(u,x) nonzero, twisted so the pairing is |t|^2 j
    QuatVec x;
    Quaternion t;
    const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                 Quaternion::k()};
    for (int l = 0; l < q.m && t.is_zero(); ++l)
      for (int s = 0; s < 4 && t.is_zero(); ++s) {
        QuatVec cand(q.m);
        cand[l] = units[s];
        Quaternion val = ht(q, u, cand);
        if (!val.is_zero()) {
          x = cand;
          t = val;
        }
      }
    if (t.is_zero()) throw math_error("adapted basis: form degenerate at the null vector");
    x = qv_scale(x, t.conj() * Quaternion::j());
    Quaternion tau = ht(q, u, x);  // = |t|^2 j

    // make the partner null: solve tau*mu + conj(mu)*tau = htilde(x,x)
    Quaternion s = ht(q, x, x);
    Rational c2 = Rational(2) * tau.y;  // tau = (norm) j
    Quaternion mu(s.y / c2, -(s.z / c2), Rational(0), s.x / c2);
    QuatVec uprime = qv_sub(x, qv_scale(u, mu));
    if (!ht(q, uprime, uprime).is_zero() || ht(q, u, uprime) != tau)
      throw math_error("adapted basis: null partner construction failed");
    out.pairing = tau;

    QuatVec v = qv_add(u, uprime);
    QuatVec w = qv_sub(u, uprime);
    out.i_rot = ScaledQuaternion(Quaternion::i(), Rational(1));
    out.j_rot = ScaledQuaternion(Quaternion::j(), Rational(1));
    out.k_rot = ScaledQuaternion(Quaternion::k(), Rational(1));

    QuatVec v2 = qv_scale(v, Quaternion(Rational(1, 2)));
    QuatVec w2 = qv_scale(w, Quaternion(Rational(1, 2)));
    QuatVec miw = qv_scale(rho_apply(Quaternion::i(), w2), Quaternion(Rational(-1)));
    out.vectors.push_back(realify_vec(v2));
    out.vectors.push_back(realify_vec(rho_apply(Quaternion::i(), v2)));
    out.vectors.push_back(realify_vec(rho_apply(Quaternion::j(), v2)));
    out.vectors.push_back(realify_vec(rho_apply(Quaternion::k(), v2)));
    out.vectors.push_back(realify_vec(miw));
    out.vectors.push_back(realify_vec(w2));
    out.vectors.push_back(realify_vec(rho_apply(Quaternion::j(), miw)));
    out.vectors.push_back(realify_vec(rho_apply(Quaternion::k(), miw)));

    fr.vecs = {v, w};
    fr.norms = {ht(q, v, v), ht(q, w, w)};
    extend_frame(q, fr, fr.norms[0], q.m);
    for (size_t a = 2; a < fr.vecs.size(); ++a) {
      out.vectors.push_back(realify_vec(fr.vecs[a]));
      out.vectors.push_back(realify_vec(rho_apply(Quaternion::i(), fr.vecs[a])));
      out.vectors.push_back(realify_vec(rho_apply(Quaternion::j(), fr.vecs[a])));
      out.vectors.push_back(realify_vec(rho_apply(Quaternion::k(), fr.vecs[a])));
    }
  }

  Matrix cols = Matrix::from_columns(out.vectors);
  if (cols.rank() != q.real_dim()) throw math_error("adapted basis: output is not a basis");
  auto coords = cols.solve(u_real);
  if (!coords) throw math_error("adapted basis: could not express the input vector");
  out.u_coords = *coords;
  return out;
}

}  // namespace pargeo
