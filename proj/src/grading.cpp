#include "pargeo/grading.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "pargeo/quatmat.hpp"

namespace pargeo {

namespace {

Vec unit_vec(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = Rational(1);
  return v;
}

mpz_class denominator_lcm(const Matrix& a) {
  mpz_class l(1);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).raw().get_den().get_mpz_t());
  return l;
}

// Bound on |den * eigenvalue| via Gershgorin discs of the cleared matrix.
mpz_class scaled_eigen_bound(const Matrix& a, const mpz_class& den) {
  mpz_class best(0);
  for (int r = 0; r < a.rows(); ++r) {
    mpq_class total(0);
    for (int c = 0; c < a.cols(); ++c) total += abs(a.at(r, c).raw());
    mpq_class scaled = total * mpq_class(den);
    scaled.canonicalize();
    if (scaled.get_num() > best) best = scaled.get_num();
  }
  return best;
}

struct ScanPiece {
  Rational value;
  Subspace space;
};

// All rational eigenvalues with their eigenspaces, in ascending order.
// Eigenspace dimensions must exhaust the matrix; otherwise the action is
// not diagonalizable over the rationals (or has irrational eigenvalues).
std::vector<ScanPiece> eigen_scan(const Matrix& a, bool integer_only, const char* what) {
  const int n = a.rows();
  mpz_class den = denominator_lcm(a);
  mpz_class bound = scaled_eigen_bound(a, den);
  if (!bound.fits_slong_p() || !den.fits_slong_p())
    throw math_error(std::string(what) + ": eigenvalue bound overflow");
  const long b = bound.get_si();
  const long d = den.get_si();

  std::vector<ScanPiece> out;
  int total = 0;
  for (long t = -b; t <= b && total < n; ++t) {
    if (integer_only && t % d != 0) continue;
    Rational lam(t, d);
    Matrix s = a;
    for (int i = 0; i < n; ++i) s.at(i, i) -= lam;
    Matrix k = s.kernel();
    if (k.cols() == 0) continue;
    out.push_back({lam, Subspace::from_columns(k)});
    total += k.cols();
  }
  if (total != n) {
    std::ostringstream msg;
    msg << what << ": action is not diagonalizable with "
        << (integer_only ? "integer" : "rational") << " eigenvalues (" << total << " of " << n
        << " dimensions found)";
    throw math_error(msg.str());
  }
  return out;
}

}  // namespace

Grading::Grading(int k, Vec element_coords, std::vector<Subspace> components)
    : k_(k), element_coords_(std::move(element_coords)), components_(std::move(components)) {
  if ((int)components_.size() != 2 * k_ + 1) throw math_error("grading: component count mismatch");
  ambient_ = components_[0].ambient_dim();
  zero_ = Subspace::zero(ambient_);
  filtrands_.assign(components_.size(), zero_);
  filtrands_.back() = components_.back();
  for (int i = (int)components_.size() - 2; i >= 0; --i)
    filtrands_[i] = components_[i].sum(filtrands_[i + 1]);
  full_ = filtrands_[0];
}

const Subspace& Grading::component(int j) const {
  if (j < -k_ || j > k_) return zero_;
  return components_[j + k_];
}

const Subspace& Grading::filtrand(int j) const {
  if (j > k_) return zero_;
  if (j < -k_) return full_;
  return filtrands_[j + k_];
}

std::vector<int> Grading::dims() const {
  std::vector<int> out;
  for (int j = -k_; j <= k_; ++j) out.push_back(component_dim(j));
  return out;
}

RepGrading::RepGrading(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw math_error("rep grading: no pieces");
  ambient_ = pieces_[0].space.ambient_dim();
  zero_ = Subspace::zero(ambient_);
  filtrands_.assign(pieces_.size(), zero_);
  filtrands_.back() = pieces_.back().space;
  for (int i = (int)pieces_.size() - 2; i >= 0; --i)
    filtrands_[i] = pieces_[i].space.sum(filtrands_[i + 1]);
}

std::vector<Rational> RepGrading::homogeneities() const {
  std::vector<Rational> out;
  for (const auto& p : pieces_) out.push_back(p.nu);
  return out;
}

Subspace RepGrading::filtrand(const Rational& nu) const {
  for (size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i].nu >= nu) return filtrands_[i];
  return zero_;
}

const Subspace& RepGrading::piece_at(const Rational& nu) const {
  for (const auto& p : pieces_)
    if (p.nu == nu) return p.space;
  return zero_;
}

Grading grade(const LieAlgebra& g, const GradingElement& e) {
  if ((int)e.algebra_coords.size() != g.dim()) throw math_error("grade: coordinate size mismatch");
  if (g.element(e.algebra_coords) != e.rep_matrix)
    throw math_error("grade: representation matrix does not match algebra coordinates");
  Matrix a = g.ad_matrix(e.algebra_coords);
  auto pieces = eigen_scan(a, true, "grade");
  long k = 0;
  for (const auto& p : pieces) k = std::max(k, std::abs(p.value.to_long()));
  std::vector<Subspace> comps(2 * k + 1, Subspace::zero(g.dim()));
  for (const auto& p : pieces) comps[p.value.to_long() + k] = p.space;
  Grading gr((int)k, e.algebra_coords, std::move(comps));
  if (!gr.component(0).contains(e.algebra_coords))
    throw math_error("grade: element does not lie in its own zero component");
  return gr;
}

RepGrading rep_grade(const LieAlgebra& g, const GradingElement& e) {
  if ((int)e.algebra_coords.size() != g.dim())
    throw math_error("rep grade: coordinate size mismatch");
  if (g.element(e.algebra_coords) != e.rep_matrix)
    throw math_error("rep grade: representation matrix does not match algebra coordinates");
  auto scan = eigen_scan(e.rep_matrix, false, "rep grade");
  for (size_t i = 1; i < scan.size(); ++i)
    if (!(scan[i].value - scan[i - 1].value).is_integer())
      throw math_error("rep grade: homogeneities do not differ by integers");
  std::vector<RepGrading::Piece> pieces;
  for (auto& p : scan) pieces.push_back({p.value, std::move(p.space)});
  return RepGrading(std::move(pieces));
}

namespace {

Matrix diag_runs(const std::vector<std::pair<Rational, int>>& runs) {
  Vec d;
  for (const auto& [v, count] : runs)
    for (int i = 0; i < count; ++i) d.push_back(v);
  return Matrix::diagonal(d);
}

// Divide out the gcd of the nonzero ad eigenvalues so grading steps are
// coprime integers.
GradingElement normalized_element(const LieAlgebra& g, const Matrix& rep) {
  Vec coords = g.must_coordinatize(rep, "canonical grading element");
  Matrix a = g.ad_matrix(coords);
  auto pieces = eigen_scan(a, true, "canonical grading element");
  long common = 0;
  for (const auto& p : pieces) common = std::gcd(common, std::abs(p.value.to_long()));
  if (common > 1) {
    Rational s(1, common);
    for (auto& c : coords) c *= s;
    return {coords, rep.scaled(s)};
  }
  return {coords, rep};
}

[[noreturn]] void geometry_mismatch(const std::string& geometry, const LieAlgebra& g,
                                    const char* detail) {
  throw math_error("geometry '" + geometry + "' is not available for " + g.name() + ": " + detail);
}

}  // namespace

GradingElement canonical_grading(const LieAlgebra& g, const std::string& geometry, int block) {
  const AlgebraSpec& s = g.spec();
  const int N = g.rep_dim();

  if (geometry == "conformal") {
    if (s.family == Family::so) {
      if (std::min(s.p, s.q) < 1) geometry_mismatch(geometry, g, "needs an isotropic vector");
      Matrix e = Matrix::zero(N, N);
      e.at(0, 0) = Rational(1);
      e.at(N - 1, N - 1) = Rational(-1);
      return normalized_element(g, e);
    }
    if (s.family == Family::so_C) {
      Matrix e = Matrix::zero(N, N);
      e.at(0, 0) = e.at(1, 1) = Rational(1);
      e.at(N - 2, N - 2) = e.at(N - 1, N - 1) = Rational(-1);
      return normalized_element(g, e);
    }
    geometry_mismatch(geometry, g, "expects an orthogonal family");
  }

  if (geometry == "projective") {
    if (s.family != Family::sl) geometry_mismatch(geometry, g, "expects a special linear family");
    const int slot = N / s.m;  // real dimension of one field slot
    return normalized_element(
        g, diag_runs({{Rational(s.m - 1, s.m), slot}, {Rational(-1, s.m), slot * (s.m - 1)}}));
  }

  if (geometry == "almost_grassmannian") {
    if (s.family != Family::sl || s.field != FieldTag::R)
      geometry_mismatch(geometry, g, "expects a real special linear family");
    if (block < 1 || block >= s.m) geometry_mismatch(geometry, g, "block parameter out of range");
    return normalized_element(g, diag_runs({{Rational(s.m - block, s.m), block},
                                            {Rational(-block, s.m), s.m - block}}));
  }

  if (geometry == "contact_projective") {
    if (s.family != Family::sp_F || s.m < 2)
      geometry_mismatch(geometry, g, "expects a symplectic family of rank at least 2");
    const int slot = (s.field == FieldTag::C) ? 2 : 1;
    Matrix e = Matrix::zero(N, N);
    for (int i = 0; i < slot; ++i) {
      e.at(i, i) = Rational(1);
      e.at(N - 1 - i, N - 1 - i) = Rational(-1);
    }
    return normalized_element(g, e);
  }

  if (geometry == "cr") {
    if (s.family != Family::su || s.p < 1 || s.q < 1)
      geometry_mismatch(geometry, g, "expects a unitary family of indefinite signature");
    const int n = s.p + s.q;
    Matrix e = Matrix::zero(N, N);
    // complex E_{1n} + E_{n1}: swaps the two Witt slots
    for (int i = 0; i < 2; ++i) {
      e.at(i, 2 * (n - 1) + i) = Rational(1);
      e.at(2 * (n - 1) + i, i) = Rational(1);
    }
    return normalized_element(g, e);
  }

  if (geometry == "free_distribution") {
    if (s.family != Family::so || std::abs(s.p - s.q) != 1 || std::min(s.p, s.q) < 2)
      geometry_mismatch(geometry, g, "expects so(n+1, n) with n at least 2");
    const int r = std::min(s.p, s.q);
    return normalized_element(
        g, diag_runs({{Rational(1), r}, {Rational(0), N - 2 * r}, {Rational(-1), r}}));
  }

  if (geometry == "path") {
    if (s.family != Family::sl || s.field != FieldTag::R || s.m < 3)
      geometry_mismatch(geometry, g, "expects sl(n+2, R) with n at least 1");
    Rational x(-3, s.m);
    return normalized_element(
        g, diag_runs({{x + Rational(2), 1}, {x + Rational(1), 1}, {x, s.m - 2}}));
  }

  if (geometry == "isotropic_line") {
    if (s.family == Family::so_star) {
      QuatMatrix e(s.m, s.m);
      e.at(0, 1) = Quaternion::i();
      e.at(1, 0) = -Quaternion::i();
      return normalized_element(g, realify(e));
    }
    if (s.family == Family::sp_pq) {
      if (s.p < 1 || s.q < 1) geometry_mismatch(geometry, g, "needs an isotropic vector");
      const int n = s.p + s.q;
      QuatMatrix e(n, n);
      e.at(0, n - 1) = Quaternion::one();
      e.at(n - 1, 0) = Quaternion::one();
      return normalized_element(g, realify(e));
    }
    geometry_mismatch(geometry, g, "expects a quaternionic or so* family");
  }

  throw math_error("unknown geometry '" + geometry + "'");
}

GradingElement element_from_rep(const LieAlgebra& g, const Matrix& rep) {
  return {g.must_coordinatize(rep, "grading element"), rep};
}

namespace {

// Highest homogeneity whose filtrand meets the image of the operator.
Rational max_meeting_homogeneity(const Matrix& op, const RepGrading& rg) {
  Subspace im = Subspace::from_columns(op);
  if (im.is_zero()) throw math_error("image degree: operator acts as zero");
  const auto& ps = rg.pieces();
  for (int i = (int)ps.size() - 1; i >= 0; --i)
    if (!im.intersect(rg.filtrand(ps[i].nu)).is_zero()) return ps[i].nu;
  throw math_error("image degree: no filtrand met");  // unreachable
}

// Orbit-type representatives inside g_1 for the enumerable |1|-graded
// geometries. Returns nothing when no enumeration applies; callers then
// fall back to sampling.
std::optional<std::vector<Vec>> orbit_type_representatives(const LieAlgebra& g,
                                                           const std::string& geometry,
                                                           const Grading& gr,
                                                           const RepGrading& rg) {
  if (gr.depth() != 1) return std::nullopt;
  const AlgebraSpec& s = g.spec();
  const int N = g.rep_dim();
  const Subspace& g1 = gr.component(1);

  if (geometry == "projective" && s.family == Family::sl) {
    // The Levi factor acts transitively on nonzero covectors.
    return std::vector<Vec>{g1.basis_vec(0)};
  }

  if (geometry == "almost_grassmannian" && s.family == Family::sl && s.field == FieldTag::R) {
    // Orbits are classified by rank; representatives are partial-identity
    // blocks in the upper-right corner.
    const int b = rg.top().space.dim();
    const int lower = s.m - b;
    // Canonical coordinate alignment: top piece spanned by the first b axes.
    for (int t = 0; t < b; ++t)
      if (!rg.top().space.contains(unit_vec(N, t))) return std::nullopt;
    std::vector<Vec> reps;
    for (int r = 1; r <= std::min(b, lower); ++r) {
      Matrix x = Matrix::zero(N, N);
      for (int t = 0; t < r; ++t) x.at(t, b + t) = Rational(1);
      auto coords = g.coordinatize(x);
      if (!coords || !g1.contains(*coords)) return std::nullopt;
      reps.push_back(*coords);
    }
    return reps;
  }

  if (geometry == "conformal" && (s.family == Family::so || s.family == Family::so_C)) {
    // g_1 is identified with the middle slab of V by evaluating against the
    // lowest-weight axis; orbit types are the norm types of that vector.
    std::vector<Vec> targets;
    if (s.family == Family::so) {
      const int n = N;
      const int r = std::min(s.p, s.q);
      if (r >= 2) {
        Vec pos = unit_vec(n, 1) + unit_vec(n, n - 2);
        Vec neg = unit_vec(n, 1) + Rational(-1) * unit_vec(n, n - 2);
        targets = {pos, neg, unit_vec(n, 1)};
      } else {
        // definite middle slab: a single norm type
        targets = {unit_vec(n, 1)};
      }
    } else {
      const int m = s.m;
      if (m >= 4) {
        Vec nonnull = unit_vec(N, 2) + unit_vec(N, 2 * (m - 2));
        targets = {nonnull, unit_vec(N, 2)};
      } else {
        targets = {unit_vec(N, 2)};
      }
    }
    // Solve element(X) . e_last = w over the g_1 basis.
    const Subspace& comp = g1;
    Vec last = unit_vec(N, (s.family == Family::so) ? N - 1 : 2 * (s.m - 1));
    std::vector<Vec> cols;
    for (int i = 0; i < comp.dim(); ++i)
      cols.push_back(g.element(comp.basis_vec(i)).apply(last));
    Matrix solve_m = Matrix::from_columns(cols);
    std::vector<Vec> reps;
    for (const Vec& w : targets) {
      auto sol = solve_m.solve(w);
      if (!sol) return std::nullopt;
      Vec coords(g.dim(), Rational(0));
      for (int i = 0; i < comp.dim(); ++i) coords = coords + (*sol)[i] * comp.basis_vec(i);
      reps.push_back(coords);
    }
    return reps;
  }

  return std::nullopt;
}

}  // namespace

ImageDegreeResult image_degree(const LieAlgebra& g, const Grading& gr, const RepGrading& rg,
                               const std::string& geometry, std::uint64_t seed) {
  const Subspace& gplus = gr.filtrand(1);
  if (gplus.is_zero()) throw math_error("image degree: positive filtrand is trivial");

  std::vector<Vec> tests;
  bool exact = false;
  if (auto reps = orbit_type_representatives(g, geometry, gr, rg)) {
    tests = *reps;
    exact = true;
  }
  // Basis vectors of g_(1) are cheap and keep the sampled mode honest.
  for (int i = 0; i < gplus.dim(); ++i) tests.push_back(gplus.basis_vec(i));
  if (!exact) {
    for (int i = 0; i + 1 < gplus.dim(); ++i)
      tests.push_back(gplus.basis_vec(i) + gplus.basis_vec(i + 1));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int produced = 0;
    for (int attempt = 0; attempt < 1000 && produced < 100; ++attempt) {
      Vec v(g.dim(), Rational(0));
      for (int i = 0; i < gplus.dim(); ++i) {
        int c = coeff(rng);
        if (c != 0) v = v + Rational(c) * gplus.basis_vec(i);
      }
      if (is_zero(v)) continue;
      tests.push_back(v);
      ++produced;
    }
  }

  ImageDegreeResult out;
  bool first = true;
  for (const Vec& v : tests) {
    Rational r = max_meeting_homogeneity(g.element(v), rg);
    if (first || r < out.degree) {
      out.degree = r;
      out.witness = v;
      first = false;
    }
  }
  out.exact = exact;
  out.tested = (int)tests.size();
  return out;
}

RankBoundReport rank_bound_check(const Grading& gr, const RepGrading& rg, int d) {
  RankBoundReport rep;
  rep.r_V = rg.ambient();
  for (int j = -gr.depth(); j < 0; ++j) rep.r_g_minus += gr.component_dim(j);
  rep.r_V_top = rg.top().space.dim();
  rep.d = d;
  rep.ok = rep.r_V <= rep.r_g_minus + rep.r_V_top + rep.d;
  return rep;
}

bool bracket_homogeneity_ok(const LieAlgebra& g, const Grading& gr, std::string* why) {
  const int k = gr.depth();
  for (int i = -k; i <= k; ++i)
    for (int j = -k; j <= k; ++j) {
      const Subspace& a = gr.component(i);
      const Subspace& b = gr.component(j);
      const Subspace& target = gr.component(i + j);
      for (int x = 0; x < a.dim(); ++x)
        for (int y = 0; y < b.dim(); ++y) {
          Vec br = g.bracket(a.basis_vec(x), b.basis_vec(y));
          if (!target.contains(br)) {
            if (why) {
              std::ostringstream msg;
              msg << "bracket of g_" << i << " and g_" << j << " escapes g_" << i + j;
              *why = msg.str();
            }
            return false;
          }
        }
    }
  return true;
}

bool killing_pairing_ok(const LieAlgebra& g, const Grading& gr, std::string* why) {
  const int k = gr.depth();
  for (int j = 0; j <= k; ++j) {
    const Subspace& a = gr.component(j);
    const Subspace& b = gr.component(-j);
    if (a.dim() != b.dim()) {
      if (why) *why = "opposite components have different dimensions at level " + std::to_string(j);
      return false;
    }
    if (a.dim() == 0) continue;
    Matrix gram(a.dim(), b.dim());
    for (int x = 0; x < a.dim(); ++x)
      for (int y = 0; y < b.dim(); ++y) gram.at(x, y) = g.killing(a.basis_vec(x), b.basis_vec(y));
    if (gram.det().is_zero()) {
      if (why) *why = "Killing pairing degenerate at level " + std::to_string(j);
      return false;
    }
  }
  return true;
}

bool rep_compatibility_ok(const LieAlgebra& g, const Grading& gr, const RepGrading& rg,
                          std::string* why) {
  const int k = gr.depth();
  for (int i = -k; i <= k; ++i) {
    const Subspace& comp = gr.component(i);
    for (int x = 0; x < comp.dim(); ++x) {
      Matrix op = g.element(comp.basis_vec(x));
      for (const auto& piece : rg.pieces()) {
        const Subspace& target = rg.piece_at(piece.nu + Rational(i));
        for (int y = 0; y < piece.space.dim(); ++y) {
          Vec img = op.apply(piece.space.basis_vec(y));
          if (!target.contains(img)) {
            if (why) {
              std::ostringstream msg;
              msg << "g_" << i << " maps homogeneity " << piece.nu.str() << " outside "
                  << (piece.nu + Rational(i)).str();
              *why = msg.str();
            }
            return false;
          }
        }
      }
    }
  }
  return true;
}

Vec reconstruct_grading_element(const LieAlgebra& g, const Grading& gr) {
  const int d = g.dim();
  const auto& ad = g.ad_basis();
  std::vector<Matrix> blocks;
  Vec rhs;
  for (int j = -gr.depth(); j <= gr.depth(); ++j) {
    const Subspace& comp = gr.component(j);
    for (int x = 0; x < comp.dim(); ++x) {
      Vec v = comp.basis_vec(x);
      std::vector<Vec> cols;
      for (int a = 0; a < d; ++a) cols.push_back(ad[a].apply(v));
      blocks.push_back(Matrix::from_columns(cols));
      Vec target = Rational(j) * v;
      rhs.insert(rhs.end(), target.begin(), target.end());
    }
  }
  Matrix stacked = blocks[0];
  for (size_t i = 1; i < blocks.size(); ++i) stacked = stacked.vstack(blocks[i]);
  auto sol = stacked.solve(rhs);
  if (!sol) throw math_error("grading element reconstruction: inconsistent system");
  return *sol;
}

}  // namespace pargeo
