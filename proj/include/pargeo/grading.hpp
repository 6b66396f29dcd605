#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pargeo/algebra.hpp"
#include "pargeo/subspace.hpp"

namespace pargeo {

struct GradingElement {
  Vec algebra_coords;  // coordinates in the algebra basis
  Matrix rep_matrix;   // action on the (realified) standard representation
};

/// Eigenspace decomposition of the algebra under ad of a grading element:
/// components g_j for j in [-k, k] plus the induced filtration.
class Grading {
 public:
  Grading(int k, Vec element_coords, std::vector<Subspace> components);

  int depth() const { return k_; }
  int ambient() const { return ambient_; }
  const Vec& element_coords() const { return element_coords_; }
  /// g_j; the zero subspace outside [-k, k].
  const Subspace& component(int j) const;
  /// g_(j) = sum of g_i over i >= j.
  const Subspace& filtrand(int j) const;
  int component_dim(int j) const { return component(j).dim(); }
  /// Component dimensions listed from -k to k.
  std::vector<int> dims() const;

 private:
  int k_;
  int ambient_;
  Vec element_coords_;
  std::vector<Subspace> components_;  // index j + k
  std::vector<Subspace> filtrands_;   // index j + k, plus the empty tail
  Subspace zero_, full_;
};

/// Eigenspace decomposition of the representation: rational homogeneities.
class RepGrading {
 public:
  struct Piece {
    Rational nu;
    Subspace space;
  };

  explicit RepGrading(std::vector<Piece> pieces);

  int ambient() const { return ambient_; }
  const std::vector<Piece>& pieces() const { return pieces_; }  // ascending nu
  std::vector<Rational> homogeneities() const;
  const Piece& top() const { return pieces_.back(); }
  /// H_(nu) = sum of pieces with homogeneity >= nu.
  Subspace filtrand(const Rational& nu) const;
  const Subspace& piece_at(const Rational& nu) const;  // zero subspace if absent

 private:
  int ambient_;
  std::vector<Piece> pieces_;
  std::vector<Subspace> filtrands_;  // aligned with pieces_, descending tail sums
  Subspace zero_;
};

/// Decompose the algebra under ad of the element. Throws when the action is
/// not diagonalizable over the integers.
Grading grade(const LieAlgebra& g, const GradingElement& e);

/// Decompose the representation under the element; eigenvalues must be
/// rational and differ by integers.
RepGrading rep_grade(const LieAlgebra& g, const GradingElement& e);

/// Named block-diagonal grading elements, one per supported geometry:
/// conformal, projective, contact_projective, almost_grassmannian (block
/// parameter), cr, free_distribution, path, isotropic_line. Eigenvalue steps
/// are normalized to have gcd 1.
GradingElement canonical_grading(const LieAlgebra& g, const std::string& geometry, int block = 0);

/// Wrap a representation matrix as a grading element (must lie in the algebra).
GradingElement element_from_rep(const LieAlgebra& g, const Matrix& rep);

struct ImageDegreeResult {
  Rational degree;
  bool exact = false;  // true when the orbit-type enumeration covers all of g_(1)
  int tested = 0;
  Vec witness;  // test vector attaining the minimum
};

/// Largest homogeneity r such that every tested nonzero v in g_(1) has
/// image(v) meeting H_(r). Exact when `geometry` names a grading whose
/// g_(1)-orbit types are enumerable (conformal, projective,
/// almost_grassmannian); otherwise canonical vectors plus seeded samples.
ImageDegreeResult image_degree(const LieAlgebra& g, const Grading& gr, const RepGrading& rg,
                               const std::string& geometry = "", std::uint64_t seed = 12345);

struct RankBoundReport {
  int r_V = 0;        // real dimension of V
  int r_g_minus = 0;  // dim of the negative part of the algebra
  int r_V_top = 0;    // dim of the highest-homogeneity piece
  int d = 0;          // cotransitivity degree
  bool ok = false;    // r_V <= r_g_minus + r_V_top + d
};

RankBoundReport rank_bound_check(const Grading& gr, const RepGrading& rg, int d);

/// [g_i, g_j] inside g_{i+j} on full component bases.
bool bracket_homogeneity_ok(const LieAlgebra& g, const Grading& gr, std::string* why = nullptr);
/// Killing pairing g_j x g_{-j} nondegenerate for every j.
bool killing_pairing_ok(const LieAlgebra& g, const Grading& gr, std::string* why = nullptr);
/// g_i . H_nu inside H_{nu+i} on full bases.
bool rep_compatibility_ok(const LieAlgebra& g, const Grading& gr, const RepGrading& rg,
                          std::string* why = nullptr);
/// Solves ad_X = j on each g_j; the unique solution must be the grading
/// element itself.
Vec reconstruct_grading_element(const LieAlgebra& g, const Grading& gr);

}  // namespace pargeo
