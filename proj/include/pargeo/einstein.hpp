#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pargeo/algebra.hpp"
#include "pargeo/grading.hpp"
#include "pargeo/subspace.hpp"

namespace pargeo {

/// An involutive automorphism of the algebra, acting on algebra coordinates,
/// together with the datum it was built from.
struct Involution {
  enum class Source { metric, complex_structure, subspace, explicit_map };

  Matrix map;  // dim x dim
  Source source = Source::explicit_map;
  std::optional<Matrix> datum_matrix;      // the metric or the complex structure
  std::optional<Subspace> datum_subspace;  // for the subspace construction
};

/// sigma(A) = -metric^{-1} A^T metric lifted through the algebra basis.
/// Throws when some image leaves the algebra (incompatible symmetry class).
Involution involution_from_metric(const LieAlgebra& g, const Matrix& metric);

/// For the symplectic families: J^2 = -1 and the skew form w must make
/// g = w o J symmetric; delegates to the metric construction.
Involution involution_from_complex_structure(const LieAlgebra& g, const Matrix& j);

/// For the metric families: conjugation by Id_K - Id_{K-perp}. K must be
/// nondegenerate for the invariant form and stable under the structure maps.
Involution involution_from_subspace(const LieAlgebra& g, const Subspace& k);

/// The standard compact-fixed-point involution A -> -A^T (identity metric).
Involution cartan_involution(const LieAlgebra& g);

/// -B(sigma X, Y) positive definite, decided by exact elimination pivots.
bool is_cartan(const LieAlgebra& g, const Involution& sigma);

/// sigma^2 = id, automorphism on all basis pairs, Killing invariance.
bool verify_involution(const LieAlgebra& g, const Involution& sigma, std::string* why = nullptr);

struct EinsteinReport {
  bool einstein = false;
  Vec witness;             // nonzero element of sigma(g_(1)) meeting g_(0), if any
  bool pi_bijective = false;  // projection of sigma(g_(1)) to g/g_(0) is bijective
};

/// The algebraic Einstein condition: sigma(g_(1)) intersects g_(0) trivially.
EinsteinReport is_einstein(const LieAlgebra& g, const Involution& sigma, const Grading& gr);

struct EinsteinExtraction {
  const LieAlgebra* algebra;
  Matrix sigma;
  Vec E_tilde;               // lifted grading element, sigma(E) = -E
  Subspace F_plus, F_minus;  // eigenspaces of sigma
  Subspace C_plus, C_minus, C;
  Grading new_grading;       // regraded by ad of E_tilde
  std::vector<Vec> minus_basis;  // concatenated bases of new g_j, j = -k..-1
  std::vector<Vec> plus_basis;   // aligned bases of new g_{-j}
  Matrix P;                      // sigma restricted: minus coords -> plus coords
  Matrix P_bilinear;             // B(P(X), Y) on the minus basis
};

/// Requires is_einstein; computes the sigma-eigenspaces, the lifted grading
/// element inside C, the regraded splitting, and the pairing P.
EinsteinExtraction extract(const LieAlgebra& g, const Involution& sigma, const Grading& gr);

struct ExtractionReport {
  bool symmetric = false;       // B(P(X),Y) = B(X,P(Y))
  bool nondegenerate = false;   // det of the pairing nonzero
  bool homogeneous = false;     // P respects the homogeneity blocks
  bool equivariant = false;     // {P(X),P(Y)} = P({X,Y})
  bool zero_action = false;     // sigma on C acts as minus P-conjugation
  bool plus_generated = false;  // F+ = bracket closure of {X + P(X)}
  bool minus_generated = false; // F- = span{X - P(X)} + brackets against F+
  std::string witness;
  bool ok() const {
    return symmetric && nondegenerate && homogeneous && equivariant && zero_action &&
           plus_generated && minus_generated;
  }
};

ExtractionReport verify_extraction(const EinsteinExtraction& x);

/// Rebuilds the involution from P alone (P on g_-, P^{-1} on g_+, bracket
/// images on g_0) and checks it agrees with the original matrix exactly.
Involution rebuild_sigma(const EinsteinExtraction& x);

struct FiltrandMetricReport {
  Rational degree;          // image degree used as the threshold
  bool hypothesis = false;  // metric nondegenerate on every filtrand above it
  bool einstein = false;
  bool agrees = false;  // hypothesis true implies einstein
  std::string note;
};

/// Sufficient criterion: a compatible metric nondegenerate on every filtrand
/// of homogeneity at least the image degree forces the Einstein condition.
FiltrandMetricReport einstein_from_filtrand_metric(const LieAlgebra& g, const Grading& gr,
                                                   const RepGrading& rg, const Matrix& metric);

/// Average of a metric against the structure-map actions (1, I, J, K) with
/// signs (+, +, -, -): lands in the second symmetry class over H.
Matrix hermitian_split_average(const Matrix& metric, int slots);

}  // namespace pargeo
