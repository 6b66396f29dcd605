#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pargeo/algebra.hpp"
#include "pargeo/quatmat.hpp"
#include "pargeo/subspace.hpp"

namespace pargeo {

struct OrbitReport {
  Vec vector;     // realified coordinates in V
  int orbit_dim = 0;
  int codim = 0;  // real dim V - orbit_dim
};

struct CotransitivityResult {
  int d = 0;
  OrbitReport witness;
  int tested = 0;
  bool exact = false;  // representative set covers all orbit types
};

/// The quaternion-hermitian form on a realified right module H^m, stored as
/// the four real component matrices h(.,.), h(.,i.), h(.,j.), h(.,k.) where
/// the letters act through the structure maps.
struct QuaternionicForm {
  int m = 0;
  Matrix g0;       // matrix of h
  Matrix g0_i;     // matrix of (v,w) -> h(v, i.w)
  Matrix g0_j;
  Matrix g0_k;

  static QuaternionicForm standard(int m);  // the so*(2m) form
  int real_dim() const { return 4 * m; }
};

/// htilde(v,w) = -h(v,jw) + j h(v,w) + i h(v,kw) - k h(v,iw).
Quaternion htilde(const QuaternionicForm& q, const Vec& v, const Vec& w);

/// span{X.v : X in the algebra} as a subspace of realified V.
Subspace orbit_space(const LieAlgebra& g, const Vec& v);

OrbitReport orbit_codim(const LieAlgebra& g, const Vec& v);

/// One rational representative per orbit type of nonzero vectors (norm types
/// for the metric families, null/non-null for so(m,C) and so*).
std::vector<Vec> orbit_type_representatives(const LieAlgebra& g);

/// Classification value of the cotransitivity degree by family.
int expected_cotransitivity(const AlgebraSpec& spec);

/// Max orbit codimension over the representative set plus seeded samples.
CotransitivityResult cotransitivity_degree(const LieAlgebra& g, std::uint64_t seed = 12345,
                                           int samples = 50);

/// The orthogonal complement of v cut out by the invariant form(s): one row
/// for the metric families, two (real and imaginary part) for so(m,C), three
/// (imaginary components of htilde) for so*. Throws for sl and sp(2m,F).
Subspace form_perp(const LieAlgebra& g, const Vec& v);

struct AdaptedBasis {
  bool null_case = false;
  std::vector<Vec> vectors;  // real basis of V
  Vec u_coords;              // u expressed in that basis
  ScaledQuaternion i_rot, j_rot, k_rot;
  Quaternion z;        // htilde(u,u); zero in the null case
  Quaternion pairing;  // null case only: htilde(u,u'), imaginary and nonzero
};

/// Basis adapted to u: u gets coordinates (1,0,...,0) when htilde(u,u) != 0,
/// or (1,0,0,0,0,1,0,...) when u is null, with rotated quaternion units
/// i',j',k' carried as scaled quaternions.
AdaptedBasis adapted_basis(const QuaternionicForm& q, const Vec& u);

}  // namespace pargeo
