#pragma once

#include <string>
#include <vector>

#include "pargeo/einstein.hpp"

namespace pargeo {

struct ConeChecks {
  bool direct_sum = false;         // proposed pieces and L sum directly
  bool ambient_invariant = false;  // H + L is everything, or stable under F+
  bool b_trivial_line = false;     // L has rank 1 and B acts by zero on it
  bool b_invariant = false;        // B maps every piece into itself and L into L
  bool p_nondegenerate = false;    // pairing nondegenerate on the matching horizontals
  bool surjective = false;         // (g- + g+) . L covers H modulo L
  std::string witness;
  bool ok() const {
    return direct_sum && ambient_invariant && b_trivial_line && b_invariant && p_nondegenerate &&
           surjective;
  }
};

struct ConeHypotheses {
  Subspace B_algebra;  // the fixed part of the zero block, in algebra coords
  std::vector<Subspace> piece_spans;
  Subspace H_part, L_part, U;  // U = H + L, the designated invariant summand
  Vec eta;                     // the chosen spanning vector of L
  ConeChecks checks;
  std::string out_of_scope;  // manifold-level statements not checkable per fibre
};

/// Verifies the decomposition hypotheses for a cone structure over the given
/// extraction: every check is exact and failures carry a witness instead of
/// throwing.
ConeHypotheses check_cone_hypotheses(const EinsteinExtraction& x,
                                     const std::vector<Matrix>& h_pieces, const Matrix& l_basis);

/// X + P(X) in algebra coordinates, for X given in the negative-part basis.
/// The result is checked to lie in the fixed eigenspace.
Vec embed_i(const EinsteinExtraction& x, const Vec& minus_coords);

struct PieceCalibration {
  Matrix embedding;  // negative-part coords per piece basis vector, exact
  Rational scale;    // content relating the primitive solution to the exact one
};

struct Calibration {
  std::vector<Matrix> pieces;
  Vec eta;
  std::vector<PieceCalibration> per_piece;
};

/// Solves i(X) . eta = v for every proposed piece basis vector; the per-piece
/// scale is the content of the solution block, so feeding the primitive
/// images back in yields scale 1.
Calibration calibrate_scaling(const EinsteinExtraction& x, const ConeHypotheses& hyp,
                              const std::vector<Matrix>& h_pieces, const Vec& eta);

struct ConeConnectionTable {
  Matrix horizontal_on_vertical;  // zero by the defining rule
  Matrix horizontal_on_section;   // action of the embedded horizontals on eta
  Matrix vertical_on_horizontal;  // projected action, independently recomputed
  Matrix vertical_on_vertical;    // eta in adapted coordinates
  bool mixed_symmetry = false;    // the two mixed rules agree
  bool section_identity = false;  // calibrated action is the identity over zero
  bool vertical_identity = false;
  bool complement_zero = false;
  bool ok() const {
    return mixed_symmetry && section_identity && vertical_identity && complement_zero;
  }
};

/// Emits the connection coefficient table in (pieces, eta)-adapted
/// coordinates and checks its identities; throws on violation.
ConeConnectionTable cone_connection_table(const EinsteinExtraction& x, const ConeHypotheses& hyp,
                                          const Calibration& cal);

}  // namespace pargeo
