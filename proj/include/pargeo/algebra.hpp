#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pargeo/matrix.hpp"

namespace pargeo {

enum class Family { sl, su, so, so_C, so_star, sp_F, sp_pq };
enum class FieldTag { R, C, H };

std::string family_str(Family f);
std::string field_str(FieldTag f);

/// Descriptor of one classical algebra instance.
struct AlgebraSpec {
  Family family = Family::sl;
  FieldTag field = FieldTag::R;  // sl and sp_F only
  int m = 0;                     // sl, so_C, so_star, sp_F
  int p = 0, q = 0;              // su, so, sp_pq

  static AlgebraSpec sl(int m, FieldTag f = FieldTag::R);
  static AlgebraSpec su(int p, int q);
  static AlgebraSpec so(int p, int q);
  static AlgebraSpec so_C(int m);
  static AlgebraSpec so_star(int m);  // so*(2m)
  static AlgebraSpec sp(int m, FieldTag f = FieldTag::R);  // sp(2m, F)
  static AlgebraSpec sp_pq(int p, int q);

  void validate() const;  // throws math_error on out-of-range parameters
  std::string name() const;
  int expected_dim() const;  // real dimension
  int rep_dim() const;       // realified dimension of the standard representation
};

struct NamedMap {
  std::string name;
  Matrix map;
};

struct StructureReport {
  bool closure = false;
  bool jacobi = false;
  bool killing_nondeg = false;
  bool maps_commute = false;
  bool form_skew = false;
  std::string witness;  // first failure; empty when everything passes
  bool ok() const { return closure && jacobi && killing_nondeg && maps_commute && form_skew; }
};

/// A classical algebra in its realified standard representation: ordered
/// matrix basis, structure constants (as the family of ad matrices), Killing
/// matrix, invariant forms and commuting structure maps.
class LieAlgebra {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return name_; }
  int dim() const { return int(basis_.size()); }
  int rep_dim() const { return rep_dim_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::vector<NamedMap>& structure_maps() const { return maps_; }
  /// Invariant symmetric metric on V (metric families; realified real part
  /// for the complex/quaternionic hermitian and complex-bilinear cases).
  const std::optional<Matrix>& invariant_form() const { return form_; }
  /// Invariant symplectic form (sp_F families; realified real part over C).
  const std::optional<Matrix>& skew_form() const { return skew_form_; }

  Matrix element(const Vec& coords) const;
  std::optional<Vec> coordinatize(const Matrix& x) const;
  Vec must_coordinatize(const Matrix& x, const char* what) const;
  bool contains(const Matrix& x) const { return coordinatize(x).has_value(); }

  /// Bracket in basis coordinates via structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;
  /// dim x dim matrix of ad_x in the basis.
  Matrix ad_matrix(const Vec& x) const;
  const std::vector<Matrix>& ad_basis() const { return ad_; }
  Rational killing(const Vec& x, const Vec& y) const;
  const Matrix& killing_matrix() const { return killing_; }

  /// Full-basis exact verification: closure, Jacobi, Killing nondegeneracy,
  /// structure-map commutation, invariant-form skewness.
  StructureReport verify_structure() const;

  friend LieAlgebra construct(const AlgebraSpec& spec);

 private:
  LieAlgebra() = default;
  void finalize();

  AlgebraSpec spec_;
  std::string name_;
  int rep_dim_ = 0;
  std::vector<Matrix> basis_;
  std::vector<NamedMap> maps_;
  std::optional<Matrix> form_;
  std::optional<Matrix> skew_form_;
  Matrix coord_op_;  // E with E * [basis columns] = [I; 0]
  std::vector<Matrix> ad_;
  Matrix killing_;
};

LieAlgebra construct(const AlgebraSpec& spec);

}  // namespace pargeo
