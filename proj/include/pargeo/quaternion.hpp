#pragma once

#include <array>
#include <string>

#include "pargeo/rational.hpp"

namespace pargeo {

/// Quaternion with exact rational components, q = w + x i + y j + z k.
struct Quaternion {
  Rational w, x, y, z;

  Quaternion() = default;
  Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  explicit Quaternion(const Rational& real) : w(real) {}

  static Quaternion one() { return Quaternion(Rational(1)); }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_imaginary() const { return w.is_zero(); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  Rational norm2() const { return w * w + x * x + y * y + z * z; }
  Rational real() const { return w; }
  Quaternion imag() const { return {Rational(0), x, y, z}; }

  /// Component along 1, i, j, k (index 0..3).
  Rational comp(int idx) const {
    switch (idx) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      case 3: return z;
    }
    throw math_error("Quaternion::comp: index out of range");
  }

  Quaternion inv() const {
    Rational n = norm2();
    if (n.is_zero()) throw math_error("Quaternion::inv: zero quaternion");
    Quaternion c = conj();
    Rational s = n.inv();
    return {c.w * s, c.x * s, c.y * s, c.z * s};
  }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator*(const Rational& s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend Quaternion operator*(const Quaternion& q, const Rational& s) { return s * q; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  std::string str() const {
    return "(" + w.str() + "," + x.str() + "," + y.str() + "," + z.str() + ")";
  }
};

/// A quaternion of the form q / sqrt(n2) with q rational and n2 a positive
/// rational. Closed under multiplication, so unit-norm rotations whose norm
/// is not a rational square can still be tracked exactly.
struct ScaledQuaternion {
  Quaternion value;   // numerator quaternion
  Rational scale2;    // positive; the represented quaternion is value / sqrt(scale2)

  ScaledQuaternion() : value(Quaternion::one()), scale2(1) {}
  ScaledQuaternion(Quaternion v, Rational s2) : value(std::move(v)), scale2(std::move(s2)) {
    if (scale2.sign() <= 0) throw math_error("ScaledQuaternion: scale^2 must be positive");
  }

  /// q / |q| for nonzero q, as (q, |q|^2).
  static ScaledQuaternion unit(const Quaternion& q) {
    if (q.is_zero()) throw math_error("ScaledQuaternion::unit: zero quaternion");
    return ScaledQuaternion(q, q.norm2());
  }

  /// Norm squared of the represented quaternion.
  Rational norm2() const { return value.norm2() / scale2; }

  friend ScaledQuaternion operator*(const ScaledQuaternion& a, const ScaledQuaternion& b) {
    return ScaledQuaternion(a.value * b.value, a.scale2 * b.scale2);
  }
  ScaledQuaternion operator-() const { return ScaledQuaternion(-value, scale2); }

  /// Exact equality of the represented quaternions: v1/sqrt(s1) == v2/sqrt(s2)
  /// iff v1 = rho v2 with rho > 0 rational and rho^2 = s1/s2.
  friend bool operator==(const ScaledQuaternion& a, const ScaledQuaternion& b) {
    if (a.value.is_zero() || b.value.is_zero()) return a.value.is_zero() && b.value.is_zero();
    Rational rho;
    bool found = false;
    for (int c = 0; c < 4 && !found; ++c) {
      if (!b.value.comp(c).is_zero()) {
        rho = a.value.comp(c) / b.value.comp(c);
        found = true;
      }
    }
    if (!found || rho.sign() <= 0) return false;
    if (!(rho * rho == a.scale2 / b.scale2)) return false;
    return a.value == rho * b.value;
  }
  friend bool operator!=(const ScaledQuaternion& a, const ScaledQuaternion& b) {
    return !(a == b);
  }

  std::string str() const { return value.str() + "/sqrt(" + scale2.str() + ")"; }
};

}  // namespace pargeo
