#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pargeo {

struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Thin value wrapper over GMP's mpq_class so that
/// every stored value is in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw math_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (arbitrary precision).
  static Rational parse(std::string_view s) {
    if (s.empty()) throw math_error("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0)
      throw math_error("Rational::parse: bad literal '" + std::string(s) + "'");
    if (v.get_den() == 0) throw math_error("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(v);
  }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Integer value; throws unless the denominator is 1 and it fits a long.
  long to_long() const {
    if (!is_integer()) throw math_error("Rational::to_long: not an integer");
    if (!v_.get_num().fits_slong_p()) throw math_error("Rational::to_long: overflow");
    return v_.get_num().get_si();
  }

  Rational inv() const {
    if (is_zero()) throw math_error("Rational::inv: division by zero");
    return Rational(1 / v_);
  }
  Rational abs() const { return Rational(::abs(v_)); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw math_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace pargeo
