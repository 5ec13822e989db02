#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace refdefect {

using Rational = mpq_class;

/// Exact Gaussian rational a + b*i. The scalar field for every computation
/// in this library; all arithmetic is exact and results are kept in lowest
/// terms with positive denominators (GMP canonical form).
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Deterministic total order (lexicographic on re, im). Used for canonical
  /// sorting of eigenvalues, not for any analytic purpose.
  int compare(const Scalar& o) const;
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }

 private:
  Rational re_, im_;
};

/// Parses the scalar text format: "a/b" for rationals and "a/b+c/d*i" for
/// Gaussian rationals. Minus signs are allowed, "/1" may be omitted, and the
/// bare forms "i", "-i", "2i" are accepted. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Parses "a/b" (or "a") into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form; round-trips exactly through parse_scalar.
std::string to_string(const Scalar& s);
std::string to_string(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace refdefect
