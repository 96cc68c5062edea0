#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ck {

using Rational = mpq_class;

Rational rational_of(std::int64_t num, std::int64_t den = 1);
Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Gaussian rational a + b·i, the computable subfield of the ground field.
/// Components are always kept canonical (reduced, positive denominator)
/// by the underlying mpq representation.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t n) : re_(rational_of(n)), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar of(std::int64_t num, std::int64_t den) { return Scalar(rational_of(num, den)); }
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws Error on division by zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

  /// "3/2", "-1/3+2i", "i", "0"
  std::string str() const;

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ck
