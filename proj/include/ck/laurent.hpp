#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ck/multipoly.hpp"

namespace ck {

struct Window {
  int lo = -8;
  int hi = 8;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Element of the truncated Laurent algebra: coefficients (multivariate
/// polynomials) attached to powers of the regularization variable inside
/// [window.lo, window.hi]. Products silently drop exponents above the window
/// (series tail); an exponent falling below the window raises PoleOverflow,
/// since the algebra only admits finite pole order.
class LaurentElement {
 public:
  LaurentElement() = default;
  explicit LaurentElement(Window w) : win_(w) {}

  static LaurentElement zero(Window w) { return LaurentElement(w); }
  static LaurentElement one(Window w) { return monomial(w, 0, MultiPoly(Scalar(1))); }
  static LaurentElement monomial(Window w, int exponent, MultiPoly coeff);
  static LaurentElement constant(Window w, Scalar c) { return monomial(w, 0, MultiPoly(std::move(c))); }

  const Window& window() const { return win_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  /// Lowest/highest exponent carrying a nonzero coefficient (0 for zero).
  int min_exponent() const;
  int max_exponent() const;

  bool is_holomorphic() const { return min_exponent() >= 0 || is_zero(); }
  bool is_pure_pole() const { return is_zero() || max_exponent() < 0; }

  MultiPoly coeff(int exponent) const;
  const std::map<int, MultiPoly>& coeffs() const { return coeffs_; }
  void set_coeff(int exponent, MultiPoly c);

  LaurentElement operator-() const;
  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  LaurentElement& operator*=(const LaurentElement& o);
  LaurentElement& operator*=(const Scalar& c);
  LaurentElement& operator*=(const MultiPoly& p);
  friend LaurentElement operator*(LaurentElement a, const Scalar& c) { return a *= c; }
  friend LaurentElement operator*(const Scalar& c, LaurentElement a) { return a *= c; }
  friend LaurentElement operator*(LaurentElement a, const MultiPoly& p) { return a *= p; }

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.win_ == b.win_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentElement& a, const LaurentElement& b) { return !(a == b); }

  /// Multiply by lambda^k. Drops above the window, errors below it.
  LaurentElement shifted(int k) const;

  /// Apply f to every coefficient, dropping zeros.
  LaurentElement map_coeffs(const std::function<MultiPoly(const MultiPoly&)>& f) const;

  LaurentElement derivative(int v) const;
  LaurentElement substitute(const std::map<int, MultiPoly>& repl) const;
  bool depends_on(int v) const;

  /// Widen to a larger window (no data changes; both bounds must not shrink).
  LaurentElement widened(Window w) const;

  std::string str() const;

 private:
  Window win_;
  std::map<int, MultiPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentElement& a);

/// Cauchy product; shared window required.
LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b);

/// Split off the strictly negative powers: returns (neg, pos) with
/// neg + pos == a, neg = image of the minimal-subtraction projection.
std::pair<LaurentElement, LaurentElement> minimal_subtraction(const LaurentElement& a);

/// The splitting operator 2*pi - id (identity on poles, minus identity on the
/// holomorphic part).
LaurentElement r_matrix(const LaurentElement& a);

/// a multiplied by the expansion of exp(s*lambda*n), exact within the window:
/// every kept coefficient agrees with the untruncated series.
LaurentElement scale_by_exp_s(const LaurentElement& a, int n);

}  // namespace ck
