#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ck/scalar.hpp"

namespace ck {

/// The closed variable universe of the artifact: the flow parameter t, the
/// scaling parameter s, and the coordinates x1..x5 / x1*..x5* of the double
/// Lie algebras (starred coordinates are spelled x1s..x5s).
namespace vars {
inline constexpr int kT = 0;
inline constexpr int kS = 1;
inline constexpr int kCount = 12;
int x(int i);        // x1..x5 -> 2..6
int xs(int i);       // x1s..x5s -> 7..11
const std::string& name(int v);
std::optional<int> index_of(const std::string& name);
}  // namespace vars

using Mono = std::array<std::uint16_t, vars::kCount>;

Mono mono_one();
Mono mono_var(int v, std::uint16_t e = 1);

/// Sparse multivariate polynomial over Gaussian rationals. No zero
/// coefficients are stored; the term map is ordered, so iteration order,
/// printing and hashing are deterministic.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  MultiPoly(std::int64_t c) : MultiPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(int v, std::uint16_t e = 1);
  static MultiPoly term(const Mono& m, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  const std::map<Mono, Scalar>& terms() const { return terms_; }

  int degree_in(int v) const;
  int total_degree() const;
  bool depends_on(int v) const { return degree_in(v) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(int v) const;

  /// Coefficients of powers of v: result[k] is the coefficient of v^k
  /// (a polynomial free of v). Empty vector for the zero polynomial.
  std::vector<MultiPoly> collect(int v) const;

  /// Substitute polynomials for a subset of the variables.
  MultiPoly substitute(const std::map<int, MultiPoly>& repl) const;

  /// Full evaluation; `point[v]` must cover every variable this depends on.
  Scalar eval(const std::array<Scalar, vars::kCount>& point) const;

  std::string str() const;
  static MultiPoly parse(const std::string& text);

  /// Quotient of an exact division (throws Error if the division leaves a
  /// remainder). Used by fraction-free elimination, where divisibility is
  /// guaranteed.
  static MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

 private:
  void add_term(const Mono& m, const Scalar& c);
  std::map<Mono, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace ck
