#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ck/exact_matrix.hpp"
#include "ck/hopf.hpp"
#include "ck/laurent.hpp"

namespace ck {

/// Finite-dimensional Lie algebra given by exact structure constants.
/// For a double g (+) g*, the first half of the basis is unstarred and the
/// second half starred; coordinates map onto the polynomial variables
/// x1..xk / x1s..xks.
class LieData {
 public:
  LieData(std::vector<std::string> basis_names, std::vector<int> degrees,
          std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets,
          int half_dim = 0);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& basis_name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }

  bool is_double() const { return half_ > 0; }
  /// Dimension of the unstarred block (the whole algebra when not a double).
  int half_dim() const { return half_ > 0 ? half_ : dim(); }

  /// [e_a, e_b] expanded over the basis.
  std::vector<std::pair<int, Scalar>> bracket(int a, int b) const;

  /// All stored bracket entries (a < b) as (a, b, c, coeff).
  std::vector<std::tuple<int, int, int, Scalar>> bracket_table() const;

  std::vector<Scalar> bracket_vec(const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& y) const;
  std::vector<MultiPoly> bracket_vec(const std::vector<MultiPoly>& x,
                                     const std::vector<MultiPoly>& y) const;
  std::vector<LaurentElement> bracket_vec(const std::vector<LaurentElement>& x,
                                          const std::vector<LaurentElement>& y) const;

  /// Polynomial variable carrying coordinate a.
  int coordinate_var(int a) const;
  /// Star-swapped partner index (X_c <-> X_c*); only for doubles.
  int star_swap(int a) const;

  void check_antisymmetry_and_jacobi() const;  // throws Error on failure

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets_;  // keys a < b
  int half_ = 0;
};

/// Lie algebra of scalar-valued infinitesimal characters of the context's
/// Hopf algebra, with the bracket truncated to total degree <= k. Structure
/// constants are derived from the coproduct tables. Throws NotClosed when the
/// generator set is not coproduct-closed (via the context construction).
LieData truncated_lie_algebra(const HopfContext& ctx, int k);
LieData truncated_lie_algebra(std::vector<RootedTree> generators, int k);

/// Double g (+) g*: mixed bracket by the coadjoint action
/// [X, Y*] = ad*_X(Y*) with ad*_X = -(ad_X)^T, starred-starred brackets zero.
LieData double_algebra(const LieData& g);

/// Smallest m with the (m+1)-fold lower central term zero; throws
/// NotNilpotent if the series stabilizes away from zero.
int nilpotency_step(const LieData& g);

/// Matrix of ad_x in the basis, at a symbolic point (entries polynomial in
/// the coordinate variables) or at a concrete coordinate vector.
ExactMatrix ad_matrix(const LieData& g);
ExactMatrix ad_matrix(const LieData& g, const std::vector<Scalar>& point);

/// Lie-Poisson tensor P_ab = {x_a, x_b} at a symbolic point, built from the
/// structure constants with the star-swap identification of the double with
/// its dual.
ExactMatrix lie_poisson_matrix(const LieData& g);
ExactMatrix lie_poisson_matrix(const LieData& g, const std::vector<Scalar>& point);

/// The concrete algebras: "g1","g2","g3" and their doubles "delta1".."delta3".
LieData standard_algebra(const std::string& name);
std::shared_ptr<const HopfContext> standard_context(const std::string& name);

}  // namespace ck
