#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ck/exact_matrix.hpp"
#include "ck/lie.hpp"
#include "ck/multipoly.hpp"

namespace ck {

/// Polynomial function on a double Lie algebra, in the coordinates
/// x1..xk / x1s..xks of its basis.
class PoissonPoly {
 public:
  PoissonPoly(std::shared_ptr<const LieData> algebra, MultiPoly poly);

  static PoissonPoly parse(std::shared_ptr<const LieData> algebra, const std::string& text);

  const LieData& algebra() const { return *algebra_; }
  std::shared_ptr<const LieData> algebra_ptr() const { return algebra_; }
  const MultiPoly& poly() const { return poly_; }

  PoissonPoly& operator+=(const PoissonPoly& o);
  friend PoissonPoly operator+(PoissonPoly a, const PoissonPoly& b) { return a += b; }

  std::string str() const { return poly_.str(); }

 private:
  std::shared_ptr<const LieData> algebra_;
  MultiPoly poly_;
};

/// Lie-Poisson bracket of polynomial functions, extended from the coordinate
/// table by bilinearity and Leibniz.
PoissonPoly poisson_bracket(const PoissonPoly& f, const PoissonPoly& g);

struct InvolutionWitness {
  int first, second;   // indices into the checked family
  MultiPoly bracket;   // the nonzero bracket polynomial
};

struct InvolutionReport {
  bool all_commute = true;
  std::vector<InvolutionWitness> witnesses;
};

InvolutionReport check_involution(const std::vector<PoissonPoly>& funcs);

/// Jacobian of the family w.r.t. all coordinates (rows = functions).
ExactMatrix jacobian_matrix(const std::vector<PoissonPoly>& funcs);

/// Maximum Jacobian rank over the sample points.
int jacobian_rank(const std::vector<PoissonPoly>& funcs,
                  const std::vector<std::array<Scalar, vars::kCount>>& points);

/// Coordinate partial derivatives, one entry per basis direction.
std::vector<PoissonPoly> gradient(const PoissonPoly& f);

/// Quadratic ansatz in the unstarred coordinates: linear terms k_i, diagonal
/// quadratics l_i x_i^2/2, optional cross terms xi_{j,p} x_j x_p.
struct HamiltonianAnsatz {
  int coords = 0;
  bool cross_terms = false;

  int unknowns() const { return 2 * coords + (cross_terms ? coords * (coords - 1) / 2 : 0); }
};

struct FitResult {
  bool consistent = false;
  std::shared_ptr<PoissonPoly> hamiltonian;  // set when consistent
  int equations = 0;
  int unknowns = 0;
  std::string message;
};

/// Solve grad H(beta0(t)) = beta_next(t) by matching coefficients of powers
/// of t; exact linear algebra with deterministic pivoting, free unknowns set
/// to zero. beta0/beta_next are coordinate vectors of polynomials in t over
/// the unstarred block.
FitResult fit_hamiltonian(std::shared_ptr<const LieData> algebra,
                          const std::vector<MultiPoly>& beta0,
                          const std::vector<MultiPoly>& beta_next,
                          const HamiltonianAnsatz& ansatz);

/// The explicit involutive families on the three doubles. For delta1 the
/// leading function is x1^2/2 + x2^2/2 (the default replaced by a fitted
/// Hamiltonian in the flow pipeline); members follow the printed tables.
std::vector<PoissonPoly> standard_family(const std::shared_ptr<const LieData>& algebra,
                                         const std::string& name);

}  // namespace ck
