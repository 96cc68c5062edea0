#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ck/character.hpp"
#include "ck/lie.hpp"
#include "ck/poisson.hpp"
#include "ck/rng.hpp"

namespace ck {

/// Flow input: dL/dt = [L, M] with M = (id - 2 pi)(lambda^p L), solved in
/// closed form through the Birkhoff factorization of exp(-tX), X = 2 lambda^p L0.
/// p <= 0 is the nontrivial regime; p >= 1 freezes the flow.
struct FlowParams {
  std::string algebra = "g1";  // g1 | g2 | g3
  int p = 0;
  InfChar L0;
};

/// Per-algebra window wide enough that every extracted quantity of the flow
/// pipeline is exact (intermediate exponentials reach pole order 2*cap).
Window flow_window(const std::string& algebra, int extra = 0);

struct FlowTrajectory {
  std::shared_ptr<const HopfContext> ctx;
  std::shared_ptr<const LieData> algebra;        // truncated Lie algebra of the context
  std::shared_ptr<const LieData> double_algebra; // its double
  int p = 0;
  InfChar L0;
  InfChar L_t;          // values polynomial in t
  Character g_minus, g_plus;
  Character phi_t;      // R~^{-1}(L(t))
  /// Taylor coefficients of beta~_{phi_t} = lambda L(t): beta[k] is the
  /// coordinate vector (over the generator basis) of the lambda^k coefficient,
  /// entries polynomial in t. Present when L(t) has pole order <= 1.
  std::map<int, std::vector<MultiPoly>> beta;

  FlowTrajectory(std::shared_ptr<const HopfContext> c, Window w)
      : ctx(c), L0(c, w), L_t(c, w), g_minus(c, w), g_plus(c, w), phi_t(c, w) {}

  int beta0_t_degree() const;
};

/// Closed-form solution: exp(-tX) with t symbolic (the sum is finite by
/// nilpotency), Birkhoff-factorized; L(t) = g-(t) * L0 * g-(t)^{-1}. The g+
/// conjugation is computed as well and must agree.
FlowTrajectory solve_lax(const FlowParams& params);

struct IdentityReport {
  bool holds = true;
  std::vector<std::string> residuals;
};

/// Exact t-polynomial check of dL/dt = [L, M], M = (id - 2 pi)(lambda^p L).
IdentityReport verify_lax_identity(const FlowTrajectory& traj);

/// Taylor coefficients of beta~_{phi_t} in lambda; throws NotHolomorphicBeta
/// when L(t) carries poles of order > 1.
std::map<int, std::vector<MultiPoly>> beta_hierarchy(const FlowTrajectory& traj);

struct Beta0Report {
  bool evolution_holds = false;   // d beta0/dt = 2 [beta0, beta_{1-p}]
  bool hierarchy_holds = false;   // d beta~/dt = -2 [pi+(lambda^p L), lambda^{1-p} pi-(lambda^p L)]
  bool derivative_vanishes = false;  // (step)-th t-derivative of beta0 is zero
  std::vector<std::string> residuals;
};

Beta0Report verify_beta0_equation(const FlowTrajectory& traj);

struct ConservationEntry {
  std::string label;
  bool conserved = false;
  MultiPoly substituted;  // H(beta0(t)) as a polynomial in t
  MultiPoly drift;        // substituted minus its t-free part
};

/// Substitutes the beta0 trajectory (starred coordinates zero) into each
/// Hamiltonian and reports which stay t-free.
std::vector<ConservationEntry> conservation_report(const FlowTrajectory& traj,
                                                   const std::vector<PoissonPoly>& hamiltonians);

/// Gauge transform of the beta0 trajectory by (phi_t)_+(0): coordinates of
/// Ad((phi_t)_+(0)) applied to the lambda^{-1} slice of L(t).
std::vector<MultiPoly> gauge_transformed_beta0(const FlowTrajectory& traj);

/// Largest |relative error| between the symbolic trajectory evaluated at
/// t = 1/10 .. 1 and an adaptive RK4 integration of dL/dt = [L, M].
double rk4_max_rel_error(const FlowTrajectory& traj);

// --- deterministic random inputs ---------------------------------------------

/// Pole-order-one L0 with random small rational values at exponents
/// [-1, +2] on every generator.
InfChar random_pole_L0(std::shared_ptr<const HopfContext> ctx, Window win, Rng& rng);

/// L0 = C_{-1} lambda^{-1} + C_0 with C_0 supported on the two lowest
/// generators; produces flows with the extremal t-degree of beta0 and a
/// conserved fitted Hamiltonian (nondegeneracy is enforced by resampling).
InfChar structured_flow_L0(std::shared_ptr<const HopfContext> ctx, Window win, Rng& rng);

/// Random character; holomorphic ones (exponents 0..2) are local.
Character random_character(std::shared_ptr<const HopfContext> ctx, Window win, Rng& rng,
                           bool holomorphic);

}  // namespace ck
