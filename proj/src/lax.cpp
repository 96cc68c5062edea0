#include "ck/lax.hpp"

#include <algorithm>
#include <cmath>

#include "ck/errors.hpp"

namespace ck {

Window flow_window(const std::string& algebra, int extra) {
  auto ctx = standard_context(algebra);
  int reach = 2 * ctx->degree_cap() + 2 + extra;
  return Window{-reach, reach};
}

int FlowTrajectory::beta0_t_degree() const {
  auto it = beta.find(0);
  if (it == beta.end()) return 0;
  int d = 0;
  for (const auto& c : it->second) d = std::max(d, c.degree_in(vars::kT));
  return d;
}

namespace {

InfChar conjugate(const Character& g, const InfChar& z) { return ad_character(g, z); }

std::map<int, std::vector<MultiPoly>> hierarchy_from(const InfChar& l_t) {
  const HopfContext& ctx = l_t.ctx();
  std::map<int, std::vector<MultiPoly>> beta;
  int lo = 0;
  for (int g = 0; g < ctx.num_generators(); ++g)
    if (!l_t.value(g).is_zero()) lo = std::min(lo, l_t.value(g).min_exponent());
  if (lo < -1)
    throw NotHolomorphicBeta("L(t) has pole order " + std::to_string(-lo) +
                             "; beta~ is not holomorphic");
  for (int e = -1; e <= l_t.window().hi; ++e) {
    std::vector<MultiPoly> coords;
    bool nonzero = false;
    for (int g = 0; g < ctx.num_generators(); ++g) {
      MultiPoly c = l_t.value(g).coeff(e);
      nonzero = nonzero || !c.is_zero();
      coords.push_back(std::move(c));
    }
    if (nonzero || e <= 1) beta[e + 1] = std::move(coords);
  }
  return beta;
}

}  // namespace

FlowTrajectory solve_lax(const FlowParams& params) {
  auto ctx = params.L0.ctx_ptr();
  Window win = params.L0.window();
  FlowTrajectory traj(ctx, win);
  traj.p = params.p;
  traj.L0 = params.L0;
  traj.algebra =
      std::make_shared<LieData>(truncated_lie_algebra(*ctx, ctx->degree_cap()));
  traj.double_algebra = std::make_shared<LieData>(double_algebra(*traj.algebra));

  // X = 2 lambda^p L0; exp(-tX) is a finite sum by the connected grading.
  InfChar minus_tX(ctx, win);
  for (int g = 0; g < ctx->num_generators(); ++g) {
    LaurentElement v = params.L0.value(g).shifted(params.p);
    v *= Scalar(-2);
    v *= MultiPoly::var(vars::kT);
    minus_tX.set_value(g, std::move(v));
  }
  Character exp_minus_tX = star_exp(minus_tX);
  BirkhoffPair parts = birkhoff(exp_minus_tX);
  traj.g_minus = parts.neg;
  traj.g_plus = parts.pos;

  traj.L_t = conjugate(parts.neg, params.L0);
  InfChar via_plus = conjugate(parts.pos, params.L0);
  if (!(traj.L_t == via_plus))
    throw Error("solve_lax: the two one-sided conjugations disagree");

  traj.phi_t = tilde_R_inv(traj.L_t);
  try {
    traj.beta = hierarchy_from(traj.L_t);
  } catch (const NotHolomorphicBeta&) {
    traj.beta.clear();  // available via beta_hierarchy(), which rethrows
  }
  return traj;
}

IdentityReport verify_lax_identity(const FlowTrajectory& traj) {
  const HopfContext& ctx = *traj.ctx;
  Window win = traj.L_t.window();
  InfChar m(traj.ctx, win);
  for (int g = 0; g < ctx.num_generators(); ++g)
    m.set_value(g, -r_matrix(traj.L_t.value(g).shifted(traj.p)));
  InfChar rhs = lie_bracket(traj.L_t, m);
  IdentityReport report;
  for (int g = 0; g < ctx.num_generators(); ++g) {
    LaurentElement residual = traj.L_t.value(g).derivative(vars::kT) - rhs.value(g);
    if (!residual.is_zero()) {
      report.holds = false;
      report.residuals.push_back("generator " + ctx.generator(g).encoding() + ": " +
                                 residual.str());
    }
  }
  return report;
}

std::map<int, std::vector<MultiPoly>> beta_hierarchy(const FlowTrajectory& traj) {
  return hierarchy_from(traj.L_t);
}

Beta0Report verify_beta0_equation(const FlowTrajectory& traj) {
  Beta0Report report;
  const LieData& g = *traj.algebra;
  auto beta = hierarchy_from(traj.L_t);
  const int n = g.dim();
  auto coords_or_zero = [&](int k) {
    auto it = beta.find(k);
    if (it != beta.end()) return it->second;
    return std::vector<MultiPoly>(static_cast<std::size_t>(n));
  };

  // d beta0/dt = 2 [beta0, beta_{1-p}]
  std::vector<MultiPoly> beta0 = coords_or_zero(0);
  std::vector<MultiPoly> beta_next = coords_or_zero(1 - traj.p);
  std::vector<MultiPoly> rhs = g.bracket_vec(beta0, beta_next);
  report.evolution_holds = true;
  for (int c = 0; c < n; ++c) {
    MultiPoly residual =
        beta0[static_cast<std::size_t>(c)].derivative(vars::kT) -
        Scalar(2) * rhs[static_cast<std::size_t>(c)];
    if (!residual.is_zero()) {
      report.evolution_holds = false;
      report.residuals.push_back("beta0 evolution, coordinate " + g.basis_name(c) + ": " +
                                 residual.str());
    }
  }

  // full hierarchy: d beta~/dt = -2 [pi+(lambda^p L), lambda^{1-p} pi-(lambda^p L)],
  // with ranges taken from the window rather than printed bounds.
  std::vector<LaurentElement> dbeta, a_plus, b_low;
  for (int gi = 0; gi < n; ++gi) {
    LaurentElement beta_val = traj.L_t.value(gi).shifted(1);
    dbeta.push_back(beta_val.derivative(vars::kT));
    LaurentElement shifted = traj.L_t.value(gi).shifted(traj.p);
    auto [neg, pos] = minimal_subtraction(shifted);
    a_plus.push_back(pos);
    b_low.push_back(neg.shifted(1 - traj.p));
  }
  std::vector<LaurentElement> hier = g.bracket_vec(a_plus, b_low);
  report.hierarchy_holds = true;
  for (int c = 0; c < n; ++c) {
    LaurentElement residual = dbeta[static_cast<std::size_t>(c)] +
                              Scalar(2) * hier[static_cast<std::size_t>(c)];
    if (!residual.is_zero()) {
      report.hierarchy_holds = false;
      report.residuals.push_back("hierarchy, coordinate " + g.basis_name(c) + ": " +
                                 residual.str());
    }
  }

  // nilpotency forces polynomial flows: the (step)-th derivative of beta0 vanishes
  int step = nilpotency_step(g);
  report.derivative_vanishes = true;
  for (int c = 0; c < n; ++c) {
    MultiPoly d = beta0[static_cast<std::size_t>(c)];
    for (int k = 0; k < step; ++k) d = d.derivative(vars::kT);
    if (!d.is_zero()) {
      report.derivative_vanishes = false;
      report.residuals.push_back("beta0 derivative order " + std::to_string(step) +
                                 ", coordinate " + g.basis_name(c) + ": " + d.str());
    }
  }
  return report;
}

std::vector<ConservationEntry> conservation_report(const FlowTrajectory& traj,
                                                   const std::vector<PoissonPoly>& hamiltonians) {
  auto beta = hierarchy_from(traj.L_t);
  const std::vector<MultiPoly>& beta0 = beta.at(0);
  const LieData& dbl = *traj.double_algebra;
  const int k = dbl.half_dim();
  std::map<int, MultiPoly> repl;
  for (int i = 0; i < k; ++i) {
    repl[dbl.coordinate_var(i)] = beta0[static_cast<std::size_t>(i)];
    repl[dbl.coordinate_var(k + i)] = MultiPoly();  // starred coordinates to zero
  }
  std::vector<ConservationEntry> out;
  for (std::size_t h = 0; h < hamiltonians.size(); ++h) {
    ConservationEntry e;
    e.label = "H" + std::to_string(h + 1);
    e.substituted = hamiltonians[h].poly().substitute(repl);
    MultiPoly tfree(e.substituted.constant_term());
    auto by_t = e.substituted.collect(vars::kT);
    if (!by_t.empty()) tfree = by_t[0];
    e.drift = e.substituted - tfree;
    e.conserved = e.drift.is_zero();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<MultiPoly> gauge_transformed_beta0(const FlowTrajectory& traj) {
  BirkhoffPair parts = birkhoff(traj.phi_t);
  Character plus0 = slice_at_zero(parts.pos);
  InfChar beta0_char(traj.ctx, traj.L_t.window());
  for (int g = 0; g < traj.ctx->num_generators(); ++g)
    beta0_char.set_value(
        g, LaurentElement::monomial(traj.L_t.window(), 0, traj.L_t.value(g).coeff(-1)));
  InfChar transformed = ad_character(plus0, beta0_char);
  std::vector<MultiPoly> coords;
  for (int g = 0; g < traj.ctx->num_generators(); ++g)
    coords.push_back(transformed.value(g).coeff(0));
  return coords;
}

// --- RK4 oracle ----------------------------------------------------------------

namespace {

struct NumericFlow {
  int ngens, lo, hi, p;
  std::vector<std::tuple<int, int, int, Scalar>> table;

  int width() const { return hi - lo + 1; }
  std::size_t idx(int g, int e) const {
    return static_cast<std::size_t>(g) * static_cast<std::size_t>(width()) +
           static_cast<std::size_t>(e - lo);
  }

  std::vector<double> derivative(const std::vector<double>& l) const {
    // M = (id - 2 pi)(lambda^p L)
    std::vector<double> m(l.size(), 0.0);
    for (int g = 0; g < ngens; ++g)
      for (int e = lo; e <= hi; ++e) {
        int src = e - p;
        if (src < lo || src > hi) continue;
        m[idx(g, e)] = (e >= 0 ? 1.0 : -1.0) * l[idx(g, src)];
      }
    std::vector<double> d(l.size(), 0.0);
    for (const auto& [a, b, c, coeff] : table) {
      double sc = to_double(coeff.re());
      for (int e1 = lo; e1 <= hi; ++e1)
        for (int e2 = lo; e2 <= hi; ++e2) {
          int e = e1 + e2;
          if (e < lo || e > hi) continue;
          double v = l[idx(a, e1)] * m[idx(b, e2)] - l[idx(b, e1)] * m[idx(a, e2)];
          d[idx(c, e)] += sc * v;
        }
    }
    return d;
  }

  std::vector<double> rk4_step(const std::vector<double>& y, double h) const {
    auto k1 = derivative(y);
    auto add = [&](const std::vector<double>& base, const std::vector<double>& k, double f) {
      std::vector<double> r(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) r[i] = base[i] + f * k[i];
      return r;
    };
    auto k2 = derivative(add(y, k1, h / 2));
    auto k3 = derivative(add(y, k2, h / 2));
    auto k4 = derivative(add(y, k3, h));
    std::vector<double> r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      r[i] = y[i] + h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return r;
  }

  /// Step-doubling adaptive advance from t to t_end.
  std::vector<double> integrate(std::vector<double> y, double t, double t_end) const {
    double h = 0.01;
    const double tol = 1e-12;
    while (t < t_end - 1e-15) {
      h = std::min(h, t_end - t);
      auto full = rk4_step(y, h);
      auto half = rk4_step(rk4_step(y, h / 2), h / 2);
      double err = 0;
      for (std::size_t i = 0; i < y.size(); ++i)
        err = std::max(err, std::abs(full[i] - half[i]) / 15.0);
      if (err > tol && h > 1e-6) {
        h /= 2;
        continue;
      }
      for (std::size_t i = 0; i < y.size(); ++i) half[i] += (half[i] - full[i]) / 15.0;
      y = std::move(half);
      t += h;
      if (err < tol / 64 && h < 0.05) h *= 2;
    }
    return y;
  }
};

}  // namespace

double rk4_max_rel_error(const FlowTrajectory& traj) {
  const HopfContext& ctx = *traj.ctx;
  Window win = traj.L_t.window();
  NumericFlow flow{ctx.num_generators(), win.lo, win.hi, traj.p,
                   traj.algebra->bracket_table()};
  std::vector<double> y(static_cast<std::size_t>(flow.ngens * flow.width()), 0.0);
  for (int g = 0; g < flow.ngens; ++g)
    for (const auto& [e, c] : traj.L0.value(g).coeffs()) {
      if (!c.is_constant()) throw Error("rk4 oracle expects a numeric initial condition");
      Scalar s = c.constant_term();
      if (!s.is_real()) throw Error("rk4 oracle expects rational initial data");
      y[flow.idx(g, e)] = to_double(s.re());
    }

  double worst = 0.0;
  double t = 0.0;
  for (int step = 1; step <= 10; ++step) {
    double t_end = 0.1 * step;
    y = flow.integrate(std::move(y), t, t_end);
    t = t_end;
    std::map<int, MultiPoly> at_t = {{vars::kT, MultiPoly(Scalar(rational_of(step, 10)))}};
    for (int g = 0; g < flow.ngens; ++g) {
      LaurentElement exact = traj.L_t.value(g).substitute(at_t);
      for (int e = win.lo; e <= win.hi; ++e) {
        double ex = to_double(exact.coeff(e).constant_term().re());
        double num = y[flow.idx(g, e)];
        worst = std::max(worst, std::abs(num - ex) / std::max(1.0, std::abs(ex)));
      }
    }
  }
  return worst;
}

// --- deterministic random inputs ---------------------------------------------

InfChar random_pole_L0(std::shared_ptr<const HopfContext> ctx, Window win, Rng& rng) {
  InfChar l0(ctx, win);
  for (int g = 0; g < ctx->num_generators(); ++g) {
    LaurentElement v(win);
    for (int e = -1; e <= 2; ++e)
      if (rng.below(3) != 0) v.set_coeff(e, MultiPoly(rng.small_scalar()));
    l0.set_value(g, std::move(v));
  }
  return l0;
}

InfChar structured_flow_L0(std::shared_ptr<const HopfContext> ctx, Window win, Rng& rng) {
  for (;;) {
    InfChar l0(ctx, win);
    std::vector<Rational> pole, finite(2);
    for (int g = 0; g < ctx->num_generators(); ++g) pole.push_back(rng.small_rational());
    finite[0] = rng.nonzero_small_rational();  // drives the top-degree coordinate
    finite[1] = rng.small_rational();
    // nondegeneracy: x1*y2 - x2*y1 != 0 makes the central coordinate move
    if (pole[0] * finite[1] - pole[1] * finite[0] == 0) continue;
    for (int g = 0; g < ctx->num_generators(); ++g) {
      LaurentElement v(win);
      v.set_coeff(-1, MultiPoly(Scalar(pole[static_cast<std::size_t>(g)])));
      if (g < 2) v.set_coeff(0, MultiPoly(Scalar(finite[static_cast<std::size_t>(g)])));
      l0.set_value(g, std::move(v));
    }
    return l0;
  }
}

Character random_character(std::shared_ptr<const HopfContext> ctx, Window win, Rng& rng,
                           bool holomorphic) {
  Character phi(ctx, win);
  int lo = holomorphic ? 0 : -2;
  for (int g = 0; g < ctx->num_generators(); ++g) {
    LaurentElement v(win);
    for (int e = lo; e <= 2; ++e)
      if (rng.below(3) != 0) v.set_coeff(e, MultiPoly(rng.small_scalar()));
    phi.set_value(g, std::move(v));
  }
  return phi;
}

}  // namespace ck
