#include "ck/character.hpp"

#include <algorithm>

#include "ck/errors.hpp"

namespace ck {

namespace {

void check_compat(const HopfContext& a, const Window& wa, const HopfContext& b, const Window& wb) {
  if (&a != &b) throw AlgebraMismatch("characters live on different Hopf contexts");
  if (!(wa == wb)) throw DimensionMismatch("laurent window mismatch between characters");
}

/// Indices of generators sorted by degree (stable within a degree).
std::vector<int> generators_by_degree(const HopfContext& ctx) {
  std::vector<int> order(static_cast<std::size_t>(ctx.num_generators()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ctx.generator(a).degree() < ctx.generator(b).degree();
  });
  return order;
}

}  // namespace

Functional::Functional(std::shared_ptr<const HopfContext> ctx, Window win)
    : ctx_(std::move(ctx)), win_(win),
      vals_(static_cast<std::size_t>(ctx_->num_forests()), LaurentElement(win)) {}

Functional convolve(const Functional& a, const Functional& b) {
  check_compat(a.ctx(), a.window(), b.ctx(), b.window());
  Functional r(a.ctx_, a.win_);
  for (int f = 0; f < a.ctx().num_forests(); ++f) {
    LaurentElement acc(a.win_);
    for (const auto& term : a.ctx().coproduct_terms(f)) {
      const LaurentElement& l = a.on_forest(term.left);
      const LaurentElement& rr = b.on_forest(term.right);
      if (l.is_zero() || rr.is_zero()) continue;
      acc += laurent_mul(l, rr) * Scalar(term.coeff);
    }
    r.on_forest(f) = std::move(acc);
  }
  return r;
}

Character::Character(std::shared_ptr<const HopfContext> ctx, Window win)
    : ctx_(std::move(ctx)), win_(win),
      vals_(static_cast<std::size_t>(ctx_->num_generators()), LaurentElement(win)) {}

void Character::set_value(int gen, LaurentElement v) {
  if (!(v.window() == win_)) throw DimensionMismatch("value window mismatch");
  vals_[static_cast<std::size_t>(gen)] = std::move(v);
}

LaurentElement Character::on_forest(int fidx) const {
  if (fidx == ctx_->unit_index()) return LaurentElement::one(win_);
  LaurentElement prod = LaurentElement::one(win_);
  for (const auto& t : ctx_->forest(fidx).trees()) {
    auto gi = ctx_->generator_index(t);
    prod = laurent_mul(prod, vals_[static_cast<std::size_t>(*gi)]);
    if (prod.is_zero()) break;
  }
  return prod;
}

Functional Character::to_functional() const {
  Functional f(ctx_, win_);
  for (int i = 0; i < ctx_->num_forests(); ++i) f.on_forest(i) = on_forest(i);
  return f;
}

bool Character::is_epsilon() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [](const LaurentElement& v) { return v.is_zero(); });
}

bool Character::is_holomorphic() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [](const LaurentElement& v) { return v.is_holomorphic(); });
}

bool Character::is_pole_normalized() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [](const LaurentElement& v) { return v.is_pure_pole(); });
}

InfChar::InfChar(std::shared_ptr<const HopfContext> ctx, Window win)
    : ctx_(std::move(ctx)), win_(win),
      vals_(static_cast<std::size_t>(ctx_->num_generators()), LaurentElement(win)) {}

void InfChar::set_value(int gen, LaurentElement v) {
  if (!(v.window() == win_)) throw DimensionMismatch("value window mismatch");
  vals_[static_cast<std::size_t>(gen)] = std::move(v);
}

LaurentElement InfChar::on_forest(int fidx) const {
  auto gi = ctx_->single_tree_generator(fidx);
  if (!gi) return LaurentElement(win_);
  return vals_[static_cast<std::size_t>(*gi)];
}

Functional InfChar::to_functional() const {
  Functional f(ctx_, win_);
  for (int i = 0; i < ctx_->num_generators(); ++i)
    f.on_forest(ctx_->forest_of_generator(i)) = vals_[static_cast<std::size_t>(i)];
  return f;
}

bool InfChar::is_zero() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [](const LaurentElement& v) { return v.is_zero(); });
}

bool InfChar::is_holomorphic() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [](const LaurentElement& v) { return v.is_holomorphic(); });
}

InfChar& InfChar::operator+=(const InfChar& o) {
  check_compat(*ctx_, win_, *o.ctx_, o.win_);
  for (std::size_t i = 0; i < vals_.size(); ++i) vals_[i] += o.vals_[i];
  return *this;
}

InfChar& InfChar::operator-=(const InfChar& o) {
  check_compat(*ctx_, win_, *o.ctx_, o.win_);
  for (std::size_t i = 0; i < vals_.size(); ++i) vals_[i] -= o.vals_[i];
  return *this;
}

InfChar& InfChar::operator*=(const Scalar& c) {
  for (auto& v : vals_) v *= c;
  return *this;
}

InfChar InfChar::shifted(int k) const {
  InfChar r(ctx_, win_);
  for (int i = 0; i < ctx_->num_generators(); ++i)
    r.set_value(i, vals_[static_cast<std::size_t>(i)].shifted(k));
  return r;
}

// --- convolution -------------------------------------------------------------

Character convolve(const Character& a, const Character& b) {
  check_compat(a.ctx(), a.window(), b.ctx(), b.window());
  Character r(a.ctx_ptr(), a.window());
  for (int g = 0; g < a.ctx().num_generators(); ++g) {
    int f = a.ctx().forest_of_generator(g);
    LaurentElement acc(a.window());
    for (const auto& term : a.ctx().coproduct_terms(f)) {
      LaurentElement l = a.on_forest(term.left);
      if (l.is_zero()) continue;
      LaurentElement rr = b.on_forest(term.right);
      if (rr.is_zero()) continue;
      acc += laurent_mul(l, rr) * Scalar(term.coeff);
    }
    r.set_value(g, std::move(acc));
  }
  return r;
}

Character inverse(const Character& a) {
  Character inv(a.ctx_ptr(), a.window());
  for (int g : generators_by_degree(a.ctx())) {
    int f = a.ctx().forest_of_generator(g);
    // 0 = (inv * a)(T) = inv(T) + a(T) + sum' inv(f') a(f'')
    LaurentElement acc = a.value(g);
    for (const auto& term : a.ctx().reduced_coproduct_terms(f)) {
      LaurentElement l = inv.on_forest(term.left);
      if (l.is_zero()) continue;
      LaurentElement rr = a.on_forest(term.right);
      if (rr.is_zero()) continue;
      acc += laurent_mul(l, rr) * Scalar(term.coeff);
    }
    inv.set_value(g, -acc);
  }
  return inv;
}

Character inverse_via_antipode(const Character& a) {
  Character inv(a.ctx_ptr(), a.window());
  for (int g = 0; g < a.ctx().num_generators(); ++g) {
    const HopfElement& s = a.ctx().antipode_of_forest(a.ctx().forest_of_generator(g));
    LaurentElement acc(a.window());
    for (const auto& [fi, c] : s.terms()) acc += a.on_forest(fi) * c;
    inv.set_value(g, std::move(acc));
  }
  return inv;
}

InfChar lie_bracket(const InfChar& z1, const InfChar& z2) {
  check_compat(z1.ctx(), z1.window(), z2.ctx(), z2.window());
  InfChar r(z1.ctx_ptr(), z1.window());
  for (int g = 0; g < z1.ctx().num_generators(); ++g) {
    int f = z1.ctx().forest_of_generator(g);
    LaurentElement acc(z1.window());
    for (const auto& term : z1.ctx().coproduct_terms(f)) {
      LaurentElement l1 = z1.on_forest(term.left);
      LaurentElement r2 = z2.on_forest(term.right);
      if (!l1.is_zero() && !r2.is_zero()) acc += laurent_mul(l1, r2) * Scalar(term.coeff);
      LaurentElement l2 = z2.on_forest(term.left);
      LaurentElement r1 = z1.on_forest(term.right);
      if (!l2.is_zero() && !r1.is_zero()) acc -= laurent_mul(l2, r1) * Scalar(term.coeff);
    }
    r.set_value(g, std::move(acc));
  }
  return r;
}

Character star_exp(const InfChar& z) {
  auto ctx = z.ctx_ptr();
  Functional power = z.to_functional();
  Functional sum = power;  // k = 1 term
  Rational factorial(1);
  for (int k = 2; k <= ctx->degree_cap(); ++k) {
    power = convolve(power, z.to_functional());
    factorial *= k;
    Scalar c(Rational(1) / factorial);
    for (int f = 0; f < ctx->num_forests(); ++f) sum.on_forest(f) += power.on_forest(f) * c;
  }
  Character r(ctx, z.window());
  for (int g = 0; g < ctx->num_generators(); ++g)
    r.set_value(g, sum.on_forest(ctx->forest_of_generator(g)));
  return r;
}

InfChar star_log(const Character& a) {
  auto ctx = a.ctx_ptr();
  Functional u = a.to_functional();
  u.on_forest(ctx->unit_index()) -= LaurentElement::one(a.window());
  Functional power = u;
  Functional sum = power;
  for (int k = 2; k <= ctx->degree_cap(); ++k) {
    power = convolve(power, u);
    Scalar c(Rational((k % 2 == 0) ? -1 : 1) / Rational(k));
    for (int f = 0; f < ctx->num_forests(); ++f) sum.on_forest(f) += power.on_forest(f) * c;
  }
  InfChar r(ctx, a.window());
  for (int g = 0; g < ctx->num_generators(); ++g)
    r.set_value(g, sum.on_forest(ctx->forest_of_generator(g)));
  return r;
}

// --- Birkhoff ----------------------------------------------------------------

namespace {

/// Bogoliubov preparation value on generator g given the already-known
/// counterterm character `neg` below deg(g).
LaurentElement prepared_value(const Character& phi, const Character& neg, int g) {
  const HopfContext& ctx = phi.ctx();
  int f = ctx.forest_of_generator(g);
  LaurentElement acc = phi.value(g);
  for (const auto& term : ctx.reduced_coproduct_terms(f)) {
    LaurentElement l = neg.on_forest(term.left);
    if (l.is_zero()) continue;
    LaurentElement r = phi.on_forest(term.right);
    if (r.is_zero()) continue;
    acc += laurent_mul(l, r) * Scalar(term.coeff);
  }
  return acc;
}

}  // namespace

BirkhoffPair birkhoff(const Character& phi) {
  Character neg(phi.ctx_ptr(), phi.window());
  Character pos(phi.ctx_ptr(), phi.window());
  for (int g : generators_by_degree(phi.ctx())) {
    LaurentElement bar = prepared_value(phi, neg, g);
    auto [minus, plus] = minimal_subtraction(bar);
    neg.set_value(g, -minus);
    pos.set_value(g, std::move(plus));
  }
  return {std::move(neg), std::move(pos)};
}

BirkhoffPair birkhoff_via_splitting(const Character& phi) {
  // pos by degree from the (id - pi) half; neg reconstructed from the group law
  Character neg(phi.ctx_ptr(), phi.window());
  Character pos(phi.ctx_ptr(), phi.window());
  for (int g : generators_by_degree(phi.ctx())) {
    LaurentElement bar = prepared_value(phi, neg, g);
    auto [minus, plus] = minimal_subtraction(bar);
    neg.set_value(g, -minus);  // needed to continue the preparation recursion
    pos.set_value(g, std::move(plus));
  }
  Character neg2 = convolve(pos, inverse(phi));
  return {std::move(neg2), std::move(pos)};
}

// --- R-tilde calculus ----------------------------------------------------------

namespace {

Functional compose_grading(const Character& phi) {
  Functional f = phi.to_functional();
  for (int i = 0; i < phi.ctx().num_forests(); ++i)
    f.on_forest(i) *= Scalar(static_cast<std::int64_t>(phi.ctx().degree(i)));
  return f;
}

}  // namespace

InfChar tilde_R(const Character& phi) {
  Functional conv = convolve(inverse(phi).to_functional(), compose_grading(phi));
  InfChar r(phi.ctx_ptr(), phi.window());
  for (int g = 0; g < phi.ctx().num_generators(); ++g)
    r.set_value(g, conv.on_forest(phi.ctx().forest_of_generator(g)));
  return r;
}

Character tilde_R_inv(const InfChar& l) {
  Character phi(l.ctx_ptr(), l.window());
  for (int g : generators_by_degree(l.ctx())) {
    int f = l.ctx().forest_of_generator(g);
    int n = l.ctx().generator(g).degree();
    // n phi(T) = (phi * L)(T) = L(T) + sum' phi(f') L(f'')
    LaurentElement acc = l.value(g);
    for (const auto& term : l.ctx().reduced_coproduct_terms(f)) {
      LaurentElement lv = l.on_forest(term.right);
      if (lv.is_zero()) continue;
      LaurentElement pv = phi.on_forest(term.left);
      if (pv.is_zero()) continue;
      acc += laurent_mul(pv, lv) * Scalar(term.coeff);
    }
    acc *= Scalar(Rational(1, static_cast<unsigned long>(n)));
    phi.set_value(g, std::move(acc));
  }
  return phi;
}

Character scale_phi_s(const Character& phi) {
  Character r(phi.ctx_ptr(), phi.window());
  for (int g = 0; g < phi.ctx().num_generators(); ++g)
    r.set_value(g, scale_by_exp_s(phi.value(g), phi.ctx().generator(g).degree()));
  return r;
}

InfChar beta_tilde(const Character& phi) {
  // derivative route
  Character conv = convolve(inverse(phi), scale_phi_s(phi));
  InfChar from_derivative(phi.ctx_ptr(), phi.window());
  std::map<int, MultiPoly> s_to_zero = {{vars::kS, MultiPoly()}};
  for (int g = 0; g < phi.ctx().num_generators(); ++g)
    from_derivative.set_value(g, conv.value(g).derivative(vars::kS).substitute(s_to_zero));
  // algebraic route
  InfChar from_grading = tilde_R(phi).shifted(1);
  if (!(from_derivative == from_grading))
    throw Error("beta_tilde: derivative and grading routes disagree");
  return from_derivative;
}

bool is_local(const Character& phi) {
  BirkhoffPair parts = birkhoff(scale_phi_s(phi));
  for (int g = 0; g < phi.ctx().num_generators(); ++g)
    if (parts.neg.value(g).depends_on(vars::kS)) return false;
  return true;
}

InfChar ad_character(const Character& g, const InfChar& z) {
  Functional conv = convolve(convolve(g.to_functional(), z.to_functional()),
                             inverse(g).to_functional());
  InfChar r(z.ctx_ptr(), z.window());
  for (int i = 0; i < z.ctx().num_generators(); ++i)
    r.set_value(i, conv.on_forest(z.ctx().forest_of_generator(i)));
  return r;
}

Character slice_at_zero(const Character& a) {
  Character r(a.ctx_ptr(), a.window());
  for (int g = 0; g < a.ctx().num_generators(); ++g)
    r.set_value(g, LaurentElement::monomial(a.window(), 0, a.value(g).coeff(0)));
  return r;
}

InfChar slice_at_zero(const InfChar& a) {
  InfChar r(a.ctx_ptr(), a.window());
  for (int g = 0; g < a.ctx().num_generators(); ++g)
    r.set_value(g, LaurentElement::monomial(a.window(), 0, a.value(g).coeff(0)));
  return r;
}

InfChar beta_function(const Character& phi) {
  if (!is_local(phi)) throw NotLocal("beta_function requires a local character");
  BirkhoffPair parts = birkhoff(phi);
  Character plus_at_zero = slice_at_zero(parts.pos);
  InfChar beta0 = slice_at_zero(beta_tilde(phi));
  return ad_character(plus_at_zero, beta0);
}

std::array<LaurentElement, 3> normal_coordinates(const Character& phi) {
  const HopfContext& ctx = phi.ctx();
  auto node = ctx.generator_index(RootedTree::leaf());
  auto lad = ctx.generator_index(RootedTree::ladder(2));
  auto cher = ctx.generator_index(RootedTree::corolla(3));
  if (!node || !lad || !cher)
    throw AlgebraMismatch("normal coordinates need the node, 2-ladder and cherry generators");
  const LaurentElement& n = phi.value(*node);
  const LaurentElement& l = phi.value(*lad);
  const LaurentElement& c = phi.value(*cher);
  LaurentElement n2 = laurent_mul(n, n);
  LaurentElement f1 = n;
  LaurentElement f2 = l - n2 * Scalar(Rational(1, 2));
  LaurentElement f4 = c - laurent_mul(n, l) + laurent_mul(n2, n) * Scalar(Rational(1, 6));
  return {f1, f2, f4};
}

}  // namespace ck
