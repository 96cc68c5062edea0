#pragma once

#include <array>
#include <memory>
#include <vector>

#include "ck/hopf.hpp"
#include "ck/laurent.hpp"

namespace ck {

class Character;
class InfChar;

/// Linear functional on the basis forests; the common representation that
/// convolution powers and mixed products pass through.
class Functional {
 public:
  Functional(std::shared_ptr<const HopfContext> ctx, Window win);

  const HopfContext& ctx() const { return *ctx_; }
  std::shared_ptr<const HopfContext> ctx_ptr() const { return ctx_; }
  const Window& window() const { return win_; }

  const LaurentElement& on_forest(int fidx) const { return vals_[static_cast<std::size_t>(fidx)]; }
  LaurentElement& on_forest(int fidx) { return vals_[static_cast<std::size_t>(fidx)]; }

  friend Functional convolve(const Functional& a, const Functional& b);

 private:
  std::shared_ptr<const HopfContext> ctx_;
  Window win_;
  std::vector<LaurentElement> vals_;
};

/// Algebra morphism H -> A with phi(1) = 1, stored by its values on the
/// generator trees; forest values extend multiplicatively.
class Character {
 public:
  Character(std::shared_ptr<const HopfContext> ctx, Window win);

  static Character epsilon(std::shared_ptr<const HopfContext> ctx, Window win) {
    return Character(std::move(ctx), win);
  }

  const HopfContext& ctx() const { return *ctx_; }
  std::shared_ptr<const HopfContext> ctx_ptr() const { return ctx_; }
  const Window& window() const { return win_; }

  const LaurentElement& value(int gen) const { return vals_[static_cast<std::size_t>(gen)]; }
  void set_value(int gen, LaurentElement v);

  LaurentElement on_forest(int fidx) const;
  Functional to_functional() const;

  bool is_epsilon() const;
  bool is_holomorphic() const;
  /// Pure poles on every positive-degree generator (counterterm shape).
  bool is_pole_normalized() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.win_ == b.win_ && a.vals_ == b.vals_;
  }

 private:
  std::shared_ptr<const HopfContext> ctx_;
  Window win_;
  std::vector<LaurentElement> vals_;
};

/// Infinitesimal character: vanishes on 1 and on products of positive-degree
/// elements; stored by generator values.
class InfChar {
 public:
  InfChar(std::shared_ptr<const HopfContext> ctx, Window win);

  static InfChar zero(std::shared_ptr<const HopfContext> ctx, Window win) {
    return InfChar(std::move(ctx), win);
  }

  const HopfContext& ctx() const { return *ctx_; }
  std::shared_ptr<const HopfContext> ctx_ptr() const { return ctx_; }
  const Window& window() const { return win_; }

  const LaurentElement& value(int gen) const { return vals_[static_cast<std::size_t>(gen)]; }
  void set_value(int gen, LaurentElement v);

  LaurentElement on_forest(int fidx) const;
  Functional to_functional() const;

  bool is_zero() const;
  bool is_holomorphic() const;

  InfChar& operator+=(const InfChar& o);
  InfChar& operator-=(const InfChar& o);
  InfChar& operator*=(const Scalar& c);
  friend InfChar operator+(InfChar a, const InfChar& b) { return a += b; }
  friend InfChar operator-(InfChar a, const InfChar& b) { return a -= b; }

  /// Value-wise multiplication by lambda^k.
  InfChar shifted(int k) const;

  friend bool operator==(const InfChar& a, const InfChar& b) {
    return a.win_ == b.win_ && a.vals_ == b.vals_;
  }

 private:
  std::shared_ptr<const HopfContext> ctx_;
  Window win_;
  std::vector<LaurentElement> vals_;
};

struct BirkhoffPair {
  Character neg;  // counterterm part, pure poles on positive degree
  Character pos;  // renormalized part, holomorphic
};

// --- convolution group and Lie algebra --------------------------------------

Character convolve(const Character& a, const Character& b);

/// Group inverse, computed by degree recursion; the unit is epsilon.
Character inverse(const Character& a);
/// Same element via phi o S; kept as an independent route for tests.
Character inverse_via_antipode(const Character& a);

InfChar lie_bracket(const InfChar& z1, const InfChar& z2);

/// Convolution exponential; terminates exactly because z^(*k) vanishes below
/// degree k on the connected graded algebra.
Character star_exp(const InfChar& z);
InfChar star_log(const Character& a);

// --- Birkhoff factorization --------------------------------------------------

/// Counterterm recursion: neg(x) = -pi(phi(x) + sum' neg(x') phi(x'')),
/// pos(x) = (id - pi)(same), over the reduced coproduct. Recomposition
/// inverse(neg) * pos == phi holds exactly.
BirkhoffPair birkhoff(const Character& phi);

/// Independent route: pos from the (id - pi) half of the preparation map,
/// then neg reconstructed as pos * phi^{-1} through group operations.
BirkhoffPair birkhoff_via_splitting(const Character& phi);

// --- the R-tilde calculus ----------------------------------------------------

/// R~(phi) = phi^{-1} * (phi o Y); a bijection onto the infinitesimal
/// characters.
InfChar tilde_R(const Character& phi);

/// Unique phi with phi(1)=1 and phi o Y = phi * L, by the degree recursion
/// n phi(x) = (phi * L)(x).
Character tilde_R_inv(const InfChar& l);

/// phi^s: multiplies phi(x) by the window-exact expansion of exp(s lambda |x|).
Character scale_phi_s(const Character& phi);

/// beta~_phi = d/ds|_{s=0} (phi^{-1} * phi^s); equals lambda * R~(phi), and
/// both routes are computed and required to agree.
InfChar beta_tilde(const Character& phi);

/// Exact s-polynomial locality test: the Birkhoff negative part of phi^s is
/// s-free.
bool is_local(const Character& phi);

/// beta_phi = Ad(phi_+(0)) (beta~_phi |_{lambda=0}); throws NotLocal.
InfChar beta_function(const Character& phi);

/// Conjugation Ad(g) z = g * z * g^{-1}.
InfChar ad_character(const Character& g, const InfChar& z);

/// lambda = 0 slice of a holomorphic character/infinitesimal character.
Character slice_at_zero(const Character& a);
InfChar slice_at_zero(const InfChar& a);

/// Normal coordinates on a context containing the single node, the 2-ladder
/// and the cherry: (phi(f1), phi(f2), phi(f4)) with f1 = n, f2 = l - n^2/2,
/// f4 = c - n l + n^3/6.
std::array<LaurentElement, 3> normal_coordinates(const Character& phi);

}  // namespace ck
