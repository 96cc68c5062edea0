#include "ck/laurent.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

LaurentElement LaurentElement::monomial(Window w, int exponent, MultiPoly coeff) {
  LaurentElement a(w);
  a.set_coeff(exponent, std::move(coeff));
  return a;
}

bool LaurentElement::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == MultiPoly(Scalar(1));
}

int LaurentElement::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentElement::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

MultiPoly LaurentElement::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? MultiPoly() : it->second;
}

void LaurentElement::set_coeff(int exponent, MultiPoly c) {
  if (c.is_zero()) {
    coeffs_.erase(exponent);
    return;
  }
  if (exponent < win_.lo)
    throw PoleOverflow("exponent " + std::to_string(exponent) + " below window floor " +
                       std::to_string(win_.lo));
  if (exponent > win_.hi) return;  // series tail
  coeffs_[exponent] = std::move(c);
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement r(win_);
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

namespace {
void check_window(const LaurentElement& a, const LaurentElement& b) {
  if (!(a.window() == b.window())) throw DimensionMismatch("laurent window mismatch");
}
}  // namespace

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  check_window(*this, o);
  for (const auto& [e, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  check_window(*this, o);
  for (const auto& [e, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  return laurent_mul(a, b);
}

LaurentElement& LaurentElement::operator*=(const LaurentElement& o) {
  *this = laurent_mul(*this, o);
  return *this;
}

LaurentElement& LaurentElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

LaurentElement& LaurentElement::operator*=(const MultiPoly& p) {
  if (p.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= p;
  return *this;
}

LaurentElement LaurentElement::shifted(int k) const {
  LaurentElement r(win_);
  for (const auto& [e, c] : coeffs_) r.set_coeff(e + k, c);
  return r;
}

LaurentElement LaurentElement::map_coeffs(
    const std::function<MultiPoly(const MultiPoly&)>& f) const {
  LaurentElement r(win_);
  for (const auto& [e, c] : coeffs_) {
    MultiPoly fc = f(c);
    if (!fc.is_zero()) r.coeffs_.emplace(e, std::move(fc));
  }
  return r;
}

LaurentElement LaurentElement::derivative(int v) const {
  return map_coeffs([&](const MultiPoly& c) { return c.derivative(v); });
}

LaurentElement LaurentElement::substitute(const std::map<int, MultiPoly>& repl) const {
  return map_coeffs([&](const MultiPoly& c) { return c.substitute(repl); });
}

bool LaurentElement::depends_on(int v) const {
  for (const auto& [e, c] : coeffs_)
    if (c.depends_on(v)) return true;
  return false;
}

LaurentElement LaurentElement::widened(Window w) const {
  if (w.lo > win_.lo || w.hi < win_.hi) throw DimensionMismatch("widened() cannot shrink window");
  LaurentElement r(w);
  r.coeffs_ = coeffs_;
  return r;
}

std::string LaurentElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool atom = c.terms().size() == 1;
    if (e == 0) {
      os << (atom ? cs : "(" + cs + ")");
      continue;
    }
    std::string lam = (e == 1) ? "L" : "L^" + std::to_string(e);
    if (c == MultiPoly(Scalar(1))) {
      os << lam;
    } else {
      os << (atom ? cs : "(" + cs + ")") << "*" << lam;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentElement& a) { return os << a.str(); }

LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b) {
  check_window(a, b);
  LaurentElement r(a.window());
  std::map<int, MultiPoly> acc;
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) {
      int e = ea + eb;
      if (e > a.window().hi) continue;  // series tail
      acc[e] += ca * cb;
    }
  for (auto& [e, c] : acc) r.set_coeff(e, std::move(c));
  return r;
}

std::pair<LaurentElement, LaurentElement> minimal_subtraction(const LaurentElement& a) {
  LaurentElement neg(a.window()), pos(a.window());
  for (const auto& [e, c] : a.coeffs()) {
    if (e < 0)
      neg.set_coeff(e, c);
    else
      pos.set_coeff(e, c);
  }
  return {neg, pos};
}

LaurentElement r_matrix(const LaurentElement& a) {
  auto [neg, pos] = minimal_subtraction(a);
  return neg - pos;
}

LaurentElement scale_by_exp_s(const LaurentElement& a, int n) {
  if (n == 0) return a;
  const Window w = a.window();
  LaurentElement r(w);
  // factorials and powers of n as exact rationals
  for (int e = w.lo; e <= w.hi; ++e) {
    MultiPoly acc;
    for (const auto& [j, c] : a.coeffs()) {
      int k = e - j;
      if (k < 0) continue;
      Rational coef(1);
      for (int m = 1; m <= k; ++m) coef *= Rational(n) / Rational(m);
      acc += c * MultiPoly::term(mono_var(vars::kS, static_cast<std::uint16_t>(k)), Scalar(coef));
    }
    r.set_coeff(e, std::move(acc));
  }
  return r;
}

}  // namespace ck
