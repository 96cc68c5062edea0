#include "ck/multipoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

namespace vars {

namespace {
const std::vector<std::string> kNames = {"t",   "s",   "x1",  "x2",  "x3",  "x4",
                                         "x5",  "x1s", "x2s", "x3s", "x4s", "x5s"};
}  // namespace

int x(int i) {
  if (i < 1 || i > 5) throw Error("coordinate index out of range");
  return 1 + i;
}

int xs(int i) {
  if (i < 1 || i > 5) throw Error("coordinate index out of range");
  return 6 + i;
}

const std::string& name(int v) { return kNames.at(static_cast<std::size_t>(v)); }

std::optional<int> index_of(const std::string& nm) {
  for (int v = 0; v < kCount; ++v)
    if (kNames[static_cast<std::size_t>(v)] == nm) return v;
  return std::nullopt;
}

}  // namespace vars

Mono mono_one() {
  Mono m{};
  m.fill(0);
  return m;
}

Mono mono_var(int v, std::uint16_t e) {
  Mono m = mono_one();
  m[static_cast<std::size_t>(v)] = e;
  return m;
}

namespace {

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

bool mono_divides(const Mono& d, const Mono& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Mono mono_div(const Mono& m, const Mono& d) {
  Mono r;
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = static_cast<std::uint16_t>(m[i] - d[i]);
  return r;
}

}  // namespace

MultiPoly::MultiPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(mono_one(), std::move(c));
}

MultiPoly MultiPoly::var(int v, std::uint16_t e) { return term(mono_var(v, e), Scalar(1)); }

MultiPoly MultiPoly::term(const Mono& m, Scalar c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == mono_one());
}

Scalar MultiPoly::constant_term() const {
  auto it = terms_.find(mono_one());
  return it == terms_.end() ? Scalar(0) : it->second;
}

int MultiPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m[static_cast<std::size_t>(v)]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int td = 0;
    for (auto e : m) td += e;
    d = std::max(d, td);
  }
  return d;
}

void MultiPoly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(Scalar(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly r;
  auto vi = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    if (m[vi] == 0) continue;
    Mono dm = m;
    dm[vi] = static_cast<std::uint16_t>(dm[vi] - 1);
    r.add_term(dm, c * Scalar(static_cast<std::int64_t>(m[vi])));
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::collect(int v) const {
  std::vector<MultiPoly> out;
  auto vi = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    std::size_t k = m[vi];
    if (out.size() <= k) out.resize(k + 1);
    Mono rest = m;
    rest[vi] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& repl) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    MultiPoly prod(c);
    Mono rest = m;
    for (const auto& [v, p] : repl) {
      auto vi = static_cast<std::size_t>(v);
      if (m[vi] > 0) {
        prod *= p.pow(m[vi]);
        rest[vi] = 0;
      }
    }
    r += prod * MultiPoly::term(rest, Scalar(1));
  }
  return r;
}

Scalar MultiPoly::eval(const std::array<Scalar, vars::kCount>& point) const {
  Scalar sum(0);
  for (const auto& [m, c] : terms_) {
    Scalar prod = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (std::uint16_t e = 0; e < m[v]; ++e) prod *= point[v];
    sum += prod;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool negated = false;
    if (c.is_real() && c.re() < 0) {
      negated = true;
      cs = (-c).str();
    }
    if (first) {
      if (negated) os << "-";
      first = false;
    } else {
      os << (negated ? " - " : " + ");
    }
    std::string monos;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!monos.empty()) monos += "*";
      monos += vars::name(static_cast<int>(v));
      if (m[v] > 1) monos += "^" + std::to_string(m[v]);
    }
    bool unit_coeff = (cs == "1");
    if (monos.empty()) {
      os << (c.is_real() ? cs : "(" + cs + ")");
    } else if (unit_coeff) {
      os << monos;
    } else if (c.is_real()) {
      os << cs << "*" << monos;
    } else {
      os << "(" << cs << ")*" << monos;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// --- parser ----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  MultiPoly parse_expr() {
    MultiPoly r = eat('-') ? -parse_term() : parse_term();
    for (;;) {
      if (eat('+')) {
        r += parse_term();
      } else if (eat('-')) {
        r -= parse_term();
      } else {
        return r;
      }
    }
  }

  MultiPoly parse_term() {
    MultiPoly r = parse_factor();
    while (eat('*')) r *= parse_factor();
    return r;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_base();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected exponent at position " + std::to_string(pos));
      unsigned e = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
      return base.pow(e);
    }
    return base;
  }

  MultiPoly parse_base() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of polynomial");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      MultiPoly inner = parse_expr();
      if (!eat(')')) throw ParseError("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      std::string lit = text.substr(start, pos - start);
      if (pos < text.size() && text[pos] == 'i' &&
          (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
        ++pos;
        return MultiPoly(Scalar(Rational(0), rational_from_string(lit)));
      }
      return MultiPoly(Scalar(rational_from_string(lit)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos]))))
        ++pos;
      std::string nm = text.substr(start, pos - start);
      if (nm == "i") return MultiPoly(Scalar::i());
      auto v = vars::index_of(nm);
      if (!v) throw ParseError("unknown symbol '" + nm + "'");
      return MultiPoly::var(*v);
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
  Parser p(text);
  MultiPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input at position " + std::to_string(p.pos));
  return r;
}

// --- exact division ---------------------------------------------------------

MultiPoly MultiPoly::exact_div(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw Error("exact_div by zero");
  if (num.is_zero()) return MultiPoly();
  if (den.is_constant()) {
    MultiPoly q = num;
    q *= den.constant_term().inverse();
    return q;
  }
  // Leading-term division under the (multiplicative) lexicographic monomial
  // order; terminates exactly when den divides num.
  MultiPoly rem = num;
  MultiPoly quot;
  const auto& dlt = *den.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms_.rbegin();
    if (!mono_divides(dlt.first, rlt.first))
      throw Error("exact_div: division is not exact");
    Mono qm = mono_div(rlt.first, dlt.first);
    Scalar qc = rlt.second / dlt.second;
    MultiPoly piece = MultiPoly::term(qm, qc);
    quot += piece;
    rem -= piece * den;
  }
  return quot;
}

}  // namespace ck
