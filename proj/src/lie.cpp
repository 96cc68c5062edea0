#include "ck/lie.hpp"

#include <algorithm>

#include "ck/errors.hpp"

namespace ck {

LieData::LieData(std::vector<std::string> basis_names, std::vector<int> degrees,
                 std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets,
                 int half_dim)
    : names_(std::move(basis_names)), degrees_(std::move(degrees)), half_(half_dim) {
  for (auto& [key, terms] : brackets) {
    if (key.first == key.second) throw Error("diagonal bracket entry");
    std::vector<std::pair<int, Scalar>> clean;
    for (auto& [c, v] : terms)
      if (!v.is_zero()) clean.emplace_back(c, v);
    if (clean.empty()) continue;
    std::sort(clean.begin(), clean.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (key.first < key.second) {
      brackets_[key] = std::move(clean);
    } else {
      for (auto& [c, v] : clean) v = -v;
      brackets_[{key.second, key.first}] = std::move(clean);
    }
  }
}

std::vector<std::pair<int, Scalar>> LieData::bracket(int a, int b) const {
  if (a == b) return {};
  bool flip = a > b;
  auto it = brackets_.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
  if (it == brackets_.end()) return {};
  auto terms = it->second;
  if (flip)
    for (auto& [c, v] : terms) v = -v;
  return terms;
}

std::vector<std::tuple<int, int, int, Scalar>> LieData::bracket_table() const {
  std::vector<std::tuple<int, int, int, Scalar>> out;
  for (const auto& [key, terms] : brackets_)
    for (const auto& [c, v] : terms) out.emplace_back(key.first, key.second, c, v);
  return out;
}

namespace {

template <typename T>
std::vector<T> bracket_vec_impl(const LieData& g, const std::vector<T>& x, const std::vector<T>& y,
                                const T& zero) {
  if (static_cast<int>(x.size()) != g.dim() || static_cast<int>(y.size()) != g.dim())
    throw DimensionMismatch("coordinate vector length");
  std::vector<T> r(static_cast<std::size_t>(g.dim()), zero);
  for (const auto& [a, b, c, coeff] : g.bracket_table()) {
    // [x, y] = sum x_a y_b [e_a, e_b]; include both orders.
    auto add = [&](int ia, int ib, const Scalar& sc) {
      const T& xa = x[static_cast<std::size_t>(ia)];
      const T& yb = y[static_cast<std::size_t>(ib)];
      T prod = xa * yb;
      prod = prod * sc;
      r[static_cast<std::size_t>(c)] += prod;
    };
    add(a, b, coeff);
    add(b, a, -coeff);
  }
  return r;
}

}  // namespace

std::vector<Scalar> LieData::bracket_vec(const std::vector<Scalar>& x,
                                         const std::vector<Scalar>& y) const {
  return bracket_vec_impl(*this, x, y, Scalar(0));
}

std::vector<MultiPoly> LieData::bracket_vec(const std::vector<MultiPoly>& x,
                                            const std::vector<MultiPoly>& y) const {
  return bracket_vec_impl(*this, x, y, MultiPoly());
}

std::vector<LaurentElement> LieData::bracket_vec(const std::vector<LaurentElement>& x,
                                                 const std::vector<LaurentElement>& y) const {
  if (x.empty()) throw DimensionMismatch("coordinate vector length");
  return bracket_vec_impl(*this, x, y, LaurentElement::zero(x.front().window()));
}

int LieData::coordinate_var(int a) const {
  if (is_double() && a >= half_) return vars::xs(a - half_ + 1);
  return vars::x(a + 1);
}

int LieData::star_swap(int a) const {
  if (!is_double()) throw AlgebraMismatch("star_swap needs a double Lie algebra");
  return a < half_ ? a + half_ : a - half_;
}

void LieData::check_antisymmetry_and_jacobi() const {
  const int n = dim();
  auto basis_vec = [&](int i) {
    std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0));
    v[static_cast<std::size_t>(i)] = Scalar(1);
    return v;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto ab = bracket_vec(basis_vec(a), basis_vec(b));
      auto ba = bracket_vec(basis_vec(b), basis_vec(a));
      for (int c = 0; c < n; ++c)
        if (ab[static_cast<std::size_t>(c)] + ba[static_cast<std::size_t>(c)] != Scalar(0))
          throw Error("antisymmetry fails at [" + names_[static_cast<std::size_t>(a)] + "," +
                      names_[static_cast<std::size_t>(b)] + "]");
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<Scalar> sum(static_cast<std::size_t>(n), Scalar(0));
        auto acc = [&](int i, int j, int k) {
          auto inner = bracket_vec(basis_vec(j), basis_vec(k));
          auto outer = bracket_vec(basis_vec(i), inner);
          for (int m = 0; m < n; ++m) sum[static_cast<std::size_t>(m)] += outer[static_cast<std::size_t>(m)];
        };
        acc(a, b, c);
        acc(b, c, a);
        acc(c, a, b);
        for (int m = 0; m < n; ++m)
          if (sum[static_cast<std::size_t>(m)] != Scalar(0))
            throw Error("Jacobi identity fails at triple (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
      }
}

LieData truncated_lie_algebra(const HopfContext& ctx, int k) {
  const int n = ctx.num_generators();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 0; i < n; ++i) {
    names.push_back("X" + std::to_string(i + 1));
    degrees.push_back(ctx.generator(i).degree());
  }
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (degrees[static_cast<std::size_t>(i)] + degrees[static_cast<std::size_t>(j)] > k) continue;
      std::vector<std::pair<int, Scalar>> terms;
      for (int c = 0; c < n; ++c) {
        std::int64_t coeff = 0;
        int fc = ctx.forest_of_generator(c);
        for (const auto& term : ctx.coproduct_terms(fc)) {
          auto lg = ctx.single_tree_generator(term.left);
          auto rg = ctx.single_tree_generator(term.right);
          if (!lg || !rg) continue;
          if (*lg == i && *rg == j) coeff += term.coeff;
          if (*lg == j && *rg == i) coeff -= term.coeff;
        }
        if (coeff != 0) terms.emplace_back(c, Scalar(coeff));
      }
      if (!terms.empty()) brackets[{i, j}] = std::move(terms);
    }
  return LieData(std::move(names), std::move(degrees), std::move(brackets));
}

LieData truncated_lie_algebra(std::vector<RootedTree> generators, int k) {
  HopfContext ctx(std::move(generators), k);
  return truncated_lie_algebra(ctx, k);
}

LieData double_algebra(const LieData& g) {
  if (g.is_double()) throw AlgebraMismatch("already a double");
  const int k = g.dim();
  std::vector<std::string> names = g.basis_names();
  std::vector<int> degrees;
  for (int i = 0; i < k; ++i) degrees.push_back(g.degree(i));
  for (int i = 0; i < k; ++i) {
    names.push_back(g.basis_name(i) + "*");
    degrees.push_back(g.degree(i));
  }
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets;
  for (const auto& [a, b, c, coeff] : g.bracket_table()) brackets[{a, b}].emplace_back(c, coeff);
  // [X_a, X_b*] = ad*_{X_a}(X_b*) = - sum_c <X_b*, [X_a, X_c]> X_c*
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::vector<std::pair<int, Scalar>> terms;
      for (int c = 0; c < k; ++c) {
        for (const auto& [target, coeff] : g.bracket(a, c))
          if (target == b) terms.emplace_back(k + c, -coeff);
      }
      if (!terms.empty()) brackets[{a, k + b}] = std::move(terms);
    }
  return LieData(std::move(names), std::move(degrees), std::move(brackets), k);
}

int nilpotency_step(const LieData& g) {
  const int n = g.dim();
  auto basis_vec = [&](int i) {
    std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0));
    v[static_cast<std::size_t>(i)] = Scalar(1);
    return v;
  };
  // reduced spanning rows of the given vectors
  auto reduce = [&](std::vector<std::vector<Scalar>> rows) {
    int rank = 0;
    for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
      int pivot = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
      Scalar inv = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)].inverse();
      for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] *= inv;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == rank) continue;
        Scalar f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (f.is_zero()) continue;
        for (int j = 0; j < n; ++j)
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
              f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
      }
      ++rank;
    }
    rows.resize(static_cast<std::size_t>(rank));
    return rows;
  };

  std::vector<std::vector<Scalar>> current;
  for (int i = 0; i < n; ++i) current.push_back(basis_vec(i));
  int dim_prev = n;
  for (int step = 1; step <= n + 1; ++step) {
    std::vector<std::vector<Scalar>> next;
    for (int a = 0; a < n; ++a)
      for (const auto& v : current) next.push_back(g.bracket_vec(basis_vec(a), v));
    next = reduce(std::move(next));
    int d = static_cast<int>(next.size());
    if (d == 0) return step;
    if (d == dim_prev) throw NotNilpotent("lower central series stabilizes at dimension " +
                                          std::to_string(d));
    dim_prev = d;
    current = std::move(next);
  }
  throw NotNilpotent("lower central series did not terminate");
}

ExactMatrix ad_matrix(const LieData& g) {
  const int n = g.dim();
  ExactMatrix m(n, n);
  for (const auto& [a, b, c, coeff] : g.bracket_table()) {
    // column b of ad_x picks up x_a * coeff at row c, column a gets -x_b * coeff
    m.at(c, b) += MultiPoly::var(g.coordinate_var(a)) * coeff;
    m.at(c, a) -= MultiPoly::var(g.coordinate_var(b)) * coeff;
  }
  return m;
}

ExactMatrix ad_matrix(const LieData& g, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != g.dim()) throw DimensionMismatch("point length");
  const int n = g.dim();
  ExactMatrix m(n, n);
  for (const auto& [a, b, c, coeff] : g.bracket_table()) {
    m.at(c, b) += MultiPoly(point[static_cast<std::size_t>(a)] * coeff);
    m.at(c, a) -= MultiPoly(point[static_cast<std::size_t>(b)] * coeff);
  }
  return m;
}

ExactMatrix lie_poisson_matrix(const LieData& g) {
  if (!g.is_double()) throw AlgebraMismatch("Lie-Poisson tensor is defined on the double");
  const int n = g.dim();
  ExactMatrix p(n, n);
  for (const auto& [a, b, c, coeff] : g.bracket_table()) {
    MultiPoly entry = MultiPoly::var(g.coordinate_var(g.star_swap(c))) * coeff;
    p.at(a, b) += entry;
    p.at(b, a) -= entry;
  }
  return p;
}

ExactMatrix lie_poisson_matrix(const LieData& g, const std::vector<Scalar>& point) {
  if (!g.is_double()) throw AlgebraMismatch("Lie-Poisson tensor is defined on the double");
  if (static_cast<int>(point.size()) != g.dim()) throw DimensionMismatch("point length");
  const int n = g.dim();
  ExactMatrix p(n, n);
  for (const auto& [a, b, c, coeff] : g.bracket_table()) {
    MultiPoly entry(point[static_cast<std::size_t>(g.star_swap(c))] * coeff);
    p.at(a, b) += entry;
    p.at(b, a) -= entry;
  }
  return p;
}

std::shared_ptr<const HopfContext> standard_context(const std::string& name) {
  if (name == "g1" || name == "delta1") return HopfContext::ladder_corolla(1);
  if (name == "g2" || name == "delta2") return HopfContext::ladder_corolla(2);
  if (name == "g3" || name == "delta3") return HopfContext::ladder_corolla(3);
  throw Error("unknown algebra '" + name + "' (expected g1,g2,g3,delta1,delta2,delta3)");
}

LieData standard_algebra(const std::string& name) {
  auto ctx = standard_context(name);
  int k = ctx->degree_cap();
  LieData g = truncated_lie_algebra(*ctx, k);
  if (name.rfind("delta", 0) == 0) return double_algebra(g);
  return g;
}

}  // namespace ck
