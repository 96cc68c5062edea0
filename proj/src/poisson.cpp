#include "ck/poisson.hpp"

#include <sstream>

#include "ck/errors.hpp"

namespace ck {

namespace {

void check_coordinates(const LieData& g, const MultiPoly& p) {
  for (int v = 0; v < vars::kCount; ++v) {
    if (!p.depends_on(v)) continue;
    bool ok = false;
    for (int a = 0; a < g.dim(); ++a)
      if (g.coordinate_var(a) == v) {
        ok = true;
        break;
      }
    if (!ok)
      throw AlgebraMismatch("polynomial uses variable '" + vars::name(v) +
                            "' outside the coordinate set");
  }
}

}  // namespace

PoissonPoly::PoissonPoly(std::shared_ptr<const LieData> algebra, MultiPoly poly)
    : algebra_(std::move(algebra)), poly_(std::move(poly)) {
  if (!algebra_->is_double()) throw AlgebraMismatch("PoissonPoly lives on a double Lie algebra");
  check_coordinates(*algebra_, poly_);
}

PoissonPoly PoissonPoly::parse(std::shared_ptr<const LieData> algebra, const std::string& text) {
  return PoissonPoly(std::move(algebra), MultiPoly::parse(text));
}

PoissonPoly& PoissonPoly::operator+=(const PoissonPoly& o) {
  if (algebra_.get() != o.algebra_.get()) throw AlgebraMismatch("mixing Poisson algebras");
  poly_ += o.poly_;
  return *this;
}

PoissonPoly poisson_bracket(const PoissonPoly& f, const PoissonPoly& g) {
  if (f.algebra_ptr().get() != g.algebra_ptr().get())
    throw AlgebraMismatch("poisson_bracket across algebras");
  const LieData& alg = f.algebra();
  MultiPoly sum;
  for (const auto& [a, b, c, coeff] : alg.bracket_table()) {
    MultiPoly fa = f.poly().derivative(alg.coordinate_var(a));
    MultiPoly gb = g.poly().derivative(alg.coordinate_var(b));
    MultiPoly fb = f.poly().derivative(alg.coordinate_var(b));
    MultiPoly ga = g.poly().derivative(alg.coordinate_var(a));
    MultiPoly pair = fa * gb - fb * ga;
    if (pair.is_zero()) continue;
    sum += pair * MultiPoly::var(alg.coordinate_var(alg.star_swap(c))) * coeff;
  }
  return PoissonPoly(f.algebra_ptr(), std::move(sum));
}

InvolutionReport check_involution(const std::vector<PoissonPoly>& funcs) {
  InvolutionReport report;
  for (std::size_t i = 0; i < funcs.size(); ++i)
    for (std::size_t j = i + 1; j < funcs.size(); ++j) {
      PoissonPoly br = poisson_bracket(funcs[i], funcs[j]);
      if (!br.poly().is_zero()) {
        report.all_commute = false;
        report.witnesses.push_back(
            {static_cast<int>(i), static_cast<int>(j), br.poly()});
      }
    }
  return report;
}

ExactMatrix jacobian_matrix(const std::vector<PoissonPoly>& funcs) {
  if (funcs.empty()) return ExactMatrix(0, 0);
  const LieData& alg = funcs.front().algebra();
  ExactMatrix m(static_cast<int>(funcs.size()), alg.dim());
  for (std::size_t r = 0; r < funcs.size(); ++r) {
    if (funcs[r].algebra_ptr().get() != funcs.front().algebra_ptr().get())
      throw AlgebraMismatch("jacobian across algebras");
    for (int c = 0; c < alg.dim(); ++c)
      m.at(static_cast<int>(r), c) = funcs[r].poly().derivative(alg.coordinate_var(c));
  }
  return m;
}

int jacobian_rank(const std::vector<PoissonPoly>& funcs,
                  const std::vector<std::array<Scalar, vars::kCount>>& points) {
  return exact_rank(jacobian_matrix(funcs), points);
}

std::vector<PoissonPoly> gradient(const PoissonPoly& f) {
  std::vector<PoissonPoly> out;
  for (int c = 0; c < f.algebra().dim(); ++c)
    out.emplace_back(f.algebra_ptr(), f.poly().derivative(f.algebra().coordinate_var(c)));
  return out;
}

FitResult fit_hamiltonian(std::shared_ptr<const LieData> algebra,
                          const std::vector<MultiPoly>& beta0,
                          const std::vector<MultiPoly>& beta_next,
                          const HamiltonianAnsatz& ansatz) {
  const int k = ansatz.coords;
  if (static_cast<int>(beta0.size()) != k || static_cast<int>(beta_next.size()) != k)
    throw DimensionMismatch("fit_hamiltonian expects coordinate vectors over the unstarred block");
  if (!algebra->is_double() || algebra->half_dim() != k)
    throw AlgebraMismatch("ansatz size does not match the algebra");

  // unknown ordering: k_1..k_k, l_1..l_k, xi_{j,p} lexicographic (j<p)
  const int nunk = ansatz.unknowns();
  std::vector<std::pair<int, int>> cross;
  if (ansatz.cross_terms)
    for (int j = 0; j < k; ++j)
      for (int p = j + 1; p < k; ++p) cross.emplace_back(j, p);

  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int i = 0; i < k; ++i) {
    // dH/dx_i(beta0(t)) - beta_next_i(t), coefficient rows by powers of t;
    // dH/dx_i = k_i + l_i x_i + sum_j xi_{ij} x_j
    auto coeffs_of = [&](const MultiPoly& p) { return p.collect(vars::kT); };

    std::vector<std::vector<MultiPoly>> columns(static_cast<std::size_t>(nunk));
    columns[static_cast<std::size_t>(i)] = coeffs_of(MultiPoly(Scalar(1)));       // k_i
    columns[static_cast<std::size_t>(k + i)] = coeffs_of(beta0[static_cast<std::size_t>(i)]);  // l_i
    for (std::size_t x = 0; x < cross.size(); ++x) {
      auto [j, p] = cross[x];
      if (j == i)
        columns[static_cast<std::size_t>(2 * k) + x] = coeffs_of(beta0[static_cast<std::size_t>(p)]);
      else if (p == i)
        columns[static_cast<std::size_t>(2 * k) + x] = coeffs_of(beta0[static_cast<std::size_t>(j)]);
    }
    std::vector<MultiPoly> target = coeffs_of(beta_next[static_cast<std::size_t>(i)]);

    std::size_t max_pow = target.size();
    for (const auto& col : columns) max_pow = std::max(max_pow, col.size());
    if (max_pow == 0) max_pow = 1;
    for (std::size_t d = 0; d < max_pow; ++d) {
      std::vector<Scalar> row(static_cast<std::size_t>(nunk), Scalar(0));
      for (int u = 0; u < nunk; ++u) {
        const auto& col = columns[static_cast<std::size_t>(u)];
        if (d < col.size()) {
          if (!col[d].is_constant())
            throw Error("fit_hamiltonian: trajectory coefficients must be t-polynomials");
          row[static_cast<std::size_t>(u)] = col[d].constant_term();
        }
      }
      Scalar b(0);
      if (d < target.size()) {
        if (!target[d].is_constant())
          throw Error("fit_hamiltonian: trajectory coefficients must be t-polynomials");
        b = target[d].constant_term();
      }
      rows.push_back(std::move(row));
      rhs.push_back(std::move(b));
    }
  }

  FitResult result;
  result.equations = static_cast<int>(rows.size());
  result.unknowns = nunk;
  auto sol = solve_linear(rows, rhs);
  if (!sol) {
    result.consistent = false;
    result.message = "gradient-matching system is inconsistent (degenerate flow)";
    return result;
  }
  MultiPoly h;
  for (int i = 0; i < k; ++i) {
    h += (*sol)[static_cast<std::size_t>(i)] * MultiPoly::var(algebra->coordinate_var(i));
    h += (Scalar(Rational(1, 2)) * (*sol)[static_cast<std::size_t>(k + i)]) *
         MultiPoly::var(algebra->coordinate_var(i), 2);
  }
  for (std::size_t x = 0; x < cross.size(); ++x) {
    auto [j, p] = cross[x];
    h += (*sol)[static_cast<std::size_t>(2 * k) + x] *
         (MultiPoly::var(algebra->coordinate_var(j)) * MultiPoly::var(algebra->coordinate_var(p)));
  }
  result.consistent = true;
  result.hamiltonian = std::make_shared<PoissonPoly>(algebra, std::move(h));
  return result;
}

std::vector<PoissonPoly> standard_family(const std::shared_ptr<const LieData>& algebra,
                                         const std::string& name) {
  auto mk = [&](std::initializer_list<const char*> texts) {
    std::vector<PoissonPoly> fam;
    for (const char* t : texts) fam.push_back(PoissonPoly::parse(algebra, t));
    return fam;
  };
  if (name == "delta1")
    return mk({"1/2*x1^2 + 1/2*x2^2", "1/2*x3^2", "1/2*x1s^2", "1/2*x2s^2",
               "1/2*x3s^2 + 1/2*x1^2 + 1/2*x2^2"});
  if (name == "delta2")
    return mk({"1/2*x1^2 + 1/2*x3^2", "1/2*x4^2", "1/2*x1s^2", "1/2*x2s^2",
               "1/2*x4s^2 + 1/2*x1^2 + 1/2*x3^2",
               "1/2*x2^2 + 1/2*x3s^2 + 1/2*x4s^2 + 1/2*x1^2 + 1/2*x3^2"});
  if (name == "delta3")
    return mk({"1/2*x1^2 + 1/2*x4^2", "1/2*x5^2", "1/2*x1s^2", "1/2*x2s^2",
               "1/2*x2^2 + 1/2*x3s^2", "1/2*x3^2 + 1/2*x4s^2", "1/2*x5s^2"});
  if (name == "delta3_listed")  // tail of the listed family; a fitted H leads it
    return mk({"1/2*x5^2", "1/2*x1s^2", "1/2*x2s^2",
               "1/2*x1^2 + 1/2*x4^2 + 1/2*x2^2 + 1/2*x3s^2 + 1/2*x3^2 + 1/2*x4s^2 + 1/2*x5s^2"});
  throw Error("unknown family '" + name + "'");
}

}  // namespace ck
