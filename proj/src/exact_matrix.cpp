#include "ck/exact_matrix.hpp"

#include <algorithm>

#include "ck/errors.hpp"

namespace ck {

bool ExactMatrix::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [](const MultiPoly& p) { return p.is_constant(); });
}

bool ExactMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

ExactMatrix ExactMatrix::eval(const std::array<Scalar, vars::kCount>& point) const {
  ExactMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = MultiPoly(at(i, j).eval(point));
  return r;
}

int ExactMatrix::symbolic_rank() const {
  ExactMatrix a = *this;
  const int n = std::min(rows_, cols_);
  MultiPoly prev(Scalar(1));
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < rows_ && pr < 0; ++i)
      for (int j = k; j < cols_; ++j)
        if (!a.at(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    if (pr != k)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(k, j), a.at(pr, j));
    if (pc != k)
      for (int i = 0; i < rows_; ++i) std::swap(a.at(i, k), a.at(i, pc));
    ++rank;
    for (int i = k + 1; i < rows_; ++i)
      for (int j = k + 1; j < cols_; ++j)
        a.at(i, j) =
            MultiPoly::exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
    for (int i = k + 1; i < rows_; ++i) a.at(i, k) = MultiPoly();
    prev = a.at(k, k);
  }
  return rank;
}

int exact_rank(const ExactMatrix& m, const std::vector<std::array<Scalar, vars::kCount>>& points) {
  if (m.is_constant()) return m.symbolic_rank();
  if (points.empty()) throw DimensionMismatch("polynomial matrix rank needs evaluation points");
  int best = 0;
  for (const auto& p : points) best = std::max(best, m.eval(p).symbolic_rank());
  return best;
}

std::array<Scalar, vars::kCount> random_point(Rng& rng) {
  std::array<Scalar, vars::kCount> pt;
  for (auto& s : pt) s = rng.nonzero_small_scalar();
  return pt;
}

int certified_generic_rank(const ExactMatrix& m, Rng& rng, int npoints) {
  int symbolic = m.symbolic_rank();
  if (m.is_constant()) return symbolic;
  std::vector<std::array<Scalar, vars::kCount>> pts;
  pts.reserve(static_cast<std::size_t>(npoints));
  for (int i = 0; i < npoints; ++i) pts.push_back(random_point(rng));
  int sampled = exact_rank(m, pts);
  if (sampled != symbolic)
    throw Error("generic rank certification failed: sampled " + std::to_string(sampled) +
                " vs symbolic " + std::to_string(symbolic));
  return symbolic;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& a,
                                                const std::vector<Scalar>& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<std::vector<Scalar>> m = a;
  std::vector<Scalar> rhs = b;
  std::vector<int> pivot_col;  // pivot column of each reduced row
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(r)]);
    std::swap(rhs[static_cast<std::size_t>(pr)], rhs[static_cast<std::size_t>(r)]);
    Scalar inv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].inverse();
    for (int j = c; j < cols; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
    rhs[static_cast<std::size_t>(r)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(r)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!rhs[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  std::vector<Scalar> x(static_cast<std::size_t>(cols), Scalar(0));
  for (int i = 0; i < r; ++i) x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
      rhs[static_cast<std::size_t>(i)];
  return x;
}

}  // namespace ck
