#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ck/multipoly.hpp"
#include "ck/rng.hpp"

namespace ck {

/// Dense matrix with exact polynomial entries (scalars embed as constants).
/// Rank is computed by fraction-free (Bareiss) elimination, so polynomial
/// entries never leave the ring.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const MultiPoly& at(int r, int c) const { return e_[idx(r, c)]; }
  MultiPoly& at(int r, int c) { return e_[idx(r, c)]; }

  bool is_constant() const;
  bool is_zero() const;

  ExactMatrix eval(const std::array<Scalar, vars::kCount>& point) const;

  /// Rank by fraction-free elimination (full pivoting). Exact for constant
  /// matrices; for polynomial entries this is the generic rank over the
  /// fraction field.
  int symbolic_rank() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> e_;
};

/// Maximum rank of m over the evaluation points (a lower bound for the
/// generic rank). Constant matrices may pass an empty point list.
int exact_rank(const ExactMatrix& m, const std::vector<std::array<Scalar, vars::kCount>>& points);

std::array<Scalar, vars::kCount> random_point(Rng& rng);

/// Generic rank certified two ways: sampling at `npoints` random rational
/// points and one symbolic elimination run; both must agree.
int certified_generic_rank(const ExactMatrix& m, Rng& rng, int npoints = 5);

/// Solve A x = b over the scalars with deterministic pivoting; free variables
/// are set to zero. Returns nothing when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& a,
                                                const std::vector<Scalar>& b);

}  // namespace ck
