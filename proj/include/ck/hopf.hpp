#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ck/scalar.hpp"
#include "ck/trees.hpp"

namespace ck {

class HopfContext;

/// Finite linear combination of basis forests with exact coefficients,
/// tied to a HopfContext.
class HopfElement {
 public:
  explicit HopfElement(const HopfContext* ctx) : ctx_(ctx) {}

  const HopfContext* context() const { return ctx_; }
  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int forest_index, const Scalar& c);
  Scalar coeff(int forest_index) const;

  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  HopfElement& operator*=(const Scalar& c);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(HopfElement a, const Scalar& c) { return a *= c; }

  /// Commutative product (multiset union on forests, bilinear).
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);

  friend bool operator==(const HopfElement& a, const HopfElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  const HopfContext* ctx_;
  std::map<int, Scalar> terms_;
};

/// Element of H (x) H over the basis-forest pairs.
class TensorElement {
 public:
  explicit TensorElement(const HopfContext* ctx) : ctx_(ctx) {}

  const HopfContext* context() const { return ctx_; }
  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }

  void add(int left, int right, const Scalar& c);
  Scalar coeff(int left, int right) const;

  TensorElement& operator+=(const TensorElement& o);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  const HopfContext* ctx_;
  std::map<std::pair<int, int>, Scalar> terms_;
};

/// Immutable tables for one (sub-)Hopf algebra of rooted trees: a
/// coproduct-closed generator set, all basis forests up to the degree cap,
/// integer coproduct/reduced-coproduct tables and antipodes. All queries are
/// read-only after construction.
class HopfContext {
 public:
  struct CopTerm {
    int left, right;
    std::int64_t coeff;
  };

  /// Throws NotClosed if the generator set is not closed under the coproduct
  /// within the cap. `flip_orientation` swaps the tensor factors (debug knob
  /// for pinning the pruned (x) trunk convention).
  HopfContext(std::vector<RootedTree> generators, int degree_cap, bool flip_orientation = false);

  /// Context over all rooted trees of degree <= cap.
  static std::shared_ptr<const HopfContext> full(int degree_cap, bool flip = false);
  /// The three concrete subalgebras: generators are the single node, the
  /// 2-ladder and the corollas with 2..(level+1) leaves (level = 1, 2, 3).
  static std::shared_ptr<const HopfContext> ladder_corolla(int level, bool flip = false);

  int degree_cap() const { return cap_; }
  bool flipped() const { return flip_; }

  int num_generators() const { return static_cast<int>(gens_.size()); }
  const RootedTree& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  const std::vector<RootedTree>& generators() const { return gens_; }
  std::optional<int> generator_index(const RootedTree& t) const;

  int num_forests() const { return static_cast<int>(forests_.size()); }
  const Forest& forest(int i) const { return forests_[static_cast<std::size_t>(i)]; }
  std::optional<int> forest_index(const Forest& f) const;
  int unit_index() const { return unit_; }
  /// Index of the single-tree forest of generator i.
  int forest_of_generator(int i) const { return gen_forest_[static_cast<std::size_t>(i)]; }
  /// Generator index if forest i is a single tree, nullopt otherwise.
  std::optional<int> single_tree_generator(int i) const;
  int degree(int forest_index) const;

  const std::vector<CopTerm>& coproduct_terms(int forest_index) const;
  const std::vector<CopTerm>& reduced_coproduct_terms(int forest_index) const;
  const HopfElement& antipode_of_forest(int forest_index) const;

  int product_index(int a, int b) const;  // forest product, must stay under cap

  HopfElement element(const Forest& f, Scalar c = Scalar(1)) const;
  HopfElement unit_element() const { return element(Forest::unit()); }

 private:
  void build_forests();
  void build_coproducts();
  void build_antipodes();

  int cap_;
  bool flip_;
  std::vector<RootedTree> gens_;
  std::map<std::string, int> gen_by_enc_;
  std::vector<Forest> forests_;
  std::map<std::string, int> forest_by_enc_;
  std::vector<int> gen_forest_;
  std::vector<std::optional<int>> forest_gen_;
  int unit_ = 0;
  std::vector<std::vector<CopTerm>> cop_, reduced_;
  std::vector<HopfElement> antipode_;
};

/// Coproduct, extended linearly and multiplicatively from the admissible-cut
/// coproduct on trees; single trees produce pruned (x) trunk plus the two
/// grouplike terms.
TensorElement coproduct(const HopfElement& x);

Scalar counit(const HopfElement& x);

HopfElement antipode(const HopfElement& x);

/// The grading biderivation: multiplies each homogeneous component by its
/// degree.
HopfElement grading_Y(const HopfElement& x);

}  // namespace ck
