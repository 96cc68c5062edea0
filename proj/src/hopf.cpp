#include "ck/hopf.hpp"

#include <algorithm>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

void HopfElement::add(int forest_index, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(forest_index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar HopfElement::coeff(int forest_index) const {
  auto it = terms_.find(forest_index);
  return it == terms_.end() ? Scalar(0) : it->second;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

HopfElement& HopfElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  HopfElement r(a.ctx_);
  for (const auto& [fa, ca] : a.terms_)
    for (const auto& [fb, cb] : b.terms_) r.add(a.ctx_->product_index(fa, fb), ca * cb);
  return r;
}

std::string HopfElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*" << ctx_->forest(f).str();
  }
  return os.str();
}

void TensorElement::add(int left, int right, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar TensorElement::coeff(int left, int right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Scalar(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r(a.ctx_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add(a.ctx_->product_index(ka.first, kb.first),
            a.ctx_->product_index(ka.second, kb.second), ca * cb);
  return r;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*" << ctx_->forest(k.first).str() << " (x) "
       << ctx_->forest(k.second).str();
  }
  return os.str();
}

HopfContext::HopfContext(std::vector<RootedTree> generators, int degree_cap, bool flip_orientation)
    : cap_(degree_cap), flip_(flip_orientation), gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree() > cap_) throw Error("generator degree exceeds cap");
    gen_by_enc_[gens_[i].encoding()] = static_cast<int>(i);
  }
  build_forests();
  build_coproducts();
  build_antipodes();
}

std::shared_ptr<const HopfContext> HopfContext::full(int degree_cap, bool flip) {
  return std::make_shared<HopfContext>(enumerate_trees(degree_cap), degree_cap, flip);
}

std::shared_ptr<const HopfContext> HopfContext::ladder_corolla(int level, bool flip) {
  if (level < 1 || level > 3) throw Error("ladder_corolla level must be 1, 2 or 3");
  std::vector<RootedTree> gens = {RootedTree::leaf(), RootedTree::ladder(2)};
  for (int leaves = 2; leaves <= level + 1; ++leaves)
    gens.push_back(RootedTree::corolla(leaves + 1));
  return std::make_shared<HopfContext>(std::move(gens), level + 2, flip);
}

std::optional<int> HopfContext::generator_index(const RootedTree& t) const {
  auto it = gen_by_enc_.find(t.encoding());
  if (it == gen_by_enc_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> HopfContext::forest_index(const Forest& f) const {
  auto it = forest_by_enc_.find(f.encoding());
  if (it == forest_by_enc_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> HopfContext::single_tree_generator(int i) const {
  return forest_gen_[static_cast<std::size_t>(i)];
}

int HopfContext::degree(int forest_index) const {
  return forests_[static_cast<std::size_t>(forest_index)].degree();
}

const std::vector<HopfContext::CopTerm>& HopfContext::coproduct_terms(int forest_index) const {
  return cop_[static_cast<std::size_t>(forest_index)];
}

const std::vector<HopfContext::CopTerm>& HopfContext::reduced_coproduct_terms(
    int forest_index) const {
  return reduced_[static_cast<std::size_t>(forest_index)];
}

const HopfElement& HopfContext::antipode_of_forest(int forest_index) const {
  return antipode_[static_cast<std::size_t>(forest_index)];
}

int HopfContext::product_index(int a, int b) const {
  Forest f = forests_[static_cast<std::size_t>(a)] * forests_[static_cast<std::size_t>(b)];
  auto idx = forest_index(f);
  if (!idx) throw Error("forest product leaves the degree cap: " + f.str());
  return *idx;
}

HopfElement HopfContext::element(const Forest& f, Scalar c) const {
  auto idx = forest_index(f);
  if (!idx) throw Error("forest outside context: " + f.str());
  HopfElement e(this);
  e.add(*idx, c);
  return e;
}

void HopfContext::build_forests() {
  // multisets of generators with total degree <= cap, nondecreasing index
  std::vector<std::vector<RootedTree>> acc;
  std::vector<RootedTree> current;
  struct Rec {
    const std::vector<RootedTree>& gens;
    int cap;
    std::vector<std::vector<RootedTree>>& acc;
    void go(std::size_t first, int degree, std::vector<RootedTree>& cur) {
      acc.push_back(cur);
      for (std::size_t i = first; i < gens.size(); ++i) {
        if (degree + gens[i].degree() > cap) continue;
        cur.push_back(gens[i]);
        go(i, degree + gens[i].degree(), cur);
        cur.pop_back();
      }
    }
  } rec{gens_, cap_, acc};
  rec.go(0, 0, current);
  for (auto& trees : acc) forests_.emplace_back(std::move(trees));
  std::sort(forests_.begin(), forests_.end());
  for (std::size_t i = 0; i < forests_.size(); ++i)
    forest_by_enc_[forests_[i].encoding()] = static_cast<int>(i);
  unit_ = *forest_index(Forest::unit());
  gen_forest_.resize(gens_.size());
  forest_gen_.assign(forests_.size(), std::nullopt);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    int fi = *forest_index(Forest::single(gens_[i]));
    gen_forest_[i] = fi;
    forest_gen_[static_cast<std::size_t>(fi)] = static_cast<int>(i);
  }
}

namespace {

using PairMap = std::map<std::pair<std::string, std::string>, std::int64_t>;

// coproduct as (left forest, right forest) -> integer multiplicity,
// with forests named by encoding (context-independent while building)
PairMap pair_product(const PairMap& a, const PairMap& b) {
  PairMap r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Forest left = Forest::decode(ka.first) * Forest::decode(kb.first);
      Forest right = Forest::decode(ka.second) * Forest::decode(kb.second);
      r[{left.encoding(), right.encoding()}] += ca * cb;
    }
  return r;
}

}  // namespace

void HopfContext::build_coproducts() {
  // Tree coproducts via the root-grafting recursion:
  //   delta(B+(F)) = B+(F) (x) 1 + (id (x) B+) delta(F).
  std::map<std::string, PairMap> tree_cop;
  std::vector<RootedTree> by_degree = gens_;  // already sorted by (degree, enc)
  for (const auto& t : by_degree) {
    PairMap forest_part;  // delta of the child forest
    forest_part[{"", ""}] = 1;
    for (const auto& child : t.children()) {
      auto it = tree_cop.find(child.encoding());
      if (it == tree_cop.end())
        throw NotClosed("child tree " + child.encoding() + " is not a generator");
      forest_part = pair_product(forest_part, it->second);
    }
    PairMap dt;
    dt[{t.encoding(), ""}] = 1;
    for (const auto& [k, c] : forest_part) {
      Forest right = Forest::decode(k.second);
      RootedTree grafted =
          right.is_unit() ? RootedTree() : RootedTree(right.trees());
      dt[{k.first, grafted.encoding()}] += c;
    }
    tree_cop[t.encoding()] = std::move(dt);
  }

  cop_.resize(forests_.size());
  reduced_.resize(forests_.size());
  for (std::size_t fi = 0; fi < forests_.size(); ++fi) {
    PairMap acc;
    acc[{"", ""}] = 1;
    for (const auto& t : forests_[fi].trees()) acc = pair_product(acc, tree_cop[t.encoding()]);
    for (const auto& [k, c] : acc) {
      if (c == 0) continue;
      Forest left = Forest::decode(flip_ ? k.second : k.first);
      Forest right = Forest::decode(flip_ ? k.first : k.second);
      for (const auto& tr : left.trees())
        if (!generator_index(tr))
          throw NotClosed("coproduct of " + forests_[fi].str() + " leaves the generator span at " +
                          tr.encoding());
      for (const auto& tr : right.trees())
        if (!generator_index(tr))
          throw NotClosed("coproduct of " + forests_[fi].str() + " leaves the generator span at " +
                          tr.encoding());
      auto li = forest_index(left), ri = forest_index(right);
      if (!li || !ri) throw NotClosed("coproduct of " + forests_[fi].str() + " leaves the basis");
      cop_[fi].push_back({*li, *ri, c});
      if (*li != static_cast<int>(fi) || *ri != unit_) {
        if (*li != unit_ || *ri != static_cast<int>(fi)) reduced_[fi].push_back({*li, *ri, c});
      }
    }
  }
}

void HopfContext::build_antipodes() {
  antipode_.assign(forests_.size(), HopfElement(this));
  // degree order; S(f) = -f - sum' S(f') f'' over the reduced coproduct
  std::vector<int> order(forests_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[static_cast<std::size_t>(i)] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) < degree(b); });
  for (int fi : order) {
    HopfElement s(this);
    if (degree(fi) == 0) {
      s.add(unit_, Scalar(1));
    } else {
      s.add(fi, Scalar(-1));
      for (const auto& term : reduced_[static_cast<std::size_t>(fi)]) {
        const HopfElement& sleft = antipode_[static_cast<std::size_t>(term.left)];
        for (const auto& [g, c] : sleft.terms())
          s.add(product_index(g, term.right), -(c * Scalar(term.coeff)));
      }
    }
    antipode_[static_cast<std::size_t>(fi)] = std::move(s);
  }
}

TensorElement coproduct(const HopfElement& x) {
  const HopfContext* ctx = x.context();
  TensorElement r(ctx);
  for (const auto& [f, c] : x.terms())
    for (const auto& term : ctx->coproduct_terms(f))
      r.add(term.left, term.right, c * Scalar(term.coeff));
  return r;
}

Scalar counit(const HopfElement& x) { return x.coeff(x.context()->unit_index()); }

HopfElement antipode(const HopfElement& x) {
  const HopfContext* ctx = x.context();
  HopfElement r(ctx);
  for (const auto& [f, c] : x.terms()) {
    HopfElement s = ctx->antipode_of_forest(f);
    s *= c;
    r += s;
  }
  return r;
}

HopfElement grading_Y(const HopfElement& x) {
  const HopfContext* ctx = x.context();
  HopfElement r(ctx);
  for (const auto& [f, c] : x.terms())
    r.add(f, c * Scalar(static_cast<std::int64_t>(ctx->degree(f))));
  return r;
}

}  // namespace ck
