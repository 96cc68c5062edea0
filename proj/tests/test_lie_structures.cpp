#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ck/errors.hpp"
#include "ck/lie.hpp"
#include "ck/rng.hpp"

using namespace ck;

namespace {

using Entry = std::tuple<std::string, std::string, std::string, std::int64_t>;

std::set<Entry> named_table(const LieData& g) {
  std::set<Entry> out;
  for (const auto& [a, b, c, coeff] : g.bracket_table())
    out.insert({g.basis_name(a), g.basis_name(b), g.basis_name(c),
                static_cast<std::int64_t>(coeff.re().get_num().get_si())});
  return out;
}

}  // namespace

TEST_CASE("g1, g2, g3 bracket tables derived from the coproduct") {
  CHECK(named_table(standard_algebra("g1")) == std::set<Entry>{{"X1", "X2", "X3", 2}});
  CHECK(named_table(standard_algebra("g2")) ==
        std::set<Entry>{{"X1", "X2", "X3", 2}, {"X1", "X3", "X4", 3}});
  CHECK(named_table(standard_algebra("g3")) ==
        std::set<Entry>{{"X1", "X2", "X3", 2}, {"X1", "X3", "X4", 3}, {"X1", "X4", "X5", 4}});
}

TEST_CASE("double bracket tables including the coadjoint rows") {
  CHECK(named_table(standard_algebra("delta1")) ==
        std::set<Entry>{{"X1", "X2", "X3", 2}, {"X1", "X3*", "X2*", -2}, {"X2", "X3*", "X1*", 2}});
  CHECK(named_table(standard_algebra("delta2")) ==
        std::set<Entry>{{"X1", "X2", "X3", 2},
                        {"X1", "X3", "X4", 3},
                        {"X1", "X3*", "X2*", -2},
                        {"X2", "X3*", "X1*", 2},
                        {"X1", "X4*", "X3*", -3},
                        {"X3", "X4*", "X1*", 3}});
  CHECK(named_table(standard_algebra("delta3")) ==
        std::set<Entry>{{"X1", "X2", "X3", 2},
                        {"X1", "X3", "X4", 3},
                        {"X1", "X4", "X5", 4},
                        {"X1", "X3*", "X2*", -2},
                        {"X2", "X3*", "X1*", 2},
                        {"X1", "X4*", "X3*", -3},
                        {"X3", "X4*", "X1*", 3},
                        {"X1", "X5*", "X4*", -4},
                        {"X4", "X5*", "X1*", 4}});
}

TEST_CASE("antisymmetry and Jacobi hold exhaustively") {
  for (const char* name : {"g1", "g2", "g3", "delta1", "delta2", "delta3"})
    CHECK_NOTHROW(standard_algebra(name).check_antisymmetry_and_jacobi());
}

TEST_CASE("the double restricts to the original algebra; starred brackets vanish") {
  LieData g = standard_algebra("g2");
  LieData dbl = double_algebra(g);
  const int k = g.dim();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto orig = g.bracket(a, b);
      auto lifted = dbl.bracket(a, b);
      CHECK(orig == lifted);
    }
  for (int a = k; a < 2 * k; ++a)
    for (int b = k; b < 2 * k; ++b) CHECK(dbl.bracket(a, b).empty());
}

TEST_CASE("delta2 is a truncation, not a subalgebra, of delta3") {
  LieData d2 = standard_algebra("delta2");
  LieData d3 = standard_algebra("delta3");
  CHECK(d2.bracket(0, 3).empty());  // [X1,X4] = 0 there
  auto b = d3.bracket(0, 3);        // [X1,X4] = 4 X5 here
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == 4);
  CHECK(b[0].second == Scalar(4));
}

TEST_CASE("nilpotency steps match: 2/2, 3/3, 4/4, abelian is 1") {
  CHECK(nilpotency_step(standard_algebra("g1")) == 2);
  CHECK(nilpotency_step(standard_algebra("delta1")) == 2);
  CHECK(nilpotency_step(standard_algebra("g2")) == 3);
  CHECK(nilpotency_step(standard_algebra("delta2")) == 3);
  CHECK(nilpotency_step(standard_algebra("g3")) == 4);
  CHECK(nilpotency_step(standard_algebra("delta3")) == 4);
  LieData abelian({"X1", "X2"}, {1, 1}, {});
  CHECK(nilpotency_step(abelian) == 1);
  // [X1,X2] = X2 stabilizes the series away from zero
  LieData affine({"X1", "X2"}, {1, 1}, {{{0, 1}, {{1, Scalar(1)}}}});
  CHECK_THROWS_AS(nilpotency_step(affine), NotNilpotent);
}

TEST_CASE("the symbolic adjoint matrix of delta1 matches the printed display") {
  LieData d1 = standard_algebra("delta1");
  ExactMatrix m = ad_matrix(d1);
  ExactMatrix expect(6, 6);
  expect.at(2, 0) = MultiPoly::parse("-2*x2");
  expect.at(2, 1) = MultiPoly::parse("2*x1");
  expect.at(3, 1) = MultiPoly::parse("-2*x3s");
  expect.at(3, 5) = MultiPoly::parse("2*x2");
  expect.at(4, 0) = MultiPoly::parse("2*x3s");
  expect.at(4, 5) = MultiPoly::parse("-2*x1");
  CHECK(m == expect);
  Rng rng(51);
  CHECK(certified_generic_rank(m, rng) == 2);
  // at the origin the adjoint vanishes
  std::vector<Scalar> zero(6, Scalar(0));
  CHECK(ad_matrix(d1, zero).is_zero());
  // evaluation agrees with substitution into the symbolic matrix
  std::vector<Scalar> pt;
  Rng rng2(52);
  for (int i = 0; i < 6; ++i) pt.push_back(rng2.small_scalar());
  std::array<Scalar, vars::kCount> full{};
  for (int i = 0; i < 6; ++i) full[static_cast<std::size_t>(d1.coordinate_var(i))] = pt[static_cast<std::size_t>(i)];
  CHECK(ad_matrix(d1, pt) == m.eval(full));
}

TEST_CASE("lie_poisson_matrix reproduces the printed tables") {
  LieData d1 = standard_algebra("delta1");
  ExactMatrix p = lie_poisson_matrix(d1);
  CHECK(p.at(0, 1) == MultiPoly::parse("2*x3s"));
  CHECK(p.at(0, 5) == MultiPoly::parse("-2*x2"));
  CHECK(p.at(1, 5) == MultiPoly::parse("2*x1"));
  CHECK(p.at(1, 0) == MultiPoly::parse("-2*x3s"));
  CHECK(p.at(2, 3).is_zero());
  int nonzero = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!p.at(i, j).is_zero()) ++nonzero;
  CHECK(nonzero == 6);

  LieData d3 = standard_algebra("delta3");
  ExactMatrix p3 = lie_poisson_matrix(d3);
  CHECK(p3.at(0, 3) == MultiPoly::parse("4*x5s"));   // {x1,x4}
  CHECK(p3.at(3, 9) == MultiPoly::parse("4*x1"));    // {x4,x5*}
  CHECK(p3.at(0, 9) == MultiPoly::parse("-4*x4"));   // {x1,x5*}
}

TEST_CASE("poisson tensor ranks are 2, 4, 6") {
  Rng rng(53);
  CHECK(certified_generic_rank(lie_poisson_matrix(standard_algebra("delta1")), rng) == 2);
  CHECK(certified_generic_rank(lie_poisson_matrix(standard_algebra("delta2")), rng) == 4);
  CHECK(certified_generic_rank(lie_poisson_matrix(standard_algebra("delta3")), rng) == 6);
}

TEST_CASE("poisson tensor is antisymmetric and linear in the point") {
  LieData d2 = standard_algebra("delta2");
  ExactMatrix p = lie_poisson_matrix(d2);
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) CHECK(p.at(i, j) == -p.at(j, i));
  Rng rng(54);
  std::vector<Scalar> pt, pt2, sum;
  for (int i = 0; i < d2.dim(); ++i) {
    pt.push_back(rng.small_scalar());
    pt2.push_back(rng.small_scalar());
    sum.push_back(pt.back() + pt2.back());
  }
  ExactMatrix a = lie_poisson_matrix(d2, pt);
  ExactMatrix b = lie_poisson_matrix(d2, pt2);
  ExactMatrix c = lie_poisson_matrix(d2, sum);
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) CHECK(c.at(i, j) == a.at(i, j) + b.at(i, j));
}

TEST_CASE("truncated_lie_algebra rejects non-closed generator sets") {
  CHECK_THROWS_AS(truncated_lie_algebra({RootedTree::leaf(), RootedTree::corolla(3)}, 3),
                  NotClosed);
}

TEST_CASE("truncation drops brackets beyond the cap") {
  // the level-2 generators truncated at k = 3 lose [X1,X3] = 3 X4
  auto ctx = HopfContext::ladder_corolla(2);
  LieData g = truncated_lie_algebra(*ctx, 3);
  CHECK(g.bracket(0, 2).empty());
  LieData full = truncated_lie_algebra(*ctx, 4);
  CHECK(!full.bracket(0, 2).empty());
}

TEST_CASE("unknown algebra names are rejected") {
  CHECK_THROWS_AS(standard_algebra("g4"), Error);
  CHECK_THROWS_AS(standard_context("delta0"), Error);
}
