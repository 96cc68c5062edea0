#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/errors.hpp"
#include "ck/poisson.hpp"
#include "ck/rng.hpp"

using namespace ck;

namespace {

std::shared_ptr<const LieData> delta(int i) {
  return std::make_shared<LieData>(standard_algebra("delta" + std::to_string(i)));
}

PoissonPoly random_quadratic(const std::shared_ptr<const LieData>& alg, Rng& rng) {
  MultiPoly p;
  for (int a = 0; a < alg->dim(); ++a) {
    if (rng.below(2) == 0) p += rng.small_scalar() * MultiPoly::var(alg->coordinate_var(a));
    if (rng.below(3) == 0) p += rng.small_scalar() * MultiPoly::var(alg->coordinate_var(a), 2);
  }
  return PoissonPoly(alg, p);
}

}  // namespace

TEST_CASE("coordinate brackets reproduce the printed delta1 table") {
  auto d1 = delta(1);
  auto x = [&](const char* s) { return PoissonPoly::parse(d1, s); };
  CHECK(poisson_bracket(x("x1"), x("x2")).poly() == MultiPoly::parse("2*x3s"));
  CHECK(poisson_bracket(x("x1"), x("x3s")).poly() == MultiPoly::parse("-2*x2"));
  CHECK(poisson_bracket(x("x2"), x("x3s")).poly() == MultiPoly::parse("2*x1"));
  CHECK(poisson_bracket(x("x1"), x("x3")).poly().is_zero());
  CHECK(poisson_bracket(x("x1s"), x("x2s")).poly().is_zero());
}

TEST_CASE("antisymmetry and Leibniz on random polynomials") {
  auto d2 = delta(2);
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    PoissonPoly f = random_quadratic(d2, rng);
    PoissonPoly g = random_quadratic(d2, rng);
    PoissonPoly h = random_quadratic(d2, rng);
    CHECK(poisson_bracket(f, f).poly().is_zero());
    CHECK((poisson_bracket(f, g).poly() + poisson_bracket(g, f).poly()).is_zero());
    // Leibniz: {f, gh} = {f,g} h + g {f,h}
    PoissonPoly gh(d2, g.poly() * h.poly());
    MultiPoly leibniz = poisson_bracket(f, gh).poly() -
                        (poisson_bracket(f, g).poly() * h.poly() +
                         g.poly() * poisson_bracket(f, h).poly());
    CHECK(leibniz.is_zero());
  }
}

TEST_CASE("Jacobi holds on delta1; the printed delta2 table has a pinned Jacobi defect") {
  auto d1 = delta(1);
  Rng rng(66);
  for (int trial = 0; trial < 30; ++trial) {
    PoissonPoly f = random_quadratic(d1, rng);
    PoissonPoly g = random_quadratic(d1, rng);
    PoissonPoly h = random_quadratic(d1, rng);
    MultiPoly jac = poisson_bracket(f, poisson_bracket(g, h)).poly() +
                    poisson_bracket(g, poisson_bracket(h, f)).poly() +
                    poisson_bracket(h, poisson_bracket(f, g)).poly();
    CHECK(jac.is_zero());
  }
  // The delta2 coordinate table as printed is not a Poisson tensor:
  // {{x2,x3s},x4s} + {{x3s,x4s},x2} + {{x4s,x2},x3s} = 2{x1,x4s} = -6*x3.
  auto d2 = delta(2);
  auto x = [&](const char* s) { return PoissonPoly::parse(d2, s); };
  MultiPoly jac = poisson_bracket(x("x2"), poisson_bracket(x("x3s"), x("x4s"))).poly() +
                  poisson_bracket(x("x3s"), poisson_bracket(x("x4s"), x("x2"))).poly() +
                  poisson_bracket(x("x4s"), poisson_bracket(x("x2"), x("x3s"))).poly();
  CHECK(jac == MultiPoly::parse("6*x3"));
}

TEST_CASE("x1*, x2*, x3 are Casimir coordinates on delta1") {
  auto d1 = delta(1);
  Rng rng(62);
  for (const char* casimir : {"x1s", "x2s", "x3"}) {
    PoissonPoly c = PoissonPoly::parse(d1, casimir);
    for (int i = 0; i < 10; ++i)
      CHECK(poisson_bracket(c, random_quadratic(d1, rng)).poly().is_zero());
  }
}

TEST_CASE("the explicit families are pairwise in involution") {
  auto d1 = delta(1);
  InvolutionReport r1 = check_involution(standard_family(d1, "delta1"));
  CHECK(r1.all_commute);
  auto d2 = delta(2);
  InvolutionReport r2 = check_involution(standard_family(d2, "delta2"));
  CHECK(r2.all_commute);
  auto d3 = delta(3);
  InvolutionReport r3 = check_involution(standard_family(d3, "delta3"));
  CHECK(r3.all_commute);
  // a fitted Hamiltonian of the diagonal form commutes with H2..H5 on delta1
  PoissonPoly h = PoissonPoly::parse(d1, "3*x1 + 1/2*x2 - x3 + 2*x1^2 + 5/3*x2^2 + 7*x3^2");
  auto fam = standard_family(d1, "delta1");
  std::vector<PoissonPoly> fitted = {h, fam[1], fam[2], fam[3], fam[4]};
  CHECK(check_involution(fitted).all_commute);
  // any quadratic in the unstarred coordinates commutes with the delta3 listed tail
  Rng rng(63);
  for (int i = 0; i < 5; ++i) {
    MultiPoly p;
    for (int a = 1; a <= 5; ++a) {
      p += rng.small_scalar() * MultiPoly::var(vars::x(a));
      for (int b = a; b <= 5; ++b)
        p += rng.small_scalar() * (MultiPoly::var(vars::x(a)) * MultiPoly::var(vars::x(b)));
    }
    std::vector<PoissonPoly> listed = {PoissonPoly(d3, p)};
    for (auto& f : standard_family(d3, "delta3_listed")) listed.push_back(std::move(f));
    CHECK(check_involution(listed).all_commute);
  }
}

TEST_CASE("involution witnesses name the offending pair") {
  auto d1 = delta(1);
  // {x1^2/2 + x2^2/2, x1*x2} = 2*x3s*(x1^2 - x2^2)
  std::vector<PoissonPoly> fam = {PoissonPoly::parse(d1, "1/2*x1^2 + 1/2*x2^2"),
                                  PoissonPoly::parse(d1, "x1*x2")};
  InvolutionReport rep = check_involution(fam);
  CHECK(!rep.all_commute);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].first == 0);
  CHECK(rep.witnesses[0].second == 1);
  CHECK(!rep.witnesses[0].bracket.is_zero());
}

TEST_CASE("jacobian ranks of the printed families") {
  Rng rng(64);
  auto points = [&](int n) {
    std::vector<std::array<Scalar, vars::kCount>> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
    return pts;
  };
  auto d1 = delta(1);
  CHECK(jacobian_rank({PoissonPoly::parse(d1, "x1 + x2^2")}, points(3)) == 1);
  CHECK(jacobian_rank(standard_family(d1, "delta1"), points(5)) == 5);
  auto d2 = delta(2);
  CHECK(jacobian_rank(standard_family(d2, "delta2"), points(5)) == 6);
  auto d3 = delta(3);
  CHECK(jacobian_rank(standard_family(d3, "delta3"), points(5)) == 7);
}

TEST_CASE("gradients") {
  auto d1 = delta(1);
  auto grads = gradient(PoissonPoly::parse(d1, "1/2*x1^2"));
  REQUIRE(grads.size() == 6);
  CHECK(grads[0].poly() == MultiPoly::parse("x1"));
  for (int i = 1; i < 6; ++i) CHECK(grads[static_cast<std::size_t>(i)].poly().is_zero());
  auto gconst = gradient(PoissonPoly(d1, MultiPoly(Scalar(5))));
  for (const auto& g : gconst) CHECK(g.poly().is_zero());
  // the diagonal ansatz gradient is k_i + l_i x_i
  auto ans = gradient(PoissonPoly::parse(d1, "2*x1 + 3*x2 + 1/2*x1^2 + 1/3*x2^2"));
  CHECK(ans[0].poly() == MultiPoly::parse("2 + x1"));
  CHECK(ans[1].poly() == MultiPoly::parse("3 + 2/3*x2"));
}

TEST_CASE("hamiltonian fit: trivial, constant and inconsistent systems") {
  auto d1 = delta(1);
  HamiltonianAnsatz diag{3, false};
  std::vector<MultiPoly> zero3(3);
  // beta_next = 0 admits H = 0
  FitResult trivial = fit_hamiltonian(d1, zero3, zero3, diag);
  CHECK(trivial.consistent);
  CHECK(trivial.hamiltonian->poly().is_zero());
  // constant beta0 = b, beta_next = d: k_i = d_i with l_i = 0
  std::vector<MultiPoly> b = {MultiPoly(Scalar(2)), MultiPoly(Scalar(-1)), MultiPoly(Scalar(3))};
  std::vector<MultiPoly> d = {MultiPoly(Scalar(5)), MultiPoly(Scalar(0)), MultiPoly(Scalar::of(1, 2))};
  FitResult constant = fit_hamiltonian(d1, b, d, diag);
  REQUIRE(constant.consistent);
  CHECK(constant.hamiltonian->poly() == MultiPoly::parse("5*x1 + 1/2*x3"));
  // degenerate: a coordinate of beta0 is frozen while the target moves
  std::vector<MultiPoly> moving = {MultiPoly::var(vars::kT), MultiPoly(), MultiPoly()};
  FitResult bad = fit_hamiltonian(d1, zero3, moving, diag);
  CHECK(!bad.consistent);
  CHECK(!bad.message.empty());
  CHECK(bad.equations > 0);
}

TEST_CASE("fit equation and unknown counts are reported") {
  auto d2 = delta(2);
  HamiltonianAnsatz full{4, true};
  CHECK(full.unknowns() == 14);
  std::vector<MultiPoly> b0 = {MultiPoly(Scalar(1)), MultiPoly(Scalar(2)),
                               MultiPoly::parse("t"), MultiPoly::parse("t^2")};
  std::vector<MultiPoly> bn = {MultiPoly(Scalar(1)), MultiPoly(Scalar(0)), MultiPoly(),
                               MultiPoly()};
  FitResult fit = fit_hamiltonian(d2, b0, bn, full);
  CHECK(fit.unknowns == 14);
  CHECK(fit.equations == 12);  // three t-powers per coordinate
  CHECK(fit.consistent);
  HamiltonianAnsatz g3{5, true};
  CHECK(g3.unknowns() == 20);
}

TEST_CASE("poisson polynomials validate their coordinates and algebras") {
  auto d1 = delta(1);
  CHECK_THROWS_AS(PoissonPoly::parse(d1, "x5"), AlgebraMismatch);
  CHECK_THROWS_AS(PoissonPoly::parse(d1, "t*x1"), AlgebraMismatch);
  auto d2 = delta(2);
  CHECK_THROWS_AS(
      poisson_bracket(PoissonPoly::parse(d1, "x1"), PoissonPoly::parse(d2, "x1")),
      AlgebraMismatch);
  // parse/print round trip
  PoissonPoly p = PoissonPoly::parse(d1, "1/2*x1^2 + x3s^2");
  CHECK(MultiPoly::parse(p.str()) == p.poly());
}
