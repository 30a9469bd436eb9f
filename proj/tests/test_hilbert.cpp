#include <random>

#include "doctest.h"
#include "mgfil/error.hpp"
#include "mgfil/hilbert.hpp"
#include "mgfil/km.hpp"

using namespace mgfil;

namespace {

Ring qq() { return Ring::polynomial(2); }
Ideal mono(const Ring& r, std::vector<Exp> g) { return Ideal::from_gens(r, std::move(g)); }
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

Filtration example5() {
  Ring S = Ring::semigroup({3, 4, 5});
  return Filtration(FiltrationKind::powers, {mono(S, {{3}, {4}}), mono(S, {{3}})});
}

Filtration example5_noncm() {
  Ring Q = Ring::polynomial(2, {Exp{2, 0}, Exp{1, 1}}, 1, false);
  return Filtration(FiltrationKind::powers, {mono(Q, {{1, 0}, {0, 1}}), mono(Q, {{0, 1}})});
}

Filtration example6a() {
  Ring R = qq();
  Ideal m = mono(R, {{1, 0}, {0, 1}});
  return Filtration(FiltrationKind::powers, {power(m, 2), mono(R, {{2, 0}, {0, 2}})});
}

Filtration example6b() {
  Ring R = qq();
  Ideal m = mono(R, {{1, 0}, {0, 1}});
  return Filtration(FiltrationKind::powers, {power(m, 2), power(m, 3)});
}

Filtration example4() {
  Ring R = qq();
  return Filtration(FiltrationKind::closure,
                    {mono(R, {{1, 0}, {0, 2}}), mono(R, {{2, 0}, {0, 1}})});
}

}  // namespace

TEST_CASE("hilbert function values") {
  Filtration F = example5();
  for (int n = 2; n <= 10; ++n) CHECK(hilbert_function(F, mi({n, 0})) == 3 * n - 2);
  CHECK(hilbert_function(F, mi({0, 0})) == 0);
  Filtration G = example6b();
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      int t = 2 * n1 + 3 * n2;
      CHECK(hilbert_function(G, mi({n1, n2})) == Int(t + 1) * t / 2);
    }
}

TEST_CASE("diagonal differences") {
  IntFn constant = [](const MultiIndex&) { return Int(7); };
  CHECK(delta(constant, 1, mi({0, 0})) == 0);

  // Delta^g of n1^{i1} n2^{i2} is g!
  for (int i1 = 0; i1 <= 3; ++i1)
    for (int i2 = 0; i2 <= 3 - i1; ++i2) {
      int g = i1 + i2;
      if (g == 0) continue;
      IntFn monom = [&](const MultiIndex& n) {
        Int v = 1;
        for (int t = 0; t < i1; ++t) v *= n[0];
        for (int t = 0; t < i2; ++t) v *= n[1];
        return v;
      };
      for (int a = -2; a <= 2; ++a)
        for (int b = -1; b <= 2; ++b) CHECK(delta(monom, g, mi({a, b})) == factorial(g));
    }

  // binomial expansion agrees with the recursive definition
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    int c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
    IntFn f = [=](const MultiIndex& n) -> Int {
      Int x = n[0], y = n[1];
      return c0 + c1 * x + c2 * x * y + c3 * y * y * x;
    };
    for (int k = 1; k <= 4; ++k)
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
          CHECK(delta(f, k, mi({a, b})) == delta_recursive(f, k, mi({a, b})));
  }

  // Delta^2 of the fitted polynomial of powers{m^2, m^3} is 25 = e_0(m^5)
  HilbertPoly P = fit_polynomial(example6b(), 2);
  IntFn pf = [&](const MultiIndex& n) { return P.eval(n); };
  CHECK(delta(pf, 2, mi({0, 0})) == 25);
  CHECK(delta(pf, 2, mi({3, 1})) == 25);
  CHECK(P.diagonal_leading() == 25);
}

TEST_CASE("polynomial fits reproduce the worked examples") {
  SUBCASE("semigroup pair: 3n1 + 3n2 - 2") {
    HilbertPoly P = fit_polynomial(example5(), 1);
    CHECK(P.coeff({1, 0}) == 3);
    CHECK(P.coeff({0, 1}) == 3);
    CHECK(P.coeff({0, 0}) == 2);
    CHECK(P.eval(mi({1, 1})) == 4);
  }
  SUBCASE("non-CM quotient: n1 + n2 + 1") {
    HilbertPoly P = fit_polynomial(example5_noncm(), 1);
    CHECK(P.coeff({1, 0}) == 1);
    CHECK(P.coeff({0, 1}) == 1);
    CHECK(P.coeff({0, 0}) == -1);
    CHECK(P.eval(mi({0, 0})) == 1);
    CHECK(hilbert_function(example5_noncm(), mi({0, 0})) == 0);
  }
  SUBCASE("m^2 with (x^2,y^2)") {
    HilbertPoly P = fit_polynomial(example6a(), 2);
    CHECK(P.coeff({2, 0}) == 4);
    CHECK(P.coeff({0, 2}) == 4);
    CHECK(P.coeff({1, 1}) == 4);
    CHECK(P.coeff({1, 0}) == 1);
    CHECK(P.coeff({0, 1}) == 1);
    CHECK(P.coeff({0, 0}) == 0);
    CHECK(P.eval(mi({0, 1})) == 3);
  }
  SUBCASE("m^2 with m^3") {
    HilbertPoly P = fit_polynomial(example6b(), 2);
    CHECK(P.coeff({2, 0}) == 4);
    CHECK(P.coeff({0, 2}) == 9);
    CHECK(P.coeff({1, 1}) == 6);
    CHECK(P.coeff({1, 0}) == 1);
    CHECK(P.coeff({0, 1}) == 3);
    CHECK(P.coeff({0, 0}) == 0);
  }
  SUBCASE("closure of the complete parameter pair") {
    HilbertPoly P = fit_polynomial(example4(), 2);
    CHECK(P.coeff({2, 0}) == 2);
    CHECK(P.coeff({0, 2}) == 2);
    CHECK(P.coeff({1, 1}) == 1);
    CHECK(P.coeff({1, 0}) == 0);
    CHECK(P.coeff({0, 1}) == 0);
    CHECK(P.coeff({0, 0}) == 0);
  }
}

TEST_CASE("one-graded slice coefficients of the worked examples") {
  Ring S = Ring::semigroup({3, 4, 5});
  // e_0(I) = 3, e_1(I) = 2; e_0(J) = 3, e_1(J) = 0; e_0(IJ) = 6, e_1(IJ) = 2
  HilbertPoly PI = fit_ideal_powers(mono(S, {{3}, {4}}), 1);
  CHECK(PI.coeff({1}) == 3);
  CHECK(PI.coeff({0}) == 2);
  HilbertPoly PJ = fit_ideal_powers(mono(S, {{3}}), 1);
  CHECK(PJ.coeff({1}) == 3);
  CHECK(PJ.coeff({0}) == 0);
  for (int n = 1; n <= 6; ++n) CHECK(*power(mono(S, {{3}}), n).colength() == 3 * n);

  Ring R = qq();
  Ideal m = mono(R, {{1, 0}, {0, 1}});
  // lambda(R/(IJ)^n) for I = m^2, J = (x^2,y^2): 16 C(n+1,2) - 6n
  HilbertPoly P6a = fit_ideal_powers(product(power(m, 2), mono(R, {{2, 0}, {0, 2}})), 2);
  CHECK(P6a.coeff({2}) == 16);
  CHECK(P6a.coeff({1}) == 6);
  CHECK(P6a.coeff({0}) == 0);
  // and for J = m^3: 25 C(n+1,2) - 10n
  HilbertPoly P6b = fit_ideal_powers(power(m, 5), 2);
  CHECK(P6b.coeff({2}) == 25);
  CHECK(P6b.coeff({1}) == 10);
  CHECK(P6b.coeff({0}) == 0);
}

TEST_CASE("fit validates on grid points beyond the final offset") {
  Filtration F = example6a();
  HilbertPoly P = fit_polynomial(F, 2);
  int b = P.fitted_offset;
  for (const auto& p : box_points(MultiIndex::diag(2, b), MultiIndex::diag(2, b + 2)))
    CHECK(P.eval(p) == hilbert_function(F, p));
}

TEST_CASE("fit rejects a wrong declared degree") {
  CHECK_THROWS_AS(fit_polynomial(example5(), 2), Error);
}

TEST_CASE("leading coefficient identities") {
  SUBCASE("semigroup pair: e0(IJ) = 6, constant = e1(IJ) = 2") {
    HilbertPoly P = fit_polynomial(example5(), 1);
    auto r = leading_coefficient_identity(example5(), P);
    CHECK(r.e0_product == 6);
    CHECK(r.diagonal_leading == 6);
    CHECK(r.ed_product == 2);
    CHECK(r.e_origin == 2);
    CHECK(r.ok());
  }
  SUBCASE("m^2, m^3: e0 = 25 = 4 + 12 + 9") {
    HilbertPoly P = fit_polynomial(example6b(), 2);
    auto r = leading_coefficient_identity(example6b(), P);
    CHECK(r.e0_product == 25);
    CHECK(r.diagonal_leading == 25);
    CHECK(r.ed_product == 0);
    CHECK(r.e_origin == 0);
    CHECK(r.ok());
  }
  SUBCASE("one-graded degenerate case reduces to identity") {
    Ring R = qq();
    Ideal m = mono(R, {{1, 0}, {0, 1}});
    Filtration F(FiltrationKind::powers, {power(m, 2)});
    HilbertPoly P = fit_polynomial(F, 2);
    auto r = leading_coefficient_identity(F, P);
    CHECK(r.ok());
  }
}

TEST_CASE("vanishing regions and the difference lemma") {
  SUBCASE("semigroup pair: corners {(2,0)} for j = 0, 1, 2") {
    Filtration F = example5();
    HilbertPoly P = fit_polynomial(F, 1);
    IntFn f = [&](const MultiIndex& n) -> Int { return P.eval(n) - hilbert_function(F, n); };
    for (int j = 0; j <= 2; ++j) {
      Region r = vanishing_region(2, f, j, 6, 3);
      CHECK(r.corners == std::vector<MultiIndex>{mi({2, 0})});
    }
  }
  SUBCASE("identically zero: corner at the origin") {
    IntFn z = [](const MultiIndex&) { return Int(0); };
    Region r = vanishing_region(2, z, 0, 6, 3);
    CHECK(r.is_all());
  }
  SUBCASE("m^2, m^3: polynomial everywhere") {
    Filtration F = example6b();
    HilbertPoly P = fit_polynomial(F, 2);
    IntFn f = [&](const MultiIndex& n) -> Int { return P.eval(n) - hilbert_function(F, n); };
    for (int j = 0; j <= 2; ++j) CHECK(vanishing_region(2, f, j, 6, 3).is_all());
  }
}

TEST_CASE("vanishing-coefficient theorem verifier") {
  SUBCASE("closure pair: hypothesis holds, conclusions verified") {
    Filtration F = example4();
    HilbertPoly P = fit_polynomial(F, 2);
    auto rep = verify_vanishing_theorem(F, P, 6, 3, h1_vanishing_on_box(F, 6));
    CHECK(rep.hypothesis_met);
    CHECK(rep.applicable);
    CHECK(rep.p_equals_h_on_box);
    CHECK(rep.e_origin_zero);
    REQUIRE(rep.powers_match.has_value());
    CHECK(*rep.powers_match);
    REQUIRE(rep.parameter_ideals.has_value());
    CHECK(*rep.parameter_ideals);
    CHECK(rep.consistent());
  }
  SUBCASE("m^2, m^3: hypothesis fails cleanly") {
    Filtration F = example6b();
    HilbertPoly P = fit_polynomial(F, 2);
    auto rep = verify_vanishing_theorem(F, P, 6, 3, h1_vanishing_on_box(F, 6));
    CHECK_FALSE(rep.hypothesis_met);
    CHECK_FALSE(rep.applicable);
    CHECK(rep.consistent());
  }
  SUBCASE("trivial parameter filtration powers{m, m}") {
    Ring R = qq();
    Ideal m = mono(R, {{1, 0}, {0, 1}});
    Filtration F(FiltrationKind::powers, {m, m});
    HilbertPoly P = fit_polynomial(F, 2);
    CHECK(P.coeff({1, 0}) == 0);
    CHECK(P.coeff({0, 1}) == 0);
    auto rep = verify_vanishing_theorem(F, P, 5, 2, h1_vanishing_on_box(F, 5));
    CHECK(rep.applicable);
    CHECK(rep.consistent());
  }
}
