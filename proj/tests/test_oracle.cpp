#include <doctest.h>

#include <random>

#include "kflag/oracle.hpp"
#include "test_util.hpp"

using namespace kflag;
using namespace kflag::testutil;

TEST_CASE("base polynomials") {
  KRing k(CartanType::A, 1);
  GrothendieckOracle o(k.roots(), k.weyl());
  CHECK(o.polynomial(k.weyl().identity()) == LaurentPoly::constant(4, 1));
  // top polynomial 1 - x_1 b_1 in the (x1,x2,b1,b2) exponent layout
  CHECK(o.polynomial(k.weyl().longest()) ==
        LaurentPoly::constant(4, 1) - LaurentPoly::monomial({1, 0, 1, 0}));
}

TEST_CASE("divided differences are idempotent projections") {
  KRing k(CartanType::A, 2);
  GrothendieckOracle o(k.roots(), k.weyl());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    LaurentPoly p = random_poly(rng, 6, 5, 0, 2);  // polynomial inputs
    int i = static_cast<int>(rng() % 2);
    LaurentPoly d = o.divided_difference(i, p);
    CHECK(o.divided_difference(i, d) == d);
  }
}

TEST_CASE("localizations are Bruhat-triangular with nonzero diagonal") {
  KRing k(CartanType::A, 2);
  GrothendieckOracle o(k.roots(), k.weyl());
  const WeylGroup& w = k.weyl();
  for (WeylElt x : w.elements()) {
    CHECK_FALSE(o.localize(o.polynomial(x), x).is_zero());
    for (WeylElt v : w.elements())
      if (!w.bruhat_leq(x, v)) CHECK(o.localize(o.polynomial(x), v).is_zero());
  }
}

TEST_CASE("the oracle rejects unsupported inputs") {
  RootSystem b2(CartanType::B, 2);
  WeylGroup wb(b2);
  CHECK_THROWS_AS(GrothendieckOracle(b2, wb), ConfigError);
}

TEST_CASE("unit expansions are deltas") {
  KRing k(CartanType::A, 2);
  GrothendieckOracle o(k.roots(), k.weyl());
  const WeylGroup& w = k.weyl();
  for (WeylElt v : w.elements()) {
    Expansion e = o.structure_constants(w.identity(), v);
    for (WeylElt x : w.elements())
      CHECK(e.coeff[x.id] == LaurentPoly::constant(2, x == v ? 1 : 0));
  }
}

TEST_CASE("oracle matches the localization engine on A1 (the frozen dictionary)") {
  KRing k(CartanType::A, 1);
  GrothendieckOracle o(k.roots(), k.weyl());
  WeylElt s = k.weyl().longest();
  Expansion ours = k.structure_constants(s, s, Basis::o_upper);
  Expansion theirs = o.structure_constants(s, s);
  CHECK(theirs.coeff[s.id] == ours.coeff[s.id]);
  CHECK(theirs.coeff[s.id] == LaurentPoly::one_minus_exp({-2}));
}

TEST_CASE("oracle agreement on the full A2 grid") {
  KRing k(CartanType::A, 2);
  GrothendieckOracle o(k.roots(), k.weyl());
  const WeylGroup& w = k.weyl();
  for (WeylElt u : w.elements())
    for (WeylElt v : w.elements()) {
      Expansion ours = k.structure_constants(u, v, Basis::o_upper);
      Expansion theirs = o.structure_constants(u, v);
      for (WeylElt x : w.elements()) CHECK(ours.coeff[x.id] == theirs.coeff[x.id]);
    }
}

TEST_CASE("stability under the standard embedding of symmetric groups") {
  // Constants for u, v supported on the first two letters agree between the
  // rank-1 and rank-2 oracles once written in simple-root exponents.
  KRing k1(CartanType::A, 1), k2(CartanType::A, 2);
  GrothendieckOracle o1(k1.roots(), k1.weyl()), o2(k2.roots(), k2.weyl());
  WeylElt s_small = k1.weyl().longest();
  WeylElt s_big = k2.weyl().right_mult(k2.weyl().identity(), 0);

  Expansion small = o1.structure_constants(s_small, s_small);
  Expansion big = o2.structure_constants(s_big, s_big);

  LaurentPoly c_small = to_root_x_coords(small.coeff[s_small.id], k1.roots());
  LaurentPoly c_big = to_root_x_coords(big.coeff[s_big.id], k2.roots());
  REQUIRE(c_small.term_count() == c_big.term_count());
  for (std::size_t t = 0; t < c_small.term_count(); ++t) {
    const auto& [es, cs] = c_small.terms()[t];
    const auto& [eb, cb] = c_big.terms()[t];
    CHECK(cs == cb);
    CHECK(eb == Expo{es[0], 0});  // nothing leaks into the new variable
  }
}
