#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace kflag;
using namespace kflag::testutil;

TEST_CASE("ring basics") {
  LaurentPoly one = LaurentPoly::constant(2, 1);
  LaurentPoly p = mono({1, -2}, 3) + mono({0, 0}, -1);
  CHECK(p * one == p);
  CHECK(mono({1, 2}) * mono({-3, 1}) == mono({-2, 3}));
  // (1 - e^{-a})(1 + e^{-a}) = 1 - e^{-2a}
  LaurentPoly l = LaurentPoly::one_minus_exp({-1}) *
                  (LaurentPoly::constant(1, 1) + mono({-1}));
  CHECK(l == LaurentPoly::one_minus_exp({-2}));
  CHECK((p - p).is_zero());
  CHECK(p.terms().size() == 2);
  CHECK((p * LaurentPoly(2)).is_zero());
}

TEST_CASE("terms are kept sorted and zero-free") {
  LaurentPoly p = mono({2, 0}) + mono({-1, 5}) + mono({0, 0}) + mono({2, 0}, -1);
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0].first == Expo{-1, 5});
  CHECK(p.terms()[1].first == Expo{0, 0});
}

TEST_CASE("exact division") {
  LaurentPoly one = LaurentPoly::constant(1, 1);
  LaurentPoly p = mono({3}, 7) - mono({-2}, 5);
  CHECK(divide(p, one).exact);
  CHECK(divide(p, one).quotient == p);

  auto d = divide(LaurentPoly::one_minus_exp({-2}), LaurentPoly::one_minus_exp({-1}));
  REQUIRE(d.exact);
  CHECK(d.quotient == one + mono({-1}));

  auto nd = divide(one, LaurentPoly::one_minus_exp({-1}));
  CHECK_FALSE(nd.exact);
  CHECK_FALSE(nd.remainder.is_zero());

  // coefficient divisibility matters over Z
  CHECK_FALSE(divide(LaurentPoly::constant(1, 3), LaurentPoly::constant(1, 2)).exact);
  CHECK(divide(LaurentPoly::constant(1, 6), LaurentPoly::constant(1, 2)).quotient ==
        LaurentPoly::constant(1, 3));
  CHECK_THROWS_AS(divide(one, LaurentPoly(1)), std::invalid_argument);
}

TEST_CASE("divide-then-multiply round trip on random divisible instances") {
  std::mt19937_64 rng(42);
  int nontrivial = 0;
  for (int t = 0; t < 10000; ++t) {
    int rank = 1 + static_cast<int>(rng() % 3);
    LaurentPoly q = random_poly(rng, rank, 4, -3, 3);
    LaurentPoly d = random_poly(rng, rank, 3, -2, 2);
    if (d.is_zero()) continue;
    LaurentPoly p = q * d;
    auto r = divide(p, d);
    REQUIRE(r.exact);
    CHECK(r.quotient * d == p);
    if (!q.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 5000);
}

TEST_CASE("division failure hands back a usable witness") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 500; ++t) {
    LaurentPoly p = random_poly(rng, 2, 5, -3, 3);
    LaurentPoly d = random_poly(rng, 2, 3, -2, 2);
    if (d.is_zero()) continue;
    auto r = divide(p, d);
    if (r.exact)
      CHECK(r.quotient * d == p);
    else
      CHECK_FALSE(r.remainder.is_zero());
  }
}

TEST_CASE("Weyl action on exponents is a ring automorphism") {
  RootSystem a2(CartanType::A, 2);
  WeylGroup w(a2);
  WeylElt s1 = w.right_mult(w.identity(), 0);

  // s_1 e^{a1} = e^{-a1}; w0 e^{a1} = e^{-a2}
  LaurentPoly ea1 = mono(a2.simple_roots()[0].c);
  CHECK(ea1.map_exponents(w.matrix(s1)) == mono(neg(a2.simple_roots()[0].c)));
  CHECK(ea1.map_exponents(w.matrix(w.longest())) == mono(neg(a2.simple_roots()[1].c)));
  CHECK(ea1.map_exponents(w.matrix(w.identity())) == ea1);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly p = random_poly(rng, 2, 4, -3, 3);
    LaurentPoly q = random_poly(rng, 2, 4, -3, 3);
    WeylElt x{static_cast<std::uint32_t>(rng() % w.size())};
    WeylElt y{static_cast<std::uint32_t>(rng() % w.size())};
    CHECK((p * q).map_exponents(w.matrix(x)) ==
          p.map_exponents(w.matrix(x)) * q.map_exponents(w.matrix(x)));
    CHECK(p.map_exponents(w.matrix(w.mult(x, y))) ==
          p.map_exponents(w.matrix(y)).map_exponents(w.matrix(x)));
  }
}

TEST_CASE("subtorus restriction is a ring homomorphism") {
  RootSystem a2(CartanType::A, 2);
  LaurentPoly x = to_root_x_coords(mono(a2.simple_roots()[0].c, 1).invert_exponents() +
                                       mono(a2.simple_roots()[1].c, 1).invert_exponents(),
                                   a2);
  CHECK(x == mono({1, 0}) + mono({0, 1}));
  CHECK(x.map_exponents(identity_matrix(2)) == x);

  // alpha_1, alpha_2 |-> beta: e^{-a1} + e^{-a2} -> 2 e^{-beta}
  IMatrix ones{{1, 1}};
  CHECK(x.map_exponents(ones) == mono({1}, 2));

  // zero map = specialization at e^lambda = 1
  IMatrix zero{{0, 0}};
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly a = random_poly(rng, 2, 5, -3, 3);
    LaurentPoly b = random_poly(rng, 2, 5, -3, 3);
    CHECK(a.map_exponents(zero) == LaurentPoly::constant(1, a.specialize_all_one()));
    CHECK((a * b).map_exponents(ones) == a.map_exponents(ones) * b.map_exponents(ones));
  }
}

TEST_CASE("y-expansion of the defining substitutions") {
  // x-coordinates: exponent k means prod x_i^{k_i} with x_i = e^{-alpha_i}
  auto y1 = expand_in_y(mono({1, 0}), 10);  // e^{-a1}
  REQUIRE(y1.member);
  CHECK(y1.poly.terms == decltype(y1.poly.terms){{{0, 0}, 1}, {{1, 0}, 1}});  // 1 + y1

  auto y12 = expand_in_y(mono({1, 1}), 10);  // e^{-a1-a2}
  REQUIRE(y12.member);
  CHECK(y12.poly.terms ==
        decltype(y12.poly.terms){{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
}

TEST_CASE("y-expansion flags non-members with a residual witness") {
  // e^{+a1} in x-coordinates is x_1^{-1}; its expansion never terminates
  for (int cap : {3, 7, 19}) {
    auto bad = expand_in_y(mono({-1, 0}), cap);
    CHECK_FALSE(bad.member);
    CHECK(bad.failed_var == 0);
    CHECK_FALSE(bad.residual.is_zero());
  }
}

TEST_CASE("y-expansion membership equals nonnegativity of x-exponents") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    LaurentPoly p = random_poly(rng, 2, 4, -2, 4);
    bool poly_cone = true;
    for (const auto& [e, c] : p.terms())
      for (Coord xk : e)
        if (xk < 0) poly_cone = false;
    auto ye = expand_in_y(p, 16);
    CHECK(ye.member == poly_cone);
    if (ye.member) CHECK(ye.poly.evaluate() == p);  // exact round trip
  }
}

TEST_CASE("to_root_x_coords fails fast off the root lattice") {
  RootSystem a2(CartanType::A, 2);
  CHECK_THROWS_AS(to_root_x_coords(mono({1, 0}), a2), InvariantViolation);
  CHECK(to_root_x_coords(mono({2, -1}), a2) == mono({-1, 0}));  // e^{a1} -> x1^{-1}
}

TEST_CASE("difference quotient against the direct definition") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng, 2, 5, -3, 3);
    int i = static_cast<int>(rng() % 2);
    Expo xi(2, 0);
    xi[static_cast<std::size_t>(i)] = 1;
    LaurentPoly delta = p.diff_quotient(i);
    CHECK(delta * (mono(xi) - LaurentPoly::constant(2, 1)) == p - p.substitute_one(i));
  }
}

TEST_CASE("big integer coefficients survive arithmetic exactly") {
  Int big = Int("123456789012345678901234567890");
  LaurentPoly p = mono({1}, big);
  LaurentPoly sq = p * p;
  CHECK(sq.coefficient({2}) == big * big);
  CHECK(divide(sq, p).quotient == p);
}
