#include <doctest.h>

#include "test_util.hpp"

using namespace kflag;
using namespace kflag::testutil;

TEST_CASE("subtorus basis predicates") {
  CHECK(SubtorusBasis::identity(3).is_positive());
  CHECK(SubtorusBasis::identity(3).is_full());
  CHECK(SubtorusBasis::all_ones(2).is_positive());
  CHECK(SubtorusBasis::all_ones(2).is_full());  // e_1 of Z^1 appears as a column
  SubtorusBasis zero{IMatrix{{0, 0}}};
  CHECK(zero.is_positive());
  CHECK_FALSE(zero.is_full());
  SubtorusBasis negative{IMatrix{{1, -1}}};
  CHECK_FALSE(negative.is_positive());
  SubtorusBasis tall{IMatrix{{1, 0}, {2, 1}}};
  CHECK(tall.is_positive());
  CHECK_FALSE(tall.is_full());  // (1,2) and (0,1) columns; e_1 = (1,0) missing
}

TEST_CASE("word round trips") {
  RootSystem a2(CartanType::A, 2);
  WeylGroup w(a2);
  for (WeylElt x : w.elements()) CHECK(word_parse(w, word_str(w, x)) == x);
  CHECK(word_str(w, w.identity()) == "e");
  CHECK_THROWS_AS(word_parse(w, "3"), ConfigError);
  CHECK_THROWS_AS(word_parse(w, "1x"), ConfigError);
}

TEST_CASE("A1 alternation: the nontrivial constant passes, a fault fails") {
  KRing k(CartanType::A, 1);
  WeylElt s = k.weyl().longest();
  Expansion e = k.structure_constants(s, s, Basis::o_upper);
  auto grading = [&](WeylElt x) {
    return k.weyl().length(x) - 2 * k.weyl().length(s);
  };
  PositivityReport ok = check_alternation(k, e, grading, YVariables::e_neg_alpha, 8);
  CHECK(ok.pass());
  CHECK(ok.instances_checked == 1);

  // +e^{-alpha} on an even-graded coefficient flips the y_1 sign
  Expansion faulty = e;
  faulty.coeff[s.id] += LaurentPoly::monomial({-2});
  PositivityReport bad = check_alternation(k, faulty, grading, YVariables::e_neg_alpha, 8);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == "sign");
}

TEST_CASE("zero coefficients pass trivially") {
  KRing k(CartanType::A, 1);
  Expansion e;
  e.basis = Basis::o_upper;
  e.coeff.assign(k.weyl().size(), LaurentPoly(1));
  PositivityReport r = check_alternation(
      k, e, [](WeylElt) { return 0; }, YVariables::e_neg_alpha, 4);
  CHECK(r.pass());
  CHECK(r.instances_checked == 0);
}

TEST_CASE("opposite-basis alternation holds exhaustively (A2, B2)") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, {CartanType::B, 2}}) {
    KRing k(t, n);
    PositivityReport r = verify_grra(k, {}, {});
    CHECK(r.pass());
    CHECK(r.instances_checked > 0);
  }
}

TEST_CASE("xi-basis alternation holds exhaustively (A2, G2)") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, {CartanType::G, 2}}) {
    KRing k(t, n);
    PositivityReport r = verify_grku_prime(k, {}, {});
    CHECK(r.pass());
  }
}

TEST_CASE("unit-adjacent xi products pass") {
  KRing k(CartanType::A, 2);
  const WeylGroup& w = k.weyl();
  for (WeylElt v : w.elements()) {
    Expansion e = k.structure_constants(w.identity(), v, Basis::xi_upper);
    auto grading = [&](WeylElt x) { return w.length(x) - w.length(v); };
    CHECK(check_alternation(k, e, grading, YVariables::e_neg_alpha, 12).pass());
  }
}

TEST_CASE("dualizing positivity holds exhaustively (A2)") {
  KRing k(CartanType::A, 2);
  PositivityReport r = verify_dualizing(k, {});
  CHECK(r.pass());
}

TEST_CASE("Richardson positivity with the canonical subtorus bases") {
  KRing k(CartanType::A, 2);
  CHECK(verify_grku_richardson(k, SubtorusBasis::identity(2), {}).pass());
  CHECK(verify_grku_richardson(k, SubtorusBasis::all_ones(2), {}).pass());
  // the trivial subtorus degenerates to the integer sign check and passes
  CHECK(verify_grku_richardson(k, SubtorusBasis{IMatrix{{0, 0}}}, {}).pass());
  // a non-positive basis is rejected up front
  CHECK_THROWS_AS(verify_grku_richardson(k, SubtorusBasis{IMatrix{{1, -1}}}, {}), ConfigError);
  CHECK_THROWS_AS(verify_grku_richardson(k, SubtorusBasis{IMatrix{{1, 1, 1}}}, {}), ConfigError);
}

TEST_CASE("restriction through a positive full basis preserves the alternation") {
  KRing k(CartanType::A, 2);
  const WeylGroup& w = k.weyl();
  SubtorusBasis diag = SubtorusBasis::all_ones(2);
  for (WeylElt u : w.elements())
    for (WeylElt v : w.elements()) {
      Expansion e = k.structure_constants(u, v, Basis::o_upper);
      auto grading = [&](WeylElt x) {
        return w.length(x) - w.length(u) - w.length(v);
      };
      CHECK(check_alternation(k, e, grading, YVariables::e_neg_alpha, 16, diag).pass());
    }
}

TEST_CASE("every fault injection trips at least one violation") {
  KRing k(CartanType::A, 2);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CheckOptions opts;
    opts.fault = FaultSpec{seed};
    PositivityReport r = verify_grra(k, {}, opts);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.fault_note.empty());
  }
}

TEST_CASE("parallel runs give the same report as serial ones") {
  KRing k(CartanType::B, 2);
  PositivityReport serial = verify_grra(k, {}, {});
  CheckOptions par;
  par.jobs = 4;
  PositivityReport parallel = verify_grra(k, {}, par);
  CHECK(serial.instances_checked == parallel.instances_checked);
  CHECK(serial.violations.size() == parallel.violations.size());
  CHECK(serial.pass());
  CHECK(parallel.pass());
}

TEST_CASE("parabolic verification restricts to W^P") {
  KRing k(CartanType::A, 2);
  PositivityReport r = verify_grra(k, {2}, {});
  CHECK(r.pass());
  CHECK(r.parabolic == std::vector<int>{2});
  // 3x3 coset pairs, at most 3 coefficients each
  CHECK(r.instances_checked <= 27);
}
