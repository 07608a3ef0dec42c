#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggb/expr.hpp"
#include "test_util.hpp"

using namespace ggb;

namespace {

ChowClass cls(int n, std::vector<long> coeffs) {
  std::vector<Rat> v(coeffs.begin(), coeffs.end());
  return ChowClass(n, v);
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  ExprPtr e = parse("O(2)+O(1)");
  REQUIRE(e->kind == BundleExpr::Kind::Sum);
  CHECK(e->lhs->kind == BundleExpr::Kind::LineBundle);
  CHECK(e->lhs->arg == 2);
  CHECK(e->rhs->arg == 1);

  // left-associative sum of twisted tangents
  e = parse("T(-1)+T(-1)+O(1)");
  REQUIRE(e->kind == BundleExpr::Kind::Sum);
  CHECK(e->lhs->kind == BundleExpr::Kind::Sum);
  CHECK(e->lhs->lhs->kind == BundleExpr::Kind::Twist);
  CHECK(e->lhs->lhs->lhs->kind == BundleExpr::Kind::Tangent);
  CHECK(e->rhs->kind == BundleExpr::Kind::LineBundle);

  e = parse("quot(Triv(7), T(-2))");
  REQUIRE(e->kind == BundleExpr::Kind::Quot);
  CHECK(e->lhs->kind == BundleExpr::Kind::Trivial);
  CHECK(e->lhs->arg == 7);
  CHECK(e->rhs->kind == BundleExpr::Kind::Twist);

  // whitespace-insensitive; suffixes left to right
  CHECK(to_string(parse("  Omega ^ 2 ( 2 ) *")) == "Omega^2(2)*");
  CHECK(to_string(parse("(O(1)+T)(2)")) == "(O(1)+T)(2)");
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse("O(2"), SyntaxError);
  CHECK_THROWS_AS(parse("Q(1)"), SyntaxError);
  CHECK_THROWS_AS(parse("O(1)++O(2)"), SyntaxError);
  try {
    parse("O(1)+%");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 5);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("rank") {
  CHECK(rank(parse("T"), 4) == 4);
  CHECK(rank(parse("Omega^2(2)*"), 4) == 6);
  CHECK(rank(parse("quot(Triv(7),T(-2))"), 4) == 3);
  CHECK(rank(parse("O(1)+Triv(5)"), 3) == 6);
  CHECK_THROWS_AS(rank(parse("Omega^2"), 1), InvalidAtDimension);
  CHECK_THROWS_AS(rank(parse("quot(Triv(2),T)"), 3), RankViolation);
  CHECK_THROWS_AS(rank(parse("wedge2(O(1))"), 3), RankTooSmall);
}

TEST_CASE("chern of sums and atoms") {
  ChernData c = chern("O(2)+O(1)", 3);
  CHECK(c.rank == 2);
  CHECK(c.total == cls(3, {1, 3, 2}));

  CHECK(chern("O(1)+O(1)+T(-1)", 2).c(2) == 4);
  CHECK(chern("O(1)+O(1)+T(-1)", 4).c(2) == 4);

  ChernData omega = chern("Omega(2)", 4);
  CHECK(omega.rank == 4);
  CHECK(omega.total == cls(4, {1, 3, 4, 2, 1}));

  ChernData w = chern("Omega^2(2)*", 4);
  CHECK(w.rank == 6);
  CHECK(w.c(2) == 5);
  CHECK(w.c(4) == 0);
}

TEST_CASE("chern character") {
  // ch(O(1)) on P^2 = 1 + h + h^2/2
  ChernCharacter ch = chern_character(chern("O(1)", 2));
  CHECK(ch.value == ChowClass(2, {Rat(1), Rat(1), Rat(1, 2)}));

  // ch(T_{P^2}) = 2 + 3h + 3/2 h^2, and via the Euler sequence
  // ch(T) = 3 ch(O(1)) - 1.
  ChernCharacter cht = chern_character(chern("T", 2));
  CHECK(cht.value == ChowClass(2, {Rat(2), Rat(3), Rat(3, 2)}));
  ChowClass euler_route =
      chern_character(chern("O(1)", 2)).value * Rat(3) - ChowClass::one(2);
  CHECK(cht.value == euler_route);

  // degree-3 part of ch for c = (3, 3, c3) on P^3 is c3/2
  for (long c3 = -3; c3 <= 3; ++c3) {
    ChernCharacter x =
        chern_character(ChernData::from_classes(3, 5, {3, 3, c3}));
    CHECK(x.ch(3) == Rat(c3) / 2);
  }
}

TEST_CASE("character_to_chern inverts chern_character") {
  ChernCharacter ch(2, ChowClass(2, {Rat(2), Rat(3), Rat(3, 2)}));
  ChernData back = character_to_chern(ch);
  CHECK(back.rank == 2);
  CHECK(back.total == cls(2, {1, 3, 3}));

  ChernCharacter bad(2, ChowClass(2, {Rat(2), Rat(1, 3)}));
  CHECK_THROWS_AS(character_to_chern(bad), NonIntegralChern);

  auto rng = test::make_rng(11);
  for (int n = 2; n <= 6; ++n)
    for (int iter = 0; iter < 100; ++iter) {
      ChernData c = test::random_chern(rng, n);
      CHECK(character_to_chern(chern_character(c)) == c);
    }
}

TEST_CASE("twist") {
  // c_2(Q(-1)) = c_2(Q) - 2 for rank-2 Q with c_1 = 3
  for (long c2 = 0; c2 <= 4; ++c2)
    CHECK(twist_chern(ChernData::from_classes(2, 2, {3, c2}), -1).c(2) ==
          c2 - 2);

  ChernData t4 = chern("T", 4);
  CHECK(t4.total == cls(4, {1, 5, 10, 10, 5}));
  CHECK(twist_chern(t4, 0) == t4);
  CHECK(twist_chern(t4, -2).total == cls(4, {1, -3, 4, -2, 1}));
  // twist agrees with the expression path
  CHECK(twist_chern(t4, -2) == chern("T(-2)", 4));
}

TEST_CASE("dual") {
  ChernData omega2 = chern("Omega(2)", 4);
  CHECK(dual_chern(omega2).total == cls(4, {1, -3, 4, -2, 1}));
  // c(Omega(2)*) = c(T(-2)) on every supported n
  for (int n = 2; n <= 5; ++n)
    CHECK(chern("Omega(2)*", n) == chern("T(-2)", n));
  CHECK(dual_chern(dual_chern(omega2)) == omega2);
  ChernData triv(3, 4, ChowClass::one(3));
  CHECK(dual_chern(triv) == triv);
}

TEST_CASE("wedge2") {
  // rank 2: Lambda^2 = determinant line, ch = exp(c_1)
  ChernData e = ChernData::from_classes(3, 2, {5, 3});
  ChernCharacter det = wedge2_character(chern_character(e));
  CHECK(det.value == exp_class(3, Rat(5)));

  // Triv(r) -> Triv(C(r,2))
  ChernCharacter trivial_ch(3, ChowClass::one(3) * Rat(5));
  CHECK(wedge2_character(trivial_ch).value == ChowClass::one(3) * Rat(10));

  CHECK_THROWS_AS(wedge2_character(ChernCharacter(3, ChowClass::one(3))),
                  RankTooSmall);

  // (Lambda^2 T)(-2) = Lambda^2(T(-1)) on P^4: oracle is the Whitney
  // inverse of c(T(-2))
  ChernData w = chern("wedge2(T(-1))", 4);
  CHECK(w.rank == 6);
  CHECK(w.total == chern("T(-2)", 4).total.inverse());
  CHECK(w.total == cls(4, {1, 3, 5, 5, 0}));
}

TEST_CASE("quot") {
  CHECK(chern("quot(Triv(4),O(-3))", 3).c(2) == 9);
  CHECK(chern("quot(Triv(5),O(-2)+O(-1))", 3).c(2) == 7);
  ChernData v = chern("quot(Triv(7),O(-2)+Omega(1))", 3);
  CHECK(v.c(2) == 6);
  // (1+h)/(1-2h)
  CHECK(v.total == cls(3, {1, 1}) * cls(3, {1, -2}).inverse());
  CHECK(v.total == cls(3, {1, 3, 6, 12}));

  ChernData tango = chern("quot(Triv(7),T(-2))", 4);
  CHECK(tango.rank == 3);
  CHECK(tango.total == cls(4, {1, 3, 5, 5, 0}));

  // impossible quotients
  CHECK_THROWS_AS(chern("quot(Triv(4),O(-3))", 4), RankViolation);
  CHECK_THROWS_AS(chern("quot(O(-3),Triv(2))", 3), RankViolation);
}

TEST_CASE("whitney multiplicativity on random expressions") {
  auto rng = test::make_rng(23);
  for (int n = 2; n <= 5; ++n)
    for (int iter = 0; iter < 100; ++iter) {
      ExprPtr a = test::random_sum_expr(rng, n, 2);
      ExprPtr b = test::random_sum_expr(rng, n, 1);
      ChernData s = chern(sum(a, b), n);
      ChernData ca = chern(a, n);
      ChernData cb = chern(b, n);
      CHECK(s.rank == ca.rank + cb.rank);
      CHECK(s.total == ca.total * cb.total);
    }
}

TEST_CASE("trivial padding never changes the total Chern class") {
  for (const char* text : {"O(3)", "T(-1)", "Omega(2)", "O(1)+O(2)"}) {
    ChernData plain = chern(text, 4);
    ChernData padded = chern(sum(parse(text), trivial(6)), 4);
    CHECK(padded.total == plain.total);
    CHECK(padded.rank == plain.rank + 6);
  }
}

TEST_CASE("twist additivity and twist/dual compatibility") {
  auto rng = test::make_rng(31);
  std::uniform_int_distribution<long> t(-4, 4);
  for (int n = 2; n <= 5; ++n)
    for (int iter = 0; iter < 100; ++iter) {
      ChernData c = test::random_chern(rng, n);
      long a = t(rng), b = t(rng);
      CHECK(twist_chern(twist_chern(c, a), b) == twist_chern(c, a + b));
      // c(E*(t)) = dual(c(E(-t)))
      CHECK(twist_chern(dual_chern(c), a) ==
            dual_chern(twist_chern(c, -a)));
    }
}

TEST_CASE("the wedge2 diagram commutes numerically on P^4") {
  ChernData via_adams = character_to_chern(
      wedge2_character(chern_character(chern("T(-1)", 4))));
  ChernData via_quot = quot_chern(ChernData(4, 10, ChowClass::one(4)),
                                  chern("T(-2)", 4));
  CHECK(via_adams.rank == 6);
  CHECK(via_quot.rank == 6);
  CHECK(via_adams == via_quot);
}

TEST_CASE("cotangent reduction chain against the Euler-sequence oracle") {
  // c(Omega^1(1)) = 1/(1+h) from 0 -> Omega(1) -> O^{n+1} -> O(1) -> 0
  for (int n = 2; n <= 5; ++n)
    CHECK(chern("Omega(1)", n).total ==
          (ChowClass::one(n) + ChowClass::monomial(n, 1, 1)).inverse());
  // Omega^n = O(-n-1)
  for (int n = 2; n <= 5; ++n)
    CHECK(chern(cotangent(n), n) == chern(line_bundle(-n - 1), n));
  // Omega^{n-1} = T(-n-1)
  for (int n = 3; n <= 5; ++n)
    CHECK(chern(cotangent(n - 1), n) == chern(twist(tangent(), -n - 1), n));
  // middle degrees outside the chain are rejected
  CHECK_THROWS_AS(chern(cotangent(3), 6), UnsupportedOperation);
}
