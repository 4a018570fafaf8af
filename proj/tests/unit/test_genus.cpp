#include <doctest.h>

#include "martial/errors.hpp"
#include "martial/genus.hpp"
#include "martial/schubert.hpp"

using namespace martial;

namespace {

MultiPoly a() { return MultiPoly::variable(kVarA); }
MultiPoly b() { return MultiPoly::variable(kVarB); }
MultiPoly k(int i) { return MultiPoly::variable(kVar(i)); }
MultiPoly alpha() { return MultiPoly::variable(kVarAlpha); }
MultiPoly beta() { return MultiPoly::variable(kVarBeta); }
MultiPoly qpow(int n) { return MultiPoly::term(Monomial(kVarQ, n)); }

Rational factorial(int n) { return n <= 1 ? Rational(1) : Rational(n) * factorial(n - 1); }

}  // namespace

TEST_SUITE("genus") {
  TEST_CASE("Klyachko genus") {
    CHECK(klyachkoGenus(Permutation()) == MultiPoly(1));
    CHECK(klyachkoGenus(Permutation::simple(3)) == k(3));
    CHECK(klyachkoGenus(Permutation::transposition(1, 3)) ==
          (k(1) * k(1) * k(2) + k(1) * k(2) * k(2)) * Rational(1, 6));
  }

  TEST_CASE("affine-linear genus") {
    CHECK(affineLinearGenus(Permutation::simple(-2)) == a() * Rational(-2) + b());
    const MultiPoly expected =
        (a() + b()) * (a() * Rational(2) + b()) * (a() * Rational(3) + b() * Rational(2)) * Rational(1, 6);
    CHECK(affineLinearGenus(Permutation::transposition(1, 3)) == expected);
    for (const auto& p : permutationsInWindow({-1, 4}, 5)) {
      const MultiPoly atB = affineLinearGenus(p).substitute([](Var v) -> std::optional<MultiPoly> {
        return MultiPoly(v == kVarA ? 0 : 1);
      });
      CHECK(atB == MultiPoly(Rational(static_cast<long>(countReducedWords(p))) / factorial(p.length())));
    }
  }

  TEST_CASE("q-Klyachko genus") {
    CHECK(qKlyachkoGenus(Permutation()) == QGenusValue{MultiPoly(1), 0});
    CHECK(qKlyachkoGenus(Permutation::simple(4)) == QGenusValue{alpha() * qpow(4) + beta(), 1});
    auto f = [&](int i) { return alpha() * qpow(i) + beta(); };
    const auto egg = qKlyachkoGenus(Permutation::parse("12463578"));
    CHECK(egg.denomLength == 3);
    CHECK(egg.numerator == qpow(1) * f(3) * f(5) * f(4) + qpow(2) * f(5) * f(3) * f(4));
    for (const auto& p : permutationsInWindow({1, 5}, 4)) {
      // at q = 1 every factor alpha q^i + beta collapses to alpha + beta
      const MultiPoly collapsed = affineLinearGenus(p).substitute([](Var v) -> std::optional<MultiPoly> {
        return v == kVarA ? MultiPoly(0) : alpha() + beta();
      });
      CHECK(qGenusAtOne(qKlyachkoGenus(p)) == collapsed);
    }
  }

  TEST_CASE("components") {
    CHECK(solvesKlyachkoEquations(AffineLinearComponent{}, {-5, 5}));
    CHECK(solvesKlyachkoEquations(TwoSlopeComponent{1, 3}, {-5, 8}));
    CHECK(solvesKlyachkoEquations(TwoSlopeComponent{2, 2}, {-5, 8}));
    for (const auto& p : permutationsInWindow({-1, 4}, 4))
      CHECK(componentEvaluate(AffineLinearComponent{}, p) == affineLinearGenus(p));
    CHECK(componentEvaluate(TwoSlopeComponent{1, 3}, Permutation::simple(2)).isZero());
    CHECK(componentEvaluate(TwoSlopeComponent{4, 6}, Permutation::simple(2)) ==
          MultiPoly::variable(kVarSlopeX) * Rational(-2));
    CHECK(componentEvaluate(TwoSlopeComponent{0, 1}, Permutation::simple(3)) ==
          MultiPoly::variable(kVarSlopeY) * Rational(2));
    CHECK_THROWS_AS(componentEvaluate(TwoSlopeComponent{3, 1}, Permutation::simple(2)), ValidationError);
  }

  TEST_CASE("exponential triangle") {
    CHECK(expTriangle(Permutation()) == MultiPoly(1));
    CHECK(expTriangle(Permutation::simple(5)) == a() * Rational(5) + b());
    CHECK(expTriangle(Permutation::transposition(1, 3)) == affineLinearGenus(Permutation::transposition(1, 3)));
    for (const auto& p : permutationsInWindow({-2, 4}, 4)) {
      CHECK(expTriangle(p) == affineLinearGenus(p));
      CHECK(static_cast<int>(expTriangleSeries(p).size()) == p.length() + 1);
    }
  }

  TEST_CASE("genera are multiplicative") {
    const auto perms = permutationsInWindow({1, 4}, 3);
    for (const auto& pi : perms)
      for (const auto& rho : perms) {
        MultiPoly gammaSum, kSum;
        for (const auto& [sigma, c] : structureConstants(pi, rho)) {
          gammaSum += affineLinearGenus(sigma) * c;
          kSum += componentEvaluate(TwoSlopeComponent{2, 3}, sigma) * c;
        }
        CHECK(affineLinearGenus(pi) * affineLinearGenus(rho) == gammaSum);
        CHECK(componentEvaluate(TwoSlopeComponent{2, 3}, pi) * componentEvaluate(TwoSlopeComponent{2, 3}, rho) ==
              kSum);
      }
  }
}
