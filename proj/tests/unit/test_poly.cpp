#include <doctest.h>

#include <random>

#include "martial/errors.hpp"
#include "martial/poly.hpp"

using namespace martial;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(xVar(i)); }

MultiPoly randomPoly(std::mt19937& rng, int vars, int terms) {
  std::uniform_int_distribution<int> var(1, vars), exp(0, 3), coeff(-5, 5);
  MultiPoly f;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < 3; ++k) m = m * Monomial(xVar(var(rng)), exp(rng));
    f += MultiPoly::term(m, Rational(coeff(rng), 3));
  }
  return f;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("divided differences") {
    CHECK(dividedDifference(1, x(1)) == MultiPoly(1));
    CHECK(dividedDifference(1, x(1) * x(2)).isZero());
    CHECK(dividedDifference(1, x(1) * x(1)) == x(1) + x(2));
    CHECK(dividedDifference(2, x(1)).isZero());
  }

  TEST_CASE("divided difference identities on random polynomials") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const MultiPoly f = randomPoly(rng, 4, 5), g = randomPoly(rng, 4, 4);
      for (int i = 1; i <= 3; ++i) {
        // (x_i - x_{i+1}) d_i f = f - s_i f
        CHECK((x(i) - x(i + 1)) * dividedDifference(i, f) == f - swapAdjacent(i, f));
        CHECK(dividedDifference(i, dividedDifference(i, f)).isZero());
        // twisted Leibniz rule
        CHECK(dividedDifference(i, f * g) ==
              dividedDifference(i, f) * g + swapAdjacent(i, f) * dividedDifference(i, g));
      }
      CHECK(dividedDifference(1, dividedDifference(2, dividedDifference(1, f))) ==
            dividedDifference(2, dividedDifference(1, dividedDifference(2, f))));
      CHECK(dividedDifference(1, dividedDifference(3, f)) == dividedDifference(3, dividedDifference(1, f)));
    }
  }

  TEST_CASE("ring arithmetic") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const MultiPoly f = randomPoly(rng, 3, 4), g = randomPoly(rng, 3, 4), h = randomPoly(rng, 3, 3);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK((f - f).isZero());
      CHECK(f.pow(2) == f * f);
    }
  }

  TEST_CASE("text and json round trip") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      MultiPoly f = randomPoly(rng, 5, 6) * MultiPoly::variable(kVarA) + MultiPoly::variable(kVar(-2));
      f += MultiPoly::term(Monomial(kVarQ, -2), Rational(7, 2)) * MultiPoly::variable(kVarAlpha);
      CHECK(MultiPoly::parse(f.toString()) == f);
      CHECK(MultiPoly::fromJson(f.toJson()) == f);
    }
    CHECK(MultiPoly::parse("0").isZero());
    CHECK(MultiPoly::parse("3/2 * a b^2 + 1 * a^3") ==
          MultiPoly::term(Monomial(kVarA) * Monomial(kVarB, 2), Rational(3, 2)) +
              MultiPoly::term(Monomial(kVarA, 3)));
    CHECK_THROWS_AS(MultiPoly::parse("2 * z_1"), ValidationError);
  }

  TEST_CASE("q-analogues") {
    const MultiPoly q = MultiPoly::variable(kVarQ);
    CHECK(qFactorial(0) == MultiPoly(1));
    CHECK(qFactorial(3) == (1 + q) * (1 + q + q * q));
    CHECK(qBinomial(4, 2) == 1 + q + MultiPoly(2) * q * q + q.pow(3) + q.pow(4));
    CHECK(qBinomial(6, 3).substitute([](Var) { return std::optional<MultiPoly>(MultiPoly(1)); }) == MultiPoly(20));
  }

  TEST_CASE("substitution") {
    const MultiPoly f = x(1) * x(1) + x(2);
    const MultiPoly g = f.substitute([](Var v) -> std::optional<MultiPoly> {
      if (v == xVar(1)) return MultiPoly(2);
      return std::nullopt;
    });
    CHECK(g == 4 + x(2));
  }
}
