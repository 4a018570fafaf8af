#include <doctest.h>

#include "martial/schubert.hpp"
#include "oracles.hpp"

using namespace martial;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(xVar(i)); }

SchubertVector basis(const char* text) { return SchubertVector::basis(Permutation::parse(text)); }

/// d_w applied to x^(n-1, n-2, ..., 0) for w a reduced word of pi^-1 w0.
MultiPoly staircaseOracle(const oracle::OneLine& a) {
  const int n = static_cast<int>(a.size());
  MultiPoly f(1);
  for (int i = 1; i <= n; ++i) f *= MultiPoly::term(Monomial(xVar(i), n - i));
  // pi^-1 w0 in one-line form: i -> pi^-1(n + 1 - i)
  oracle::OneLine inv(n), target(n);
  for (int i = 0; i < n; ++i) inv[a[i] - 1] = i + 1;
  for (int i = 0; i < n; ++i) target[i] = inv[n - 1 - i];
  const auto words = oracle::reducedWords(target);
  const auto& w = *words.begin();
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = dividedDifference(*it, f);
  return f;
}

/// Monk's rule by direct search over transpositions on a padded window.
SchubertVector monkOracle(int k, const Permutation& pi) {
  const int lo = std::min(pi.isIdentity() ? k : pi.lo(), k) - 3;
  const int hi = std::max(pi.isIdentity() ? k + 1 : pi.hi(), k + 1) + 3;
  oracle::OneLine a;
  for (int i = lo; i <= hi; ++i) a.push_back(pi(i) - lo + 1);
  SchubertVector out;
  for (int i = lo; i <= k; ++i)
    for (int j = k + 1; j <= hi; ++j) {
      auto b = a;
      std::swap(b[i - lo], b[j - lo]);
      if (oracle::inversions(b) == pi.length() + 1) out.add(Permutation::fromWindow(b, 1).shifted(lo - 1), 1);
    }
  return out;
}

}  // namespace

TEST_SUITE("schubert") {
  TEST_CASE("small Schubert polynomials") {
    CHECK(schubertPolynomial(Permutation()) == MultiPoly(1));
    CHECK(schubertPolynomial(Permutation::simple(3)) == x(1) + x(2) + x(3));
    CHECK(schubertPolynomial(Permutation::parse("321")) == x(1) * x(1) * x(2));
    CHECK(schubertPolynomial(Permutation::parse("312")) == x(1) * x(1));
    CHECK(schubertPolynomial(Permutation::parse("1432")) ==
          x(1) * x(1) * x(2) + x(1) * x(1) * x(3) + x(1) * x(2) * x(2) + x(1) * x(2) * x(3) + x(2) * x(2) * x(3));
  }

  TEST_CASE("transition recursion agrees with the staircase chain on S_5") {
    for (const auto& a : oracle::allPermutations(5)) {
      const auto p = Permutation::fromWindow(a, 1);
      CHECK(schubertPolynomial(p) == staircaseOracle(a));
    }
  }

  TEST_CASE("library chain with different words and sizes") {
    for (const auto& p : permutationsInWindow({1, 4}, 6)) {
      CHECK(schubertPolynomialByChain(p, 4) == schubertPolynomial(p));
      CHECK(schubertPolynomialByChain(p, 5) == schubertPolynomial(p));
    }
  }

  TEST_CASE("Schubert basis expansion") {
    CHECK(expandSchubertBasis(MultiPoly(1)) == SchubertVector::basis(Permutation()));
    CHECK(expandSchubertBasis(x(1) * x(1)) == basis("312"));
    CHECK(expandSchubertBasis(x(2)) == basis("132") - basis("213"));
    const MultiPoly s = schubertPolynomial(Permutation::simple(2));
    CHECK(expandSchubertBasis(s * s) == basis("231") + basis("1423"));
    for (const auto& p : permutationsInWindow({1, 5}, 4)) {
      CHECK(expandSchubertBasis(schubertPolynomial(p)) == SchubertVector::basis(p));
      CHECK(synthesize(SchubertVector::basis(p)) == schubertPolynomial(p));
    }
  }

  TEST_CASE("structure constants of the 12463578 and r_2 examples") {
    const auto r2 = Permutation::simple(2);
    CHECK(structureConstants(r2, r2) == basis("231") + basis("1423"));
    const auto egg = Permutation::parse("12463578");
    const auto& c = structureConstants(egg, egg);
    CHECK(c.size() == 7);
    CHECK(c.coefficient(Permutation::parse("13572468")) == 2);
    int ones = 0;
    for (const auto& [sigma, coeff] : c) ones += coeff == 1;
    CHECK(ones == 6);
    CHECK(structureConstants(egg, Permutation()) == SchubertVector::basis(egg));
  }

  TEST_CASE("back-stable constants use nonpositive letters") {
    const auto r1 = Permutation::simple(1);
    CHECK(structureConstants(r1, r1) ==
          SchubertVector::basis(Permutation::simple(0) * r1) + SchubertVector::basis(Permutation::simple(2) * r1));
  }

  TEST_CASE("Monk's rule against a transposition search") {
    for (const auto& pi : permutationsInWindow({1, 4}, 6))
      for (int k = 0; k <= 4; ++k) {
        const auto oracleValue = monkOracle(k, pi);
        CHECK(monkProduct(k, pi) == oracleValue);
        CHECK(structureConstants(pi, Permutation::simple(k)) == oracleValue);
      }
    CHECK(monkProduct(2, Permutation()) == SchubertVector::basis(Permutation::simple(2)));
    CHECK(monkProduct(1, Permutation::simple(1)).size() == 2);
  }

  TEST_CASE("structure constants are nonnegative, commutative and shift-equivariant") {
    const auto perms = permutationsInWindow({1, 4}, 3);
    for (const auto& pi : perms)
      for (const auto& rho : perms) {
        const auto& c = structureConstants(pi, rho);
        CHECK(c == structureConstants(rho, pi));
        SchubertVector shifted;
        for (const auto& [sigma, coeff] : c) {
          CHECK(coeff > 0);
          CHECK(coeff.get_den() == 1);
          CHECK(sigma.length() == pi.length() + rho.length());
          shifted.add(sigma.shifted(2), coeff);
        }
        CHECK(structureConstants(pi.shifted(2), rho.shifted(2)) == shifted);
        CHECK(structureConstantsAtShift(pi, rho, productShift(pi, rho) + 1) == c);
      }
  }

  TEST_CASE("multiplication is associative") {
    const auto perms = permutationsInWindow({1, 3}, 3);
    for (const auto& a : perms)
      for (const auto& b : perms)
        for (const auto& c : perms) {
          if (a.length() + b.length() + c.length() > 5) continue;
          const auto A = SchubertVector::basis(a), B = SchubertVector::basis(b), C = SchubertVector::basis(c);
          CHECK(multiply(multiply(A, B), C) == multiply(A, multiply(B, C)));
        }
  }

  TEST_CASE("back-stable truncations") {
    CHECK(backStableTruncation(Permutation(), 3, {-2, 2}).truncation == MultiPoly(1));
    const auto r1 = backStableTruncation(Permutation::simple(1), 3, {-1, 1});
    CHECK(r1.stabilized);
    for (const auto& p : permutationsInWindow({-1, 3}, 3)) {
      const auto t = backStableTruncation(p, 3, {-1, 2});
      CHECK(t.truncation.isHomogeneous());
      CHECK(t.truncation.totalDegree() == p.length());
    }
  }

  TEST_CASE("letter situations") {
    const auto r1r4 = Permutation::simple(1) * Permutation::simple(4);
    const auto split = disjointFactorization(r1r4, 2);
    CHECK(split.situation == LetterSituation::SplitsAround);
    REQUIRE(split.factors);
    CHECK(split.factors->first == Permutation::simple(1));
    CHECK(split.factors->second == Permutation::simple(4));
    const auto t13 = Permutation::transposition(1, 3);
    CHECK(disjointFactorization(t13, 5).situation == LetterSituation::OneSided);
    CHECK(disjointFactorization(t13, 2).situation == LetterSituation::UsesLetter);
    CHECK_FALSE(disjointFactorization(t13, 2).factors);
  }
}
