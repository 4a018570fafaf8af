#pragma once

#include <optional>
#include <span>
#include <utility>

#include "martial/formal_sum.hpp"
#include "martial/permutation.hpp"
#include "martial/poly.hpp"

namespace martial {

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}: the Schubert polynomial of the longest element of S_n.
MultiPoly staircase(int n);

/// Schubert polynomial of a permutation fixing the nonpositive integers.
/// Memoized, computed with the transition recursion; see
/// schubertPolynomialByChain for the divided-difference construction.
const MultiPoly& schubertPolynomial(const Permutation& p);

/**
 * The divided-difference chain from the staircase of S_n:
 * S_p = d_{q_1} o ... o d_{q_k} (staircase(n)) where (q_1, ..., q_k) is a
 * reduced word of p^{-1} w_0. An empty chain selects the lexicographically
 * first such word.
 */
MultiPoly schubertPolynomialByChain(const Permutation& p, int n, std::span<const int> chain = {});

/// Sum of c_sigma S_sigma as a polynomial.
MultiPoly synthesize(const SchubertVector& v);

/// Writes f in the Schubert basis using c_sigma = constant term of d_sigma f.
/// f must be a polynomial in x_1, x_2, ...; the result is re-synthesized and
/// compared with f.
SchubertVector expandSchubertBasis(const MultiPoly& f);

/// c_{pi rho}^sigma for the biinfinite ring: both factors are shifted so that
/// no term of the product can reach the nonpositive integers, multiplied as
/// polynomials, expanded, and shifted back. Memoized.
const SchubertVector& structureConstants(const Permutation& pi, const Permutation& rho);

/// Same computation at an explicit shift; shift + min letter must be >= 1.
/// Used to confirm independence from the shift.
SchubertVector structureConstantsAtShift(const Permutation& pi, const Permutation& rho, int shift);

/// The shift structureConstants() uses.
int productShift(const Permutation& pi, const Permutation& rho);

/// Bilinear product of Schubert vectors.
SchubertVector multiply(const SchubertVector& p, const SchubertVector& q);

/// Monk's rule: sum of S_{pi t_ij} over i <= k < j with length(pi t_ij) = length(pi) + 1.
SchubertVector monkProduct(int k, const Permutation& pi);

struct BackStableTruncation {
  /// S_{pi[N]} with x_i renamed to x_{i-N}.
  MultiPoly truncation;
  /// Whether the coefficients of monomials inside the variable window
  /// agree between N and N + 1.
  bool stabilized = false;
};

BackStableTruncation backStableTruncation(const Permutation& pi, int shift, Window variableWindow);

/// The three cases for k_m = 0 in the Klyachko ring.
enum class LetterSituation {
  UsesLetter = 1,     // every reduced word uses m
  SplitsAround = 2,   // letters on both sides of m: pi = pi_<m pi_>m
  OneSided = 3,       // all letters on one side of m
};

struct DisjointFactorization {
  LetterSituation situation = LetterSituation::OneSided;
  /// (pi_<m, pi_>m), present exactly for SplitsAround.
  std::optional<std::pair<Permutation, Permutation>> factors;
};

/// Classifies pi against the letter m; in the split case also checks
/// S_pi = S_{pi_<m} S_{pi_>m} through structureConstants.
DisjointFactorization disjointFactorization(const Permutation& pi, int m);

}  // namespace martial
