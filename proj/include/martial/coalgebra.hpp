#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "martial/formal_sum.hpp"
#include "martial/permutation.hpp"
#include "martial/poly.hpp"

namespace martial {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;
  /// "(2,1)"; the empty partition prints as "()".
  std::string toString() const;
  /// Accepts "(2,1)", "2,1", "21" (single-digit parts) and "()".
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts <=> b.parts; }
};

using PartitionCoefficients = std::map<Partition, Integer>;

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitionsOf(int n);
/// f^lambda, the number of standard Young tableaux (hook length formula).
Integer standardTableauxCount(const Partition& lambda);

/// s_lambda(x_1, ..., x_n) as a sum over semistandard tableaux. Memoized.
const MultiPoly& schurPolynomial(const Partition& lambda, int n);
/// Expands a symmetric polynomial in x_1..x_n into Schur polynomials by
/// repeatedly removing the lex-leading monomial. Throws InconsistencyError
/// if the input is not symmetric.
std::map<Partition, Rational> schurExpansion(MultiPoly f, int n);

/// Delta(S_sigma) = sum of S_pi (x) S_rho over length-additive sigma = pi rho.
PairVector coproduct(const SchubertVector& v);
/// Leg-wise product in H (x) H through structureConstants.
PairVector multiplyPairs(const PairVector& a, const PairVector& b);
/// Delta(pq) - Delta(p) Delta(q).
PairVector hopfDefect(const SchubertVector& p, const SchubertVector& q);

/**
 * Whether the Hopf defect of S_pi and S_{rho[N]} vanishes.
 *
 * When the letters of rho[N] sit at least two above those of pi, also
 * checks S_pi S_{rho[N]} = S_{pi rho[N]} and throws InconsistencyError if not.
 */
bool separatedHopfness(const Permutation& pi, const Permutation& rho, int shift);

/// a_pi^lambda in St_pi = sum a_pi^lambda s_lambda. Memoized.
const PartitionCoefficients& stanleyCoefficients(const Permutation& pi);
/// Schur expansion of S_{pi[N]} with every variable at or above the lowest
/// letter of pi[N] set to zero. Agrees with stanleyCoefficients once
/// pi[N] has at least length(pi) variables below its lowest letter.
PartitionCoefficients stanleyCoefficientsAtShift(const Permutation& pi, int shift);

/// c_{lambda mu}^nu. Memoized.
const PartitionCoefficients& lrCoefficients(const Partition& lambda, const Partition& mu);

/// xi^lambda = sum_pi a_pi^lambda m_pi.
SchubertVector xiApply(const Partition& lambda, const SchubertVector& v);

/// (St (x) St) applied to a tensor: keyed by the pair of Schur indices.
std::map<std::pair<Partition, Partition>, Rational> stanleyTensor(const PairVector& v);
/// Whether (St (x) St)(hopfDefect(p, q)) is zero.
bool stanleyKillsDefect(const SchubertVector& p, const SchubertVector& q);

std::string pairToString(const PermutationPair& p);

}  // namespace martial
