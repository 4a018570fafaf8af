#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "martial/permutation.hpp"
#include "martial/poly.hpp"

namespace martial {

/// A word with some letters overlined.
struct BarredWord {
  Word word;
  std::vector<bool> bars;

  int barCount() const;
  /// Letters separated by commas, barred letters followed by a quote: "3',5,4".
  std::string toString() const;

  friend bool operator==(const BarredWord&, const BarredWord&) = default;
  friend auto operator<=>(const BarredWord&, const BarredWord&) = default;
};

/// comaj of the underlying word plus the sum of the barred letters.
int qStatistic(const BarredWord& w);

/// An interleaving of P (left) and R (right). sources[k] is true when the
/// k-th merged letter comes from R.
struct Shuffle {
  std::vector<bool> sources;
  BarredWord left;
  BarredWord right;
  /// Pairs with an R letter to the left of a P letter.
  int inversions = 0;

  BarredWord merged() const;
};

std::vector<Shuffle> shuffles(const BarredWord& p, const BarredWord& r);
int shuffleQStatistic(const Shuffle& s);

/// Reduced words of pi with every bar mask having barCount bars
/// (every mask when barCount is empty), words in lexicographic order.
std::vector<BarredWord> barredWords(const Permutation& pi, std::optional<int> barCount = std::nullopt);

/// (bars, statistic) -> count.
using StatDistribution = std::map<std::pair<int, int>, std::int64_t>;

struct SigmaRow {
  Permutation sigma;
  std::int64_t coefficient = 0;
  /// Distribution over the barred words of sigma (one copy).
  StatDistribution counts;
};

struct NenashevDistributions {
  StatDistribution lhs;
  StatDistribution rhs;
  /// One entry per sigma in the product, in lexicographic one-line order.
  std::vector<SigmaRow> rows;

  bool holds() const { return lhs == rhs; }
};

/// Shuffle side and product side of the q-Nenashev identity, restricted to
/// barCount bars when given. Requires positive letters in pi and rho.
NenashevDistributions qNenashevDistributions(const Permutation& pi, const Permutation& rho,
                                             std::optional<int> barCount = std::nullopt);

/// Distribution over barred words of a single permutation.
StatDistribution barredWordDistribution(const Permutation& pi, std::optional<int> barCount = std::nullopt);

/// #RW(pi) #RW(rho) C(l_pi + l_rho, l_pi) = sum_sigma c^sigma #RW(sigma).
bool nenashevCountCheck(const Permutation& pi, const Permutation& rho);

struct MultipliedIdentity {
  MultiPoly lhs;
  MultiPoly rhs;
};
/// [l_pi + l_rho choose l_pi]_q num(pi) num(rho) and sum_sigma c^sigma num(sigma).
MultipliedIdentity multipliedIdentitySides(const Permutation& pi, const Permutation& rho);
bool multipliedIdentityCheck(const Permutation& pi, const Permutation& rho);

struct RectificationEntry {
  Shuffle shuffle;
  Permutation sigma;
  /// Which of the c^sigma copies of the target barred word.
  int copy = 0;
  BarredWord target;
};

struct RectificationWitness {
  std::vector<RectificationEntry> entries;
  std::size_t shuffleCount = 0;
  std::size_t targetCount = 0;
  bool perfect = false;
  /// First (bars, statistic) class without a perfect matching.
  std::optional<std::pair<int, int>> failingClass;

  nlohmann::json toJson() const;
};

/// Bar- and statistic-preserving bijection from shuffles onto c^sigma copies
/// of the barred words of each sigma, found by bipartite matching per class.
RectificationWitness rectificationWitness(const Permutation& pi, const Permutation& rho,
                                          std::optional<int> barCount = std::nullopt);

/// Table of the fully barred (or barCount-barred) identity: columns are the
/// statistics, one row per sigma copy.
struct DistributionTable {
  std::vector<int> statistics;
  std::vector<std::int64_t> totals;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> rows;

  std::string toCsv() const;
  nlohmann::json toJson() const;
  std::string toText() const;
};
DistributionTable distributionTable(const Permutation& pi, const Permutation& rho, int barCount);

/// sum over S_n of q^inv and of q^comaj, reading one-line notation as a word.
std::pair<MultiPoly, MultiPoly> equidistributionSides(int n);
bool equidistributionSn(int n);

/// comaj(P) + comaj(R) + inversions versus comaj of the merged word, as
/// multisets over all shuffles. PR must not repeat a letter.
bool garsiaGesselCheck(const Word& p, const Word& r);

struct DisjointSupportReport {
  bool singleTerm = false;
  bool countMatches = false;
  bool distributionMatches = false;
  /// Whether inserting R into P as the shuffle suggests already preserves the statistic.
  bool naiveInsertionPreserves = false;
};

/// pi = prod_{J \ K} r_j, rho = prod_K r_k for J with no two adjacent letters.
DisjointSupportReport disjointSupportCheck(const std::vector<int>& j, const std::vector<int>& k);

std::string distributionToString(const StatDistribution& d);

}  // namespace martial
