#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace martial {

/// A word in the simple reflections; letter i stands for r_i = (i i+1).
using Word = std::vector<int>;

/// Closed integer interval [lo, hi]. As a permutation window it means
/// "supported on [lo, hi]", i.e. letters lo .. hi-1.
struct Window {
  int lo = 1;
  int hi = 0;

  bool contains(int i) const { return lo <= i && i <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Parses "LO..HI".
Window parseWindow(std::string_view text);

/**
 * A permutation of the integers moving only finitely many points.
 *
 * Stored as the one-line images on the smallest window [lo, hi] outside of
 * which it is the identity, so two permutations compare equal exactly when
 * they are the same bijection. Products compose as functions:
 * (p * q)(i) = p(q(i)), and a word (q_1, ..., q_k) denotes r_{q_1} ... r_{q_k}.
 */
class Permutation {
 public:
  Permutation() = default;

  /// images must be a rearrangement of offset .. offset + images.size() - 1.
  static Permutation fromWindow(std::span<const int> images, int offset);
  static Permutation simple(int i);
  static Permutation transposition(int i, int j);
  static Permutation fromWord(std::span<const int> letters);

  /// Accepts a digit string ("12463578"), a comma list ("2,1,3"), the word
  /// form ("w:3,5,4") or "e" for the identity. offset applies to the first two.
  static Permutation parse(std::string_view text, int offset = 1);

  int operator()(int i) const;
  int inverseAt(int value) const;

  bool isIdentity() const { return images_.empty(); }
  /// Support window. Only meaningful for non-identity permutations.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(images_.size()) - 1; }
  int length() const { return length_; }

  /// Letters used by (every) reduced word, ascending.
  std::vector<int> letters() const;
  std::vector<int> oneLine(int from, int to) const;
  /// Lehmer code on positions 1 .. hi(); requires fixesNonpositive().
  std::vector<int> code() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  /// this * r_i (swaps positions i, i+1).
  Permutation timesSimple(int i) const;
  /// r_i * this (swaps values i, i+1).
  Permutation simpleTimes(int i) const;
  /// this * t_{ij} (swaps positions i, j).
  Permutation timesTransposition(int i, int j) const;

  bool hasRightDescent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool hasLeftDescent(int i) const { return inverseAt(i) > inverseAt(i + 1); }
  std::vector<int> rightDescents() const;
  std::vector<int> leftDescents() const;

  /// pi[n] = shift_n o pi o shift_{-n}.
  Permutation shifted(int n) const;
  bool fixesNonpositive() const { return isIdentity() || lo_ >= 1; }
  bool supportedIn(Window w) const { return isIdentity() || (w.lo <= lo() && hi() <= w.hi); }

  /// "e", a digit string when supported in [1, 9], otherwise "w:" plus the
  /// lexicographically first reduced word. Always accepted by parse().
  std::string toString() const;
  /// Digit string of pi(1) .. pi(width); requires support inside [1, width], width <= 9.
  std::string oneLineString(int width) const;

  std::size_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  Permutation(int lo, std::vector<int> images);

  int lo_ = 0;
  std::vector<int> images_;
  int length_ = 0;
};

// Free-function spellings of the core operations.
Permutation permFromWindow(std::span<const int> images, int offset);
inline Permutation multiply(const Permutation& p, const Permutation& q) { return p * q; }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline int length(const Permutation& p) { return p.length(); }
inline std::vector<int> rightDescents(const Permutation& p) { return p.rightDescents(); }
inline std::vector<int> leftDescents(const Permutation& p) { return p.leftDescents(); }
inline Permutation shiftConjugate(const Permutation& p, int n) { return p.shifted(n); }

Permutation wordProduct(std::span<const int> word);
bool isReducedWord(std::span<const int> word);

/// All reduced words in lexicographic order. Memoized; the reference stays valid.
const std::vector<Word>& reducedWords(const Permutation& p);
/// #RW(p) without materializing the words.
std::size_t countReducedWords(const Permutation& p);

/// Sum of the 1-indexed positions i with w_i < w_{i+1}.
int comaj(std::span<const int> word);
/// Number of pairs i < j with w_i > w_j.
int inversions(std::span<const int> word);

/// Every permutation supported in the window with length <= maxLength,
/// sorted by (length, one-line).
std::vector<Permutation> permutationsInWindow(Window window, int maxLength);

/// All (left, right) with p = left * right and lengths adding up.
std::vector<std::pair<Permutation, Permutation>> lengthAdditiveFactorizations(const Permutation& p);

/// Orders by length first, then lexicographically on the one-line notation.
struct ByLengthThenOneLine {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

}  // namespace martial

template <>
struct std::hash<martial::Permutation> {
  std::size_t operator()(const martial::Permutation& p) const noexcept { return p.hash(); }
};
