#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace martial {

using Rational = mpq_class;
using Integer = mpz_class;

/// Variable families. x and k are indexed (x_3, k_-1); the others are single
/// symbols. SlopeX/SlopeY are the two slopes of a two-slope Klyachko component
/// and print as bare "x" / "y", which never collides with the indexed "x_i".
enum class Family : std::uint8_t { X, K, A, B, Q, Alpha, Beta, SlopeX, SlopeY };

std::string_view familyName(Family f);
bool isIndexed(Family f);

struct Var {
  Family family = Family::X;
  int index = 0;

  friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var xVar(int i) { return {Family::X, i}; }
inline Var kVar(int i) { return {Family::K, i}; }
inline constexpr Var kVarA{Family::A, 0};
inline constexpr Var kVarB{Family::B, 0};
inline constexpr Var kVarQ{Family::Q, 0};
inline constexpr Var kVarAlpha{Family::Alpha, 0};
inline constexpr Var kVarBeta{Family::Beta, 0};
inline constexpr Var kVarSlopeX{Family::SlopeX, 0};
inline constexpr Var kVarSlopeY{Family::SlopeY, 0};

/// Product of powers of distinct variables; exponents are nonzero integers
/// (negative powers occur only for q in Laurent numerators).
class Monomial {
 public:
  struct Factor {
    Var var;
    int exponent;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };
  using Factors = boost::container::small_vector<Factor, 6>;

  Monomial() = default;
  explicit Monomial(Var v, int exponent = 1);

  int exponent(Var v) const;
  int degree() const;
  bool isOne() const { return factors_.empty(); }
  const Factors& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;
  Monomial withExponent(Var v, int exponent) const;

  /// "x_1^2 x_3"; the empty monomial prints as "1".
  std::string toString() const;
  static Monomial parse(std::string_view text);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Factors factors_;
};

/**
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Terms are kept in a map keyed by monomial; zero coefficients are never
 * stored, so structural equality is polynomial equality.
 */
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}   // NOLINT

  static MultiPoly variable(Var v);
  static MultiPoly term(const Monomial& m, const Rational& c = 1);

  bool isZero() const { return terms_.empty(); }
  std::optional<Rational> asConstant() const;
  Rational constantTerm() const;
  Rational coefficient(const Monomial& m) const;
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  int totalDegree() const;
  bool isHomogeneous() const;
  bool involves(Var v) const;
  bool onlyFamily(Family f) const;
  /// Largest / smallest index of the family among the variables present.
  std::optional<int> maxIndex(Family f) const;
  std::optional<int> minIndex(Family f) const;

  void addTerm(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned n) const;

  /// Replaces each variable v with replace(v) when that returns a value.
  /// Negative exponents are only allowed for variables left untouched.
  MultiPoly substitute(const std::function<std::optional<MultiPoly>(Var)>& replace) const;
  MultiPoly relabel(const std::function<Var(Var)>& rename) const;
  /// Keeps the terms whose monomial satisfies keep.
  MultiPoly filter(const std::function<bool(const Monomial&)>& keep) const;

  /// Canonical text: terms in increasing monomial order joined by " + ",
  /// each "coef * monomial" (or just "coef" for the constant), e.g.
  /// "-1/2 * x_1^2 x_3 + 3". The zero polynomial is "0".
  std::string toString() const;
  static MultiPoly parse(std::string_view text);

  /// [{"monomial": "x_1^2 x_3", "numerator": "3", "denominator": "2"}, ...]
  nlohmann::json toJson() const;
  static MultiPoly fromJson(const nlohmann::json& j);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Newton's divided difference (f - s_i f) / (x_i - x_{i+1}) in the x family.
/// Other families are treated as scalars.
MultiPoly dividedDifference(int i, const MultiPoly& f);
/// s_i f: swaps x_i and x_{i+1}.
MultiPoly swapAdjacent(int i, const MultiPoly& f);
/// sum_i d/dx_i f.
MultiPoly sumOfPartials(const MultiPoly& f);

/// [n]_q! and the Gaussian binomial [n choose k]_q as polynomials in q.
MultiPoly qFactorial(int n);
MultiPoly qBinomial(int n, int k);

std::string rationalToString(const Rational& r);

}  // namespace martial
