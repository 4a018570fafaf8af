#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>

#include "martial/formal_sum.hpp"
#include "martial/permutation.hpp"

namespace martial {

// Two commuting actions of the nil Hecke algebra on Schubert symbols.
//
//   d_pi = d_{q_1} ... d_{q_l} for a reduced word (q_1, ..., q_l) of pi.
//   partial:  d_rho acts as S_sigma -> S_{sigma rho^-1} when the length drops by l(rho)
//   martial:  d_pi  acts as S_sigma -> S_{pi sigma}     when the length drops by l(pi)
//
// All operators below are templated over the coefficient ring so the same
// code serves rational vectors and vectors with polynomial coefficients.

NilHeckeElement nilMultiply(const NilHeckeElement& a, const NilHeckeElement& b);
inline NilHeckeElement operator*(const NilHeckeElement& a, const NilHeckeElement& b) { return nilMultiply(a, b); }

template <class C>
BasicSchubertVector<C> applyPartial(const Permutation& rho, const BasicSchubertVector<C>& v) {
  BasicSchubertVector<C> out;
  const Permutation rhoInv = rho.inverse();
  for (const auto& [sigma, c] : v) {
    Permutation image = sigma * rhoInv;
    if (image.length() == sigma.length() - rho.length()) out.add(image, c);
  }
  return out;
}

template <class C>
BasicSchubertVector<C> applyMartial(const Permutation& pi, const BasicSchubertVector<C>& v) {
  BasicSchubertVector<C> out;
  for (const auto& [sigma, c] : v) {
    Permutation image = pi * sigma;
    if (image.length() == sigma.length() - pi.length()) out.add(image, c);
  }
  return out;
}

template <class C>
BasicSchubertVector<C> applyPartialSimple(int i, const BasicSchubertVector<C>& v) {
  BasicSchubertVector<C> out;
  for (const auto& [sigma, c] : v)
    if (sigma.hasRightDescent(i)) out.add(sigma.timesSimple(i), c);
  return out;
}

template <class C>
BasicSchubertVector<C> applyMartialSimple(int i, const BasicSchubertVector<C>& v) {
  BasicSchubertVector<C> out;
  for (const auto& [sigma, c] : v)
    if (sigma.hasLeftDescent(i)) out.add(sigma.simpleTimes(i), c);
  return out;
}

/// d_{q_1} o ... o d_{q_l} applied one simple operator at a time (rightmost first).
template <class C>
BasicSchubertVector<C> applyPartialWord(std::span<const int> word, BasicSchubertVector<C> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = applyPartialSimple(*it, v);
  return v;
}

template <class C>
BasicSchubertVector<C> applyMartialWord(std::span<const int> word, BasicSchubertVector<C> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = applyMartialSimple(*it, v);
  return v;
}

/// Action of sum c_pi d_pi through the martial operators.
template <class C>
BasicSchubertVector<C> applyNilHecke(const NilHeckeElement& e, const BasicSchubertVector<C>& v) {
  BasicSchubertVector<C> out;
  for (const auto& [pi, c] : e) out += applyMartial(pi, v) * C(c);
  return out;
}

/// A possibly infinite sum of c(i) m_i, evaluated lazily.
template <class C>
class BasicCoefficientFunction {
 public:
  using Rule = std::function<C(int)>;

  explicit BasicCoefficientFunction(Rule rule, std::string name = {})
      : rule_(std::move(rule)), name_(std::move(name)) {}

  C operator()(int i) const { return rule_(i); }
  const std::string& name() const { return name_; }

 private:
  Rule rule_;
  std::string name_;
};

using CoefficientFunction = BasicCoefficientFunction<Rational>;
using PolyCoefficientFunction = BasicCoefficientFunction<MultiPoly>;

/// c(i) = i, the pullback of sum_i d/dx_i.
CoefficientFunction nablaCoefficients();
/// c(i) = 1.
CoefficientFunction xiCoefficients();
/// c(i) = a i + b, i.e. a nabla + b xi.
PolyCoefficientFunction affineCoefficients();

/// sum_i c(i) m_i v, summing over the left descents of each basis term.
template <class C>
BasicSchubertVector<C> applyCoefficientOperator(const BasicCoefficientFunction<C>& c,
                                                const BasicSchubertVector<C>& v) {
  BasicSchubertVector<C> out;
  for (const auto& [sigma, coeff] : v) {
    for (int i : sigma.leftDescents()) {
      C weight = c(i);
      if (weight == C{}) continue;
      out.add(sigma.simpleTimes(i), weight * coeff);
    }
  }
  return out;
}

using LinearOperator = std::function<SchubertVector(const SchubertVector&)>;

struct CommutationFailure {
  enum class Kind { DoesNotCommute, DoesNotReproduce };
  Kind kind = Kind::DoesNotCommute;
  Permutation sigma;
  /// The letter i of the failing d_i (DoesNotCommute only).
  int letter = 0;
  SchubertVector expected;
  SchubertVector actual;
};

using CommutantResult = std::variant<NilHeckeElement, CommutationFailure>;

/**
 * Recovers op = sum c_pi m_pi with c_pi = integral(op(S_{pi^-1})).
 *
 * Commutation with every d_i, i a letter of the window, is checked on every
 * S_sigma supported in the window with length <= maxLength. The
 * reconstruction is then re-applied to the same probes and compared with op.
 */
CommutantResult reconstructCommutant(const LinearOperator& op, Window window, int maxLength);

using ProductOracle = std::function<SchubertVector(const SchubertVector&, const SchubertVector&)>;

/// D(fg) - D(f) g - f D(g) for D = sum c(i) m_i.
SchubertVector leibnizDefect(const CoefficientFunction& c, const SchubertVector& f, const SchubertVector& g,
                             const ProductOracle& product);

/// D(S_{r_alpha}^2) - 2 S_{r_alpha} D(S_{r_alpha}); equals
/// (c(alpha-1) + c(alpha+1) - 2 c(alpha)) S_{r_alpha}.
SchubertVector derivationDefect(const CoefficientFunction& c, int alpha, const ProductOracle& product);

}  // namespace martial
