#include "martial/genus.hpp"

#include <algorithm>

#include "martial/errors.hpp"
#include "martial/nilhecke.hpp"

namespace martial {

namespace {

Rational inverseFactorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(Integer(1), f);
}

MultiPoly sumOverWords(const Permutation& pi, const std::function<MultiPoly(int)>& factor) {
  MultiPoly out;
  for (const auto& word : reducedWords(pi)) {
    MultiPoly term(1);
    for (int letter : word) term *= factor(letter);
    out += term;
  }
  return out * inverseFactorial(pi.length());
}

MultiPoly qPower(int e) { return MultiPoly::term(Monomial(kVarQ, e)); }

}  // namespace

MultiPoly klyachkoGenus(const Permutation& pi) {
  return sumOverWords(pi, [](int m) { return MultiPoly::variable(kVar(m)); });
}

MultiPoly affineLinearGenus(const Permutation& pi) {
  const MultiPoly a = MultiPoly::variable(kVarA);
  const MultiPoly b = MultiPoly::variable(kVarB);
  return sumOverWords(pi, [&](int i) { return a * Rational(i) + b; });
}

QGenusValue qKlyachkoGenus(const Permutation& pi) {
  const MultiPoly alpha = MultiPoly::variable(kVarAlpha);
  const MultiPoly beta = MultiPoly::variable(kVarBeta);
  QGenusValue out;
  out.denomLength = pi.length();
  for (const auto& word : reducedWords(pi)) {
    MultiPoly term = qPower(comaj(word));
    for (int i : word) term *= alpha * qPower(i) + beta;
    out.numerator += term;
  }
  return out;
}

MultiPoly qGenusAtOne(const QGenusValue& v) {
  MultiPoly out = v.numerator.substitute([](Var var) -> std::optional<MultiPoly> {
    if (var == kVarQ) return MultiPoly(1);
    return std::nullopt;
  });
  return out * inverseFactorial(v.denomLength);
}

MultiPoly componentValue(const ComponentSpec& spec, int m) {
  if (std::holds_alternative<AffineLinearComponent>(spec))
    return MultiPoly::variable(kVarA) * Rational(m) + MultiPoly::variable(kVarB);
  const auto& two = std::get<TwoSlopeComponent>(spec);
  if (two.i > two.j) throw ValidationError("two-slope component needs i <= j");
  if (m <= two.i) return MultiPoly::variable(kVarSlopeX) * Rational(m - two.i);
  if (m >= two.j) return MultiPoly::variable(kVarSlopeY) * Rational(m - two.j);
  return MultiPoly{};
}

bool solvesKlyachkoEquations(const ComponentSpec& spec, Window window) {
  for (int m = window.lo; m <= window.hi; ++m) {
    MultiPoly k = componentValue(spec, m);
    MultiPoly laplacian = k * Rational(2) - componentValue(spec, m - 1) - componentValue(spec, m + 1);
    if (!(k * laplacian).isZero()) return false;
  }
  return true;
}

MultiPoly componentEvaluate(const ComponentSpec& spec, const Permutation& pi) {
  if (const auto* two = std::get_if<TwoSlopeComponent>(&spec); two && two->i > two->j)
    throw ValidationError("two-slope component needs i <= j");
  Window probe{0, 1};
  if (!pi.isIdentity()) probe = {pi.letters().front() - 1, pi.letters().back() + 1};
  if (const auto* two = std::get_if<TwoSlopeComponent>(&spec))
    probe = {std::min(probe.lo, two->i - 1), std::max(probe.hi, two->j + 1)};
  if (!solvesKlyachkoEquations(spec, probe))
    throw InconsistencyError("component does not solve the Klyachko equations");
  return klyachkoGenus(pi).substitute([&](Var v) -> std::optional<MultiPoly> {
    if (v.family == Family::K) return componentValue(spec, v.index);
    return std::nullopt;
  });
}

std::vector<PolySchubertVector> expTriangleSeries(const Permutation& pi) {
  const auto d = affineCoefficients();
  std::vector<PolySchubertVector> terms{PolySchubertVector::basis(pi)};
  for (int k = 1;; ++k) {
    auto next = applyCoefficientOperator(d, terms.back()) * MultiPoly(Rational(1, k));
    if (next.isZero()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

MultiPoly expTriangle(const Permutation& pi) {
  MultiPoly out;
  for (const auto& term : expTriangleSeries(pi)) out += integral(term);
  return out;
}

}  // namespace martial
