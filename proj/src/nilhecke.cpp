#include "martial/nilhecke.hpp"

namespace martial {

NilHeckeElement nilMultiply(const NilHeckeElement& a, const NilHeckeElement& b) {
  NilHeckeElement out;
  for (const auto& [pi, x] : a) {
    for (const auto& [rho, y] : b) {
      Permutation product = pi * rho;
      if (product.length() == pi.length() + rho.length()) out.add(product, Rational(x * y));
    }
  }
  return out;
}

CoefficientFunction nablaCoefficients() {
  return CoefficientFunction([](int i) { return Rational(i); }, "nabla");
}

CoefficientFunction xiCoefficients() {
  return CoefficientFunction([](int) { return Rational(1); }, "xi");
}

PolyCoefficientFunction affineCoefficients() {
  return PolyCoefficientFunction(
      [](int i) { return MultiPoly::variable(kVarA) * Rational(i) + MultiPoly::variable(kVarB); }, "a nabla + b xi");
}

CommutantResult reconstructCommutant(const LinearOperator& op, Window window, int maxLength) {
  const auto probes = permutationsInWindow(window, maxLength);
  for (const auto& sigma : probes) {
    const auto basis = SchubertVector::basis(sigma);
    const auto image = op(basis);
    for (int i = window.lo; i < window.hi; ++i) {
      auto opThenPartial = applyPartialSimple(i, image);
      auto partialThenOp = op(applyPartialSimple(i, basis));
      if (opThenPartial != partialThenOp)
        return CommutationFailure{CommutationFailure::Kind::DoesNotCommute, sigma, i, partialThenOp, opThenPartial};
    }
  }
  NilHeckeElement element;
  for (const auto& pi : probes) element.add(pi, integral(op(SchubertVector::basis(pi.inverse()))));
  for (const auto& sigma : probes) {
    const auto basis = SchubertVector::basis(sigma);
    auto expected = op(basis);
    auto actual = applyNilHecke(element, basis);
    if (expected != actual)
      return CommutationFailure{CommutationFailure::Kind::DoesNotReproduce, sigma, 0, expected, actual};
  }
  return element;
}

SchubertVector leibnizDefect(const CoefficientFunction& c, const SchubertVector& f, const SchubertVector& g,
                             const ProductOracle& product) {
  SchubertVector out = applyCoefficientOperator(c, product(f, g));
  out -= product(applyCoefficientOperator(c, f), g);
  out -= product(f, applyCoefficientOperator(c, g));
  return out;
}

SchubertVector derivationDefect(const CoefficientFunction& c, int alpha, const ProductOracle& product) {
  const auto s = SchubertVector::basis(Permutation::simple(alpha));
  SchubertVector out = applyCoefficientOperator(c, product(s, s));
  out -= product(s, applyCoefficientOperator(c, s)) * Rational(2);
  return out;
}

}  // namespace martial
