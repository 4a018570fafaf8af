#pragma once

#include <variant>
#include <vector>

#include "martial/formal_sum.hpp"
#include "martial/permutation.hpp"
#include "martial/poly.hpp"

namespace martial {

/// (1/l!) sum over reduced words Q of prod_{q in Q} k_q.
MultiPoly klyachkoGenus(const Permutation& pi);

/// (1/l!) sum over reduced words P of prod_{i in P} (a i + b).
MultiPoly affineLinearGenus(const Permutation& pi);

/// Numerator over [l]_q!; q exponents may be negative for nonpositive letters.
struct QGenusValue {
  MultiPoly numerator;
  int denomLength = 0;

  friend bool operator==(const QGenusValue&, const QGenusValue&) = default;
};

/// numerator = sum_Q q^comaj(Q) prod_{i in Q} (alpha q^i + beta).
QGenusValue qKlyachkoGenus(const Permutation& pi);

/// Substitutes q = 1 and divides by l!. Every factor becomes alpha + beta, so
/// this is the affine-linear genus at a = 0, b = alpha + beta.
MultiPoly qGenusAtOne(const QGenusValue& v);

/// k_m = a m + b.
struct AffineLinearComponent {};
/// k_m = x (m - i) for m <= i, 0 on [i, j], y (m - j) for m >= j.
struct TwoSlopeComponent {
  int i = 0;
  int j = 0;
};
using ComponentSpec = std::variant<AffineLinearComponent, TwoSlopeComponent>;

/// The value substituted for k_m.
MultiPoly componentValue(const ComponentSpec& spec, int m);
/// k_m (-k_{m-1} + 2 k_m - k_{m+1}) = 0 for every m in the window.
bool solvesKlyachkoEquations(const ComponentSpec& spec, Window window);
/// klyachkoGenus with the component substituted. Throws ValidationError if
/// i > j and InconsistencyError if the component fails the equations near pi.
MultiPoly componentEvaluate(const ComponentSpec& spec, const Permutation& pi);

/// a nabla + b xi applied k times to S_pi and divided by k!, for k = 0, 1, ...
/// until the term vanishes.
std::vector<PolySchubertVector> expTriangleSeries(const Permutation& pi);
/// Coefficient of S_e in exp(a nabla + b xi) S_pi.
MultiPoly expTriangle(const Permutation& pi);

}  // namespace martial
