#include "martial/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "martial/coalgebra.hpp"
#include "martial/errors.hpp"
#include "martial/genus.hpp"
#include "martial/memo.hpp"
#include "martial/nilhecke.hpp"
#include "martial/parallel.hpp"
#include "martial/qstats.hpp"
#include "martial/schubert.hpp"

namespace martial {

namespace {

using json = nlohmann::json;
using Failure = std::optional<json>;
using PermPair = std::pair<Permutation, Permutation>;

json vectorJson(const SchubertVector& v) {
  json out = json::object();
  for (const auto& [sigma, c] : v) out[sigma.toString()] = rationalToString(c);
  return out;
}

json pairVectorJson(const PairVector& v) {
  json out = json::object();
  for (const auto& [pair, c] : v) out[pairToString(pair)] = rationalToString(c);
  return out;
}

json windowJson(Window w) { return std::to_string(w.lo) + ".." + std::to_string(w.hi); }

std::string windowText(Window w) { return std::to_string(w.lo) + ".." + std::to_string(w.hi); }

std::vector<PermPair> pairsWithLengthSum(Window w, int maxSum) {
  const auto perms = permutationsInWindow(w, maxSum);
  std::vector<PermPair> out;
  for (const auto& a : perms)
    for (const auto& b : perms)
      if (a.length() + b.length() <= maxSum) out.emplace_back(a, b);
  return out;
}

json pairInput(const PermPair& p) { return {{"pi", p.first.toString()}, {"rho", p.second.toString()}}; }

/// Runs check on every case (in parallel), recording the first failure in input order.
template <class T, class Check>
void sweep(VerificationReport& report, const std::vector<T>& cases, Check&& check, int jobs) {
  auto results = parallelMap(cases, check, jobs);
  report.checked += cases.size();
  for (auto& r : results) {
    if (!r) continue;
    report.passed = false;
    if (report.counterexample.is_null()) report.counterexample = std::move(*r);
  }
}

void single(VerificationReport& report, bool ok, const std::function<json()>& describe) {
  ++report.checked;
  if (ok) return;
  report.passed = false;
  if (report.counterexample.is_null()) report.counterexample = describe();
}

struct Context {
  const SuiteOptions& options;
  VerificationReport& report;

  Window window(Window fallback) const {
    Window w = options.window.value_or(fallback);
    if (w.lo > w.hi) throw ValidationError("empty window " + windowText(w));
    report.parameters["window"] = windowJson(w);
    return w;
  }
  int maxLength(int fallback) const {
    int m = options.maxLength.value_or(fallback);
    if (m < 0) throw ValidationError("--max-length must be nonnegative");
    report.parameters["max_length"] = m;
    return m;
  }
  int jobs() const { return options.jobs; }
};

// --- nil Hecke -------------------------------------------------------------

void commutantSuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  const int maxLen = ctx.maxLength(4);
  const auto ops = permutationsInWindow(w, maxLen);
  const auto probes = permutationsInWindow(w, maxLen + 1);
  ctx.report.parameters["probe_length"] = maxLen + 1;

  sweep(ctx.report, probes, [&](const Permutation& sigma) -> Failure {
    const auto s = SchubertVector::basis(sigma);
    for (const auto& pi : ops) {
      const auto mS = applyMartial(pi, s);
      const auto dS = applyPartial(pi, s);
      for (const auto& word : reducedWords(pi)) {
        if (applyMartialWord(word, s) != mS || applyPartialWord(word, s) != dS)
          return json{{"check", "reduced-word independence"}, {"pi", pi.toString()}, {"sigma", sigma.toString()}};
      }
      for (const auto& rho : ops) {
        auto lhs = applyMartial(pi, applyPartial(rho, s));
        auto rhs = applyPartial(rho, mS);
        if (lhs != rhs)
          return json{{"check", "m_pi d_rho = d_rho m_pi"}, {"pi", pi.toString()}, {"rho", rho.toString()},
                      {"sigma", sigma.toString()}, {"lhs", vectorJson(lhs)}, {"rhs", vectorJson(rhs)}};
        const Permutation prod = pi * rho;
        const bool additive = prod.length() == pi.length() + rho.length();
        auto composed = applyMartial(pi, applyMartial(rho, s));
        auto direct = additive ? applyMartial(prod, s) : SchubertVector{};
        if (composed != direct)
          return json{{"check", "m_pi m_rho = m_{pi rho}"}, {"pi", pi.toString()}, {"rho", rho.toString()},
                      {"sigma", sigma.toString()}, {"lhs", vectorJson(composed)}, {"rhs", vectorJson(direct)}};
        auto dComposed = applyPartial(pi, applyPartial(rho, s));
        auto dDirect = additive ? applyPartial(prod, s) : SchubertVector{};
        if (dComposed != dDirect)
          return json{{"check", "d_pi d_rho = d_{pi rho}"}, {"pi", pi.toString()}, {"rho", rho.toString()},
                      {"sigma", sigma.toString()}, {"lhs", vectorJson(dComposed)}, {"rhs", vectorJson(dDirect)}};
      }
    }
    return std::nullopt;
  }, ctx.jobs());

  // Reconstruction round trip on seeded random elements.
  std::mt19937 rng(20240917);
  std::vector<NilHeckeElement> elements;
  for (int n = 0; n < 50; ++n) {
    NilHeckeElement e;
    const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int t = 0; t < terms; ++t) {
      const auto& pi = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
      int c = std::uniform_int_distribution<int>(-3, 3)(rng);
      Rational coeff(c == 0 ? 1 : c, std::uniform_int_distribution<int>(1, 2)(rng));
      coeff.canonicalize();
      e.add(pi, coeff);
    }
    elements.push_back(std::move(e));
  }
  ctx.report.parameters["random_elements"] = elements.size();
  sweep(ctx.report, elements, [&](const NilHeckeElement& e) -> Failure {
    auto result = reconstructCommutant([&](const SchubertVector& v) { return applyNilHecke(e, v); }, w, maxLen + 1);
    json input = json::object();
    for (const auto& [pi, c] : e) input[pi.toString()] = rationalToString(c);
    if (const auto* failure = std::get_if<CommutationFailure>(&result))
      return json{{"check", "reconstruction"}, {"element", input}, {"sigma", failure->sigma.toString()},
                  {"letter", failure->letter}};
    if (std::get<NilHeckeElement>(result) != e) return json{{"check", "reconstruction round trip"}, {"element", input}};
    return std::nullopt;
  }, ctx.jobs());
}

void leibnizSuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  const int maxLen = ctx.maxLength(5);
  const ProductOracle product = [](const SchubertVector& f, const SchubertVector& g) { return multiply(f, g); };
  const std::vector<CoefficientFunction> derivations{nablaCoefficients(), xiCoefficients()};
  sweep(ctx.report, pairsWithLengthSum(w, maxLen), [&](const PermPair& p) -> Failure {
    for (const auto& d : derivations) {
      auto defect = leibnizDefect(d, SchubertVector::basis(p.first), SchubertVector::basis(p.second), product);
      if (!defect.isZero()) {
        json out = pairInput(p);
        out["operator"] = d.name();
        out["defect"] = vectorJson(defect);
        return out;
      }
    }
    return std::nullopt;
  }, ctx.jobs());

  const CoefficientFunction square([](int i) { return Rational(i * i); }, "i^2");
  std::vector<int> alphas;
  for (int a = w.lo - 2; a <= w.hi + 2; ++a) alphas.push_back(a);
  sweep(ctx.report, alphas, [&](int alpha) -> Failure {
    for (const auto* c : {&derivations[0], &derivations[1], &square}) {
      auto defect = derivationDefect(*c, alpha, product);
      auto expected = SchubertVector::basis(Permutation::simple(alpha)) *
                      Rational((*c)(alpha - 1) + (*c)(alpha + 1) - 2 * (*c)(alpha));
      if (defect != expected)
        return json{{"check", "derivation defect"}, {"alpha", alpha}, {"operator", c->name()},
                    {"defect", vectorJson(defect)}, {"expected", vectorJson(expected)}};
    }
    return std::nullopt;
  }, ctx.jobs());
}

// --- polynomials ------------------------------------------------------------

void monkSuite(const Context& ctx) {
  const Window w = ctx.window({1, 4});
  const int maxLen = ctx.maxLength((w.hi - w.lo + 1) * (w.hi - w.lo) / 2);
  std::vector<std::pair<Permutation, int>> cases;
  for (const auto& pi : permutationsInWindow(w, maxLen))
    for (int k = w.lo - 1; k < w.hi; ++k) cases.emplace_back(pi, k);
  sweep(ctx.report, cases, [&](const std::pair<Permutation, int>& c) -> Failure {
    const auto& product = structureConstants(c.first, Permutation::simple(c.second));
    auto monk = monkProduct(c.second, c.first);
    if (product == monk) return std::nullopt;
    return json{{"pi", c.first.toString()}, {"k", c.second}, {"structure_constants", vectorJson(product)},
                {"monk", vectorJson(monk)}};
  }, ctx.jobs());
}

void lsGenusSuite(const Context& ctx) {
  const Window w = ctx.window({1, 4});
  if (w.lo < 1) throw ValidationError("ls-genus needs a window inside the positive integers");
  const int maxLen = ctx.maxLength((w.hi - w.lo + 1) * (w.hi - w.lo) / 2);
  const int n = w.hi;
  std::vector<int> longest;
  for (int v = n; v >= 1; --v) longest.push_back(v);
  const Permutation w0 = Permutation::fromWindow(longest, 1);
  sweep(ctx.report, permutationsInWindow(w, maxLen), [&](const Permutation& pi) -> Failure {
    const MultiPoly& s = schubertPolynomial(pi);
    for (int i = 1; i <= n; ++i) {
      auto lhs = dividedDifference(i, s);
      auto rhs = synthesize(applyPartialSimple(i, SchubertVector::basis(pi)));
      if (lhs != rhs)
        return json{{"check", "divided difference equivariance"}, {"pi", pi.toString()}, {"i", i},
                    {"lhs", lhs.toString()}, {"rhs", rhs.toString()}};
    }
    for (const auto& chain : reducedWords(pi.inverse() * w0)) {
      if (schubertPolynomialByChain(pi, n, chain) != s)
        return json{{"check", "chain independence"}, {"pi", pi.toString()}, {"n", n}};
    }
    if (schubertPolynomialByChain(pi, n + 1) != s)
      return json{{"check", "padding independence"}, {"pi", pi.toString()}, {"n", n + 1}};
    if (expandSchubertBasis(s) != SchubertVector::basis(pi))
      return json{{"check", "expansion round trip"}, {"pi", pi.toString()}};
    return std::nullopt;
  }, ctx.jobs());
}

// --- genera ----------------------------------------------------------------

void triangleSuite(const Context& ctx) {
  const Window w = ctx.window({-2, 5});
  const int maxLen = ctx.maxLength(5);
  sweep(ctx.report, permutationsInWindow(w, maxLen), [&](const Permutation& pi) -> Failure {
    auto series = expTriangleSeries(pi);
    auto lhs = expTriangle(pi);
    auto rhs = affineLinearGenus(pi);
    if (lhs == rhs && static_cast<int>(series.size()) == pi.length() + 1) return std::nullopt;
    return json{{"pi", pi.toString()}, {"exp_triangle", lhs.toString()}, {"affine_linear", rhs.toString()},
                {"series_terms", series.size()}, {"expected_terms", pi.length() + 1}};
  }, ctx.jobs());
}

void gammaMultSuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  const int maxLen = ctx.maxLength(6);
  std::vector<ComponentSpec> specs{AffineLinearComponent{}};
  for (int i = w.lo - 1; i <= w.hi; ++i)
    for (int j = i; j <= w.hi; ++j) specs.push_back(TwoSlopeComponent{i, j});
  ctx.report.parameters["components"] = specs.size();

  MemoCache<Permutation, std::vector<MultiPoly>> values;
  auto valuesOf = [&](const Permutation& p) -> const std::vector<MultiPoly>& {
    return values.get(p, [&] {
      std::vector<MultiPoly> out{affineLinearGenus(p)};
      for (std::size_t s = 1; s < specs.size(); ++s) out.push_back(componentEvaluate(specs[s], p));
      return out;
    });
  };
  auto specName = [&](std::size_t s) -> std::string {
    if (s == 0) return "affine-linear";
    const auto& t = std::get<TwoSlopeComponent>(specs[s]);
    return "two-slope i=" + std::to_string(t.i) + " j=" + std::to_string(t.j);
  };
  sweep(ctx.report, pairsWithLengthSum(w, maxLen), [&](const PermPair& p) -> Failure {
    const auto& product = structureConstants(p.first, p.second);
    const auto& a = valuesOf(p.first);
    const auto& b = valuesOf(p.second);
    for (std::size_t s = 0; s < specs.size(); ++s) {
      MultiPoly lhs = a[s] * b[s];
      MultiPoly rhs;
      for (const auto& [sigma, c] : product) rhs += valuesOf(sigma)[s] * c;
      if (lhs != rhs) {
        json out = pairInput(p);
        out["component"] = specName(s);
        out["lhs"] = lhs.toString();
        out["rhs"] = rhs.toString();
        return out;
      }
    }
    return std::nullopt;
  }, ctx.jobs());
}

void componentsSuite(const Context& ctx) {
  const Window w = ctx.window({-2, 5});
  const int maxLen = ctx.maxLength(4);
  std::vector<ComponentSpec> specs{AffineLinearComponent{}};
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = i; j <= w.hi; ++j) specs.push_back(TwoSlopeComponent{i, j});
  const Window probe{w.lo - 4, w.hi + 4};
  sweep(ctx.report, specs, [&](const ComponentSpec& spec) -> Failure {
    if (solvesKlyachkoEquations(spec, probe)) return std::nullopt;
    json out{{"check", "Klyachko equations"}};
    if (const auto* t = std::get_if<TwoSlopeComponent>(&spec)) {
      out["i"] = t->i;
      out["j"] = t->j;
    }
    return out;
  }, ctx.jobs());

  sweep(ctx.report, permutationsInWindow(w, maxLen), [&](const Permutation& pi) -> Failure {
    if (componentEvaluate(AffineLinearComponent{}, pi) != affineLinearGenus(pi))
      return json{{"check", "affine-linear component"}, {"pi", pi.toString()}};
    for (std::size_t s = 1; s < specs.size(); ++s) {
      const auto& t = std::get<TwoSlopeComponent>(specs[s]);
      const auto letters = pi.letters();
      const bool usesBand = std::any_of(letters.begin(), letters.end(), [&](int m) { return t.i <= m && m <= t.j; });
      if (usesBand && !componentEvaluate(t, pi).isZero())
        return json{{"check", "two-slope vanishing"}, {"pi", pi.toString()}, {"i", t.i}, {"j", t.j}};
    }
    return std::nullopt;
  }, ctx.jobs());

  std::vector<int> shifts;
  for (int i = w.lo; i <= w.hi; ++i) shifts.push_back(i);
  sweep(ctx.report, shifts, [&](int i) -> Failure {
    auto value = componentEvaluate(TwoSlopeComponent{i, i + 1}, Permutation::simple(i - 2));
    auto expected = MultiPoly::variable(kVarSlopeX) * Rational(-2);
    if (value == expected) return std::nullopt;
    return json{{"check", "two-slope at r_{i-2}"}, {"i", i}, {"value", value.toString()}};
  }, ctx.jobs());
}

void factorizationSuite(const Context& ctx) {
  const Window w = ctx.window({-1, 5});
  const int maxLen = ctx.maxLength(4);
  sweep(ctx.report, permutationsInWindow(w, maxLen), [&](const Permutation& pi) -> Failure {
    const auto letters = pi.letters();
    for (int m = w.lo - 1; m <= w.hi; ++m) {
      const auto result = disjointFactorization(pi, m);
      const bool uses = std::find(letters.begin(), letters.end(), m) != letters.end();
      json where{{"pi", pi.toString()}, {"m", m}, {"situation", static_cast<int>(result.situation)}};
      if (uses != (result.situation == LetterSituation::UsesLetter)) return where;
      if (uses) {
        for (const auto& word : reducedWords(pi))
          if (std::find(word.begin(), word.end(), m) == word.end()) return where;
        if (!componentEvaluate(TwoSlopeComponent{m, m}, pi).isZero()) return where;
      }
      if (result.situation == LetterSituation::SplitsAround) {
        const auto& [left, right] = *result.factors;
        const auto l = left.letters();
        const auto r = right.letters();
        if (l.empty() || r.empty() || l.back() >= m || r.front() <= m) return where;
      }
    }
    return std::nullopt;
  }, ctx.jobs());
}

// --- q-statistics ----------------------------------------------------------

void qIdentitySuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  const int maxLen = ctx.maxLength(6);
  sweep(ctx.report, pairsWithLengthSum(w, maxLen), [&](const PermPair& p) -> Failure {
    auto sides = multipliedIdentitySides(p.first, p.second);
    json out = pairInput(p);
    if (sides.lhs != sides.rhs) {
      out["lhs"] = sides.lhs.toString();
      out["rhs"] = sides.rhs.toString();
      return out;
    }
    // The top alpha-degree part is the fully barred shuffle distribution.
    const int total = p.first.length() + p.second.length();
    MultiPoly fromDistribution;
    for (const auto& [key, count] : qNenashevDistributions(p.first, p.second, total).lhs)
      fromDistribution += MultiPoly::term(Monomial(kVarQ, key.second) * Monomial(kVarAlpha, total), count);
    MultiPoly top = sides.lhs.filter([&](const Monomial& m) { return m.exponent(kVarAlpha) == total; });
    if (top != fromDistribution) {
      out["check"] = "fully barred specialization";
      out["alpha_top"] = top.toString();
      out["distribution"] = fromDistribution.toString();
      return out;
    }
    return std::nullopt;
  }, ctx.jobs());
}

void qNenashevSuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  if (w.lo < 1) throw ValidationError("q-nenashev needs positive letters");
  const int maxLen = ctx.maxLength(6);
  sweep(ctx.report, pairsWithLengthSum(w, maxLen), [&](const PermPair& p) -> Failure {
    auto d = qNenashevDistributions(p.first, p.second);
    if (d.holds()) return std::nullopt;
    json out = pairInput(p);
    out["lhs"] = distributionToString(d.lhs);
    out["rhs"] = distributionToString(d.rhs);
    return out;
  }, ctx.jobs());
}

void nenashevCountSuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  const int maxLen = ctx.maxLength(6);
  sweep(ctx.report, pairsWithLengthSum(w, maxLen), [&](const PermPair& p) -> Failure {
    if (nenashevCountCheck(p.first, p.second)) return std::nullopt;
    return pairInput(p);
  }, ctx.jobs());
}

void equidistSuite(const Context& ctx) {
  const int maxN = ctx.maxLength(6);
  std::vector<int> ns;
  for (int n = 0; n <= maxN; ++n) ns.push_back(n);
  sweep(ctx.report, ns, [&](int n) -> Failure {
    auto [inv, cmj] = equidistributionSides(n);
    if (inv == cmj) return std::nullopt;
    return json{{"n", n}, {"inv", inv.toString()}, {"comaj", cmj.toString()}};
  }, ctx.jobs());

  // Sets J of pairwise non-adjacent letters and every split J = K + (J \ K).
  const Window w = ctx.window({1, 9});
  std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
  const int span = w.hi - w.lo + 1;
  for (unsigned mask = 1; mask < (1u << span); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::vector<int> j;
    for (int b = 0; b < span; ++b)
      if (mask >> b & 1u) j.push_back(w.lo + b);
    if (static_cast<int>(j.size()) > 5) continue;
    for (unsigned sub = 0; sub < (1u << j.size()); ++sub) {
      std::vector<int> k;
      for (std::size_t b = 0; b < j.size(); ++b)
        if (sub >> b & 1u) k.push_back(j[b]);
      splits.emplace_back(j, k);
    }
  }
  sweep(ctx.report, splits, [&](const std::pair<std::vector<int>, std::vector<int>>& s) -> Failure {
    auto r = disjointSupportCheck(s.first, s.second);
    if (r.singleTerm && r.countMatches && r.distributionMatches) return std::nullopt;
    return json{{"J", s.first}, {"K", s.second}, {"single_term", r.singleTerm}, {"count", r.countMatches},
                {"distribution", r.distributionMatches}};
  }, ctx.jobs());
}

void garsiaGesselSuite(const Context& ctx) {
  const int maxTotal = ctx.maxLength(6);
  // Only the relative order of the letters matters, so letters 1..m cover every case.
  std::vector<std::pair<Word, Word>> cases;
  for (int m = 0; m <= maxTotal; ++m) {
    Word letters(m);
    for (int i = 0; i < m; ++i) letters[i] = i + 1;
    do {
      for (int split = 0; split <= m; ++split)
        cases.emplace_back(Word(letters.begin(), letters.begin() + split), Word(letters.begin() + split, letters.end()));
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  sweep(ctx.report, cases, [&](const std::pair<Word, Word>& c) -> Failure {
    if (garsiaGesselCheck(c.first, c.second)) return std::nullopt;
    return json{{"P", c.first}, {"R", c.second}};
  }, ctx.jobs());
}

// --- coalgebra ---------------------------------------------------------------

void hopfDefectSuite(const Context& ctx) {
  const auto r = [](int i) { return Permutation::simple(i); };
  const auto s2 = SchubertVector::basis(r(2));
  PairVector expected;
  expected.add({r(1), r(2)}, 1);
  expected.add({r(3), r(2)}, 1);
  expected.add({r(2), r(2)}, -2);
  const auto defect = hopfDefect(s2, s2);
  single(ctx.report, defect == expected, [&] {
    return json{{"check", "defect of S_r2 squared"}, {"defect", pairVectorJson(defect)},
                {"expected", pairVectorJson(expected)}};
  });

  const Window w = ctx.window({1, 4});
  const int maxLen = ctx.maxLength(3);
  const auto perms = permutationsInWindow(w, maxLen);
  std::vector<PermPair> pairs;
  for (const auto& a : perms)
    for (const auto& b : perms) pairs.emplace_back(a, b);
  sweep(ctx.report, pairs, [&](const PermPair& p) -> Failure {
    if (stanleyKillsDefect(SchubertVector::basis(p.first), SchubertVector::basis(p.second))) return std::nullopt;
    json out = pairInput(p);
    out["check"] = "Stanley kills defect";
    return out;
  }, ctx.jobs());

  const Window coassocWindow{w.lo, w.hi + 1};
  sweep(ctx.report, permutationsInWindow(coassocWindow, maxLen + 2), [&](const Permutation& sigma) -> Failure {
    std::map<std::tuple<Permutation, Permutation, Permutation>, Rational> left, right;
    for (const auto& [a, bc] : lengthAdditiveFactorizations(sigma))
      for (const auto& [b, c] : lengthAdditiveFactorizations(bc)) left[{a, b, c}] += 1;
    for (const auto& [ab, c] : lengthAdditiveFactorizations(sigma))
      for (const auto& [a, b] : lengthAdditiveFactorizations(ab)) right[{a, b, c}] += 1;
    if (left == right) return std::nullopt;
    return json{{"check", "coassociativity"}, {"sigma", sigma.toString()}};
  }, ctx.jobs());
}

void separatedHopfSuite(const Context& ctx) {
  const auto r2 = Permutation::simple(2);
  for (int n = 3; n <= 6; ++n)
    single(ctx.report, separatedHopfness(r2, r2, n), [&] { return json{{"pi", "r2"}, {"rho", "r2"}, {"N", n}}; });
  single(ctx.report, !separatedHopfness(r2, r2, 0),
         [] { return json{{"pi", "r2"}, {"rho", "r2"}, {"N", 0}, {"expected", false}}; });

  const Window w = ctx.window({1, 4});
  const int maxLen = ctx.maxLength(3);
  const auto perms = permutationsInWindow(w, maxLen);
  std::vector<PermPair> pairs;
  for (const auto& a : perms)
    for (const auto& b : perms) pairs.emplace_back(a, b);
  sweep(ctx.report, pairs, [&](const PermPair& p) -> Failure {
    const int n = p.first.isIdentity() || p.second.isIdentity() ? 0 : p.first.hi() + 1 - p.second.lo();
    if (separatedHopfness(p.first, p.second, n)) return std::nullopt;
    json out = pairInput(p);
    out["N"] = n;
    return out;
  }, ctx.jobs());
}

void xiRelationsSuite(const Context& ctx) {
  const Window w = ctx.window({1, 5});
  const int maxLen = ctx.maxLength(6);
  const auto perms = permutationsInWindow(w, maxLen);

  std::vector<std::pair<Partition, Partition>> lm;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (const auto& l : partitionsOf(a))
        for (const auto& m : partitionsOf(b)) lm.emplace_back(l, m);
  sweep(ctx.report, perms, [&](const Permutation& sigma) -> Failure {
    const auto v = SchubertVector::basis(sigma);
    if (xiApply(Partition({1}), v) != applyCoefficientOperator(xiCoefficients(), v))
      return json{{"check", "xi^(1) = xi"}, {"sigma", sigma.toString()}};
    for (const auto& [l, m] : lm) {
      auto lhs = xiApply(l, xiApply(m, v));
      SchubertVector rhs;
      for (const auto& [nu, c] : lrCoefficients(l, m)) rhs += xiApply(nu, v) * Rational(c);
      if (lhs != rhs)
        return json{{"check", "product formula"}, {"lambda", l.toString()}, {"mu", m.toString()},
                    {"sigma", sigma.toString()}, {"lhs", vectorJson(lhs)}, {"rhs", vectorJson(rhs)}};
    }
    return std::nullopt;
  }, ctx.jobs());

  std::vector<Partition> nus;
  for (int n = 0; n <= 3; ++n)
    for (const auto& nu : partitionsOf(n)) nus.push_back(nu);
  sweep(ctx.report, pairsWithLengthSum(w, maxLen), [&](const PermPair& p) -> Failure {
    const auto a = SchubertVector::basis(p.first);
    const auto b = SchubertVector::basis(p.second);
    const auto product = multiply(a, b);
    for (const auto& nu : nus) {
      auto lhs = xiApply(nu, product);
      SchubertVector rhs;
      for (int k = 0; k <= nu.size(); ++k)
        for (const auto& l : partitionsOf(k))
          for (const auto& m : partitionsOf(nu.size() - k)) {
            const auto& c = lrCoefficients(l, m);
            if (auto it = c.find(nu); it != c.end())
              rhs += multiply(xiApply(l, a), xiApply(m, b)) * Rational(it->second);
          }
      if (lhs != rhs) {
        json out = pairInput(p);
        out["check"] = "coproduct formula";
        out["nu"] = nu.toString();
        out["lhs"] = vectorJson(lhs);
        out["rhs"] = vectorJson(rhs);
        return out;
      }
    }
    return std::nullopt;
  }, ctx.jobs());

  const Window stanleyWindow{w.lo, w.hi + 1};
  sweep(ctx.report, permutationsInWindow(stanleyWindow, 5), [&](const Permutation& pi) -> Failure {
    const auto& a = stanleyCoefficients(pi);
    Integer count = 0;
    for (const auto& [lambda, c] : a) count += c * standardTableauxCount(lambda);
    if (count != static_cast<unsigned long>(countReducedWords(pi)))
      return json{{"check", "sum a f = #RW"}, {"pi", pi.toString()}};
    for (int n : {1, 2})
      if (stanleyCoefficients(pi.shifted(n)) != a)
        return json{{"check", "shift invariance"}, {"pi", pi.toString()}, {"N", n}};
    return std::nullopt;
  }, ctx.jobs());
}

using SuiteFn = void (*)(const Context&);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"commutant", "m_pi and d_rho commute; nil Hecke action axioms; reconstruction of 50 random elements "
                     "(window 1..5, operators of length <= max-length=4, probes one longer)"},
       commutantSuite},
      {{"leibniz", "nabla and xi are derivations on products of total length <= 5 in 1..5; neighbour-averaging "
                   "defect"},
       leibnizSuite},
      {{"monk", "structure constants against Monk's rule for S_4 and k in 0..3"}, monkSuite},
      {{"ls-genus", "divided differences match d on Schubert polynomials in S_4; chain and padding independence"},
       lsGenusSuite},
      {{"triangle", "exp(a nabla + b xi) against the affine-linear genus, letters in -2..4, length <= 5"},
       triangleSuite},
      {{"gamma-mult", "affine-linear and two-slope multiplicativity, window 1..5, length sum <= 6"}, gammaMultSuite},
      {{"q-identity", "cleared q-Klyachko identity, window 1..5, length sum <= 6"}, qIdentitySuite},
      {{"q-nenashev", "shuffle and product distributions agree for every bar count, window 1..5, length sum <= 6"},
       qNenashevSuite},
      {{"nenashev-count", "reduced-word count identity, window 1..5, length sum <= 6"}, nenashevCountSuite},
      {{"hopf-defect", "defect of S_r2 squared; Stanley kills the defect (1..4, length <= 3); "
                       "coassociativity"},
       hopfDefectSuite},
      {{"separated-hopf", "separated factors have zero Hopf defect (1..4, length <= 3)"}, separatedHopfSuite},
      {{"xi-relations", "product and coproduct formulas for xi^lambda, window 1..5, length <= 6; Stanley counts"},
       xiRelationsSuite},
      {{"equidist", "inv and comaj equidistributed on S_n, n <= 6; non-adjacent J in 1..9"}, equidistSuite},
      {{"garsia-gessel", "shuffle statistic against comaj of the merged word, |P| + |R| <= 6"}, garsiaGesselSuite},
      {{"factorization", "the three letter situations and split factorizations, window -1..5, length <= 4"},
       factorizationSuite},
      {{"components", "components solve the Klyachko equations; affine-linear and two-slope evaluations"},
       componentsSuite},
  };
  return entries;
}

}  // namespace

nlohmann::json VerificationReport::toJson() const {
  return {{"suite", suite},     {"parameters", parameters},        {"passed", passed},
          {"checked", checked}, {"counterexample", counterexample}, {"seconds", seconds}};
}

std::string VerificationReport::toText() const {
  std::ostringstream os;
  os << suite << ": " << (passed ? "PASS" : "FAIL") << " (" << checked << " cases, " << parameters.dump() << ", "
     << seconds << " s)";
  if (!passed) os << "\n  counterexample: " << counterexample.dump();
  return os.str();
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

VerificationReport runSuite(const std::string& name, const SuiteOptions& options) {
  for (const auto& entry : registry()) {
    if (entry.info.name != name) continue;
    VerificationReport report;
    report.suite = name;
    report.parameters = json::object();
    const auto start = std::chrono::steady_clock::now();
    entry.run(Context{options, report});
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw ValidationError("unknown suite: " + name);
}

}  // namespace martial
