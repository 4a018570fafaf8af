#include "martial/schubert.hpp"

#include <algorithm>
#include <set>

#include "martial/cache_store.hpp"
#include "martial/errors.hpp"
#include "martial/memo.hpp"

namespace martial {

namespace {

MemoCache<Permutation, MultiPoly>& schubertCache() {
  static MemoCache<Permutation, MultiPoly> cache;
  return cache;
}

struct PairHash {
  std::size_t operator()(const PermutationPair& p) const noexcept {
    return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
  }
};

MemoCache<PermutationPair, SchubertVector, PairHash>& productCache() {
  static MemoCache<PermutationPair, SchubertVector, PairHash> cache;
  return cache;
}

Permutation longestElement(int n) {
  std::vector<int> images;
  for (int v = n; v >= 1; --v) images.push_back(v);
  return Permutation::fromWindow(images, 1);
}

Word firstReducedWord(Permutation p) {
  Word w;
  while (!p.isIdentity()) {
    int i = p.leftDescents().front();
    w.push_back(i);
    p = p.simpleTimes(i);
  }
  return w;
}

std::optional<int> minLetter(const Permutation& p, const Permutation& q) {
  std::optional<int> best;
  for (const auto* perm : {&p, &q}) {
    auto letters = perm->letters();
    if (!letters.empty() && (!best || letters.front() < *best)) best = letters.front();
  }
  return best;
}

SchubertVector shiftVector(const SchubertVector& v, int shift) {
  SchubertVector out;
  for (const auto& [sigma, c] : v) out.add(sigma.shifted(shift), c);
  return out;
}

}  // namespace

MultiPoly staircase(int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m = m * Monomial(xVar(i), n - i);
  return MultiPoly::term(m, 1);
}

const MultiPoly& schubertPolynomial(const Permutation& p) {
  if (!p.fixesNonpositive())
    throw ValidationError("Schubert polynomials need a permutation fixing the nonpositive integers: " + p.toString());
  return schubertCache().get(p, [&] {
    if (p.isIdentity()) return MultiPoly(1);
    // Transition: S_w = x_r S_v + sum_{i<r, l(v t_ir) = l(w)} S_{v t_ir},
    // r the last descent of w, s the last position after r with w(s) < w(r), v = w t_rs.
    const int r = p.rightDescents().back();
    int s = r + 1;
    for (int j = r + 1; j <= p.hi(); ++j)
      if (p(j) < p(r)) s = j;
    const Permutation v = p.timesTransposition(r, s);
    MultiPoly out = MultiPoly::variable(xVar(r)) * schubertPolynomial(v);
    for (int i = 1; i < r; ++i) {
      Permutation w = v.timesTransposition(i, r);
      if (w.length() == p.length()) out += schubertPolynomial(w);
    }
    return out;
  });
}

MultiPoly schubertPolynomialByChain(const Permutation& p, int n, std::span<const int> chain) {
  if (!p.fixesNonpositive() || (!p.isIdentity() && p.hi() > n))
    throw ValidationError("permutation " + p.toString() + " is not in S_" + std::to_string(n));
  const Permutation sigma = p.inverse() * longestElement(n);
  Word word = chain.empty() ? firstReducedWord(sigma) : Word(chain.begin(), chain.end());
  if (wordProduct(word) != sigma || static_cast<int>(word.size()) != sigma.length())
    throw ValidationError("chain is not a reduced word of pi^-1 w0");
  MultiPoly f = staircase(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = dividedDifference(*it, f);
  return f;
}

MultiPoly synthesize(const SchubertVector& v) {
  MultiPoly out;
  for (const auto& [sigma, c] : v) out += schubertPolynomial(sigma) * c;
  return out;
}

SchubertVector expandSchubertBasis(const MultiPoly& f) {
  for (const auto& [m, c] : f) {
    for (const auto& factor : m.factors()) {
      if (factor.var.family != Family::X || factor.var.index < 1 || factor.exponent < 0)
        throw ValidationError("Schubert expansion needs a polynomial in x_1, x_2, ...; got " + m.toString());
    }
  }
  // h_nu = d_nu f, grown by prepending letters: h_{r_i nu} = d_i h_nu.
  SchubertVector out;
  std::map<Permutation, MultiPoly> level{{Permutation{}, f}};
  while (!level.empty()) {
    std::map<Permutation, MultiPoly> next;
    for (const auto& [nu, h] : level) {
      out.add(nu, h.constantTerm());
      std::set<int> candidates;
      for (const auto& [m, c] : h) {
        for (const auto& factor : m.factors()) {
          candidates.insert(factor.var.index);
          if (factor.var.index > 1) candidates.insert(factor.var.index - 1);
        }
      }
      for (int i : candidates) {
        if (nu.hasLeftDescent(i)) continue;
        Permutation key = nu.simpleTimes(i);
        if (next.contains(key)) continue;
        MultiPoly g = dividedDifference(i, h);
        if (!g.isZero()) next.emplace(std::move(key), std::move(g));
      }
    }
    level = std::move(next);
  }
  if (synthesize(out) != f) throw InconsistencyError("Schubert expansion does not re-synthesize its input");
  return out;
}

int productShift(const Permutation& pi, const Permutation& rho) {
  auto lowest = minLetter(pi, rho);
  if (!lowest) return 0;
  std::set<int> letters;
  for (int i : pi.letters()) letters.insert(i);
  for (int i : rho.letters()) letters.insert(i);
  // A product term reaches at most this far left of the lowest letter.
  int reach = std::min({pi.length(), rho.length(), pi.length() + rho.length() - static_cast<int>(letters.size())});
  return 1 + reach - *lowest;
}

SchubertVector structureConstantsAtShift(const Permutation& pi, const Permutation& rho, int shift) {
  const Permutation a = pi.shifted(shift);
  const Permutation b = rho.shifted(shift);
  if (!a.fixesNonpositive() || !b.fixesNonpositive())
    throw ValidationError("shift " + std::to_string(shift) + " leaves a nonpositive letter");
  SchubertVector expanded = expandSchubertBasis(schubertPolynomial(a) * schubertPolynomial(b));
  SchubertVector out;
  for (const auto& [sigma, c] : expanded) {
    if (c < 0 || c.get_den() != 1)
      throw InconsistencyError("structure constant is not a nonnegative integer at " + sigma.toString());
    if (sigma.length() != pi.length() + rho.length())
      throw InconsistencyError("product term of the wrong length: " + sigma.toString());
    out.add(sigma.shifted(-shift), c);
  }
  return out;
}

const SchubertVector& structureConstants(const Permutation& pi, const Permutation& rho) {
  // Normalize: the product is commutative and shift-equivariant.
  auto lowest = minLetter(pi, rho);
  const int normalize = lowest ? 1 - *lowest : 0;
  PermutationPair key{pi.shifted(normalize), rho.shifted(normalize)};
  if (key.second < key.first) std::swap(key.first, key.second);
  const SchubertVector& normalized = productCache().get(key, [&] {
    return structureConstantsAtShift(key.first, key.second, productShift(key.first, key.second));
  });
  if (normalize == 0) return normalized;
  PermutationPair exact{pi, rho};
  if (exact.second < exact.first) std::swap(exact.first, exact.second);
  return productCache().get(exact, [&] { return shiftVector(normalized, -normalize); });
}

SchubertVector multiply(const SchubertVector& p, const SchubertVector& q) {
  SchubertVector out;
  for (const auto& [sigma, a] : p)
    for (const auto& [tau, b] : q) out += structureConstants(sigma, tau) * Rational(a * b);
  return out;
}

SchubertVector monkProduct(int k, const Permutation& pi) {
  const int lo = pi.isIdentity() ? k : std::min(pi.lo(), k);
  const int hi = pi.isIdentity() ? k + 1 : std::max(pi.hi(), k + 1);
  SchubertVector out;
  for (int i = lo - 1; i <= k; ++i) {
    for (int j = k + 1; j <= hi + 1; ++j) {
      Permutation w = pi.timesTransposition(i, j);
      if (w.length() == pi.length() + 1) out.add(w, 1);
    }
  }
  return out;
}

BackStableTruncation backStableTruncation(const Permutation& pi, int shift, Window variableWindow) {
  auto truncate = [&](int n) {
    const Permutation shifted = pi.shifted(n);
    if (!shifted.fixesNonpositive())
      throw ValidationError("shift " + std::to_string(n) + " is too small for " + pi.toString());
    return schubertPolynomial(shifted).relabel([n](Var v) {
      return v.family == Family::X ? xVar(v.index - n) : v;
    });
  };
  auto inWindow = [&](const Monomial& m) {
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [&](const auto& f) { return variableWindow.contains(f.var.index); });
  };
  BackStableTruncation out;
  out.truncation = truncate(shift);
  out.stabilized = out.truncation.filter(inWindow) == truncate(shift + 1).filter(inWindow);
  return out;
}

DisjointFactorization disjointFactorization(const Permutation& pi, int m) {
  const auto letters = pi.letters();
  DisjointFactorization out;
  if (std::find(letters.begin(), letters.end(), m) != letters.end()) {
    out.situation = LetterSituation::UsesLetter;
    return out;
  }
  const bool below = !letters.empty() && letters.front() < m;
  const bool above = !letters.empty() && letters.back() > m;
  if (!(below && above)) {
    out.situation = LetterSituation::OneSided;
    return out;
  }
  // No letter m, so pi preserves (-inf, m] and [m+1, inf).
  const Permutation left = Permutation::fromWindow(pi.oneLine(pi.lo(), m), pi.lo());
  const Permutation right = Permutation::fromWindow(pi.oneLine(m + 1, pi.hi()), m + 1);
  if (left * right != pi) throw InconsistencyError("split factors do not multiply back");
  if (structureConstants(left, right) != SchubertVector::basis(pi))
    throw InconsistencyError("S_pi is not the product of its split factors for " + pi.toString());
  out.situation = LetterSituation::SplitsAround;
  out.factors = std::make_pair(left, right);
  return out;
}

void forEachCachedSchubertPolynomial(const std::function<void(const Permutation&, const MultiPoly&)>& visit) {
  schubertCache().forEach(visit);
}

void preloadSchubertPolynomial(const Permutation& p, MultiPoly poly) { schubertCache().insert(p, std::move(poly)); }

PolySchubertVector toPolyVector(const SchubertVector& v) {
  PolySchubertVector out;
  for (const auto& [sigma, c] : v) out.add(sigma, MultiPoly(c));
  return out;
}

}  // namespace martial
