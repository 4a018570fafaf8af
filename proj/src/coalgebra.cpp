#include "martial/coalgebra.hpp"

#include <algorithm>
#include <charconv>

#include "martial/errors.hpp"
#include "martial/memo.hpp"
#include "martial/schubert.hpp"

namespace martial {

namespace {

std::size_t hashParts(const std::vector<int>& parts, std::size_t seed) {
  for (int p : parts) seed = seed * 1000003u ^ static_cast<std::size_t>(p + 0x9e37);
  return seed;
}

struct SchurKeyHash {
  std::size_t operator()(const std::pair<Partition, int>& k) const noexcept {
    return hashParts(k.first.parts, static_cast<std::size_t>(k.second));
  }
};

struct PartitionPairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    return hashParts(k.second.parts, hashParts(k.first.parts, 17) * 31);
  }
};

void fillTableaux(const Partition& shape, int n, std::size_t row, int col, std::vector<std::vector<int>>& t,
                  std::vector<int>& content, MultiPoly& out) {
  if (row == shape.parts.size()) {
    Monomial m;
    for (int v = 1; v <= n; ++v)
      if (content[v] > 0) m = m * Monomial(xVar(v), content[v]);
    out.addTerm(m, 1);
    return;
  }
  if (col == shape.parts[row]) {
    fillTableaux(shape, n, row + 1, 0, t, content, out);
    return;
  }
  int low = 1;
  if (col > 0) low = std::max(low, t[row][col - 1]);
  if (row > 0) low = std::max(low, t[row - 1][col] + 1);
  // Leave room for the strictly increasing cells below.
  int below = 0;
  for (std::size_t r = row + 1; r < shape.parts.size() && shape.parts[r] > col; ++r) ++below;
  for (int v = low; v + below <= n; ++v) {
    t[row][col] = v;
    ++content[v];
    fillTableaux(shape, n, row, col + 1, t, content, out);
    --content[v];
  }
}

std::vector<int> exponentVector(const Monomial& m, int n) {
  std::vector<int> e(n, 0);
  for (const auto& f : m.factors()) {
    if (f.var.family != Family::X || f.var.index < 1 || f.var.index > n)
      throw ValidationError("Schur expansion needs a polynomial in x_1..x_" + std::to_string(n) + "; got " +
                            m.toString());
    e[f.var.index - 1] = f.exponent;
  }
  return e;
}

Integer toInteger(const Rational& r, const char* what) {
  if (r.get_den() != 1 || r < 0) throw InconsistencyError(std::string(what) + " is not a nonnegative integer");
  return r.get_num();
}

PartitionCoefficients integerCoefficients(const std::map<Partition, Rational>& in, const char* what) {
  PartitionCoefficients out;
  for (const auto& [lambda, c] : in) out.emplace(lambda, toInteger(c, what));
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw ValidationError("partition parts must be positive and weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; !parts.empty() && c < parts.front(); ++c) {
    int h = 0;
    while (h < rows() && parts[h] > c) ++h;
    out.push_back(h);
  }
  return Partition(out);
}

std::string Partition::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Partition Partition::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ValidationError("unbalanced parenthesis in partition");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  if (text.empty() || text == "0") return Partition{};
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ValidationError("bad partition: " + std::string(text));
      parts.push_back(ch - '0');
    }
    return Partition(parts);
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ValidationError("bad partition part: " + std::string(token));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(parts);
}

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n);
  return out;
}

Integer standardTableauxCount(const Partition& lambda) {
  Integer num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) hooks *= (lambda.parts[r] - c - 1) + (conj.parts[c] - r - 1) + 1;
  return num / hooks;
}

const MultiPoly& schurPolynomial(const Partition& lambda, int n) {
  static MemoCache<std::pair<Partition, int>, MultiPoly, SchurKeyHash> cache;
  return cache.get({lambda, n}, [&] {
    MultiPoly out;
    if (lambda.rows() > n) return out;
    std::vector<std::vector<int>> t;
    for (int p : lambda.parts) t.emplace_back(p, 0);
    std::vector<int> content(n + 1, 0);
    fillTableaux(lambda, n, 0, 0, t, content, out);
    return out;
  });
}

std::map<Partition, Rational> schurExpansion(MultiPoly f, int n) {
  std::map<Partition, Rational> out;
  while (!f.isZero()) {
    std::vector<int> lead;
    Rational coeff;
    for (const auto& [m, c] : f) {
      auto e = exponentVector(m, n);
      if (lead.empty() || e > lead) {
        lead = std::move(e);
        coeff = c;
      }
    }
    if (!std::is_sorted(lead.rbegin(), lead.rend()))
      throw InconsistencyError("polynomial is not symmetric: leading exponent is not a partition");
    std::vector<int> parts;
    for (int e : lead)
      if (e > 0) parts.push_back(e);
    Partition lambda(parts);
    out[lambda] += coeff;
    f -= schurPolynomial(lambda, n) * coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

PairVector coproduct(const SchubertVector& v) {
  PairVector out;
  for (const auto& [sigma, c] : v)
    for (auto& [left, right] : lengthAdditiveFactorizations(sigma)) out.add({left, right}, c);
  return out;
}

PairVector multiplyPairs(const PairVector& a, const PairVector& b) {
  PairVector out;
  for (const auto& [ab, x] : a) {
    for (const auto& [cd, y] : b) {
      const auto& left = structureConstants(ab.first, cd.first);
      const auto& right = structureConstants(ab.second, cd.second);
      for (const auto& [l, u] : left)
        for (const auto& [r, w] : right) out.add({l, r}, Rational(x * y * u * w));
    }
  }
  return out;
}

PairVector hopfDefect(const SchubertVector& p, const SchubertVector& q) {
  return coproduct(multiply(p, q)) - multiplyPairs(coproduct(p), coproduct(q));
}

bool separatedHopfness(const Permutation& pi, const Permutation& rho, int shift) {
  const Permutation moved = rho.shifted(shift);
  const auto piLetters = pi.letters();
  const auto movedLetters = moved.letters();
  const bool separated =
      piLetters.empty() || movedLetters.empty() || movedLetters.front() >= piLetters.back() + 2;
  if (separated && structureConstants(pi, moved) != SchubertVector::basis(pi * moved))
    throw InconsistencyError("separated product is not a single Schubert symbol for " + pi.toString() + ", " +
                             moved.toString());
  return hopfDefect(SchubertVector::basis(pi), SchubertVector::basis(moved)).isZero();
}

PartitionCoefficients stanleyCoefficientsAtShift(const Permutation& pi, int shift) {
  if (pi.isIdentity()) return {{Partition{}, Integer(1)}};
  const Permutation moved = pi.shifted(shift);
  if (!moved.fixesNonpositive())
    throw ValidationError("shift " + std::to_string(shift) + " leaves a nonpositive letter in " + pi.toString());
  // Below its lowest letter S_{pi[N]} is symmetric: it is St_pi in those variables.
  const int vars = moved.letters().front() - 1;
  const MultiPoly restricted = schubertPolynomial(moved).filter([vars](const Monomial& m) {
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [vars](const auto& f) { return f.var.index <= vars; });
  });
  return integerCoefficients(schurExpansion(restricted, std::max(vars, 1)), "Stanley coefficient");
}

const PartitionCoefficients& stanleyCoefficients(const Permutation& pi) {
  static MemoCache<Permutation, PartitionCoefficients> cache;
  return cache.get(pi, [&] {
    if (pi.isIdentity()) return PartitionCoefficients{{Partition{}, Integer(1)}};
    const int start = pi.length() + 1 - pi.letters().front();
    for (int n = start; n < start + 4; ++n) {
      auto here = stanleyCoefficientsAtShift(pi, n);
      if (here != stanleyCoefficientsAtShift(pi, n + 1)) continue;
      Integer count = 0;
      for (const auto& [lambda, a] : here) count += a * standardTableauxCount(lambda);
      if (count != static_cast<unsigned long>(countReducedWords(pi)))
        throw InconsistencyError("sum of a^lambda f^lambda differs from #RW for " + pi.toString());
      return here;
    }
    throw InconsistencyError("Stanley expansion did not stabilize for " + pi.toString());
  });
}

const PartitionCoefficients& lrCoefficients(const Partition& lambda, const Partition& mu) {
  static MemoCache<std::pair<Partition, Partition>, PartitionCoefficients, PartitionPairHash> cache;
  return cache.get({lambda, mu}, [&] {
    const int n = std::max(1, lambda.size() + mu.size());
    return integerCoefficients(schurExpansion(schurPolynomial(lambda, n) * schurPolynomial(mu, n), n),
                               "Littlewood-Richardson coefficient");
  });
}

SchubertVector xiApply(const Partition& lambda, const SchubertVector& v) {
  SchubertVector out;
  const int degree = lambda.size();
  for (const auto& [sigma, c] : v) {
    if (sigma.length() < degree) continue;
    for (const auto& [left, right] : lengthAdditiveFactorizations(sigma)) {
      if (left.length() != degree) continue;
      const auto& a = stanleyCoefficients(left.inverse());
      auto it = a.find(lambda);
      if (it != a.end()) out.add(right, c * Rational(it->second));
    }
  }
  return out;
}

std::map<std::pair<Partition, Partition>, Rational> stanleyTensor(const PairVector& v) {
  std::map<std::pair<Partition, Partition>, Rational> out;
  for (const auto& [pair, c] : v)
    for (const auto& [lambda, x] : stanleyCoefficients(pair.first))
      for (const auto& [mu, y] : stanleyCoefficients(pair.second)) out[{lambda, mu}] += c * Rational(x * y);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool stanleyKillsDefect(const SchubertVector& p, const SchubertVector& q) {
  return stanleyTensor(hopfDefect(p, q)).empty();
}

std::string pairToString(const PermutationPair& p) { return p.first.toString() + " (x) " + p.second.toString(); }

}  // namespace martial
