#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain one-line vectors and never call into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using OneLine = std::vector<int>;  // images of 1..n

/// r_{q_1} ... r_{q_k} on 1..n as a one-line vector.
inline OneLine wordToOneLine(const std::vector<int>& word, int n) {
  OneLine a(n);
  for (int i = 0; i < n; ++i) a[i] = i + 1;
  for (int q : word) std::swap(a[q - 1], a[q]);
  return a;
}

inline int inversions(const OneLine& a) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) count += a[i] > a[j];
  return count;
}

inline int comaj(const std::vector<int>& w) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) s += static_cast<int>(i) + 1;
  return s;
}

/// Every word of the right length over letters 1..n-1 whose product is a.
inline std::set<std::vector<int>> reducedWords(const OneLine& a) {
  const int n = static_cast<int>(a.size());
  const int len = inversions(a);
  std::set<std::vector<int>> out;
  std::vector<int> w(len, 1);
  if (n < 2) {
    if (len == 0) out.insert({});
    return out;
  }
  std::function<void(int)> rec = [&](int pos) {
    if (pos == len) {
      if (wordToOneLine(w, n) == a) out.insert(w);
      return;
    }
    for (int q = 1; q < n; ++q) {
      w[pos] = q;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<OneLine> allPermutations(int n) {
  OneLine a(n);
  for (int i = 0; i < n; ++i) a[i] = i + 1;
  std::vector<OneLine> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

/// Semistandard tableaux of shape lambda whose content (number of 1s, 2s, ...) is alpha.
inline std::int64_t kostka(const std::vector<int>& lambda, const std::vector<int>& alpha) {
  int cells = 0, total = 0;
  for (int p : lambda) cells += p;
  for (int a : alpha) total += a;
  if (cells != total) return 0;
  std::vector<std::vector<int>> t;
  for (int p : lambda) t.emplace_back(p, 0);
  std::vector<int> remaining = alpha;
  std::int64_t count = 0;
  // Fill row by row, left to right.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      ++count;
      return;
    }
    if (c == t[r].size()) return rec(r + 1, 0);
    int low = c > 0 ? t[r][c - 1] : 1;
    if (r > 0) low = std::max(low, t[r - 1][c] + 1);
    for (int v = low; v <= static_cast<int>(alpha.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      t[r][c] = v;
      rec(r, c + 1);
      ++remaining[v - 1];
    }
  };
  rec(0, 0);
  return count;
}

inline std::vector<std::vector<int>> partitionsOf(int n, int maxPart = -1) {
  if (maxPart < 0) maxPart = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, maxPart); first >= 1; --first)
    for (auto rest : partitionsOf(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

/// Compositions of n into exactly k nonnegative parts.
inline std::vector<std::vector<int>> compositions(int n, int k) {
  if (k == 0) return n == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
  std::vector<std::vector<int>> out;
  for (int first = 0; first <= n; ++first)
    for (auto rest : compositions(n - first, k - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

/// Littlewood-Richardson coefficients from Kostka numbers alone: the monomial
/// coefficients of s_lambda s_mu are convolutions of Kostka numbers, and the
/// Schur expansion is peeled off in decreasing lexicographic order.
inline std::map<std::vector<int>, std::int64_t> lrCoefficients(const std::vector<int>& lambda,
                                                                const std::vector<int>& mu) {
  int a = 0, b = 0;
  for (int p : lambda) a += p;
  for (int p : mu) b += p;
  const int n = a + b;
  const int vars = std::max(1, n);
  auto padded = [&](std::vector<int> p) {
    p.resize(vars, 0);
    return p;
  };
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& nu : partitionsOf(n)) {  // already lexicographically decreasing
    const auto target = padded(nu);
    std::int64_t coeff = 0;
    for (const auto& beta : compositions(a, vars)) {
      std::vector<int> gamma(vars);
      bool ok = true;
      for (int i = 0; i < vars; ++i) {
        gamma[i] = target[i] - beta[i];
        ok = ok && gamma[i] >= 0;
      }
      if (ok) coeff += kostka(lambda, beta) * kostka(mu, gamma);
    }
    for (const auto& [bigger, c] : out) coeff -= c * kostka(bigger, target);
    if (coeff != 0) out[nu] = coeff;
  }
  return out;
}

/// Size of a maximum matching by exhaustive search over left vertices.
inline int maxMatchingBrute(int rightCount, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> used(rightCount, false);
  int best = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t u, int size) {
    if (size + static_cast<int>(adj.size() - u) <= best) return;
    if (u == adj.size()) {
      best = std::max(best, size);
      return;
    }
    for (int v : adj[u])
      if (!used[v]) {
        used[v] = true;
        rec(u + 1, size + 1);
        used[v] = false;
      }
    rec(u + 1, size);
  };
  rec(0, 0);
  return best;
}

}  // namespace oracle
