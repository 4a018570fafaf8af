#pragma once

#include <map>
#include <utility>

#include "martial/permutation.hpp"
#include "martial/poly.hpp"

namespace martial {

/// Finite formal linear combination of keys with coefficients in an exact
/// ring. Zero coefficients are never stored. The Tag keeps vectors of
/// different spaces (Schubert symbols, nil Hecke elements, ...) apart.
template <class Key, class Coeff, class Tag>
class FormalSum {
 public:
  using key_type = Key;
  using coefficient_type = Coeff;
  using Terms = std::map<Key, Coeff>;

  FormalSum() = default;

  static FormalSum basis(const Key& key) {
    FormalSum out;
    out.add(key, Coeff(1));
    return out;
  }

  void add(const Key& key, const Coeff& coeff) {
    if (coeff == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FormalSum& operator+=(const FormalSum& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, Coeff(-c));
    return *this;
  }
  FormalSum& operator*=(const Coeff& c) {
    if (c == Coeff{}) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, coeff] : terms_) coeff = coeff * c;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, const Coeff& c) { return a *= c; }
  friend FormalSum operator*(const Coeff& c, FormalSum a) { return a *= c; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

struct SchubertTag {};
struct NilHeckeTag {};
struct PairTag {};

/// Element of the ring of Schubert symbols: sum of c_sigma S_sigma.
template <class C>
using BasicSchubertVector = FormalSum<Permutation, C, SchubertTag>;
using SchubertVector = BasicSchubertVector<Rational>;
using PolySchubertVector = BasicSchubertVector<MultiPoly>;

/// Finite element sum of c_pi d_pi of the nil Hecke algebra.
using NilHeckeElement = FormalSum<Permutation, Rational, NilHeckeTag>;

/// Element of H (x) H: sum of c S_pi (x) S_rho.
using PermutationPair = std::pair<Permutation, Permutation>;
using PairVector = FormalSum<PermutationPair, Rational, PairTag>;

/// Coefficient of S_e.
template <class C>
C integral(const BasicSchubertVector<C>& v) {
  return v.coefficient(Permutation{});
}

/// Lifts a rational vector to polynomial coefficients.
PolySchubertVector toPolyVector(const SchubertVector& v);

}  // namespace martial
