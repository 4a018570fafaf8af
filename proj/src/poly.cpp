#include "martial/poly.hpp"

#include <algorithm>
#include <charconv>

#include "martial/errors.hpp"

namespace martial {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::X, "x"},     {Family::K, "k"},         {Family::A, "a"},
    {Family::B, "b"},     {Family::Q, "q"},         {Family::Alpha, "alpha"},
    {Family::Beta, "beta"}, {Family::SlopeX, "x"}, {Family::SlopeY, "y"},
};

int parseSignedInt(std::string_view text) {
  int value = 0;
  auto first = text.data();
  auto last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw ValidationError("bad integer in polynomial text: '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Rational parseRational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ValidationError("empty coefficient");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) throw ValidationError("bad coefficient: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

}  // namespace

std::string_view familyName(Family f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info.name;
  return "?";
}

bool isIndexed(Family f) { return f == Family::X || f == Family::K; }

std::string rationalToString(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int exponent) {
  if (exponent != 0) factors_.push_back({v, exponent});
}

int Monomial::exponent(Var v) const {
  for (const auto& f : factors_)
    if (f.var == v) return f.exponent;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      int e = a->exponent + b->exponent;
      if (e != 0) out.factors_.push_back({a->var, e});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::withExponent(Var v, int exponent) const {
  Monomial out;
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && v < f.var) {
      if (exponent != 0) out.factors_.push_back({v, exponent});
      placed = true;
    }
    if (f.var == v) {
      if (exponent != 0) out.factors_.push_back({v, exponent});
      placed = true;
      continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && exponent != 0) out.factors_.push_back({v, exponent});
  return out;
}

std::string Monomial::toString() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += familyName(f.var.family);
    if (isIndexed(f.var.family)) out += "_" + std::to_string(f.var.index);
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

Monomial Monomial::parse(std::string_view text) {
  text = trim(text);
  Monomial out;
  if (text.empty() || text == "1") return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto space = text.find(' ', pos);
    auto token = text.substr(pos, space == std::string_view::npos ? text.npos : space - pos);
    pos = space == std::string_view::npos ? text.size() : space + 1;
    if (token.empty()) continue;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      exponent = parseSignedInt(token.substr(caret + 1));
      token = token.substr(0, caret);
    }
    Var v;
    if (auto underscore = token.find('_'); underscore != std::string_view::npos) {
      auto name = token.substr(0, underscore);
      int index = parseSignedInt(token.substr(underscore + 1));
      if (name == "x") v = xVar(index);
      else if (name == "k") v = kVar(index);
      else throw ValidationError("unknown indexed variable family: '" + std::string(name) + "'");
    } else {
      bool found = false;
      for (const auto& info : kFamilies) {
        if (!isIndexed(info.family) && info.name == token) {
          v = {info.family, 0};
          found = true;
        }
      }
      if (!found) throw ValidationError("unknown variable: '" + std::string(token) + "'");
    }
    out = out * Monomial(v, exponent);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                b.factors_.end());
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& constant) {
  addTerm(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(Var v) { return term(Monomial(v), 1); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly out;
  out.addTerm(m, c);
  return out;
}

std::optional<Rational> MultiPoly::asConstant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.isOne()) return terms_.begin()->second;
  return std::nullopt;
}

Rational MultiPoly::constantTerm() const { return coefficient(Monomial{}); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::totalDegree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool MultiPoly::isHomogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

bool MultiPoly::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first.exponent(v) != 0; });
}

bool MultiPoly::onlyFamily(Family f) const {
  for (const auto& [m, c] : terms_)
    for (const auto& factor : m.factors())
      if (factor.var.family != f) return false;
  return true;
}

std::optional<int> MultiPoly::maxIndex(Family f) const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    for (const auto& factor : m.factors())
      if (factor.var.family == f && (!best || factor.var.index > *best)) best = factor.var.index;
  return best;
}

std::optional<int> MultiPoly::minIndex(Family f) const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    for (const auto& factor : m.factors())
      if (factor.var.family == f && (!best || factor.var.index < *best)) best = factor.var.index;
  return best;
}

void MultiPoly::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational value = c;
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) addTerm(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) addTerm(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational value = c;
  value.canonicalize();
  for (auto& [m, coef] : terms_) coef *= value;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  Rational product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(product.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, product);
      if (!inserted) it->second += product;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::function<std::optional<MultiPoly>(Var)>& replace) const {
  MultiPoly out;
  std::map<std::pair<Var, int>, MultiPoly> powers;
  for (const auto& [m, c] : terms_) {
    MultiPoly termValue(c);
    Monomial kept;
    for (const auto& f : m.factors()) {
      auto key = std::make_pair(f.var, f.exponent);
      auto it = powers.find(key);
      if (it == powers.end()) {
        auto value = replace(f.var);
        if (!value) {
          kept = kept * Monomial(f.var, f.exponent);
          continue;
        }
        if (f.exponent < 0) throw ValidationError("cannot substitute into a negative power");
        it = powers.emplace(key, value->pow(static_cast<unsigned>(f.exponent))).first;
      }
      termValue = termValue * it->second;
    }
    out += termValue * MultiPoly::term(kept, 1);
  }
  return out;
}

MultiPoly MultiPoly::relabel(const std::function<Var(Var)>& rename) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& f : m.factors()) renamed = renamed * Monomial(rename(f.var), f.exponent);
    out.addTerm(renamed, c);
  }
  return out;
}

MultiPoly MultiPoly::filter(const std::function<bool(const Monomial&)>& keep) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_)
    if (keep(m)) out.terms_.emplace(m, c);
  return out;
}

std::string MultiPoly::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rationalToString(c);
    if (!m.isOne()) out += " * " + m.toString();
  }
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text) {
  text = trim(text);
  MultiPoly out;
  if (text.empty() || text == "0") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto plus = text.find(" + ", pos);
    auto piece = trim(text.substr(pos, plus == std::string_view::npos ? text.npos : plus - pos));
    if (auto star = piece.find(" * "); star != std::string_view::npos) {
      out.addTerm(Monomial::parse(piece.substr(star + 3)), parseRational(piece.substr(0, star)));
    } else if (!piece.empty() && (std::isdigit(static_cast<unsigned char>(piece.front())) || piece.front() == '-')) {
      out.addTerm(Monomial{}, parseRational(piece));
    } else {
      out.addTerm(Monomial::parse(piece), 1);
    }
    if (plus == std::string_view::npos) break;
    pos = plus + 3;
  }
  return out;
}

nlohmann::json MultiPoly::toJson() const {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    out.push_back({{"monomial", m.isOne() ? std::string() : m.toString()},
                   {"numerator", c.get_num().get_str()},
                   {"denominator", c.get_den().get_str()}});
  }
  return out;
}

MultiPoly MultiPoly::fromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array of terms");
  MultiPoly out;
  for (const auto& t : j) {
    Rational c(Integer(t.at("numerator").get<std::string>()), Integer(t.at("denominator").get<std::string>()));
    c.canonicalize();
    out.addTerm(Monomial::parse(t.at("monomial").get<std::string>()), c);
  }
  return out;
}

// ------------------------------------------------------ x-family operators

MultiPoly dividedDifference(int i, const MultiPoly& f) {
  const Var xi = xVar(i);
  const Var xj = xVar(i + 1);
  MultiPoly out;
  for (const auto& [m, c] : f) {
    int a = m.exponent(xi);
    int b = m.exponent(xj);
    if (a < 0 || b < 0) throw ValidationError("divided difference of a Laurent monomial");
    if (a == b) continue;
    Monomial rest = m.withExponent(xi, 0).withExponent(xj, 0);
    // (x^a y^b - x^b y^a) / (x - y) = sign * sum of x^p y^q with p + q = a + b - 1, min(a,b) <= p,q.
    int lowExp = std::min(a, b);
    int span = std::abs(a - b);
    Rational coef = a > b ? c : Rational(-c);
    for (int k = 0; k < span; ++k) {
      Monomial m2 = rest.withExponent(xi, lowExp + k).withExponent(xj, lowExp + span - 1 - k);
      out.addTerm(m2, coef);
    }
  }
  return out;
}

MultiPoly swapAdjacent(int i, const MultiPoly& f) {
  return f.relabel([i](Var v) {
    if (v.family == Family::X && v.index == i) return xVar(i + 1);
    if (v.family == Family::X && v.index == i + 1) return xVar(i);
    return v;
  });
}

MultiPoly sumOfPartials(const MultiPoly& f) {
  MultiPoly out;
  for (const auto& [m, c] : f) {
    for (const auto& factor : m.factors()) {
      if (factor.var.family != Family::X) continue;
      out.addTerm(m.withExponent(factor.var, factor.exponent - 1), c * factor.exponent);
    }
  }
  return out;
}

MultiPoly qFactorial(int n) {
  MultiPoly out(1);
  const MultiPoly q = MultiPoly::variable(kVarQ);
  MultiPoly bracket(0);
  for (int j = 1; j <= n; ++j) {
    bracket += q.pow(static_cast<unsigned>(j - 1));  // [j]_q = 1 + q + ... + q^{j-1}
    out = out * bracket;
  }
  return out;
}

MultiPoly qBinomial(int n, int k) {
  if (k < 0 || k > n) return MultiPoly(0);
  // [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k]
  std::vector<MultiPoly> row{MultiPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<MultiPoly> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      MultiPoly value;
      if (j >= 1) value += row[j - 1];
      if (j <= m - 1) value += MultiPoly::term(Monomial(kVarQ, j), 1) * row[j];
      next[j] = std::move(value);
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace martial
