#include "martial/qstats.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "martial/errors.hpp"
#include "martial/formal_sum.hpp"
#include "martial/genus.hpp"
#include "martial/matching.hpp"
#include "martial/schubert.hpp"

namespace martial {

namespace {

/// Every placement of rCount R-letters among pCount + rCount slots, in
/// lexicographic order of the source masks (P before R).
std::vector<std::vector<bool>> interleavings(int pCount, int rCount) {
  std::vector<bool> mask(pCount + rCount, false);
  std::fill(mask.begin() + pCount, mask.end(), true);
  std::vector<std::vector<bool>> out;
  do {
    out.push_back(mask);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

int interleavingInversions(const std::vector<bool>& sources) {
  int inv = 0, rSeen = 0;
  for (bool fromR : sources) {
    if (fromR)
      ++rSeen;
    else
      inv += rSeen;
  }
  return inv;
}

void requirePositiveLetters(const Permutation& p) {
  if (!p.isIdentity() && p.letters().front() < 1)
    throw ValidationError("q-Nenashev statistics need positive letters; got " + p.toString());
}

std::int64_t toCount(const Rational& c) {
  if (c.get_den() != 1 || c < 0) throw InconsistencyError("structure constant is not a nonnegative integer");
  return c.get_num().get_si();
}

std::vector<SigmaRow> productRows(const Permutation& pi, const Permutation& rho, std::optional<int> barCount) {
  std::vector<SigmaRow> rows;
  for (const auto& [sigma, c] : structureConstants(pi, rho))
    rows.push_back({sigma, toCount(c), barredWordDistribution(sigma, barCount)});
  std::sort(rows.begin(), rows.end(),
            [](const SigmaRow& a, const SigmaRow& b) { return ByLengthThenOneLine{}(a.sigma, b.sigma); });
  return rows;
}

std::string sigmaLabel(const Permutation& p, int width) {
  if (width > 0) return p.oneLineString(width);
  return p.toString();
}

std::string joinInts(const std::vector<std::int64_t>& values, bool blankZeros) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += ",";
    if (!(blankZeros && values[i] == 0)) out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

int BarredWord::barCount() const { return static_cast<int>(std::count(bars.begin(), bars.end(), true)); }

std::string BarredWord::toString() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
    if (bars[i]) out += "'";
  }
  return out;
}

int qStatistic(const BarredWord& w) {
  int stat = comaj(w.word);
  for (std::size_t i = 0; i < w.word.size(); ++i)
    if (w.bars[i]) stat += w.word[i];
  return stat;
}

BarredWord Shuffle::merged() const {
  BarredWord out;
  std::size_t p = 0, r = 0;
  for (bool fromR : sources) {
    const BarredWord& src = fromR ? right : left;
    std::size_t& k = fromR ? r : p;
    out.word.push_back(src.word[k]);
    out.bars.push_back(src.bars[k]);
    ++k;
  }
  return out;
}

std::vector<Shuffle> shuffles(const BarredWord& p, const BarredWord& r) {
  std::vector<Shuffle> out;
  for (auto& sources : interleavings(static_cast<int>(p.word.size()), static_cast<int>(r.word.size()))) {
    int inv = interleavingInversions(sources);
    out.push_back({std::move(sources), p, r, inv});
  }
  return out;
}

int shuffleQStatistic(const Shuffle& s) { return qStatistic(s.left) + qStatistic(s.right) + s.inversions; }

std::vector<BarredWord> barredWords(const Permutation& pi, std::optional<int> barCount) {
  std::vector<BarredWord> out;
  const int len = pi.length();
  if (barCount && (*barCount < 0 || *barCount > len)) return out;
  for (const auto& word : reducedWords(pi)) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      BarredWord w{word, std::vector<bool>(len)};
      for (int i = 0; i < len; ++i) w.bars[i] = (mask >> (len - 1 - i)) & 1u;
      if (!barCount || w.barCount() == *barCount) out.push_back(std::move(w));
    }
  }
  return out;
}

StatDistribution barredWordDistribution(const Permutation& pi, std::optional<int> barCount) {
  StatDistribution out;
  for (const auto& w : barredWords(pi, barCount)) ++out[{w.barCount(), qStatistic(w)}];
  return out;
}

NenashevDistributions qNenashevDistributions(const Permutation& pi, const Permutation& rho,
                                             std::optional<int> barCount) {
  requirePositiveLetters(pi);
  requirePositiveLetters(rho);
  NenashevDistributions out;
  // Shuffle side: the statistic splits as stat(P) + stat(R) + inversions, so
  // the distribution over all triples is a convolution.
  const auto left = barredWordDistribution(pi);
  const auto right = barredWordDistribution(rho);
  std::map<int, std::int64_t> inversionCounts;
  for (const auto& sources : interleavings(pi.length(), rho.length()))
    ++inversionCounts[interleavingInversions(sources)];
  for (const auto& [pk, pc] : left) {
    for (const auto& [rk, rc] : right) {
      const int bars = pk.first + rk.first;
      if (barCount && bars != *barCount) continue;
      for (const auto& [inv, ic] : inversionCounts) out.lhs[{bars, pk.second + rk.second + inv}] += pc * rc * ic;
    }
  }
  out.rows = productRows(pi, rho, barCount);
  for (const auto& row : out.rows)
    for (const auto& [key, count] : row.counts) out.rhs[key] += row.coefficient * count;
  return out;
}

bool nenashevCountCheck(const Permutation& pi, const Permutation& rho) {
  Integer lhs = Integer(static_cast<unsigned long>(countReducedWords(pi))) *
                Integer(static_cast<unsigned long>(countReducedWords(rho)));
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), pi.length() + rho.length(), pi.length());
  lhs *= binom;
  Integer rhs = 0;
  for (const auto& [sigma, c] : structureConstants(pi, rho))
    rhs += c.get_num() * Integer(static_cast<unsigned long>(countReducedWords(sigma)));
  return lhs == rhs;
}

MultipliedIdentity multipliedIdentitySides(const Permutation& pi, const Permutation& rho) {
  MultipliedIdentity out;
  out.lhs = qBinomial(pi.length() + rho.length(), pi.length()) * qKlyachkoGenus(pi).numerator *
            qKlyachkoGenus(rho).numerator;
  for (const auto& [sigma, c] : structureConstants(pi, rho)) out.rhs += qKlyachkoGenus(sigma).numerator * c;
  return out;
}

bool multipliedIdentityCheck(const Permutation& pi, const Permutation& rho) {
  auto sides = multipliedIdentitySides(pi, rho);
  return sides.lhs == sides.rhs;
}

nlohmann::json RectificationWitness::toJson() const {
  nlohmann::json matching = nlohmann::json::array();
  for (const auto& e : entries) {
    std::string sources;
    for (bool fromR : e.shuffle.sources) sources += fromR ? 'R' : 'P';
    matching.push_back({{"P", e.shuffle.left.toString()},
                        {"R", e.shuffle.right.toString()},
                        {"sources", sources},
                        {"bars", e.shuffle.left.barCount() + e.shuffle.right.barCount()},
                        {"statistic", shuffleQStatistic(e.shuffle)},
                        {"sigma", e.sigma.toString()},
                        {"copy", e.copy},
                        {"word", e.target.toString()}});
  }
  nlohmann::json out{{"shuffles", shuffleCount}, {"targets", targetCount}, {"perfect", perfect},
                     {"matching", std::move(matching)}};
  if (failingClass) out["failing_class"] = {{"bars", failingClass->first}, {"statistic", failingClass->second}};
  return out;
}

RectificationWitness rectificationWitness(const Permutation& pi, const Permutation& rho,
                                          std::optional<int> barCount) {
  requirePositiveLetters(pi);
  requirePositiveLetters(rho);
  struct Target {
    Permutation sigma;
    int copy;
    BarredWord word;
  };
  std::vector<Shuffle> sources;
  const auto leftWords = barredWords(pi);
  const auto rightWords = barredWords(rho);
  for (const auto& p : leftWords) {
    for (const auto& r : rightWords) {
      if (barCount && p.barCount() + r.barCount() != *barCount) continue;
      for (auto& s : shuffles(p, r)) sources.push_back(std::move(s));
    }
  }
  std::vector<Target> targets;
  for (const auto& [sigma, c] : structureConstants(pi, rho)) {
    const auto words = barredWords(sigma, barCount);
    for (int copy = 0; copy < toCount(c); ++copy)
      for (const auto& w : words) targets.push_back({sigma, copy, w});
  }

  std::map<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>> classes;
  for (int i = 0; i < static_cast<int>(sources.size()); ++i) {
    const auto& s = sources[i];
    classes[{s.left.barCount() + s.right.barCount(), shuffleQStatistic(s)}].first.push_back(i);
  }
  for (int t = 0; t < static_cast<int>(targets.size()); ++t)
    classes[{targets[t].word.barCount(), qStatistic(targets[t].word)}].second.push_back(t);

  RectificationWitness out;
  out.shuffleCount = sources.size();
  out.targetCount = targets.size();
  out.perfect = true;
  std::vector<int> assignment(sources.size(), -1);
  for (const auto& [key, members] : classes) {
    const auto& [left, right] = members;
    // Within a class every shuffle may go to every target.
    std::vector<std::vector<int>> adjacency(left.size());
    for (auto& edges : adjacency) {
      edges.resize(right.size());
      for (std::size_t v = 0; v < right.size(); ++v) edges[v] = static_cast<int>(v);
    }
    auto m = maximumBipartiteMatching(static_cast<int>(right.size()), adjacency);
    if (!m.perfect()) {
      out.perfect = false;
      if (!out.failingClass) out.failingClass = key;
    }
    for (std::size_t u = 0; u < left.size(); ++u)
      if (m.leftToRight[u] >= 0) assignment[left[u]] = right[m.leftToRight[u]];
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (assignment[i] < 0) continue;
    const auto& t = targets[assignment[i]];
    out.entries.push_back({sources[i], t.sigma, t.copy, t.word});
  }
  return out;
}

DistributionTable distributionTable(const Permutation& pi, const Permutation& rho, int barCount) {
  const auto d = qNenashevDistributions(pi, rho, barCount);
  DistributionTable table;
  std::set<int> stats;
  for (const auto& [key, count] : d.lhs) stats.insert(key.second);
  for (const auto& [key, count] : d.rhs) stats.insert(key.second);
  if (!stats.empty())
    for (int s = *stats.begin(); s <= *stats.rbegin(); ++s) table.statistics.push_back(s);
  auto rowOf = [&](const StatDistribution& dist) {
    std::vector<std::int64_t> row;
    for (int s : table.statistics) {
      auto it = dist.find({barCount, s});
      row.push_back(it == dist.end() ? 0 : it->second);
    }
    return row;
  };
  table.totals = rowOf(d.lhs);

  int width = 0;
  bool digits = true;
  auto consider = [&](const Permutation& p) {
    if (p.isIdentity()) return;
    if (p.lo() < 1 || p.hi() > 9) digits = false;
    width = std::max(width, p.hi());
  };
  consider(pi);
  consider(rho);
  for (const auto& row : d.rows) consider(row.sigma);
  if (!digits) width = 0;
  if (digits && width == 0) width = 1;

  for (const auto& row : d.rows)
    for (std::int64_t copy = 0; copy < row.coefficient; ++copy)
      table.rows.emplace_back(sigmaLabel(row.sigma, width), rowOf(row.counts));
  return table;
}

std::string DistributionTable::toCsv() const {
  std::string out = "q-statistic";
  for (int s : statistics) out += "," + std::to_string(s);
  out += "\ntotal" + joinInts(totals, false) + "\n";
  for (const auto& [label, counts] : rows) out += label + joinInts(counts, true) + "\n";
  return out;
}

nlohmann::json DistributionTable::toJson() const {
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& [label, counts] : rows) jrows.push_back({{"sigma", label}, {"counts", counts}});
  std::int64_t sum = 0;
  for (auto t : totals) sum += t;
  return {{"statistics", statistics}, {"totals", totals}, {"total", sum}, {"rows", std::move(jrows)}};
}

std::string DistributionTable::toText() const {
  std::size_t labelWidth = std::string("q-statistic:").size();
  for (const auto& [label, counts] : rows) labelWidth = std::max(labelWidth, label.size());
  std::ostringstream os;
  auto line = [&](const std::string& label, const std::vector<std::int64_t>& values, bool blank) {
    os << std::left << std::setw(static_cast<int>(labelWidth)) << label << std::right;
    for (auto v : values) {
      if (blank && v == 0)
        os << std::setw(4) << "";
      else
        os << std::setw(4) << v;
    }
    os << "\n";
  };
  std::vector<std::int64_t> header(statistics.begin(), statistics.end());
  line("q-statistic:", header, false);
  std::int64_t sum = 0;
  for (auto t : totals) sum += t;
  line("total", totals, false);
  for (const auto& [label, counts] : rows) line(label, counts, true);
  os << "total = " << sum << "\n";
  return os.str();
}

std::pair<MultiPoly, MultiPoly> equidistributionSides(int n) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  std::pair<MultiPoly, MultiPoly> out;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    out.first += MultiPoly::term(Monomial(kVarQ, inversions(w)));
    out.second += MultiPoly::term(Monomial(kVarQ, comaj(w)));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool equidistributionSn(int n) {
  auto [inv, cmj] = equidistributionSides(n);
  return inv == cmj;
}

bool garsiaGesselCheck(const Word& p, const Word& r) {
  std::set<int> seen;
  for (const Word* w : {&p, &r})
    for (int letter : *w)
      if (!seen.insert(letter).second) throw ValidationError("P and R must not repeat a letter");
  std::vector<int> shuffled, merged;
  const int base = comaj(p) + comaj(r);
  for (const auto& sources : interleavings(static_cast<int>(p.size()), static_cast<int>(r.size()))) {
    Word w;
    std::size_t i = 0, j = 0;
    for (bool fromR : sources) w.push_back(fromR ? r[j++] : p[i++]);
    shuffled.push_back(base + interleavingInversions(sources));
    merged.push_back(comaj(w));
  }
  std::sort(shuffled.begin(), shuffled.end());
  std::sort(merged.begin(), merged.end());
  return shuffled == merged;
}

DisjointSupportReport disjointSupportCheck(const std::vector<int>& j, const std::vector<int>& k) {
  std::set<int> jset(j.begin(), j.end());
  if (jset.size() != j.size()) throw ValidationError("J must not repeat a letter");
  for (int letter : jset)
    if (jset.contains(letter + 1)) throw ValidationError("J must not contain adjacent letters");
  std::set<int> kset(k.begin(), k.end());
  for (int letter : kset)
    if (!jset.contains(letter)) throw ValidationError("K must be a subset of J");
  Word piWord, rhoWord;
  for (int letter : jset) (kset.contains(letter) ? rhoWord : piWord).push_back(letter);
  const Permutation pi = wordProduct(piWord);
  const Permutation rho = wordProduct(rhoWord);
  const Permutation product = pi * rho;

  DisjointSupportReport out;
  out.singleTerm = structureConstants(pi, rho) == SchubertVector::basis(product);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), jset.size(), kset.size());
  out.countMatches = Integer(static_cast<unsigned long>(countReducedWords(product))) ==
                     binom * Integer(static_cast<unsigned long>(countReducedWords(pi) * countReducedWords(rho)));

  std::vector<int> predicted, actual;
  out.naiveInsertionPreserves = true;
  for (const auto& p : reducedWords(pi)) {
    for (const auto& r : reducedWords(rho)) {
      for (const auto& sources : interleavings(static_cast<int>(p.size()), static_cast<int>(r.size()))) {
        Word w;
        std::size_t a = 0, b = 0;
        for (bool fromR : sources) w.push_back(fromR ? r[b++] : p[a++]);
        const int stat = comaj(p) + comaj(r) + interleavingInversions(sources);
        predicted.push_back(stat);
        if (comaj(w) != stat) out.naiveInsertionPreserves = false;
      }
    }
  }
  for (const auto& w : reducedWords(product)) actual.push_back(comaj(w));
  std::sort(predicted.begin(), predicted.end());
  std::sort(actual.begin(), actual.end());
  out.distributionMatches = predicted == actual;
  return out;
}

std::string distributionToString(const StatDistribution& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, count] : d) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "):" + std::to_string(count);
  }
  return out + "}";
}

}  // namespace martial
