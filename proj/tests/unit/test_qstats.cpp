#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "martial/errors.hpp"
#include "martial/qstats.hpp"
#include "martial/schubert.hpp"
#include "oracles.hpp"
#include "reference_table.hpp"

using namespace martial;

namespace {

const Permutation egg = Permutation::parse("12463578");

BarredWord barred(Word w, std::vector<bool> bars) { return {std::move(w), std::move(bars)}; }
BarredWord plain(Word w) { return {w, std::vector<bool>(w.size(), false)}; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("qstats") {
  TEST_CASE("barred words") {
    const auto r1 = barredWords(Permutation::simple(1));
    CHECK(r1.size() == 2);
    CHECK(barredWords(Permutation()).size() == 1);
    CHECK(barredWords(egg, 3).size() == 2);
    CHECK(barredWords(egg).size() == 16);
    CHECK(barred({3, 5, 4}, {true, false, false}).toString() == "3',5,4");
  }

  TEST_CASE("q-statistic") {
    CHECK(qStatistic(barred({3, 5, 4}, {true, true, true})) == 13);
    CHECK(qStatistic(barred({5, 3, 4}, {true, true, true})) == 14);
    CHECK(qStatistic(plain({})) == 0);
    CHECK(qStatistic(barred({3, 5, 4}, {false, true, false})) == 1 + 5);
  }

  TEST_CASE("shuffles") {
    CHECK(shuffles(plain({3, 5, 4}), plain({5, 3, 4})).size() == 20);
    const auto single = shuffles(plain({1, 2}), plain({}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].inversions == 0);
    std::multiset<int> inv;
    for (const auto& s : shuffles(plain({1}), plain({3}))) inv.insert(s.inversions);
    CHECK(inv == std::multiset<int>{0, 1});
    for (const auto& s : shuffles(plain({1, 2, 3}), plain({4, 5}))) {
      // an R letter before a P letter
      int count = 0;
      for (std::size_t i = 0; i < s.sources.size(); ++i)
        for (std::size_t j = i + 1; j < s.sources.size(); ++j) count += s.sources[i] && !s.sources[j];
      CHECK(s.inversions == count);
      CHECK(s.merged().word.size() == 5);
    }
  }

  TEST_CASE("extreme statistics of the 80 shuffles") {
    const auto P = barredWords(egg, 3);
    int lo = 1000, hi = 0;
    std::size_t total = 0;
    for (const auto& p : P)
      for (const auto& r : P)
        for (const auto& s : shuffles(p, r)) {
          lo = std::min(lo, shuffleQStatistic(s));
          hi = std::max(hi, shuffleQStatistic(s));
          ++total;
        }
    CHECK(total == 80);
    CHECK(lo == 26);
    CHECK(hi == 37);
  }

  TEST_CASE("the 80-shuffle table for 12463578") {
    const auto d = qNenashevDistributions(egg, egg, 6);
    CHECK(d.holds());
    const auto table = distributionTable(egg, egg, 6);
    const auto got = lines(table.toCsv());
    REQUIRE(got.size() == 10);
    CHECK(got[0] == kReferenceTableHeader);
    CHECK(got[1] == kReferenceTableTotals);
    std::vector<std::string> rows(got.begin() + 2, got.end()), expected = kReferenceTableRows;
    std::sort(rows.begin(), rows.end());
    std::sort(expected.begin(), expected.end());
    CHECK(rows == expected);
    CHECK(table.toJson()["totals"].size() == 12);
  }

  TEST_CASE("q-Nenashev identity on small pairs") {
    const auto perms = permutationsInWindow({1, 4}, 3);
    for (const auto& pi : perms)
      for (const auto& rho : perms) {
        CHECK(qNenashevDistributions(pi, rho).holds());
        CHECK(nenashevCountCheck(pi, rho));
        CHECK(multipliedIdentityCheck(pi, rho));
      }
    const auto unit = qNenashevDistributions(egg, Permutation());
    CHECK(unit.lhs == barredWordDistribution(egg));
    CHECK(unit.rhs == barredWordDistribution(egg));
    CHECK_THROWS_AS(qNenashevDistributions(Permutation::simple(0), egg), ValidationError);
  }

  TEST_CASE("multiplied identity for S_{r_2} squared") {
    const MultiPoly q = MultiPoly::variable(kVarQ);
    const MultiPoly f = MultiPoly::variable(kVarAlpha) * q * q + MultiPoly::variable(kVarBeta);
    const auto sides = multipliedIdentitySides(Permutation::simple(2), Permutation::simple(2));
    CHECK(sides.lhs == (1 + q) * f * f);
    CHECK(sides.lhs == sides.rhs);
    CHECK(nenashevCountCheck(egg, egg));
    std::int64_t rhs = 0;
    for (const auto& [sigma, c] : structureConstants(egg, egg))
      rhs += c.get_num().get_si() * static_cast<std::int64_t>(countReducedWords(sigma));
    CHECK(rhs == 80);
  }

  TEST_CASE("rectification witnesses") {
    const auto w = rectificationWitness(egg, egg, 6);
    CHECK(w.perfect);
    CHECK(w.entries.size() == 80);
    CHECK(w.shuffleCount == 80);
    CHECK(w.targetCount == 80);
    std::set<std::tuple<Permutation, int, BarredWord>> used;
    for (const auto& e : w.entries) {
      CHECK(shuffleQStatistic(e.shuffle) == qStatistic(e.target));
      CHECK(e.shuffle.left.barCount() + e.shuffle.right.barCount() == e.target.barCount());
      CHECK(wordProduct(e.target.word) == e.sigma);
      CHECK(used.insert({e.sigma, e.copy, e.target}).second);
    }
    const auto small = rectificationWitness(Permutation::simple(1), Permutation::simple(1), 2);
    CHECK(small.perfect);
    CHECK(small.entries.size() == 2);
    const auto unit = rectificationWitness(egg, Permutation());
    CHECK(unit.perfect);
    for (const auto& e : unit.entries) CHECK(e.target == e.shuffle.left);
    CHECK(rectificationWitness(Permutation::parse("1342"), Permutation::parse("2143")).perfect);
  }

  TEST_CASE("equidistribution on S_n") {
    const MultiPoly q = MultiPoly::variable(kVarQ);
    const auto [inv3, comaj3] = equidistributionSides(3);
    CHECK(inv3 == 1 + MultiPoly(2) * q + MultiPoly(2) * q * q + q.pow(3));
    CHECK(comaj3 == inv3);
    for (int n = 1; n <= 6; ++n) {
      MultiPoly inv, cm;
      for (const auto& a : oracle::allPermutations(n)) {
        inv += q.pow(oracle::inversions(a));
        cm += q.pow(oracle::comaj(a));
      }
      const auto [gotInv, gotComaj] = equidistributionSides(n);
      CHECK(gotInv == inv);
      CHECK(gotComaj == cm);
      CHECK(equidistributionSn(n));
    }
  }

  TEST_CASE("Garsia-Gessel shuffles") {
    CHECK(garsiaGesselCheck({1}, {3}));
    CHECK(garsiaGesselCheck({4, 1, 3}, {2, 5}));
    CHECK_THROWS_AS(garsiaGesselCheck({1, 2}, {2}), ValidationError);
    const auto report = disjointSupportCheck({2, 4, 6}, {6});
    CHECK(report.singleTerm);
    CHECK(report.countMatches);
    CHECK(report.distributionMatches);
    CHECK_FALSE(report.naiveInsertionPreserves);
  }
}
