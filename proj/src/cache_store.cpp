#include "martial/cache_store.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "martial/poly.hpp"

namespace martial {

namespace {

constexpr const char* kReducedWordsFile = "reduced_words.cache";
constexpr const char* kSchubertFile = "schubert_polys.cache";

std::string wordToString(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

Word parseWord(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) w.push_back(std::stoi(token));
  return w;
}

template <class Handle>
std::size_t readLines(const std::filesystem::path& file, Handle&& handle) {
  std::ifstream in(file);
  if (!in) return 0;
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    try {
      handle(Permutation::parse(line.substr(0, tab)), line.substr(tab + 1));
      ++loaded;
    } catch (const std::exception&) {
      // Skip entries that no longer parse.
    }
  }
  return loaded;
}

void writeAtomically(const std::filesystem::path& file, const std::string& contents) {
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << contents;
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace

std::size_t loadCaches(const std::filesystem::path& dir) {
  std::size_t loaded = readLines(dir / kReducedWordsFile, [](const Permutation& p, const std::string& rest) {
    std::vector<Word> words;
    std::stringstream ss(rest);
    std::string token;
    while (std::getline(ss, token, ';')) words.push_back(parseWord(token));
    if (rest.empty()) words.emplace_back();
    for (const auto& w : words)
      if (wordProduct(w) != p || static_cast<int>(w.size()) != p.length()) throw std::runtime_error("stale");
    preloadReducedWords(p, std::move(words));
  });
  loaded += readLines(dir / kSchubertFile, [](const Permutation& p, const std::string& rest) {
    preloadSchubertPolynomial(p, MultiPoly::parse(rest));
  });
  return loaded;
}

void saveCaches(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream words;
  forEachCachedReducedWords([&](const Permutation& p, const std::vector<Word>& ws) {
    words << p.toString() << '\t';
    for (std::size_t i = 0; i < ws.size(); ++i) words << (i ? ";" : "") << wordToString(ws[i]);
    words << '\n';
  });
  writeAtomically(dir / kReducedWordsFile, words.str());
  std::ostringstream polys;
  forEachCachedSchubertPolynomial(
      [&](const Permutation& p, const MultiPoly& f) { polys << p.toString() << '\t' << f.toString() << '\n'; });
  writeAtomically(dir / kSchubertFile, polys.str());
}

}  // namespace martial
