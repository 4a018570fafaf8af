#include "martial/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "martial/cache_store.hpp"
#include "martial/errors.hpp"
#include "martial/memo.hpp"

namespace martial {

namespace {

int parseInt(std::string_view text) {
  int value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<int> parseIntList(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(parseInt(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

MemoCache<Permutation, std::vector<Word>>& reducedWordCache() {
  static MemoCache<Permutation, std::vector<Word>> cache;
  return cache;
}

MemoCache<Permutation, std::size_t>& reducedWordCountCache() {
  static MemoCache<Permutation, std::size_t> cache;
  return cache;
}

}  // namespace

Window parseWindow(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ValidationError("window must look like LO..HI");
  Window w{parseInt(text.substr(0, dots)), parseInt(text.substr(dots + 2))};
  if (w.lo > w.hi) throw ValidationError("window has LO > HI");
  return w;
}

Permutation::Permutation(int lo, std::vector<int> images) : lo_(lo), images_(std::move(images)) {
  std::size_t begin = 0;
  while (begin < images_.size() && images_[begin] == lo_ + static_cast<int>(begin)) ++begin;
  std::size_t end = images_.size();
  while (end > begin && images_[end - 1] == lo_ + static_cast<int>(end - 1)) --end;
  if (begin == end) {
    lo_ = 0;
    images_.clear();
    return;
  }
  images_ = std::vector<int>(images_.begin() + begin, images_.begin() + end);
  lo_ += static_cast<int>(begin);
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++length_;
}

Permutation Permutation::fromWindow(std::span<const int> images, int offset) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    long idx = static_cast<long>(v) - offset;
    if (idx < 0 || idx >= static_cast<long>(images.size()) || seen[idx])
      throw ValidationError("images are not a rearrangement of the window starting at " +
                            std::to_string(offset));
    seen[idx] = 1;
  }
  return Permutation(offset, std::vector<int>(images.begin(), images.end()));
}

Permutation permFromWindow(std::span<const int> images, int offset) {
  return Permutation::fromWindow(images, offset);
}

Permutation Permutation::simple(int i) { return Permutation(i, {i + 1, i}); }

Permutation Permutation::transposition(int i, int j) {
  if (i == j) return {};
  if (i > j) std::swap(i, j);
  std::vector<int> images(j - i + 1);
  std::iota(images.begin(), images.end(), i);
  std::swap(images.front(), images.back());
  return Permutation(i, std::move(images));
}

Permutation Permutation::fromWord(std::span<const int> letters) { return wordProduct(letters); }

Permutation Permutation::parse(std::string_view text, int offset) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty permutation");
  if (text == "e") return {};
  if (text.starts_with("w:")) return wordProduct(parseIntList(text.substr(2)));
  if (text.find(',') != std::string_view::npos) {
    auto images = parseIntList(text);
    return fromWindow(images, offset);
  }
  std::vector<int> images;
  for (char c : text) {
    if (c < '0' || c > '9') throw ValidationError("bad permutation digit string: '" + std::string(text) + "'");
    images.push_back(c - '0');
  }
  if (offset != 1) {
    // Digit strings always name the values 1..n; the offset shifts positions and values.
    for (int& v : images) v += offset - 1;
  }
  return fromWindow(images, offset);
}

int Permutation::operator()(int i) const {
  if (images_.empty() || i < lo_ || i > hi()) return i;
  return images_[i - lo_];
}

int Permutation::inverseAt(int value) const {
  if (images_.empty() || value < lo_ || value > hi()) return value;
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] == value) return lo_ + static_cast<int>(k);
  return value;  // unreachable for a valid bijection
}

std::vector<int> Permutation::letters() const {
  std::vector<int> out;
  int running = lo_ - 1;
  for (std::size_t k = 0; k + 1 < images_.size(); ++k) {
    running = std::max(running, images_[k]);
    int i = lo_ + static_cast<int>(k);
    if (running > i) out.push_back(i);
  }
  return out;
}

std::vector<int> Permutation::oneLine(int from, int to) const {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back((*this)(i));
  return out;
}

std::vector<int> Permutation::code() const {
  if (!fixesNonpositive()) throw ValidationError("code() needs a permutation fixing the nonpositive integers");
  if (isIdentity()) return {};
  std::vector<int> out;
  for (int i = 1; i <= hi(); ++i) {
    int count = 0;
    for (int j = i + 1; j <= hi(); ++j)
      if ((*this)(j) < (*this)(i)) ++count;
    out.push_back(count);
  }
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.isIdentity()) return *this;
  if (isIdentity()) return rhs;
  int lo = std::min(lo_, rhs.lo_);
  int hiv = std::max(hi(), rhs.hi());
  std::vector<int> images;
  images.reserve(hiv - lo + 1);
  for (int i = lo; i <= hiv; ++i) images.push_back((*this)(rhs(i)));
  return Permutation(lo, std::move(images));
}

Permutation Permutation::inverse() const {
  if (isIdentity()) return {};
  std::vector<int> images(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) images[images_[k] - lo_] = lo_ + static_cast<int>(k);
  return Permutation(lo_, std::move(images));
}

Permutation Permutation::timesTransposition(int i, int j) const {
  if (i == j) return *this;
  if (i > j) std::swap(i, j);
  int lo = isIdentity() ? i : std::min(lo_, i);
  int hiv = isIdentity() ? j : std::max(hi(), j);
  std::vector<int> images;
  images.reserve(hiv - lo + 1);
  for (int k = lo; k <= hiv; ++k) images.push_back((*this)(k));
  std::swap(images[i - lo], images[j - lo]);
  return Permutation(lo, std::move(images));
}

Permutation Permutation::timesSimple(int i) const { return timesTransposition(i, i + 1); }

Permutation Permutation::simpleTimes(int i) const {
  int lo = isIdentity() ? i : std::min(lo_, i);
  int hiv = isIdentity() ? i + 1 : std::max(hi(), i + 1);
  std::vector<int> images;
  images.reserve(hiv - lo + 1);
  for (int k = lo; k <= hiv; ++k) {
    int v = (*this)(k);
    images.push_back(v == i ? i + 1 : (v == i + 1 ? i : v));
  }
  return Permutation(lo, std::move(images));
}

std::vector<int> Permutation::rightDescents() const {
  std::vector<int> out;
  for (int i = lo_; i < hi(); ++i)
    if (hasRightDescent(i)) out.push_back(i);
  return out;
}

std::vector<int> Permutation::leftDescents() const {
  std::vector<int> out;
  for (int i = lo_; i < hi(); ++i)
    if (hasLeftDescent(i)) out.push_back(i);
  return out;
}

Permutation Permutation::shifted(int n) const {
  if (isIdentity()) return {};
  std::vector<int> images(images_);
  for (int& v : images) v += n;
  return Permutation(lo_ + n, std::move(images));
}

std::string Permutation::toString() const {
  if (isIdentity()) return "e";
  if (lo_ >= 1 && hi() <= 9) return oneLineString(hi());
  // Lexicographically first reduced word: peel the smallest left descent each time.
  std::string out = "w:";
  Permutation rest = *this;
  bool first = true;
  while (!rest.isIdentity()) {
    int i = rest.leftDescents().front();
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
    rest = rest.simpleTimes(i);
  }
  return out;
}

std::string Permutation::oneLineString(int width) const {
  if (!isIdentity() && (lo_ < 1 || hi() > width)) throw ValidationError("permutation does not fit the digit window");
  if (width > 9) throw ValidationError("digit strings only cover values up to 9");
  std::string out;
  for (int i = 1; i <= width; ++i) out += static_cast<char>('0' + (*this)(i));
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = std::hash<int>{}(lo_) * 0x9e3779b97f4a7c15ULL;
  for (int v : images_) h = (h ^ static_cast<std::size_t>(v + 0x1000)) * 0x100000001b3ULL;
  return h;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
  return a.images_ <=> b.images_;
}

bool ByLengthThenOneLine::operator()(const Permutation& a, const Permutation& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.isIdentity() || b.isIdentity()) return false;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  for (int i = lo; i <= hi; ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

Permutation wordProduct(std::span<const int> word) {
  Permutation p;
  for (int letter : word) p = p.timesSimple(letter);
  return p;
}

bool isReducedWord(std::span<const int> word) {
  return wordProduct(word).length() == static_cast<int>(word.size());
}

const std::vector<Word>& reducedWords(const Permutation& p) {
  return reducedWordCache().get(p, [&] {
    std::vector<Word> out;
    if (p.isIdentity()) {
      out.emplace_back();
      return out;
    }
    for (int i : p.rightDescents()) {
      for (const Word& prefix : reducedWords(p.timesSimple(i))) {
        Word w = prefix;
        w.push_back(i);
        out.push_back(std::move(w));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

std::size_t countReducedWords(const Permutation& p) {
  return reducedWordCountCache().get(p, [&] {
    if (p.isIdentity()) return std::size_t{1};
    std::size_t total = 0;
    for (int i : p.rightDescents()) total += countReducedWords(p.timesSimple(i));
    return total;
  });
}

int comaj(std::span<const int> word) {
  int total = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] < word[i + 1]) total += static_cast<int>(i) + 1;
  return total;
}

int inversions(std::span<const int> word) {
  int total = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++total;
  return total;
}

std::vector<Permutation> permutationsInWindow(Window window, int maxLength) {
  std::vector<Permutation> all{Permutation{}};
  std::vector<Permutation> level{Permutation{}};
  for (int len = 1; len <= maxLength && !level.empty(); ++len) {
    std::unordered_set<Permutation> next;
    for (const auto& p : level)
      for (int i = window.lo; i < window.hi; ++i)
        if (!p.hasRightDescent(i)) next.insert(p.timesSimple(i));
    level.assign(next.begin(), next.end());
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end(), ByLengthThenOneLine{});
  return all;
}

std::vector<std::pair<Permutation, Permutation>> lengthAdditiveFactorizations(const Permutation& p) {
  std::vector<std::pair<Permutation, Permutation>> out{{Permutation{}, p}};
  std::unordered_set<Permutation> seen{Permutation{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto [left, right] = out[k];
    for (int i : right.leftDescents()) {
      Permutation nextLeft = left.timesSimple(i);
      if (seen.insert(nextLeft).second) out.emplace_back(nextLeft, right.simpleTimes(i));
    }
  }
  return out;
}

void forEachCachedReducedWords(const std::function<void(const Permutation&, const std::vector<Word>&)>& visit) {
  reducedWordCache().forEach(visit);
}

void preloadReducedWords(const Permutation& p, std::vector<Word> words) {
  reducedWordCache().insert(p, std::move(words));
}

}  // namespace martial
