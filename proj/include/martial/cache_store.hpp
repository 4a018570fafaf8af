#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "martial/permutation.hpp"

namespace martial {

class MultiPoly;

// Hooks into the process-wide memo tables.
void forEachCachedReducedWords(const std::function<void(const Permutation&, const std::vector<Word>&)>& visit);
void preloadReducedWords(const Permutation& p, std::vector<Word> words);
void forEachCachedSchubertPolynomial(const std::function<void(const Permutation&, const MultiPoly&)>& visit);
void preloadSchubertPolynomial(const Permutation& p, MultiPoly poly);

/// Reads reduced_words.cache and schubert_polys.cache from dir if present.
/// Malformed lines are skipped. Returns the number of entries loaded.
std::size_t loadCaches(const std::filesystem::path& dir);
/// Writes the current memo tables to dir (created if missing).
void saveCaches(const std::filesystem::path& dir);

}  // namespace martial
