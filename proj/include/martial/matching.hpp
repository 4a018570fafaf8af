#pragma once

#include <vector>

namespace martial {

/// Result of a maximum bipartite matching; -1 marks an unmatched vertex.
struct BipartiteMatching {
  std::vector<int> leftToRight;
  std::vector<int> rightToLeft;
  int size = 0;

  bool perfect() const {
    return size == static_cast<int>(leftToRight.size()) && size == static_cast<int>(rightToLeft.size());
  }
};

/// Hopcroft-Karp on adjacency lists left -> right.
BipartiteMatching maximumBipartiteMatching(int rightCount, const std::vector<std::vector<int>>& adjacency);

}  // namespace martial
