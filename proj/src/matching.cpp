#include "martial/matching.hpp"

#include <limits>
#include <queue>

namespace martial {

BipartiteMatching maximumBipartiteMatching(int rightCount, const std::vector<std::vector<int>>& adjacency) {
  const int leftCount = static_cast<int>(adjacency.size());
  constexpr int kInf = std::numeric_limits<int>::max();
  BipartiteMatching m;
  m.leftToRight.assign(leftCount, -1);
  m.rightToLeft.assign(rightCount, -1);
  std::vector<int> dist(leftCount);

  auto bfs = [&] {
    std::queue<int> queue;
    bool reachedFree = false;
    for (int u = 0; u < leftCount; ++u) {
      dist[u] = m.leftToRight[u] < 0 ? 0 : kInf;
      if (dist[u] == 0) queue.push(u);
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adjacency[u]) {
        int w = m.rightToLeft[v];
        if (w < 0) {
          reachedFree = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return reachedFree;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adjacency[u]) {
      int w = m.rightToLeft[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
        m.leftToRight[u] = v;
        m.rightToLeft[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < leftCount; ++u)
      if (m.leftToRight[u] < 0 && dfs(dfs, u)) ++m.size;
  }
  return m;
}

}  // namespace martial
