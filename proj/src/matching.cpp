#include "bpd/matching.hpp"

#include <limits>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& bg)
      : bg_(bg), mate_l_(bg.left, -1), mate_r_(bg.right, -1), dist_(bg.left), it_(bg.left) {}

  Matching solve() {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < bg_.left; ++u) it_[u] = 0;
      for (int u = 0; u < bg_.left; ++u)
        if (mate_l_[u] < 0 && dfs(u)) ++size;
    }
    return {size, mate_l_, mate_r_};
  }

 private:
  bool bfs() {
    std::vector<int> queue;
    queue.reserve(bg_.left);
    bool found = false;
    for (int u = 0; u < bg_.left; ++u) {
      dist_[u] = mate_l_[u] < 0 ? 0 : kInf;
      if (dist_[u] == 0) queue.push_back(u);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int r : bg_.adj[u]) {
        const int w = mate_r_[r];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  // Recursion depth is bounded by the shortest augmenting path length.
  bool dfs(int u) {
    for (auto& i = it_[u]; i < bg_.adj[u].size(); ++i) {
      const int r = bg_.adj[u][i];
      const int w = mate_r_[r];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        mate_l_[u] = r;
        mate_r_[r] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& bg_;
  std::vector<int> mate_l_, mate_r_, dist_;
  std::vector<std::size_t> it_;
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& bg) {
  if (static_cast<int>(bg.adj.size()) != bg.left)
    throw PreconditionError("bipartite adjacency size differs from left side");
  for (const auto& list : bg.adj)
    for (int r : list)
      if (r < 0 || r >= bg.right) throw PreconditionError("right vertex out of range");
  return HopcroftKarp(bg).solve();
}

BipartiteCover konig_cover(const BipartiteGraph& bg, const Matching& m) {
  std::vector<char> zl(bg.left, 0), zr(bg.right, 0);
  std::vector<int> stack;
  for (int u = 0; u < bg.left; ++u)
    if (m.mate_left[u] < 0) {
      zl[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int r : bg.adj[u]) {
      if (zr[r] || m.mate_left[u] == r) continue;
      zr[r] = 1;
      const int w = m.mate_right[r];
      if (w >= 0 && !zl[w]) {
        zl[w] = 1;
        stack.push_back(w);
      }
    }
  }
  BipartiteCover cover;
  for (int u = 0; u < bg.left; ++u)
    if (!zl[u]) cover.left.push_back(u);
  for (int r = 0; r < bg.right; ++r)
    if (zr[r]) cover.right.push_back(r);
  if (cover.size() != m.size) throw InvariantError("Konig cover size differs from matching size");
  return cover;
}

BipartiteCover minimum_vertex_cover(const BipartiteGraph& bg) {
  return konig_cover(bg, maximum_matching(bg));
}

}  // namespace bpd
