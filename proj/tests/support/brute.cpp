#include "brute.hpp"

#include <algorithm>
#include <functional>

namespace bpd::brute {

namespace {

// Template entry: pair of tuple positions and its code in the canonical
// orientation (0 absent, 1 red, 2 blue).
struct Slot {
  int i, j, code;
};

template <std::size_t N>
bool matches(const ColoredGraph& g, const std::array<Vertex, N>& x, const std::vector<Slot>& t) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (x[i] == x[j]) return false;
  for (int swap = 0; swap < 2; ++swap) {
    bool ok = true;
    for (const Slot& s : t) {
      int want = s.code;
      if (swap && want) want = 3 - want;
      if (g.code(x[s.i], x[s.j]) != want) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Edge> all_edges(const ColoredGraph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = u + 1; v < g.num_vertices(); ++v)
      if (auto c = g.color(u, v)) out.emplace_back(u, v, *c);
  return out;
}

bool free_after(const ColoredGraph& g, const std::vector<std::vector<int>>& code) {
  const Vertex n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        if (a == v || b == v) continue;
        const int x = code[v][a], y = code[v][b];
        if (x && y && x != y && !code[a][b]) return false;
      }
  return true;
}

}  // namespace

std::vector<Triple> bicolored_p3s(const ColoredGraph& g) {
  std::vector<Triple> out;
  const Vertex n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        if (a == v || b == v) continue;
        const auto x = g.color(v, a), y = g.color(v, b);
        if (x && y && *x != *y && !g.has_edge(a, b)) out.push_back({v, a, b});
      }
  return out;
}

bool p3_free(const ColoredGraph& g) { return bicolored_p3s(g).empty(); }

std::optional<int> min_deletions(const ColoredGraph& g, int cap) {
  const std::vector<Edge> e = all_edges(g);
  const int m = static_cast<int>(e.size());
  const Vertex n = g.num_vertices();
  std::vector<std::vector<int>> code(n, std::vector<int>(n, 0));
  for (const Edge& x : e) code[x.u()][x.v()] = code[x.v()][x.u()] = x.color == Color::Red ? 1 : 2;
  for (int s = 0; s <= std::min(m, cap); ++s) {
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      for (int i : pick) code[e[i].u()][e[i].v()] = code[e[i].v()][e[i].u()] = 0;
      const bool ok = free_after(g, code);
      for (int i : pick) code[e[i].u()][e[i].v()] = code[e[i].v()][e[i].u()] = e[i].color == Color::Red ? 1 : 2;
      if (ok) return s;
      int i = s - 1;
      while (i >= 0 && pick[i] == m - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

int component_count(const ColoredGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> label(n, -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = count;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          if (label[a] == count && label[b] < 0 && a != b && g.has_edge(a, b)) {
            label[b] = count;
            grew = true;
          }
    }
    ++count;
  }
  return count;
}

std::vector<VertexPair> bridges(const ColoredGraph& g) {
  const int base = component_count(g);
  std::vector<VertexPair> out;
  for (const Edge& e : all_edges(g)) {
    const VertexPair p = e.ends;
    if (component_count(delete_edges(g, std::span<const VertexPair>(&p, 1))) > base) out.push_back(p);
  }
  return out;
}

int bipartite_cover(int nl, int nr, const std::vector<std::pair<int, int>>& edges) {
  const int total = nl + nr;
  int best = total;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    const bool covers = std::all_of(edges.begin(), edges.end(), [&](const std::pair<int, int>& e) {
      return ((mask >> e.first) & 1) || ((mask >> (nl + e.second)) & 1);
    });
    if (covers) best = size;
  }
  return best;
}

int max_p3_packing(const ColoredGraph& g) {
  const std::vector<Edge> e = all_edges(g);
  auto index = [&](Vertex a, Vertex b) {
    const VertexPair p(a, b);
    return static_cast<int>(std::lower_bound(e.begin(), e.end(), p,
                                             [](const Edge& x, const VertexPair& y) { return x.ends < y; }) -
                            e.begin());
  };
  std::vector<std::pair<int, int>> p3;
  for (const Triple& t : bicolored_p3s(g)) p3.emplace_back(index(t.center, t.a), index(t.center, t.b));
  // Per edge, the P3s it belongs to.
  std::vector<std::vector<int>> of(e.size());
  for (int i = 0; i < static_cast<int>(p3.size()); ++i) {
    of[p3[i].first].push_back(i);
    of[p3[i].second].push_back(i);
  }
  std::vector<char> used(e.size(), 0), dead(e.size(), 0);
  int best = 0;
  // Branch on the first live edge that still lies in an available P3: it is
  // either left out of the packing or covered by one of its P3s.
  std::function<void(int)> rec = [&](int count) {
    best = std::max(best, count);
    int live = 0;
    int pivot = -1;
    for (std::size_t x = 0; x < e.size(); ++x) {
      if (used[x] || dead[x]) continue;
      bool avail = false;
      for (int t : of[x]) {
        const int y = p3[t].first == static_cast<int>(x) ? p3[t].second : p3[t].first;
        if (!used[y] && !dead[y]) avail = true;
      }
      if (!avail) continue;
      ++live;
      if (pivot < 0) pivot = static_cast<int>(x);
    }
    if (pivot < 0 || count + live / 2 <= best) return;
    for (int t : of[pivot]) {
      const int y = p3[t].first == pivot ? p3[t].second : p3[t].first;
      if (used[y] || dead[y]) continue;
      used[pivot] = used[y] = 1;
      rec(count + 1);
      used[pivot] = used[y] = 0;
    }
    dead[pivot] = 1;
    rec(count);
    dead[pivot] = 0;
  };
  rec(0);
  return best;
}

bool is_lc(const ColoredGraph& g, std::array<Vertex, 4> x) {
  return matches(g, x, {{0, 1, 2}, {1, 2, 1}, {0, 3, 2}, {1, 3, 1}, {2, 3, 2}, {0, 2, 0}});
}

bool is_lo(const ColoredGraph& g, std::array<Vertex, 4> x) {
  return matches(g, x, {{0, 1, 2}, {1, 2, 1}, {0, 3, 2}, {1, 3, 2}, {2, 3, 1}, {0, 2, 0}});
}

bool is_iiz(const ColoredGraph& g, std::array<Vertex, 4> x) {
  return matches(g, x, {{0, 1, 2}, {1, 2, 1}, {0, 3, 1}, {1, 3, 2}, {2, 3, 2}, {0, 2, 0}});
}

bool is_hourglass(const ColoredGraph& g, std::array<Vertex, 5> x) {
  return matches(g, x,
                 {{0, 1, 2}, {1, 2, 1}, {0, 3, 2}, {1, 3, 1}, {1, 4, 2}, {2, 4, 1},
                  {0, 2, 0}, {0, 4, 0}, {2, 3, 0}, {3, 4, 0}});
}

ColoredGraph random_graph(std::mt19937_64& rng, Vertex n, double p, double blue) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (u(rng) < p) edges.emplace_back(a, b, u(rng) < blue ? Color::Blue : Color::Red);
  return ColoredGraph(n, edges);
}

}  // namespace bpd::brute
