#include "bpd/graph.hpp"

#include <algorithm>
#include <string>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

std::uint8_t encode(Color c) { return c == Color::Red ? 1 : 2; }

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

void canonicalize(std::vector<VertexPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

ColoredGraph::ColoredGraph(Vertex n) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  if (n <= kDenseLimit) dense_.assign(static_cast<std::size_t>(n) * n, 0);
}

ColoredGraph::ColoredGraph(Vertex n, std::span<const Edge> edges) : ColoredGraph(n) {
  for (const Edge& e : edges) {
    if (e.u() == e.v()) throw PreconditionError("self-loop at vertex " + std::to_string(e.u()));
    check_vertex(e.u());
    check_vertex(e.v());
    if (code(e.u(), e.v()) != 0)
      throw PreconditionError("duplicate edge " + pair_text(e.u(), e.v()));
    insert_edge(e.u(), e.v(), e.color);
  }
}

void ColoredGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_) + ")");
}

std::span<const Neighbor> ColoredGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int ColoredGraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int ColoredGraph::degree(Vertex v, Color c) const {
  check_vertex(v);
  return static_cast<int>(std::count_if(adj_[v].begin(), adj_[v].end(),
                                        [c](const Neighbor& nb) { return nb.color == c; }));
}

std::optional<Color> ColoredGraph::color(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return std::nullopt;
  return decode_color(code(u, v));
}

std::uint8_t ColoredGraph::sparse_code(Vertex u, Vertex v) const noexcept {
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  auto it = std::lower_bound(list.begin(), list.end(), target,
                             [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  if (it == list.end() || it->vertex != target) return 0;
  return encode(it->color);
}

void ColoredGraph::insert_edge(Vertex u, Vertex v, Color c) {
  auto place = [](std::vector<Neighbor>& list, Neighbor nb) {
    auto it = std::lower_bound(list.begin(), list.end(), nb,
                               [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    list.insert(it, nb);
  };
  place(adj_[u], {v, c});
  place(adj_[v], {u, c});
  if (!dense_.empty()) {
    dense_[static_cast<std::size_t>(u) * n_ + v] = encode(c);
    dense_[static_cast<std::size_t>(v) * n_ + u] = encode(c);
  }
  ++m_;
  if (c == Color::Red) ++m_red_;
}

void ColoredGraph::erase_edge(Vertex u, Vertex v) {
  const std::uint8_t c = code(u, v);
  if (c == 0) throw PreconditionError("cannot delete missing edge " + pair_text(u, v));
  auto drop = [](std::vector<Neighbor>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x,
                               [](const Neighbor& nb, Vertex y) { return nb.vertex < y; });
    list.erase(it);
  };
  drop(adj_[u], v);
  drop(adj_[v], u);
  if (!dense_.empty()) {
    dense_[static_cast<std::size_t>(u) * n_ + v] = 0;
    dense_[static_cast<std::size_t>(v) * n_ + u] = 0;
  }
  --m_;
  if (c == 1) --m_red_;
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (const Neighbor& nb : adj_[u])
      if (u < nb.vertex) out.emplace_back(u, nb.vertex, nb.color);
  return out;
}

int ColoredGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

int ColoredGraph::max_degree(Color c) const noexcept {
  int best = 0;
  for (const auto& list : adj_) {
    int d = 0;
    for (const Neighbor& nb : list) d += nb.color == c;
    best = std::max(best, d);
  }
  return best;
}

InstanceStats stats(const ColoredGraph& g, std::int64_t k) {
  InstanceStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.m_red = g.num_edges(Color::Red);
  s.m_blue = g.num_edges(Color::Blue);
  s.max_degree = g.max_degree();
  s.max_blue_degree = g.max_degree(Color::Blue);
  s.max_red_degree = g.max_degree(Color::Red);
  s.ell = static_cast<std::int64_t>(s.m) - k;
  return s;
}

std::vector<Neighbor> neighbors(const ColoredGraph& g, Vertex v) {
  auto span = g.neighbors(v);
  return {span.begin(), span.end()};
}

std::vector<Vertex> closed_neighborhood(const ColoredGraph& g, Vertex v) {
  std::vector<Vertex> out{v};
  for (const Neighbor& nb : g.neighbors(v)) out.push_back(nb.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> second_neighborhood(const ColoredGraph& g, Vertex v) {
  std::vector<char> mark(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Neighbor& nb : g.neighbors(v))
    for (const Neighbor& nb2 : g.adj(nb.vertex)) mark[nb2.vertex] = 1;
  mark[v] = 0;
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    if (mark[x]) out.push_back(x);
  return out;
}

std::vector<Edge> edges_between(const ColoredGraph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b) {
  std::vector<char> in_b(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> in_a(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex x : b) {
    g.check_vertex(x);
    in_b[x] = 1;
  }
  for (Vertex x : a) {
    g.check_vertex(x);
    in_a[x] = 1;
  }
  std::vector<Edge> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!in_a[x] && !in_b[x]) continue;
    for (const Neighbor& nb : g.adj(x)) {
      const Vertex y = nb.vertex;
      if (y <= x) continue;
      if ((in_a[x] && in_b[y]) || (in_a[y] && in_b[x])) out.emplace_back(x, y, nb.color);
    }
  }
  return out;
}

std::vector<Edge> edges_within(const ColoredGraph& g, std::span<const Vertex> a) {
  return edges_between(g, a, a);
}

ColoredGraph delete_edges(const ColoredGraph& g, std::span<const VertexPair> s) {
  ColoredGraph out = g;
  for (const VertexPair& p : s) {
    out.check_vertex(p.u);
    out.check_vertex(p.v);
    out.erase_edge(p.u, p.v);
  }
  return out;
}

ColoredGraph delete_edges(const ColoredGraph& g, std::span<const Edge> s) {
  std::vector<VertexPair> pairs;
  pairs.reserve(s.size());
  for (const Edge& e : s) {
    auto c = g.color(e.u(), e.v());
    if (c && *c != e.color)
      throw PreconditionError("edge " + pair_text(e.u(), e.v()) + " is " +
                              std::string(color_name(*c)) + ", not " +
                              std::string(color_name(e.color)));
    pairs.push_back(e.ends);
  }
  return delete_edges(g, std::span<const VertexPair>(pairs));
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    queue.assign(1, s);
    comp[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      out.back().push_back(x);
      for (const Neighbor& nb : g.adj(x)) {
        if (comp[nb.vertex] < 0) {
          comp[nb.vertex] = id;
          queue.push_back(nb.vertex);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<VertexPair> bridges(const ColoredGraph& g) {
  // Iterative DFS low-link; the graph is simple so skipping the parent vertex
  // (rather than the parent edge) is enough.
  const Vertex n = g.num_vertices();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<VertexPair> out;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto list = g.adj(f.v);
      if (f.next < list.size()) {
        const Vertex w = list[f.next++].vertex;
        if (w == f.parent) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      stack.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) out.emplace_back(p, v);
      }
    }
  }
  canonicalize(out);
  return out;
}

EdgeIds::EdgeIds(const ColoredGraph& g) : g_(&g) {
  offset_.resize(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    int up = 0;
    for (const Neighbor& nb : g.adj(u)) up += nb.vertex > u;
    offset_[u + 1] = offset_[u] + up;
  }
  total_ = offset_.back();
}

int EdgeIds::id(Vertex u, Vertex v) const noexcept {
  if (u > v) std::swap(u, v);
  auto list = g_->adj(u);
  auto first_up = std::upper_bound(list.begin(), list.end(), u,
                                   [](Vertex x, const Neighbor& nb) { return x < nb.vertex; });
  auto it = std::lower_bound(first_up, list.end(), v,
                             [](const Neighbor& nb, Vertex y) { return nb.vertex < y; });
  return offset_[u] + static_cast<int>(it - first_up);
}

InducedSubgraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> order(keep.begin(), keep.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<Vertex> to_new(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.check_vertex(order[i]);
    to_new[order[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex x : order)
    for (const Neighbor& nb : g.adj(x))
      if (x < nb.vertex && to_new[nb.vertex] >= 0)
        edges.emplace_back(to_new[x], to_new[nb.vertex], nb.color);
  return {ColoredGraph(static_cast<Vertex>(order.size()), edges), std::move(order)};
}

}  // namespace bpd
