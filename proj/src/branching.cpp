#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "bpd/detect.hpp"
#include "bpd/errors.hpp"
#include "bpd/oracle.hpp"
#include "bpd/solve.hpp"
#include "solve_internal.hpp"

namespace bpd {

namespace {

using detail::check_yes;
using detail::Stopwatch;

constexpr std::size_t kBlockLimit = 12;  // largest closed neighborhood solved exactly
constexpr int kParallelDepth = 4;

// Exact optima of small induced subgraphs, keyed by their adjacency codes.
// An entry is either exact or a lower bound cap+1 from a capped run.
class BlockCache {
 public:
  std::int64_t bound(const ColoredGraph& sub, std::int64_t cap) {
    std::string key(1, static_cast<char>(sub.num_vertices()));
    for (Vertex i = 0; i < sub.num_vertices(); ++i)
      for (Vertex j = i + 1; j < sub.num_vertices(); ++j) key.push_back(static_cast<char>(sub.code(i, j)));
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end() && (it->second.exact || it->second.value > cap)) return it->second.value;
    }
    const OracleResult r = oracle_min_deletions(sub, cap);
    Entry e = r.optimum ? Entry{*r.optimum, true} : Entry{cap + 1, false};
    std::lock_guard lock(mu_);
    map_[key] = e;
    return e.value;
  }

 private:
  struct Entry {
    std::int64_t value;
    bool exact;
  };
  std::mutex mu_;
  std::unordered_map<std::string, Entry> map_;
};

std::int64_t packing_on(const ColoredGraph& g, const EdgeIds& ids, std::vector<char>& used) {
  std::int64_t count = 0;
  for (const P3& p : enumerate_p3(g)) {
    const int a = ids.id(p.u, p.v);
    const int b = ids.id(p.v, p.w);
    if (used[a] || used[b]) continue;
    used[a] = used[b] = 1;
    ++count;
  }
  return count;
}

// Lower bound on the optimum. Closed neighborhoods whose induced edge sets
// are pairwise disjoint need their own optima each; P3s on the leftover edges
// add one each.
std::int64_t bound_at(const ColoredGraph& g, bool blocks, std::int64_t cap, BlockCache& cache) {
  const EdgeIds ids(g);
  std::vector<char> used(static_cast<std::size_t>(ids.size()), 0);
  const std::int64_t plain = packing_on(g, ids, used);
  if (!blocks || plain > cap) return plain;

  struct Block {
    std::int64_t value;
    Vertex center;
    std::vector<int> edges;
  };
  std::vector<Block> found;
  const std::vector<char> hot = p3_vertex_mask(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!hot[v] || g.adj(v).size() + 1 > kBlockLimit) continue;
    const std::vector<Vertex> closed = closed_neighborhood(g, v);
    auto sub = induced_subgraph(g, closed);
    if (sub.graph.num_edges() < 3) continue;
    const std::int64_t value = cache.bound(sub.graph, cap);
    if (value < 2) continue;
    Block b{value, v, {}};
    for (const Edge& e : sub.graph.edges())
      b.edges.push_back(ids.id(sub.to_original[e.u()], sub.to_original[e.v()]));
    found.push_back(std::move(b));
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Block& a, const Block& b) { return a.value > b.value; });
  std::fill(used.begin(), used.end(), 0);
  std::int64_t total = 0;
  for (const Block& b : found) {
    if (std::any_of(b.edges.begin(), b.edges.end(), [&](int e) { return used[e]; })) continue;
    for (int e : b.edges) used[e] = 1;
    total += b.value;
  }
  total += packing_on(g, ids, used);
  return std::max(plain, total);
}

struct Child {
  std::vector<VertexPair> deletions;
};

// Children of the branching rules, in the order the rules list them.
std::vector<Child> children_of(const ForbiddenStructure& s) {
  const auto& x = s.witness;
  switch (s.kind) {
    case StructureKind::MultiConflictEdge:
      return {{{s.edges[0]}}, {{s.edges[1], s.edges[2]}}};
    case StructureKind::LCDiamond:
    case StructureKind::LODiamond:
    case StructureKind::IIZDiamond: {
      const Vertex u = x[0], v = x[1], w = x[2], z = x[3];
      return {{{VertexPair(v, w)}},
              {{VertexPair(u, v), VertexPair(u, z)}},
              {{VertexPair(u, v), VertexPair(v, z), VertexPair(w, z)}}};
    }
    case StructureKind::CCHourglass: {
      const Vertex u = x[0], v = x[1], w = x[2], z1 = x[3], z2 = x[4];
      return {{{VertexPair(v, w)}},
              {{VertexPair(u, v), VertexPair(v, z1)}},
              {{VertexPair(u, v), VertexPair(u, z1), VertexPair(v, z2)}}};
    }
    default:
      throw InvariantError("not a branching structure: " + std::string(kind_name(s.kind)));
  }
}

unsigned thread_cap(const SolveOptions& o) {
  if (o.threads) return o.threads;
  if (const char* env = std::getenv("BPD_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

class Search {
 public:
  explicit Search(const SolveOptions& o) : opts_(o), cap_threads_(thread_cap(o)) {}

  bool run(const ColoredGraph& g, std::int64_t k, DeletionSet& acc, SearchStats& st) {
    return rec(g, k, 0, acc, st);
  }

 private:
  bool rec(const ColoredGraph& g, std::int64_t k, int depth, DeletionSet& acc, SearchStats& st) {
    if (stop_.load(std::memory_order_relaxed)) return false;
    ++st.nodes_expanded;
    st.max_depth = std::max(st.max_depth, depth);
    if (bound_at(g, opts_.block_bound, k, cache_) > k) return false;

    const auto s = find_branch_structure(g);
    if (!s) {
      ++st.nice_leaves;
      if (static_cast<std::int64_t>(count_p3(g)) > k) return false;
      const DeletionSet rest = nice_witness(g);
      acc.insert(acc.end(), rest.begin(), rest.end());
      stop_ = opts_.parallel;
      return true;
    }
    switch (s->kind) {
      case StructureKind::MultiConflictEdge: ++st.br1; break;
      case StructureKind::CCHourglass: ++st.br3; break;
      default: ++st.br2; break;
    }
    const std::vector<Child> kids = children_of(*s);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      // Child i of every rule deletes exactly i+1 edges.
      if (kids[i].deletions.size() != i + 1) throw InvariantError("branch child deletes a wrong edge count");
    }
    if (opts_.parallel && depth < kParallelDepth) return fan_out(g, k, depth, kids, acc, st);
    for (const Child& c : kids) {
      const std::int64_t kc = k - static_cast<std::int64_t>(c.deletions.size());
      if (kc < 0) continue;
      const ColoredGraph next = delete_edges(g, std::span<const VertexPair>(c.deletions));
      if (next.num_edges() + c.deletions.size() != g.num_edges())
        throw InvariantError("child graph lost a wrong number of edges");
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), c.deletions.begin(), c.deletions.end());
      if (rec(next, kc, depth + 1, acc, st)) return true;
      acc.resize(mark);
    }
    return false;
  }

  bool fan_out(const ColoredGraph& g, std::int64_t k, int depth, const std::vector<Child>& kids,
               DeletionSet& acc, SearchStats& st) {
    struct Task {
      std::future<bool> done;
      DeletionSet acc;
      SearchStats stats;
      bool inline_run = false;
      bool result = false;
    };
    std::vector<std::unique_ptr<Task>> tasks;
    for (const Child& c : kids) {
      const std::int64_t kc = k - static_cast<std::int64_t>(c.deletions.size());
      if (kc < 0) continue;
      auto t = std::make_unique<Task>();
      t->acc = acc;
      t->acc.insert(t->acc.end(), c.deletions.begin(), c.deletions.end());
      ColoredGraph next = delete_edges(g, std::span<const VertexPair>(c.deletions));
      Task* raw = t.get();
      if (active_.fetch_add(1) < static_cast<int>(cap_threads_)) {
        t->done = std::async(std::launch::async, [this, raw, next = std::move(next), kc, depth] {
          const bool r = rec(next, kc, depth + 1, raw->acc, raw->stats);
          active_.fetch_sub(1);
          return r;
        });
      } else {
        active_.fetch_sub(1);
        t->inline_run = true;
        t->result = rec(next, kc, depth + 1, t->acc, t->stats);
      }
      tasks.push_back(std::move(t));
    }
    bool any = false;
    for (auto& t : tasks) {
      if (!t->inline_run) t->result = t->done.get();
      st.merge(t->stats);
      if (t->result && !any) {
        any = true;
        acc = t->acc;
      }
    }
    return any;
  }

  SolveOptions opts_;
  unsigned cap_threads_;
  BlockCache cache_;
  std::atomic<bool> stop_{false};
  std::atomic<int> active_{1};
};

}  // namespace

void SearchStats::merge(const SearchStats& o) {
  nodes_expanded += o.nodes_expanded;
  max_depth = std::max(max_depth, o.max_depth);
  br1 += o.br1;
  br2 += o.br2;
  br3 += o.br3;
  nice_leaves += o.nice_leaves;
}

std::int64_t lower_bound(const ColoredGraph& g, bool block_bound) {
  BlockCache cache;
  const auto cap = static_cast<std::int64_t>(
      std::min(g.num_edges(Color::Red), g.num_edges(Color::Blue)));
  return bound_at(g, block_bound, cap, cache);
}

SolveResult solve_branching(const Instance& inst, const SolveOptions& options) {
  Stopwatch clock;
  SolveResult r;
  r.method = Method::Branch;
  r.k = inst.k;
  if (inst.k >= 0) {
    Search search(options);
    DeletionSet acc;
    r.yes = search.run(inst.graph, inst.k, acc, r.stats);
    if (r.yes) {
      canonicalize(acc);
      r.solution = std::move(acc);
    }
  }
  r.stats.time_ms = clock.ms();
  check_yes(inst.graph, r);
  return r;
}

}  // namespace bpd
