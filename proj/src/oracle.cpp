#include "bpd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace bpd {

namespace {

using Word = std::uint64_t;

// Bitset adjacency over the non-isolated vertices, mutated in place while
// branching and restored on the way back.
class OracleSearch {
 public:
  OracleSearch(const ColoredGraph& g, std::int64_t best_plus_one) : best_(best_plus_one) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!g.adj(v).empty()) ids_.push_back(v);
    n_ = static_cast<int>(ids_.size());
    w_ = (n_ + 63) / 64;
    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int i = 0; i < n_; ++i) local[ids_[i]] = i;
    blue_.assign(static_cast<std::size_t>(n_) * w_, 0);
    red_ = blue_;
    perm_ = blue_;
    avail_b_ = blue_;
    avail_r_ = blue_;
    for (int i = 0; i < n_; ++i)
      for (const Neighbor& nb : g.adj(ids_[i]))
        put(nb.color == Color::Blue ? blue_ : red_, i, local[nb.vertex], true);
  }

  void run() { rec(0); }

  std::int64_t best() const { return best_; }
  bool found() const { return found_; }
  std::uint64_t nodes() const { return nodes_; }
  DeletionSet witness() const {
    DeletionSet out;
    for (auto [a, b] : best_stack_) out.emplace_back(ids_[a], ids_[b]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Tri {
    int a, v, b;  // {a,v} blue, {v,b} red
  };

  bool test(const std::vector<Word>& m, int i, int j) const {
    return (m[static_cast<std::size_t>(i) * w_ + (j >> 6)] >> (j & 63)) & 1;
  }
  void put(std::vector<Word>& m, int i, int j, bool on) {
    Word& x = m[static_cast<std::size_t>(i) * w_ + (j >> 6)];
    if (on)
      x |= Word{1} << (j & 63);
    else
      x &= ~(Word{1} << (j & 63));
  }
  void put_sym(std::vector<Word>& m, int i, int j, bool on) {
    put(m, i, j, on);
    put(m, j, i, on);
  }
  bool adjacent(int i, int j) const { return test(blue_, i, j) || test(red_, i, j); }

  // Calls f(a, v, b) for each P3 until it returns true.
  template <class F>
  bool each_p3(F&& f) {
    for (int v = 0; v < n_; ++v)
      for (int wa = 0; wa < w_; ++wa) {
        Word bm = blue_[static_cast<std::size_t>(v) * w_ + wa];
        while (bm) {
          const int a = wa * 64 + std::countr_zero(bm);
          bm &= bm - 1;
          for (int wb = 0; wb < w_; ++wb) {
            const std::size_t ra = static_cast<std::size_t>(a) * w_ + wb;
            Word rm = red_[static_cast<std::size_t>(v) * w_ + wb] & ~blue_[ra] & ~red_[ra];
            while (rm) {
              const int b = wb * 64 + std::countr_zero(rm);
              rm &= rm - 1;
              if (b != a && f(a, v, b)) return true;
            }
          }
        }
      }
    return false;
  }

  int partners(int x, int y, const std::vector<Word>& other_color) const {
    int count = 0;
    for (int side = 0; side < 2; ++side) {
      const int p = side == 0 ? x : y;
      const int q = side == 0 ? y : x;
      for (int wd = 0; wd < w_; ++wd) {
        const std::size_t rq = static_cast<std::size_t>(q) * w_ + wd;
        Word m = other_color[static_cast<std::size_t>(p) * w_ + wd] & ~blue_[rq] & ~red_[rq];
        if ((q >> 6) == wd) m &= ~(Word{1} << (q & 63));
        count += std::popcount(m);
      }
    }
    return count;
  }

  int packing_bound() {
    avail_b_ = blue_;
    avail_r_ = red_;
    int count = 0;
    each_p3([&](int a, int v, int b) {
      if (test(avail_b_, a, v) && test(avail_r_, v, b)) {
        put_sym(avail_b_, a, v, false);
        put_sym(avail_r_, v, b, false);
        ++count;
      }
      return false;
    });
    return count;
  }

  void rec(std::int64_t depth) {
    ++nodes_;
    std::optional<Tri> pick;
    std::optional<Tri> forced;
    each_p3([&](int a, int v, int b) {
      if (!pick) pick = Tri{a, v, b};
      if (test(perm_, a, v) || test(perm_, v, b)) {
        forced = Tri{a, v, b};
        return true;
      }
      return false;
    });
    if (!pick) {
      best_ = depth;
      best_stack_ = stack_;
      found_ = true;
      return;
    }
    if (depth + packing_bound() >= best_) return;
    const Tri t = forced ? *forced : *pick;
    const bool blue_perm = test(perm_, t.a, t.v);
    const bool red_perm = test(perm_, t.v, t.b);
    if (blue_perm && red_perm) return;

    bool blue_first = true;
    if (!blue_perm && !red_perm)
      blue_first = partners(t.a, t.v, red_) >= partners(t.v, t.b, blue_);
    else
      blue_first = !blue_perm;

    auto try_delete = [&](int x, int y, std::vector<Word>& color) {
      put_sym(color, x, y, false);
      stack_.emplace_back(std::min(x, y), std::max(x, y));
      rec(depth + 1);
      stack_.pop_back();
      put_sym(color, x, y, true);
    };

    if (blue_first) {
      if (!blue_perm) {
        try_delete(t.a, t.v, blue_);
        if (red_perm) return;
        put_sym(perm_, t.a, t.v, true);
        try_delete(t.v, t.b, red_);
        put_sym(perm_, t.a, t.v, false);
      } else {
        try_delete(t.v, t.b, red_);
      }
    } else {
      if (!red_perm) {
        try_delete(t.v, t.b, red_);
        if (blue_perm) return;
        put_sym(perm_, t.v, t.b, true);
        try_delete(t.a, t.v, blue_);
        put_sym(perm_, t.v, t.b, false);
      } else {
        try_delete(t.a, t.v, blue_);
      }
    }
  }

  std::vector<Vertex> ids_;
  int n_ = 0;
  int w_ = 0;
  std::vector<Word> blue_, red_, perm_, avail_b_, avail_r_;
  std::vector<std::pair<int, int>> stack_, best_stack_;
  std::int64_t best_;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult oracle_min_deletions(const ColoredGraph& g, std::optional<std::int64_t> cap) {
  const std::int64_t class_bound = static_cast<std::int64_t>(
      std::min(g.num_edges(Color::Red), g.num_edges(Color::Blue)));
  OracleResult out;
  if (cap && *cap < 0) return out;
  const std::int64_t ub = cap ? std::min(*cap, class_bound) : class_bound;
  OracleSearch search(g, ub + 1);
  search.run();
  out.nodes = search.nodes();
  if (search.found()) {
    out.optimum = search.best();
    out.witness = search.witness();
  }
  return out;
}

}  // namespace bpd
