#include "bpd/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

constexpr std::pair<GadgetKind, std::string_view> kGadgetNames[] = {
    {GadgetKind::Variable, "variable"}, {GadgetKind::Clause, "clause"},
    {GadgetKind::LC, "lc"},             {GadgetKind::LO, "lo"},
    {GadgetKind::IIZ, "iiz"},           {GadgetKind::Hourglass, "hourglass"},
    {GadgetKind::AlternatingCycle, "alternating_cycle"},
};

int parse_int(const std::string& tok, int line) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || *end != '\0')
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
  return static_cast<int>(v);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void add_clause_gadget(std::vector<Edge>& edges, const std::array<Vertex, 3>& a,
                       const std::array<Vertex, 3>& b, const std::array<Vertex, 4>& w) {
  std::vector<Vertex> bw(b.begin(), b.end());
  bw.insert(bw.end(), w.begin(), w.end());
  for (std::size_t i = 0; i < bw.size(); ++i)
    for (std::size_t j = i + 1; j < bw.size(); ++j) edges.emplace_back(bw[i], bw[j], Color::Blue);
  for (int p = 0; p < 3; ++p)
    for (Vertex u : bw) edges.emplace_back(a[p], u, u == b[p] ? Color::Blue : Color::Red);
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  CnfFormula f;
  int declared = -1;
  int line_no = 0;
  std::vector<int> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt, nv, nc;
      if (declared >= 0) throw ParseError("line " + std::to_string(line_no) + ": second header");
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p cnf <vars> <clauses>'");
      f.num_vars = parse_int(nv, line_no);
      declared = parse_int(nc, line_no);
      if (f.num_vars < 0 || declared < 0) throw ParseError("negative count in header");
      continue;
    }
    if (declared < 0) throw ParseError("line " + std::to_string(line_no) + ": clause before header");
    do {
      const int lit = parse_int(tok, line_no);
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("line " + std::to_string(line_no) + ": clause has " +
                           std::to_string(pending.size()) + " literals, expected 3");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (std::abs(lit) > f.num_vars)
          throw ParseError("line " + std::to_string(line_no) + ": literal " + tok + " out of range");
        pending.push_back(lit);
      }
    } while (ls >> tok);
  }
  if (declared < 0) throw ParseError("missing 'p cnf' header");
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<int>(f.clauses.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses)
    out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
  return out;
}

void validate_34(const CnfFormula& f) {
  std::vector<int> count(static_cast<std::size_t>(f.num_vars) + 1, 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    for (int p = 0; p < 3; ++p) {
      const int x = std::abs(c[p]);
      if (x == 0 || x > f.num_vars) throw PreconditionError("clause " + std::to_string(j + 1) + ": bad literal");
      for (int q = 0; q < p; ++q)
        if (std::abs(c[q]) == x)
          throw PreconditionError("variable x" + std::to_string(x) + " appears twice in clause " +
                                  std::to_string(j + 1));
      if (++count[x] > 4)
        throw PreconditionError("variable x" + std::to_string(x) + " occurs in more than four clauses");
    }
  }
}

Reduction reduce_sat_to_bpd(const CnfFormula& f) {
  validate_34(f);
  const auto nx = static_cast<Vertex>(f.num_vars);
  const auto nc = static_cast<Vertex>(f.clauses.size());
  Reduction r;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < nx; ++i) {
    ReductionLayout::Variable var;
    var.center = 9 * i;
    for (int q = 0; q < 4; ++q) {
      var.t[q] = 9 * i + 1 + q;
      var.f[q] = 9 * i + 5 + q;
      edges.emplace_back(var.center, var.t[q], Color::Blue);
      edges.emplace_back(var.center, var.f[q], Color::Red);
    }
    r.layout.variables.push_back(var);
  }
  std::vector<int> seen(static_cast<std::size_t>(nx), 0);
  for (Vertex j = 0; j < nc; ++j) {
    ReductionLayout::Clause cl;
    const Vertex base = 9 * nx + 7 * j;
    for (int p = 0; p < 3; ++p) {
      const int lit = f.clauses[j][p];
      const int x = std::abs(lit) - 1;
      cl.variable[p] = x;
      cl.positive[p] = lit > 0;
      cl.occurrence[p] = ++seen[x];
      const auto& var = r.layout.variables[x];
      cl.a[p] = cl.positive[p] ? var.t[cl.occurrence[p] - 1] : var.f[cl.occurrence[p] - 1];
      cl.b[p] = base + p;
    }
    for (int q = 0; q < 4; ++q) cl.w[q] = base + 3 + q;
    add_clause_gadget(edges, cl.a, cl.b, cl.w);
    r.layout.clauses.push_back(cl);
  }
  r.instance.graph = ColoredGraph(9 * nx + 7 * nc, edges);
  r.instance.k = 4 * static_cast<std::int64_t>(nx) + 14 * static_cast<std::int64_t>(nc);

  const ColoredGraph& g = r.instance.graph;
  if (g.num_edges() != 8 * static_cast<std::size_t>(nx) + 42 * static_cast<std::size_t>(nc))
    throw InvariantError("reduction edge count mismatch");
  // Clique vertices of a clause gadget see 6 clique neighbors and 3 A-vertices.
  const int max_deg = nc > 0 ? 9 : (nx > 0 ? 8 : 0);
  if (g.max_degree() != max_deg)
    throw InvariantError("reduction has maximum degree " + std::to_string(g.max_degree()));
  return r;
}

std::string_view gadget_name(GadgetKind kind) noexcept {
  for (auto [k, n] : kGadgetNames)
    if (k == kind) return n;
  return "?";
}

std::optional<GadgetKind> gadget_from_name(std::string_view name) noexcept {
  for (auto [k, n] : kGadgetNames)
    if (n == name) return k;
  return std::nullopt;
}

ColoredGraph gadget(GadgetKind kind, int cycle_length) {
  const Color R = Color::Red, B = Color::Blue;
  switch (kind) {
    case GadgetKind::Variable: {
      std::vector<Edge> e;
      for (Vertex q = 1; q <= 4; ++q) e.emplace_back(0, q, B);
      for (Vertex q = 5; q <= 8; ++q) e.emplace_back(0, q, R);
      return ColoredGraph(9, e);
    }
    case GadgetKind::Clause: {
      std::vector<Edge> e;
      add_clause_gadget(e, {0, 1, 2}, {3, 4, 5}, {6, 7, 8, 9});
      return ColoredGraph(10, e);
    }
    case GadgetKind::LC: {
      const Edge e[] = {{0, 1, B}, {1, 2, R}, {0, 3, B}, {1, 3, R}, {2, 3, B}};
      return ColoredGraph(4, e);
    }
    case GadgetKind::LO: {
      const Edge e[] = {{0, 1, B}, {1, 2, R}, {0, 3, B}, {1, 3, B}, {2, 3, R}};
      return ColoredGraph(4, e);
    }
    case GadgetKind::IIZ: {
      const Edge e[] = {{0, 1, B}, {1, 2, R}, {0, 3, R}, {1, 3, B}, {2, 3, B}};
      return ColoredGraph(4, e);
    }
    case GadgetKind::Hourglass: {
      const Edge e[] = {{0, 1, B}, {1, 2, R}, {0, 3, B}, {1, 3, R}, {1, 4, B}, {2, 4, R}};
      return ColoredGraph(5, e);
    }
    case GadgetKind::AlternatingCycle: {
      if (cycle_length < 4 || cycle_length % 2 != 0)
        throw PreconditionError("alternating cycle length must be even and at least 4, got " +
                                std::to_string(cycle_length));
      std::vector<Edge> e;
      for (Vertex i = 0; i < cycle_length; ++i) e.emplace_back(i, (i + 1) % cycle_length, i % 2 == 0 ? B : R);
      return ColoredGraph(cycle_length, e);
    }
  }
  throw PreconditionError("unknown gadget kind");
}

ColoredGraph random_instance(Vertex n, double edge_prob, double blue_prob, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (!(edge_prob >= 0 && edge_prob <= 1) || !(blue_prob >= 0 && blue_prob <= 1))
    throw PreconditionError("probabilities must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double a = unit(rng);
      const double c = unit(rng);
      if (a < edge_prob) edges.emplace_back(u, v, c < blue_prob ? Color::Blue : Color::Red);
    }
  return ColoredGraph(n, edges);
}

CnfFormula random_formula(int num_vars, int num_clauses, std::uint64_t seed) {
  // r clauses can still be placed iff the remaining room, with each variable
  // counted at most once per clause, covers 3r literals.
  auto feasible = [](const std::vector<int>& room, int r) {
    std::int64_t total = 0;
    for (int c : room) total += std::min(c, r);
    return total >= 3 * static_cast<std::int64_t>(r);
  };
  std::vector<int> room(static_cast<std::size_t>(std::max(num_vars, 0)), 4);
  if (num_vars < 3 || num_clauses < 0 || !feasible(room, num_clauses))
    throw PreconditionError("no (3,4) formula with " + std::to_string(num_vars) + " variables and " +
                            std::to_string(num_clauses) + " clauses");
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.num_vars = num_vars;
  for (int j = 0; j < num_clauses; ++j) {
    std::vector<int> open;
    for (int x = 0; x < num_vars; ++x)
      if (room[x] > 0) open.push_back(x);
    std::array<int, 3> pick{};
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      std::vector<int> pool = open;
      for (int p = 0; p < 3; ++p) {
        const auto i = static_cast<std::size_t>(rng() % pool.size());
        pick[p] = pool[i];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      }
      for (int x : pick) --room[x];
      found = feasible(room, num_clauses - j - 1);
      if (!found)
        for (int x : pick) ++room[x];
    }
    if (!found) {
      // Taking the roomiest variables keeps any feasible remainder feasible.
      std::stable_sort(open.begin(), open.end(), [&](int a, int b) { return room[a] > room[b]; });
      for (int p = 0; p < 3; ++p) pick[p] = open[p];
      for (int x : pick) --room[x];
    }
    std::array<int, 3> c{};
    for (int p = 0; p < 3; ++p) c[p] = (rng() & 1) ? pick[p] + 1 : -(pick[p] + 1);
    f.clauses.push_back(c);
  }
  return f;
}

bool sat_brute_force(const CnfFormula& f) {
  if (f.num_vars > 30) throw PreconditionError("too many variables for exhaustive search");
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t a = 0; a < total; ++a) {
    const bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const std::array<int, 3>& c) {
      return std::any_of(c.begin(), c.end(), [&](int lit) {
        const bool val = (a >> (std::abs(lit) - 1)) & 1;
        return lit > 0 ? val : !val;
      });
    });
    if (ok) return true;
  }
  return false;
}

}  // namespace bpd
