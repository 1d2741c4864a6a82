#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpd/graph.hpp"
#include "bpd/instance.hpp"

namespace bpd {

// 3-CNF with signed 1-based literals, as in DIMACS.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Accepts "p cnf V C" followed by zero-terminated clauses of exactly three
// literals. Comment lines start with 'c'.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

// Throws PreconditionError naming the variable if a clause repeats a variable
// or a variable occurs in more than four clauses.
void validate_34(const CnfFormula& f);

struct ReductionLayout {
  struct Variable {
    Vertex center = 0;
    std::array<Vertex, 4> t{};
    std::array<Vertex, 4> f{};
  };
  struct Clause {
    std::array<Vertex, 3> a{};
    std::array<Vertex, 3> b{};
    std::array<Vertex, 4> w{};
    std::array<int, 3> variable{};    // 0-based
    std::array<bool, 3> positive{};
    std::array<int, 3> occurrence{};  // 1..4
  };
  std::vector<Variable> variables;
  std::vector<Clause> clauses;
};

struct Reduction {
  Instance instance;
  ReductionLayout layout;
};

// Variable blocks of 9 ids (v, T1..T4, F1..F4), then clause blocks of 7
// (B1..B3, W1..W4). Clause slot p reuses t or f of its variable, indexed by
// the occurrence number of the clause for that variable.
Reduction reduce_sat_to_bpd(const CnfFormula& f);

enum class GadgetKind { Variable, Clause, LC, LO, IIZ, Hourglass, AlternatingCycle };

std::string_view gadget_name(GadgetKind kind) noexcept;
std::optional<GadgetKind> gadget_from_name(std::string_view name) noexcept;

// Variable: v=0, T=1..4, F=5..8. Clause: A=0..2, B=3..5, W=6..9.
// Diamonds: u,v,w,z = 0..3; hourglass u,v,w,z1,z2 = 0..4.
// Alternating cycle: edge {i, i+1 mod len} is blue for even i.
ColoredGraph gadget(GadgetKind kind, int cycle_length = 0);

ColoredGraph random_instance(Vertex n, double edge_prob, double blue_prob, std::uint64_t seed);

// Random formula that keeps the (3,4) promise; throws if fewer than three
// variables still have room for another clause.
CnfFormula random_formula(int num_vars, int num_clauses, std::uint64_t seed);

bool sat_brute_force(const CnfFormula& f);

}  // namespace bpd
