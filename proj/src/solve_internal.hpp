#pragma once

#include <chrono>

#include "bpd/errors.hpp"
#include "bpd/solve.hpp"

namespace bpd {

// Minimum solutions of the polynomial special cases (no budget involved).
DeletionSet degree_two_minimum(const ColoredGraph& g);
DeletionSet mono_free_minimum(const ColoredGraph& g);
// Requires a nice graph; one edge per P3.
DeletionSet nice_witness(const ColoredGraph& g);

}  // namespace bpd

namespace bpd::detail {

// Every yes answer leaves through here.
inline void check_yes(const ColoredGraph& g, const SolveResult& r) {
  if (!r.yes) return;
  if (!r.solution) throw InvariantError("yes answer without a deletion set");
  Verdict v = verify_solution(g, *r.solution, r.k);
  if (!v.ok)
    throw InvariantError(std::string(method_name(r.method)) + " produced an invalid solution: " +
                         v.reason);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace bpd::detail
