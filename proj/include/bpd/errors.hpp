#pragma once

#include <stdexcept>
#include <string>

namespace bpd {

// Base for all library errors. Callers that only care about "something went
// wrong with this input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (bpd v1, DIMACS, solution JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain: out-of-range vertex,
// missing edge, a specialized solver on an ineligible graph.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal bookkeeping disagreed with itself. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace bpd
