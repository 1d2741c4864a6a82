#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "bpd/graph.hpp"

namespace bpd {

// "bpd v1" text format:
//
//   # optional comment lines
//   p bpd <n> <m>
//   <u> <v> <r|b>      (m lines, 0-based ids)
//
// Blank lines are ignored. The parser rejects duplicate pairs, self-loops,
// ids >= n and an edge count that disagrees with the header.
ColoredGraph parse_bpd(std::string_view text);
ColoredGraph read_bpd_file(const std::string& path);

// Canonical serialization: header plus edges in (u, v) order, no comments.
std::string write_bpd(const ColoredGraph& g);
void write_bpd_file(const ColoredGraph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace bpd
