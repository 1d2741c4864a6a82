#include "bpd/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

ColoredGraph parse_bpd(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (n < 0) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "bpd")
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'p bpd <n> <m>'");
      n = parse_int(tok[2], line_no);
      m = parse_int(tok[3], line_no);
      if (n < 0 || m < 0 || n > (1LL << 30))
        throw ParseError("line " + std::to_string(line_no) + ": bad header counts");
      continue;
    }
    if (tok.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v> <r|b>'");
    const long long u = parse_int(tok[0], line_no);
    const long long v = parse_int(tok[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    Color c;
    if (tok[2] == "r")
      c = Color::Red;
    else if (tok[2] == "b")
      c = Color::Blue;
    else
      throw ParseError("line " + std::to_string(line_no) + ": color must be 'r' or 'b'");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v), c);
  }
  if (n < 0) throw ParseError("missing 'p bpd' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return ColoredGraph(static_cast<Vertex>(n), edges);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string write_bpd(const ColoredGraph& g) {
  std::string out = "p bpd " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u());
    out += ' ';
    out += std::to_string(e.v());
    out += ' ';
    out += color_code(e.color);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

ColoredGraph read_bpd_file(const std::string& path) { return parse_bpd(read_text_file(path)); }

void write_bpd_file(const ColoredGraph& g, const std::string& path) {
  write_text_file(path, write_bpd(g));
}

}  // namespace bpd
