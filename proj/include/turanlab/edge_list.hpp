#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Thrown by read_edge_list; carries the 1-based line number of the fault.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text format:
//   "<n> <m>\n" then m lines "<u> <v>\n", 0 <= u < v < n, sorted.
// Reading accepts any edge order and either endpoint order, but rejects
// self-loops, duplicates and anything that is not two decimal integers.

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

namespace detail {

inline bool parse_two(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const char* p = line.data();
  const char* end = p + line.size();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, end, b);
  return r2.ec == std::errc{} && r2.ptr == end;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw EdgeListError(lineno, "missing header");
  std::uint64_t n = 0, m = 0;
  if (!detail::parse_two(line, n, m)) throw EdgeListError(lineno, "header must be \"<n> <m>\"");
  if (n > (std::uint64_t{1} << 20)) throw EdgeListError(lineno, "vertex count too large");
  if (m > n * (n == 0 ? 0 : n - 1) / 2) throw EdgeListError(lineno, "edge count exceeds n(n-1)/2");
  Graph g(n);
  for (std::uint64_t k = 0; k < m; ++k) {
    ++lineno;
    if (!std::getline(in, line)) throw EdgeListError(lineno, "unexpected end of file");
    std::uint64_t u = 0, v = 0;
    if (!detail::parse_two(line, u, v)) throw EdgeListError(lineno, "expected \"<u> <v>\"");
    if (u >= n || v >= n) throw EdgeListError(lineno, "vertex out of range");
    if (u == v) throw EdgeListError(lineno, "self-loop");
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw EdgeListError(lineno, "duplicate edge");
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line != "\r") throw EdgeListError(lineno, "trailing content after edges");
  }
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace turanlab
