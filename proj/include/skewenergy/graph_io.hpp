#pragma once

// Oriented edge list text format:
//
//   n m
//   t h        (exactly m lines, 0-based tail and head)
//
// Blank lines and lines whose first non-blank character is '#' are skipped.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "skewenergy/graph.hpp"

namespace skewenergy {

namespace detail {

inline bool read_exact_ints(const std::string& line, std::vector<long long>& out) {
  std::istringstream in(line);
  out.clear();
  long long x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) return false;  // stopped on a non-integer token
  return true;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& msg) {
  fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace detail

inline OrientedGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<long long> ints;
  long long n = -1, m = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!detail::read_exact_ints(line, ints)) detail::parse_fail(line_no, "expected integers, got '" + line + "'");
    if (ints.size() != 2) detail::parse_fail(line_no, "expected two integers, got " + std::to_string(ints.size()));
    if (n < 0) {
      n = ints[0];
      m = ints[1];
      if (n < 1 || n > 64) detail::parse_fail(line_no, "vertex count must be in [1, 64], got " + std::to_string(n));
      if (m < 0) detail::parse_fail(line_no, "arc count must be non-negative");
      continue;
    }
    if (static_cast<long long>(arcs.size()) == m)
      detail::parse_fail(line_no, "more arc lines than the declared " + std::to_string(m));
    for (long long idx : ints)
      if (idx < 0 || idx >= n)
        detail::parse_fail(line_no, "index " + std::to_string(idx) + " out of range [0, " + std::to_string(n) + ")");
    arcs.push_back({static_cast<int>(ints[0]), static_cast<int>(ints[1])});
    try {
      // Validate incrementally so the diagnostic carries the offending line.
      OrientedGraph::build(static_cast<int>(n), arcs);
    } catch (const error& e) {
      detail::parse_fail(line_no, e.what());
    }
  }
  if (n < 0) detail::parse_fail(line_no, "missing header line 'n m'");
  if (static_cast<long long>(arcs.size()) != m)
    detail::parse_fail(line_no, "declared " + std::to_string(m) + " arcs but found " + std::to_string(arcs.size()));
  return OrientedGraph::build(static_cast<int>(n), std::move(arcs));
}

inline OrientedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string serialize(const OrientedGraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Arc& a : g.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

}  // namespace skewenergy
