#pragma once

// Canonical labelling of small undirected graphs and isomorphism-class
// enumeration by edge augmentation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "skewenergy/graph.hpp"

namespace skewenergy {

/// Upper-triangle adjacency bits of a labelling, read column by column:
/// (0,1), (0,2), (1,2), (0,3), ... with the first pair most significant.
/// n <= 11 keeps this inside 64 bits.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCanonicalVertices = 11;

namespace detail {

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Colour refinement: start from degrees, then repeatedly split by the
/// multiset of neighbour colours. Colours are ranks of sorted signatures, so
/// the final colouring does not depend on the input labelling.
inline std::vector<int> refine_colours(const UndirectedGraph& g) {
  const int n = g.n();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u : g.neighbors(v)) sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

}  // namespace detail

/// Minimum adjacency bit string over all labellings that list the refined
/// colour classes in order. Returns that form and the permutation
/// (vertex -> position) realizing it.
inline std::pair<CanonicalForm, std::vector<int>> canonical_labeling(const UndirectedGraph& g) {
  const int n = g.n();
  if (n > kMaxCanonicalVertices)
    fail(errc::precondition, "canonical form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  const auto colour = detail::refine_colours(g);
  std::vector<int> cell_at(static_cast<std::size_t>(n));
  {
    std::vector<int> sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    cell_at = sorted;
  }
  const int total = detail::pair_count(n);

  std::vector<int> at_position(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_positions;
  bool have_best = false;

  // bits holds the first pair_count(p) bits of the current labelling.
  auto place = [&](auto&& self, int p, std::uint64_t bits) -> void {
    if (p == n) {
      if (!have_best || bits < best) {
        best = bits;
        best_positions = at_position;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || colour[v] != cell_at[p]) continue;
      std::uint64_t next = bits;
      for (int q = 0; q < p; ++q) next = (next << 1) | (g.adjacent(at_position[q], v) ? 1U : 0U);
      if (have_best) {
        const int len = detail::pair_count(p + 1);
        const std::uint64_t best_prefix = len == 0 ? 0 : best >> (total - len);
        if (next > best_prefix) continue;
      }
      used[v] = 1;
      at_position[p] = v;
      self(self, p + 1, next);
      used[v] = 0;
    }
  };
  place(place, 0, 0);

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[best_positions[p]] = p;
  return {CanonicalForm{n, have_best ? best : 0}, perm};
}

inline CanonicalForm canonical_form(const UndirectedGraph& g) { return canonical_labeling(g).first; }

inline UndirectedGraph from_canonical(const CanonicalForm& f) {
  std::vector<UndirectedGraph::Edge> edges;
  const int total = detail::pair_count(f.n);
  int idx = 0;
  for (int p = 1; p < f.n; ++p)
    for (int q = 0; q < p; ++q, ++idx)
      if ((f.bits >> (total - 1 - idx)) & 1U) edges.emplace_back(q, p);
  return UndirectedGraph::build(f.n, std::move(edges));
}

/// One representative per isomorphism class of simple graphs on n vertices
/// with exactly m edges (connected or not), in canonical-form order.
inline std::vector<CanonicalForm> enumerate_graph_classes(int n, int m) {
  if (n < 1 || n > kMaxCanonicalVertices) fail(errc::precondition, "vertex count out of supported range");
  if (m < 0 || m > detail::pair_count(n)) return {};
  std::set<CanonicalForm> level{CanonicalForm{n, 0}};
  for (int k = 0; k < m; ++k) {
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      const UndirectedGraph g = from_canonical(f);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          auto edges = g.edges();
          edges.emplace_back(u, v);
          next.insert(canonical_form(UndirectedGraph::build(n, std::move(edges))));
        }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace skewenergy
