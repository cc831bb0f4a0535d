#pragma once

// Combinatorial ground truth for the characteristic polynomial: matchings,
// quadrangles, even-cycle orientation parity and the expansion of each
// coefficient over basic oriented subgraphs (disjoint unions of single arcs
// and even cycles).
//
// Everything here is exhaustive search, meant for graphs of a dozen vertices
// or fewer. It is kept independent of the determinant code in charpoly.hpp so
// the two can check each other.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <variant>
#include <vector>

#include "skewenergy/bigint.hpp"
#include "skewenergy/charpoly.hpp"
#include "skewenergy/graph.hpp"

namespace skewenergy {

enum class CycleParity { OddlyOriented, EvenlyOriented };

inline const char* to_string(CycleParity p) {
  return p == CycleParity::OddlyOriented ? "OddlyOriented" : "EvenlyOriented";
}

struct ArcComponent {
  Arc arc;
  friend bool operator==(const ArcComponent&, const ArcComponent&) = default;
};

struct CycleComponent {
  std::vector<int> vertices;  // traversal order, starting at the smallest vertex
  CycleParity parity = CycleParity::EvenlyOriented;
  friend bool operator==(const CycleComponent&, const CycleComponent&) = default;
};

struct BasicSubgraph {
  std::vector<std::variant<ArcComponent, CycleComponent>> components;
  int vertex_count = 0;

  int cycle_count() const {
    int c = 0;
    for (const auto& comp : components) c += std::holds_alternative<CycleComponent>(comp);
    return c;
  }

  int evenly_oriented_count() const {
    int c = 0;
    for (const auto& comp : components)
      if (const auto* cyc = std::get_if<CycleComponent>(&comp)) c += cyc->parity == CycleParity::EvenlyOriented;
    return c;
  }

  /// (-1)^{evenly oriented cycles} * 2^{cycles}
  BigInt weight() const {
    BigInt w = BigInt{1} << cycle_count();
    return evenly_oriented_count() % 2 ? BigInt{-w} : w;
  }
};

/// Number of r-edge matchings, by edge inclusion/exclusion with memoization
/// on (edge index, covered vertices, edges still to place).
inline BigInt count_matchings(const UndirectedGraph& g, int r) {
  if (r < 0) return 0;
  const auto& edges = g.edges();
  std::map<std::tuple<std::size_t, std::uint64_t, int>, BigInt> memo;
  auto go = [&](auto&& self, std::size_t e, std::uint64_t covered, int left) -> BigInt {
    if (left == 0) return 1;
    if (e == edges.size() || static_cast<std::size_t>(left) > edges.size() - e) return 0;
    const auto key = std::make_tuple(e, covered, left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = self(self, e + 1, covered, left);
    const std::uint64_t ends = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
    if ((covered & ends) == 0) total += self(self, e + 1, covered | ends, left - 1);
    memo.emplace(key, total);
    return total;
  };
  return go(go, 0, 0, r);
}

/// Every 4-cycle of g, once each, as a traversal order. A 4-vertex subset
/// carries up to three distinct 4-cycles (all three when it spans a K4).
inline std::vector<std::array<int, 4>> list_quadrangles(const UndirectedGraph& g) {
  std::vector<std::array<int, 4>> out;
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // the three ways to pair a 4-set into a cyclic order
          const std::array<std::array<int, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders)
            if (g.adjacent(o[0], o[1]) && g.adjacent(o[1], o[2]) && g.adjacent(o[2], o[3]) && g.adjacent(o[3], o[0]))
              out.push_back(o);
        }
  return out;
}

inline BigInt count_quadrangles(const UndirectedGraph& g) { return BigInt{list_quadrangles(g).size()}; }

/// Parity of an even cycle given as a traversal sequence. Odd cycles have no
/// well-defined parity (it flips with traversal direction) and are rejected.
inline CycleParity cycle_parity(const OrientedGraph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) fail(errc::precondition, "a cycle needs at least 3 vertices");
  if (len % 2 != 0) fail(errc::precondition, "cycle of odd length " + std::to_string(len) + " has no orientation parity");
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  int along = 0;
  for (std::size_t k = 0; k < len; ++k) {
    const int u = cycle[k], v = cycle[(k + 1) % len];
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) fail(errc::precondition, "cycle vertex out of range");
    if (seen[u]) fail(errc::precondition, "cycle repeats vertex " + std::to_string(u));
    seen[u] = 1;
    if (!g.adjacent(u, v))
      fail(errc::precondition, "cycle step " + std::to_string(u) + "-" + std::to_string(v) + " is not an arc");
    along += g.sign(u, v) > 0;
  }
  return along % 2 ? CycleParity::OddlyOriented : CycleParity::EvenlyOriented;
}

/// Visits every basic oriented subgraph of g on exactly `vertices` vertices.
///
/// Vertices are decided in increasing order. The smallest undecided vertex v
/// is either left out, paired with a larger neighbour by an arc, or made the
/// minimum of an even cycle through larger vertices; each cycle is produced
/// in one direction only (second vertex < last vertex).
inline void for_each_basic_subgraph(const OrientedGraph& g, int vertices,
                                    const std::function<void(const BasicSubgraph&)>& visit) {
  if (vertices < 0 || vertices % 2 != 0)
    fail(errc::precondition, "basic subgraphs have an even vertex count, got " + std::to_string(vertices));
  const int n = g.n();
  if (vertices > n) return;
  BasicSubgraph current;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, int v) -> void {
    if (current.vertex_count == vertices) {
      visit(current);
      return;
    }
    while (v < n && covered[v]) ++v;
    if (v == n) return;
    int free_ahead = 0;
    for (int x = v; x < n; ++x) free_ahead += !covered[x];
    const int need = vertices - current.vertex_count;
    if (free_ahead < need) return;

    // v left out
    self(self, v + 1);

    covered[v] = 1;
    // v on an arc
    for (int u = v + 1; u < n; ++u) {
      if (covered[u] || !g.adjacent(v, u)) continue;
      covered[u] = 1;
      current.components.emplace_back(ArcComponent{g.sign(v, u) > 0 ? Arc{v, u} : Arc{u, v}});
      current.vertex_count += 2;
      self(self, v + 1);
      current.vertex_count -= 2;
      current.components.pop_back();
      covered[u] = 0;
    }
    // v as the minimum of an even cycle
    if (need >= 4) {
      std::vector<int> path{v};
      auto extend = [&](auto&& ext, int x) -> void {
        const int len = static_cast<int>(path.size());
        if (len >= 4 && len % 2 == 0 && g.adjacent(x, v) && path[1] < x) {
          CycleComponent cyc{path, cycle_parity(g, path)};
          current.components.emplace_back(std::move(cyc));
          current.vertex_count += len;
          self(self, v + 1);
          current.vertex_count -= len;
          current.components.pop_back();
        }
        if (len + 1 > need) return;
        for (int y = v + 1; y < n; ++y) {
          if (covered[y] || !g.adjacent(x, y)) continue;
          covered[y] = 1;
          path.push_back(y);
          ext(ext, y);
          path.pop_back();
          covered[y] = 0;
        }
      };
      extend(extend, v);
    }
    covered[v] = 0;
  };
  rec(rec, 0);
}

inline std::vector<BasicSubgraph> enumerate_basic_subgraphs(const OrientedGraph& g, int vertices) {
  std::vector<BasicSubgraph> out;
  for_each_basic_subgraph(g, vertices, [&](const BasicSubgraph& h) { out.push_back(h); });
  return out;
}

/// a_i as the signed sum over basic oriented subgraphs on i vertices.
inline BigInt coefficient_by_expansion(const OrientedGraph& g, int i) {
  BigInt total = 0;
  for_each_basic_subgraph(g, i, [&](const BasicSubgraph& h) { total += h.weight(); });
  return total;
}

/// The whole even-index vector by expansion, shaped like charpoly(g).
inline SkewCharPoly charpoly_by_expansion(const OrientedGraph& g) {
  std::vector<BigInt> coeffs;
  for (int i = 0; i <= g.n(); i += 2) coeffs.push_back(coefficient_by_expansion(g, i));
  return SkewCharPoly(g.n(), std::move(coeffs));
}

struct A4BoundCheck {
  BigInt lower_bound;  // M(G,2) - 2 q(G)
  BigInt a4;
  bool tight = false;  // a4 == lower_bound
  bool all_quadrangles_evenly_oriented = false;
};

/// Compares a4 against M(G,2) - 2q(G). Equality must coincide with every
/// quadrangle being evenly oriented; a disagreement is reported as a bug.
inline A4BoundCheck a4_bound_check(const OrientedGraph& g) {
  if (g.n() < 4) fail(errc::precondition, "a4 needs at least 4 vertices");
  const UndirectedGraph ug = underlying(g);
  const auto quads = list_quadrangles(ug);
  A4BoundCheck out;
  out.lower_bound = count_matchings(ug, 2) - 2 * BigInt{quads.size()};
  out.a4 = charpoly(g).even(2);
  out.tight = out.a4 == out.lower_bound;
  out.all_quadrangles_evenly_oriented = true;
  for (const auto& q : quads)
    if (cycle_parity(g, {q.begin(), q.end()}) == CycleParity::OddlyOriented) out.all_quadrangles_evenly_oriented = false;
  if (out.tight != out.all_quadrangles_evenly_oriented)
    fail(errc::internal, "a4 bound tightness disagrees with the quadrangle parity scan");
  if (out.a4 < out.lower_bound) fail(errc::internal, "a4 below M(G,2) - 2q(G)");
  return out;
}

}  // namespace skewenergy
