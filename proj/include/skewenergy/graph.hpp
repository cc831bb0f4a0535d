#pragma once

// Oriented graphs, their underlying simple graphs, skew-adjacency matrices,
// and the named constructions O+(n,m) / B+(n,m).
//
// Vertices are 0-based. The constructions place the hub (v1) at index 0 and
// the apex (v2) at index 1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewenergy/error.hpp"

namespace skewenergy {

struct Arc {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

/// Dense n x n antisymmetric matrix with entries in {-1, 0, +1}.
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }

  void set_arc(int tail, int head) {
    entries_[index(tail, head)] = 1;
    entries_[index(head, tail)] = -1;
  }

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<std::int8_t> entries_;
};

/// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted.
class UndirectedGraph {
 public:
  using Edge = std::pair<int, int>;

  UndirectedGraph() = default;

  /// Validates and normalizes; rejects loops, repeated pairs and bad indices.
  static UndirectedGraph build(int n, std::vector<Edge> edges) {
    if (n < 1) fail(errc::invalid_graph, "vertex count must be positive, got " + std::to_string(n));
    UndirectedGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    if (n > 64) fail(errc::invalid_graph, "at most 64 vertices supported");
    for (auto [u, v] : edges) {
      const std::string e = "{" + std::to_string(u) + "," + std::to_string(v) + "}";
      if (u < 0 || v < 0 || u >= n || v >= n) fail(errc::invalid_graph, "edge " + e + " has an index outside [0, " + std::to_string(n) + ")");
      if (u == v) fail(errc::invalid_graph, "edge " + e + " is a loop");
      if (g.adjacent(u, v)) fail(errc::invalid_graph, "edge " + e + " repeats an existing pair");
      g.adj_[u] |= bit(v);
      g.adj_[v] |= bit(u);
      g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Non-increasing degree sequence.
  std::vector<int> degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  bool is_connected() const {
    std::uint64_t seen = bit(0), frontier = bit(0);
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < n_; ++v)
        if ((frontier >> v) & 1U) next |= adj_[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all_vertices();
  }

  bool is_tree() const { return m() == n_ - 1 && is_connected(); }

  std::uint64_t all_vertices() const { return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1); }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

/// A simple graph with one direction chosen per edge. Immutable once built.
///
/// Arc order is kept as given (it is the serialization order); equality
/// compares the vertex count and the arc set only.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  static OrientedGraph build(int n, std::vector<Arc> arcs) {
    if (n < 1) fail(errc::invalid_graph, "vertex count must be positive, got " + std::to_string(n));
    if (n > 64) fail(errc::invalid_graph, "at most 64 vertices supported");
    OrientedGraph g;
    g.n_ = n;
    g.sign_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const Arc& a : arcs) {
      if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
        fail(errc::invalid_graph, "arc " + to_string(a) + " has an index outside [0, " + std::to_string(n) + ")");
      if (a.tail == a.head) fail(errc::invalid_graph, "arc " + to_string(a) + " is a loop");
      if (g.sign(a.tail, a.head) != 0)
        fail(errc::invalid_graph, "arc " + to_string(a) + " duplicates the unordered pair of an earlier arc");
      g.sign_[g.index(a.tail, a.head)] = 1;
      g.sign_[g.index(a.head, a.tail)] = -1;
    }
    g.arcs_ = std::move(arcs);
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// +1 if tail->head is an arc, -1 if head->tail is, 0 otherwise.
  int sign(int u, int v) const { return sign_[index(u, v)]; }
  bool has_arc(const Arc& a) const { return sign(a.tail, a.head) == 1; }
  bool adjacent(int u, int v) const { return sign(u, v) != 0; }

  int degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adjacent(v, u);
    return d;
  }

  OrientedGraph without_arc(const Arc& e) const {
    if (!has_arc(e)) fail(errc::precondition, "arc " + to_string(e) + " is not in the graph");
    std::vector<Arc> rest;
    rest.reserve(arcs_.size() - 1);
    for (const Arc& a : arcs_)
      if (a != e) rest.push_back(a);
    return build(n_, std::move(rest));
  }

  /// Deletes the listed vertices; survivors keep their relative order.
  /// Deleting every vertex is not representable and is rejected.
  OrientedGraph without_vertices(const std::vector<int>& removed) const {
    std::vector<int> relabel(static_cast<std::size_t>(n_), 0);
    for (int v : removed) {
      if (v < 0 || v >= n_) fail(errc::precondition, "vertex " + std::to_string(v) + " out of range");
      relabel[v] = -1;
    }
    int next = 0;
    for (int v = 0; v < n_; ++v)
      if (relabel[v] == 0) relabel[v] = next++;
      else relabel[v] = -1;
    if (next == 0) fail(errc::precondition, "cannot delete every vertex");
    std::vector<Arc> rest;
    for (const Arc& a : arcs_)
      if (relabel[a.tail] >= 0 && relabel[a.head] >= 0) rest.push_back({relabel[a.tail], relabel[a.head]});
    return build(next, std::move(rest));
  }

  /// Vertex v becomes perm[v].
  OrientedGraph relabeled(const std::vector<int>& perm) const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for (const Arc& a : arcs_) out.push_back({perm.at(a.tail), perm.at(a.head)});
    return build(n_, std::move(out));
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.sign_ == b.sign_;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int8_t> sign_;
};

inline OrientedGraph build(int n, std::vector<Arc> arcs) { return OrientedGraph::build(n, std::move(arcs)); }

inline SkewMatrix skew_adjacency(const OrientedGraph& g) {
  SkewMatrix s(g.n());
  for (const Arc& a : g.arcs()) s.set_arc(a.tail, a.head);
  return s;
}

inline UndirectedGraph underlying(const OrientedGraph& g) {
  std::vector<UndirectedGraph::Edge> edges;
  edges.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
  return UndirectedGraph::build(g.n(), std::move(edges));
}

/// True if some even cycle of g passes through the edge {u, v}: that is,
/// a simple u..v path of odd length avoiding the edge itself exists.
inline bool edge_on_even_cycle(const UndirectedGraph& g, int u, int v) {
  if (!g.adjacent(u, v)) fail(errc::precondition, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  // Depth-first over simple paths starting at u; parity of the path length
  // is tracked as we go.
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
  auto dfs = [&](auto&& self, int x, int length) -> bool {
    if (x == v) return length % 2 == 1 && length > 1;
    on_path[x] = 1;
    for (int y : g.neighbors(x)) {
      if (on_path[y]) continue;
      if (x == u && y == v) continue;  // the edge itself
      if (self(self, y, length + 1)) return true;
    }
    on_path[x] = 0;
    return false;
  };
  return dfs(dfs, u, 0);
}

// ---------------------------------------------------------------------------
// Named constructions

/// Star 0 -> {1..n-1} plus arcs k -> 1 for k = 2 .. m-n+2. All m-n+1 extra
/// arcs share the apex 1, so every one closes a triangle with the hub arc 0->1.
inline OrientedGraph construct_o_plus(int n, int m) {
  if (n < 5 || m < n || m > 2 * n - 3)
    fail(errc::precondition, "O+(n,m) needs n >= 5 and n <= m <= 2n-3; got n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m));
  std::vector<Arc> arcs;
  for (int v = 1; v < n; ++v) arcs.push_back({0, v});
  for (int k = 0; k < m - n + 1; ++k) arcs.push_back({2 + k, 1});
  return build(n, std::move(arcs));
}

/// O+(n, m+1) with the hub arc 0->1 removed.
inline OrientedGraph construct_b_plus(int n, int m) {
  if (n < 5 || m < n || m > 2 * n - 4)
    fail(errc::precondition, "B+(n,m) needs n >= 5 and n <= m <= 2n-4; got n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m));
  return construct_o_plus(n, m + 1).without_arc({0, 1});
}

/// Out-star with centre 0.
inline OrientedGraph construct_star(int n) {
  if (n < 1) fail(errc::precondition, "star needs n >= 1");
  std::vector<Arc> arcs;
  for (int v = 1; v < n; ++v) arcs.push_back({0, v});
  return build(n, std::move(arcs));
}

/// Directed path 0 -> 1 -> ... -> n-1.
inline OrientedGraph construct_path(int n) {
  if (n < 1) fail(errc::precondition, "path needs n >= 1");
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return build(n, std::move(arcs));
}

/// Even cycle 0 - 1 - ... - (n-1) - 0. The path arcs all follow the traversal;
/// the closing arc follows it too (evenly oriented) or opposes it (oddly).
inline OrientedGraph construct_even_cycle(int n, bool oddly_oriented) {
  if (n < 4 || n % 2 != 0) fail(errc::precondition, "oriented cycle parity needs an even length n >= 4, got " + std::to_string(n));
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  arcs.push_back(oddly_oriented ? Arc{0, n - 1} : Arc{n - 1, 0});
  return build(n, std::move(arcs));
}

}  // namespace skewenergy
