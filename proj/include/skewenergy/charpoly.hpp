#pragma once

// Exact skew characteristic polynomial det(xI - S) and the quasi-order on
// coefficient vectors.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "skewenergy/bigint.hpp"
#include "skewenergy/graph.hpp"

namespace skewenergy {

/// Even-index coefficients (a0, a2, ..., a_{2 floor(n/2)}) of det(xI - S),
/// where a_{2i} multiplies x^(n-2i). Odd-index coefficients of a skew matrix
/// vanish and are not stored.
///
/// A degree of 0 (the graph on no vertices) is allowed so that deletion
/// recurrences can bottom out; its vector is (1).
class SkewCharPoly {
 public:
  SkewCharPoly() = default;
  SkewCharPoly(int degree, std::vector<BigInt> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree / 2 + 1))
      fail(errc::internal, "coefficient vector of degree " + std::to_string(degree) + " must have " +
                               std::to_string(degree / 2 + 1) + " entries");
  }

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  /// a_{2i}; zero beyond the stored range.
  BigInt even(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt{0}; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const SkewCharPoly&, const SkewCharPoly&) = default;
  /// Lexicographic; only used to key ordered containers.
  friend bool operator<(const SkewCharPoly& a, const SkewCharPoly& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.coeffs_ < b.coeffs_;
  }

 private:
  int degree_ = 0;
  std::vector<BigInt> coeffs_{1};
};

/// "n: a0 a2 a4 ..."
inline std::string to_string(const SkewCharPoly& p) {
  std::string out = std::to_string(p.degree()) + ":";
  for (const BigInt& c : p.coeffs()) out += " " + c.str();
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const SkewCharPoly& p) { return os << to_string(p); }

/// All coefficients c_0..c_n of det(xI - A), c_k multiplying x^(n-k), by the
/// Faddeev-LeVerrier recursion
///
///   M_1 = I,  c_k = -tr(A M_k) / k,  M_{k+1} = A M_k + c_k I.
///
/// Every division is exact over the integers; a non-zero remainder throws.
template <class Int = BigInt>
std::vector<Int> faddeev_leverrier(const SkewMatrix& a) {
  const int n = a.size();
  std::vector<std::vector<std::pair<int, int>>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) != 0) rows[i].emplace_back(j, a.at(i, j));

  std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int{0});
  c[0] = 1;
  std::vector<Int> mk(static_cast<std::size_t>(n) * n, Int{0}), amk(mk.size(), Int{0});
  for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] = 1;

  for (int k = 1; k <= n; ++k) {
    // amk = A * mk, exploiting the +-1 sparsity of A.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (auto [l, sign] : rows[i]) {
          if (sign > 0) s += mk[static_cast<std::size_t>(l) * n + j];
          else s -= mk[static_cast<std::size_t>(l) * n + j];
        }
        amk[static_cast<std::size_t>(i) * n + j] = std::move(s);
      }
    Int trace = 0;
    for (int i = 0; i < n; ++i) trace += amk[static_cast<std::size_t>(i) * n + i];
    if (trace % k != 0)
      fail(errc::internal, "Faddeev-LeVerrier: trace not divisible by " + std::to_string(k));
    c[k] = -(trace / k);
    if (k == n) break;
    mk.swap(amk);
    for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] += c[k];
  }
  return c;
}

inline SkewCharPoly charpoly(const OrientedGraph& g) {
  const auto c = faddeev_leverrier<BigInt>(skew_adjacency(g));
  std::vector<BigInt> even;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (c[k] != 0) fail(errc::internal, "odd coefficient a" + std::to_string(k) + " is non-zero");
    } else {
      if (c[k] < 0) fail(errc::internal, "even coefficient a" + std::to_string(k) + " is negative");
      even.push_back(c[k]);
    }
  }
  return SkewCharPoly(g.n(), std::move(even));
}

namespace detail {

/// charpoly of g with the listed vertices deleted; the empty graph gives (1).
inline SkewCharPoly charpoly_minus(const OrientedGraph& g, const std::vector<int>& removed) {
  if (static_cast<int>(removed.size()) >= g.n()) return SkewCharPoly(g.n() - static_cast<int>(removed.size()), {1});
  return charpoly(g.without_vertices(removed));
}

/// Degree-aligned sum: result a_{2i} = p_{2i} + q_{2(i - shift)}.
inline SkewCharPoly add_shifted(int degree, const SkewCharPoly& p, const SkewCharPoly& q, std::size_t shift) {
  std::vector<BigInt> out(static_cast<std::size_t>(degree / 2 + 1));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.even(i);
    if (i >= shift) out[i] += q.even(i - shift);
  }
  return SkewCharPoly(degree, std::move(out));
}

}  // namespace detail

/// phi(G) = phi(G - e) + phi(G - u - v) for an arc e = (u, v) on no even cycle.
inline SkewCharPoly charpoly_delete_arc(const OrientedGraph& g, const Arc& e) {
  if (!g.has_arc(e)) fail(errc::precondition, "arc " + to_string(e) + " is not in the graph");
  if (edge_on_even_cycle(underlying(g), e.tail, e.head))
    fail(errc::precondition, "arc " + to_string(e) + " lies on an even cycle; the deletion identity does not apply");
  return detail::add_shifted(g.n(), charpoly(g.without_arc(e)), detail::charpoly_minus(g, {e.tail, e.head}), 1);
}

/// a_i(G) = a_i(G - v) + a_{i-2}(G - v - u) for a pendant vertex v hanging off u.
inline SkewCharPoly pendant_coefficients(const OrientedGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v))
    fail(errc::precondition, "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  if (g.degree(v) != 1)
    fail(errc::precondition, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", not 1");
  return detail::add_shifted(g.n(), detail::charpoly_minus(g, {v}), detail::charpoly_minus(g, {v, u}), 1);
}

enum class QuasiOrder { StrictlyLess, StrictlyGreater, Equivalent, Incomparable };

inline const char* to_string(QuasiOrder q) {
  switch (q) {
    case QuasiOrder::StrictlyLess: return "StrictlyLess";
    case QuasiOrder::StrictlyGreater: return "StrictlyGreater";
    case QuasiOrder::Equivalent: return "Equivalent";
    case QuasiOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Componentwise comparison of two coefficient vectors of the same order.
inline QuasiOrder quasi_compare(const SkewCharPoly& p, const SkewCharPoly& q) {
  if (p.degree() != q.degree())
    fail(errc::precondition, "quasi-order compares graphs of equal order; got " + std::to_string(p.degree()) +
                                 " and " + std::to_string(q.degree()));
  bool less = false, greater = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.even(i) < q.even(i)) less = true;
    if (p.even(i) > q.even(i)) greater = true;
  }
  if (less && greater) return QuasiOrder::Incomparable;
  if (less) return QuasiOrder::StrictlyLess;
  if (greater) return QuasiOrder::StrictlyGreater;
  return QuasiOrder::Equivalent;
}

}  // namespace skewenergy
