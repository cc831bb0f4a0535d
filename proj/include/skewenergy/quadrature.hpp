#pragma once

// Globally adaptive Gauss-Legendre quadrature on a finite interval.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "skewenergy/error.hpp"

namespace skewenergy {

/// Nodes and weights of the k-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int order) : nodes_(static_cast<std::size_t>(std::max(order, 1))), weights_(nodes_.size()) {
    if (order < 1) fail(errc::precondition, "Gauss-Legendre order must be positive");
    const int k = order;
    // (P_k(x), P_k'(x)) by the three-term recurrence.
    auto legendre = [k](double x) {
      double p0 = 1, p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      return std::pair{p1, k * (x * p1 - p0) / (x * x - 1)};
    };
    for (int i = 0; i < (k + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
      for (int iter = 0; iter < 100; ++iter) {
        const auto [p, dp] = legendre(x);
        const double dx = p / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const double dp = legendre(x).second;
      const double w = 2 / ((1 - x * x) * dp * dp);
      nodes_[i] = -x;
      nodes_[k - 1 - i] = x;
      weights_[i] = weights_[k - 1 - i] = w;
    }
  }

  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  template <class F>
  double apply(F& f, double a, double b) const {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double s = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * f(mid + half * nodes_[i]);
    return s * half;
  }

 private:
  std::vector<double> nodes_, weights_;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t nodes = 0;      // integrand evaluations
  std::size_t intervals = 0;
  bool converged = false;
};

namespace detail {

/// Pairwise summation so the result does not depend on accumulation order
/// beyond the (sorted) input order.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 4) {
    double s = 0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t h = xs.size() / 2;
  return pairwise_sum(xs.first(h)) + pairwise_sum(xs.subspan(h));
}

}  // namespace detail

/// Integrates f over [a, b] until the summed local error estimate is at most
/// tol or the evaluation budget is spent.
///
/// Each interval keeps the rule applied to itself (coarse) and to its two
/// halves (fine); |coarse - fine| is its error estimate and fine its value.
/// The interval with the largest estimate is bisected next (ties broken by
/// position), which keeps the refinement sequence deterministic.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double tol, std::size_t max_nodes = std::size_t{1} << 20,
                                    int order = 15) {
  if (!(tol > 0)) fail(errc::precondition, "quadrature tolerance must be positive");
  const GaussLegendre rule(order);
  const std::size_t per_half = static_cast<std::size_t>(rule.order());

  struct Segment {
    double lo, hi, fine, err, left, right;
  };
  QuadratureResult res;
  auto refine = [&](double lo, double hi, double coarse) {
    const double mid = 0.5 * (lo + hi);
    const double l = rule.apply(f, lo, mid), r = rule.apply(f, mid, hi);
    res.nodes += 2 * per_half;
    return Segment{lo, hi, l + r, std::abs(coarse - (l + r)), l, r};
  };

  std::vector<Segment> segs;
  const double whole = rule.apply(f, a, b);
  res.nodes += per_half;
  segs.push_back(refine(a, b, whole));

  auto total_error = [&] {
    std::vector<double> e;
    e.reserve(segs.size());
    for (const auto& s : segs) e.push_back(s.err);
    return detail::pairwise_sum(e);
  };

  double err = total_error();
  while (err > tol && res.nodes + 4 * per_half <= max_nodes) {
    auto worst = std::max_element(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
      if (x.err != y.err) return x.err < y.err;
      return x.lo > y.lo;
    });
    const Segment s = *worst;
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi)) break;  // interval can no longer be split
    *worst = refine(s.lo, mid, s.left);
    segs.push_back(refine(mid, s.hi, s.right));
    err = total_error();
  }

  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  std::vector<double> vals;
  vals.reserve(segs.size());
  for (const auto& s : segs) vals.push_back(s.fine);
  res.value = detail::pairwise_sum(vals);
  res.error_estimate = err;
  res.intervals = segs.size();
  res.converged = err <= tol;
  return res;
}

}  // namespace skewenergy
