#pragma once

// Skew energy by two independent routes:
//
//  * spectral: the sum of singular values of S, which for a real skew matrix
//    equals the sum of |eigenvalues|;
//  * integral: (1/pi) * integral over R of x^-2 ln psi(x), with
//    psi(x) = sum_i a_{2i} x^{2i} built from the exact coefficients.
//
// The integral is taken over [0, inf) (the integrand is even) after the
// substitution x = tan t, which turns x^-2 dx into dt / sin^2 t on [0, pi/2).

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "skewenergy/charpoly.hpp"
#include "skewenergy/graph.hpp"
#include "skewenergy/quadrature.hpp"

namespace skewenergy {

inline Eigen::MatrixXd to_eigen(const SkewMatrix& s) {
  Eigen::MatrixXd out(s.size(), s.size());
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) out(i, j) = s.at(i, j);
  return out;
}

inline double skew_energy_spectral(const OrientedGraph& g) {
  const Eigen::MatrixXd s = to_eigen(skew_adjacency(g));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s);
  const double e = svd.singularValues().sum();
  if (!std::isfinite(e)) {
    std::ostringstream os;
    os << "singular value decomposition failed for\n" << s;
    fail(errc::not_converged, os.str());
  }
  return e;
}

/// psi(x) = sum_i a_{2i} x^{2i}. Every coefficient is non-negative and the
/// constant term is 1, so psi >= 1 on the real line.
class PsiPolynomial {
 public:
  explicit PsiPolynomial(const SkewCharPoly& p) {
    for (const BigInt& c : p.coeffs()) coeffs_.push_back(c.convert_to<double>());
    top_ = coeffs_.size() - 1;
    while (top_ > 0 && coeffs_[top_] == 0) --top_;
  }

  const std::vector<double>& coeffs() const { return coeffs_; }
  /// a2, the limit of x^-2 ln psi(x) as x -> 0.
  double a2() const { return coeffs_.size() > 1 ? coeffs_[1] : 0.0; }

  /// ln psi(x), evaluated without overflow or cancellation at either end.
  double log_value(double x) const {
    if (top_ == 0) return 0.0;
    const double x2 = x * x;
    if (x2 <= 1) {
      // log1p of the non-constant part, Horner in x^2
      double tail = 0;
      for (std::size_t i = top_; i >= 1; --i) tail = tail * x2 + coeffs_[i];
      return std::log1p(tail * x2);
    }
    // factor out the leading power: psi = x^{2 top} * sum_i a_{2i} x^{-2(top - i)}
    const double inv = 1 / x2;
    double lead = 0;
    for (std::size_t i = 0; i <= top_; ++i) lead = lead * inv + coeffs_[i];
    return 2.0 * static_cast<double>(top_) * std::log(std::abs(x)) + std::log(lead);
  }

 private:
  std::vector<double> coeffs_;
  std::size_t top_ = 0;
};

struct IntegralEnergy {
  double value = 0;
  double error_estimate = 0;
  std::size_t nodes = 0;
  bool tolerance_met = false;
};

inline IntegralEnergy skew_energy_integral(const SkewCharPoly& p, double tol) {
  if (!(tol > 0)) fail(errc::precondition, "tolerance must be positive");
  const PsiPolynomial psi(p);
  auto integrand = [&psi](double t) {
    const double x = std::tan(t);
    if (x < 1e-6) return psi.a2();  // removable singularity at 0
    const double s = std::sin(t);
    return psi.log_value(x) / (s * s);
  };
  // E = (2/pi) * integral over [0, pi/2); scale the tolerance to match.
  constexpr double scale = 2 / std::numbers::pi;
  const auto q = integrate_adaptive(integrand, 0.0, std::numbers::pi / 2, tol / scale);
  return {scale * q.value, scale * q.error_estimate, q.nodes, q.converged};
}

struct EnergyReport {
  double spectral = 0;
  double integral = 0;
  double discrepancy = 0;
  std::size_t quadrature_nodes = 0;
  double quadrature_error = 0;
  bool tolerance_met = false;  // quadrature reached tol
  bool routes_agree = false;   // discrepancy <= max(10 tol, 1e-8)
};

inline EnergyReport energy_report(const OrientedGraph& g, double tol) {
  EnergyReport r;
  r.spectral = skew_energy_spectral(g);
  const auto in = skew_energy_integral(charpoly(g), tol);
  r.integral = in.value;
  r.discrepancy = std::abs(r.spectral - r.integral);
  r.quadrature_nodes = in.nodes;
  r.quadrature_error = in.error_estimate;
  r.tolerance_met = in.tolerance_met;
  r.routes_agree = r.discrepancy <= std::max(10 * tol, 1e-8);
  return r;
}

/// Energy of the symmetric adjacency matrix of a tree. Any orientation of the
/// tree has the same skew energy as this.
inline double adjacency_energy_tree(const UndirectedGraph& g) {
  if (!g.is_tree()) fail(errc::precondition, "graph is not a tree");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(errc::not_converged, "symmetric eigensolver did not converge");
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace skewenergy
