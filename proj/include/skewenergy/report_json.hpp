#pragma once

// JSON views of the report types (nlohmann::json).

#include <string>

#include <nlohmann/json.hpp>
#include "skewenergy/charpoly.hpp"
#include "skewenergy/energy.hpp"
#include "skewenergy/extremal.hpp"
#include "skewenergy/subgraph_oracle.hpp"

namespace skewenergy {

/// Exact integers become JSON numbers when they fit in 64 bits, strings otherwise.
inline nlohmann::json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline nlohmann::json to_json(const SkewCharPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(bigint_json(c));
  return {{"n", p.degree()}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const MinimalityCertificate& c) {
  nlohmann::json predicted = nlohmann::json::array();
  for (const auto& p : c.predicted_coeffs) predicted.push_back(to_json(p));
  return {
      {"n", c.n},
      {"m", c.m},
      {"min_coeffs", to_json(c.min_coeffs)},
      {"min_energy", c.min_energy},
      {"minimizer_count", c.minimizer_count},
      {"minimizer_classes", c.minimizer_classes},
      {"minimizing_vectors", c.minimizing_vectors},
      {"distinct_vectors", c.distinct_vectors},
      {"predicted", to_string(c.predicted)},
      {"predicted_coeffs", predicted},
      {"verdict", c.pass ? "pass" : "fail"},
      {"graphs_scanned", c.graphs_scanned},
      {"orientations_scanned", c.orientations_scanned},
      {"dominance_checked", c.dominance_checked},
      {"dominance_violations", c.dominance_violations},
  };
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& g : r.violations) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    violations.push_back(edges);
  }
  return {{"n", r.n},
          {"m", r.m},
          {"dominating_vertex_only", r.dominating_vertex_only},
          {"bound", r.bound},
          {"witnesses_checked", r.witnesses_checked},
          {"max_observed", r.max_observed},
          {"violations", violations},
          {"verdict", r.pass() ? "pass" : "fail"}};
}

inline nlohmann::json to_json(const EnergyReport& r) {
  return {{"spectral", r.spectral},
          {"integral", r.integral},
          {"discrepancy", r.discrepancy},
          {"nodes", r.quadrature_nodes},
          {"quadrature_error", r.quadrature_error},
          {"tolerance_met", r.tolerance_met},
          {"routes_agree", r.routes_agree}};
}

inline nlohmann::json to_json(const A4BoundCheck& c) {
  return {{"lower_bound", bigint_json(c.lower_bound)},
          {"a4", bigint_json(c.a4)},
          {"tight", c.tight},
          {"all_quadrangles_evenly_oriented", c.all_quadrangles_evenly_oriented}};
}

inline nlohmann::json to_json(const CrossoverRow& r) {
  return {{"m", r.m}, {"a4_o_plus", r.a4_o_plus}, {"a4_b_plus", r.a4_b_plus}, {"winner", to_string(r.winner)}};
}

}  // namespace skewenergy
