// skewenergy: command-line front end.
//
//   skewenergy charpoly      GRAPH              exact even coefficients
//   skewenergy energy        GRAPH [--tol]      spectral vs integral energy
//   skewenergy compare       GRAPH GRAPH        quasi-order verdict
//   skewenergy construct     --construct NAME --n N [--m M]
//   skewenergy verify        --n N --m M [--jobs J] [--emit json|tsv]
//   skewenergy verify-oracle GRAPH              determinant vs subgraph expansion
//   skewenergy crossover     --n N
//
// GRAPH is a file in the oriented edge list format, a construction written
// NAME:N[:M] (e.g. o-plus:6:7), or given by --file / --inline / --construct.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewenergy/report_json.hpp"
#include "skewenergy/skewenergy.hpp"

namespace se = skewenergy;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParse = 3,
  kInvalidGraph = 4,
  kPrecondition = 5,
  kNotConverged = 6,
  kInternal = 7,
  kIo = 8,
};

constexpr const char* kExitHelp =
    "Exit status:\n"
    "  0  success (verify: verdict pass)\n"
    "  1  a check failed (verify verdict fail, oracle mismatch, energy routes disagree)\n"
    "  2  command-line usage error\n"
    "  3  graph text could not be parsed\n"
    "  4  graph violates the oriented-graph invariants\n"
    "  5  argument outside an operation's valid range\n"
    "  6  numerical routine did not converge\n"
    "  7  internal exactness violation (a bug)\n"
    "  8  input file could not be read\n";

int exit_for(se::errc c) {
  switch (c) {
    case se::errc::invalid_graph: return kInvalidGraph;
    case se::errc::parse_error: return kParse;
    case se::errc::precondition: return kPrecondition;
    case se::errc::not_converged: return kNotConverged;
    case se::errc::internal: return kInternal;
  }
  return kInternal;
}

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  std::string id;
  se::OrientedGraph graph;
};

se::OrientedGraph construct(const std::string& name, int n, std::optional<int> m) {
  auto need_m = [&] {
    if (!m) se::fail(se::errc::precondition, "construction '" + name + "' needs --m");
    return *m;
  };
  if (name == "o-plus") return se::construct_o_plus(n, need_m());
  if (name == "b-plus") return se::construct_b_plus(n, need_m());
  if (name == "cycle-odd") return se::construct_even_cycle(n, true);
  if (name == "cycle-even") return se::construct_even_cycle(n, false);
  if (name == "star") return se::construct_star(n);
  if (name == "path") return se::construct_path(n);
  se::fail(se::errc::precondition,
           "unknown construction '" + name + "' (expected o-plus, b-plus, cycle-odd, cycle-even, star, path)");
}

std::string construction_id(const std::string& name, int n, std::optional<int> m) {
  return name + "(" + std::to_string(n) + (m ? "," + std::to_string(*m) : std::string{}) + ")";
}

/// NAME:N[:M] if NAME is a known construction, otherwise a file path.
NamedGraph resolve(const std::string& source) {
  static const std::vector<std::string> names{"o-plus", "b-plus", "cycle-odd", "cycle-even", "star", "path"};
  const auto colon = source.find(':');
  if (colon != std::string::npos) {
    const std::string name = source.substr(0, colon);
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      std::vector<int> nums;
      std::stringstream rest(source.substr(colon + 1));
      std::string tok;
      while (std::getline(rest, tok, ':')) {
        try {
          nums.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          se::fail(se::errc::precondition, "bad number '" + tok + "' in construction '" + source + "'");
        }
      }
      if (nums.empty() || nums.size() > 2) se::fail(se::errc::precondition, "construction must be NAME:N[:M]");
      std::optional<int> m = nums.size() == 2 ? std::optional<int>(nums[1]) : std::nullopt;
      return {construction_id(name, nums[0], m), construct(name, nums[0], m)};
    }
  }
  std::ifstream in(source);
  if (!in) throw IoError("cannot open '" + source + "'");
  return {source, se::parse_graph(in)};
}

struct GraphSource {
  std::vector<std::string> positional;
  std::string file;
  std::string inline_text;
  std::string construction;
  std::optional<int> n, m;

  void attach(CLI::App* app, bool two) {
    app->add_option("graph", positional, two ? "two graphs: files or NAME:N[:M]" : "graph file or NAME:N[:M]")
        ->expected(0, two ? 2 : 1);
    if (two) return;
    app->add_option("--file,-f", file, "graph file (oriented edge list)");
    app->add_option("--inline", inline_text, "graph text; ';' separates lines");
    app->add_option("--construct", construction, "o-plus, b-plus, cycle-odd, cycle-even, star, path");
    app->add_option("--n", n, "vertex count for --construct");
    app->add_option("--m", m, "arc count for --construct");
  }

  std::vector<NamedGraph> graphs(std::size_t want) const {
    std::vector<NamedGraph> out;
    for (const auto& p : positional) out.push_back(resolve(p));
    if (!file.empty()) out.push_back(resolve(file));
    if (!inline_text.empty()) {
      std::string text = inline_text;
      std::replace(text.begin(), text.end(), ';', '\n');
      out.push_back({"inline", se::parse_graph(text)});
    }
    if (!construction.empty()) {
      if (!n) throw CLI::ValidationError("--construct needs --n");
      out.push_back({construction_id(construction, *n, m), construct(construction, *n, m)});
    }
    if (out.size() != want)
      throw CLI::ValidationError("expected " + std::to_string(want) + " graph source(s), got " + std::to_string(out.size()));
    return out;
  }
};

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

nlohmann::json arcs_json(const se::OrientedGraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return arcs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skew characteristic polynomials and skew energies of oriented graphs"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  std::string format = "tsv";
  double tol = 1e-9;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));
  };

  GraphSource charpoly_src, energy_src, compare_src, oracle_src;

  auto* charpoly_cmd = app.add_subcommand("charpoly", "even coefficients of det(xI - S), as 'n: a0 a2 ...'");
  charpoly_src.attach(charpoly_cmd, false);
  add_format(charpoly_cmd);

  auto* energy_cmd = app.add_subcommand("energy", "skew energy by singular values and by the integral formula");
  energy_src.attach(energy_cmd, false);
  energy_cmd->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  add_format(energy_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "quasi-order of two graphs of equal order");
  compare_src.attach(compare_cmd, true);
  add_format(compare_cmd);

  std::string cname;
  int cn = 0;
  std::optional<int> cm;
  auto* construct_cmd = app.add_subcommand("construct", "emit a named construction as an oriented edge list");
  construct_cmd->add_option("--construct,name", cname, "o-plus, b-plus, cycle-odd, cycle-even, star, path")->required();
  construct_cmd->add_option("--n", cn, "vertex count")->required();
  construct_cmd->add_option("--m", cm, "arc count (o-plus, b-plus)");
  add_format(construct_cmd);

  int vn = 0, vm = 0;
  unsigned jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive minimal-energy check; exit 0 iff the verdict is pass");
  verify_cmd->add_option("--n", vn, "vertex count")->required();
  verify_cmd->add_option("--m", vm, "arc count, n <= m < 2(n-2)")->required();
  verify_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--emit,--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));

  auto* oracle_cmd = app.add_subcommand("verify-oracle", "coefficients by determinant vs basic-subgraph expansion, and the a4 bound");
  oracle_src.attach(oracle_cmd, false);
  add_format(oracle_cmd);

  int xn = 0;
  auto* crossover_cmd = app.add_subcommand("crossover", "closed-form a4 of O+ and B+ for every m in [n, 2(n-2))");
  crossover_cmd->add_option("--n", xn, "vertex count")->required();
  add_format(crossover_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const bool json = format == "json";
  std::ostream& out = std::cout;
  try {
    if (*charpoly_cmd) {
      const auto g = charpoly_src.graphs(1).front();
      const auto p = se::charpoly(g.graph);
      if (json) {
        auto j = se::to_json(p);
        j["id"] = g.id;
        out << j.dump(2) << "\n";
      } else {
        out << se::to_string(p) << "\n";
      }
    } else if (*energy_cmd) {
      const auto g = energy_src.graphs(1).front();
      const auto r = se::energy_report(g.graph, tol);
      if (json) {
        auto j = se::to_json(r);
        j["id"] = g.id;
        out << j.dump(2) << "\n";
      } else {
        out << "id\tspectral\tintegral\tdiscrepancy\tnodes\n"
            << g.id << "\t" << fixed(r.spectral) << "\t" << fixed(r.integral) << "\t" << sci(r.discrepancy) << "\t"
            << r.quadrature_nodes << "\n";
      }
      return r.routes_agree && r.tolerance_met ? kOk : kCheckFailed;
    } else if (*compare_cmd) {
      const auto gs = compare_src.graphs(2);
      const auto p = se::charpoly(gs[0].graph), q = se::charpoly(gs[1].graph);
      const auto verdict = se::quasi_compare(p, q);
      if (json) {
        out << nlohmann::json{{"left", {{"id", gs[0].id}, {"charpoly", se::to_json(p)}}},
                              {"right", {{"id", gs[1].id}, {"charpoly", se::to_json(q)}}},
                              {"verdict", se::to_string(verdict)}}
                   .dump(2)
            << "\n";
      } else {
        out << gs[0].id << "\t" << se::to_string(p) << "\n"
            << gs[1].id << "\t" << se::to_string(q) << "\n"
            << "verdict\t" << se::to_string(verdict) << "\n";
      }
    } else if (*construct_cmd) {
      const auto g = construct(cname, cn, cm);
      if (json)
        out << nlohmann::json{{"id", construction_id(cname, cn, cm)}, {"n", g.n()}, {"arcs", arcs_json(g)}}.dump(2) << "\n";
      else
        out << se::serialize(g);
    } else if (*verify_cmd) {
      const auto cert = se::verify_theorem_1(vn, vm, jobs);
      if (json) {
        out << se::to_json(cert).dump(2) << "\n";
      } else {
        std::string predicted;
        for (const auto& p : cert.predicted_coeffs) predicted += (predicted.empty() ? "" : " | ") + se::to_string(p);
        out << "n\t" << cert.n << "\n"
            << "m\t" << cert.m << "\n"
            << "predicted\t" << se::to_string(cert.predicted) << "\n"
            << "predicted_coeffs\t" << predicted << "\n"
            << "min_coeffs\t" << se::to_string(cert.min_coeffs) << "\n"
            << "min_energy\t" << fixed(cert.min_energy) << "\n"
            << "minimizer_count\t" << cert.minimizer_count << "\n"
            << "minimizer_classes\t" << cert.minimizer_classes << "\n"
            << "minimizing_vectors\t" << cert.minimizing_vectors << "\n"
            << "distinct_vectors\t" << cert.distinct_vectors << "\n"
            << "graphs_scanned\t" << cert.graphs_scanned << "\n"
            << "orientations_scanned\t" << cert.orientations_scanned << "\n"
            << "dominance_violations\t" << cert.dominance_violations << "\n"
            << "verdict\t" << (cert.pass ? "pass" : "fail") << "\n";
      }
      return cert.pass ? kOk : kCheckFailed;
    } else if (*oracle_cmd) {
      const auto g = oracle_src.graphs(1).front();
      const auto det = se::charpoly(g.graph);
      const auto exp = se::charpoly_by_expansion(g.graph);
      const bool match = det == exp;
      std::optional<se::A4BoundCheck> bound;
      if (g.graph.n() >= 4) bound = se::a4_bound_check(g.graph);
      if (json) {
        nlohmann::json j{{"id", g.id}, {"determinant", se::to_json(det)}, {"expansion", se::to_json(exp)}, {"match", match}};
        if (bound) j["a4_bound"] = se::to_json(*bound);
        out << j.dump(2) << "\n";
      } else {
        out << "index\tdeterminant\texpansion\tmatch\n";
        for (std::size_t i = 0; i < det.size(); ++i)
          out << 2 * i << "\t" << det.even(i).str() << "\t" << exp.even(i).str() << "\t"
              << (det.even(i) == exp.even(i) ? "yes" : "no") << "\n";
        if (bound)
          out << "a4_bound\t" << bound->lower_bound.str() << "\ta4\t" << bound->a4.str() << "\ttight\t"
              << (bound->tight ? "yes" : "no") << "\n";
      }
      return match ? kOk : kCheckFailed;
    } else if (*crossover_cmd) {
      const auto rows = se::crossover_table(xn);
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(se::to_json(r));
        out << nlohmann::json{{"n", xn}, {"rows", j}}.dump(2) << "\n";
      } else {
        out << "m\ta4_o_plus\ta4_b_plus\twinner\n";
        for (const auto& r : rows)
          out << r.m << "\t" << r.a4_o_plus << "\t" << r.a4_b_plus << "\t" << se::to_string(r.winner) << "\n";
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const se::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kOk;
}
