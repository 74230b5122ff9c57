// Command-line surface for the clique-regular graph library: generate the
// example families, analyze graphs, apply the transformations, run the
// theorem battery, and scan locally linear srg parameter space.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "crg/cliques.hpp"
#include "crg/critical.hpp"
#include "crg/families.hpp"
#include "crg/graph.hpp"
#include "crg/io.hpp"
#include "crg/regularity.hpp"
#include "crg/spectral.hpp"
#include "crg/srg_search.hpp"
#include "crg/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitAssertion = 3;

long long arg_int(const std::vector<std::string>& args, std::size_t i, const char* what) {
  if (i >= args.size()) throw crg::error(std::string("missing argument: ") + what);
  try {
    std::size_t pos = 0;
    long long v = std::stoll(args[i], &pos);
    if (pos != args[i].size()) throw std::invalid_argument(args[i]);
    return v;
  } catch (...) {
    throw crg::error("bad integer argument '" + args[i] + "' for " + what);
  }
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args) {
  crg::Graph g(1, {});
  if (family == "complete") {
    g = crg::complete_graph(static_cast<int>(arg_int(args, 0, "n")));
  } else if (family == "complete-bipartite") {
    g = crg::complete_bipartite_graph(static_cast<int>(arg_int(args, 0, "a")),
                                      static_cast<int>(arg_int(args, 1, "b")));
  } else if (family == "rook") {
    g = crg::rook_graph(static_cast<int>(arg_int(args, 0, "n")));
  } else if (family == "triangular") {
    g = crg::triangular_graph(static_cast<int>(arg_int(args, 0, "n")));
  } else if (family == "oa-block") {
    g = crg::block_graph(crg::orthogonal_array(static_cast<int>(arg_int(args, 0, "n")),
                                               static_cast<int>(arg_int(args, 1, "m"))));
  } else if (family == "gq22") {
    g = crg::collinearity_graph(crg::gq22());
  } else if (family == "gq24") {
    g = crg::gq24_graph();
  } else if (family == "brouwer-haemers") {
    g = crg::brouwer_haemers();
  } else if (family == "gq-file") {
    if (args.empty()) throw crg::error("gq-file needs a path");
    auto geom = crg::load_geometry_file(args[0]);
    g = crg::collinearity_graph(geom);
  } else {
    throw crg::error("unknown family '" + family + "'");
  }
  std::cout << crg::emit_graph(g);
  return kExitOk;
}

int cmd_analyze(const std::string& path) {
  crg::Graph g = crg::load_graph_file(path);
  std::cout << "n: " << g.vertex_count() << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";
  int w = crg::clique_number(g);
  std::cout << "clique-number: " << w << "\n";

  std::vector<int> omegas;
  if (g.edge_count() > 0) {
    // Only 2 and the clique number can carry a witness.
    std::vector<int> candidates{2};
    if (w > 2) candidates.push_back(w);
    for (int omega : candidates)
      if (crg::clique_regular_witness(g, omega)) omegas.push_back(omega);
  }
  if (omegas.empty()) {
    std::cout << "clique-regular: none\n";
  } else {
    std::cout << "clique-regular:";
    for (std::size_t i = 0; i < omegas.size(); ++i)
      std::cout << (i ? ", " : " ") << "omega=" << omegas[i];
    std::cout << "\n";
  }

  if (auto erg = crg::is_edge_regular(g))
    std::cout << "edge-regular: " << erg->n << " " << erg->k << " " << erg->lambda << "\n";
  else
    std::cout << "edge-regular: none\n";

  if (auto srg = crg::is_strongly_regular(g)) {
    std::cout << "srg: " << srg->n << " " << srg->k << " " << srg->lambda << " " << srg->mu
              << "\n";
    if (srg->integral)
      std::cout << "spectrum: " << srg->k << "^1, " << srg->r << "^" << srg->f << ", " << srg->s
                << "^" << srg->g << "\n";
  } else {
    std::cout << "srg: none\n";
  }

  std::cout << "rca: " << (crg::is_rca(g) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_transform(const std::string& path, const std::string& kind, int omega) {
  crg::Graph g = crg::load_graph_file(path);
  crg::Graph out(1, {});
  if (kind == "line") {
    out = crg::line_graph(g);
  } else if (kind == "clique") {
    if (omega < 2) throw crg::error("clique transform needs --omega");
    out = crg::clique_graph(g, omega);
  } else if (kind == "subdivision") {
    if (omega < 2) throw crg::error("subdivision transform needs --omega");
    out = crg::clique_subdivision(g, omega);
  } else {
    throw crg::error("unknown transform '" + kind + "'");
  }
  std::cout << crg::emit_graph(out);
  return kExitOk;
}

bool thm44_parameters(const crg::SrgParams& p) {
  return p == crg::SrgParams{9, 4, 1, 2} || p == crg::SrgParams{15, 6, 1, 3} ||
         p == crg::SrgParams{27, 10, 1, 5};
}

int cmd_verify(const std::string& path, int omega, double tol) {
  crg::Graph g = crg::load_graph_file(path);
  auto witness = crg::clique_regular_witness(g, omega);
  if (!witness) {
    std::cout << "not " << omega << "-clique regular\n";
    return kExitHypothesis;
  }

  bool all_ok = true;
  auto line = [&](const std::string& id, const crg::CheckReport& rep) {
    std::cout << id << ": " << (rep.ok ? "pass" : "fail (" + rep.detail + ")") << "\n";
    all_ok = all_ok && rep.ok;
  };

  line("lemma-3.1", crg::verify_incidence_identities(g, omega));
  if (g.regular_degree())
    line("thm-3.2", crg::clique_graph_charpoly_identity(g, omega));
  else
    std::cout << "thm-3.2: skipped (graph is not regular)\n";
  line("thm-3.1-bounds", crg::eigen_bounds_check(g, omega, tol));
  line("thm-5.1", crg::verify_order_theorem(g, omega));
  line("lemma-5.3/5.4", crg::verify_induced_and_scalar(g, omega));

  auto srg = crg::is_strongly_regular(g);
  if (srg && srg->lambda == 1 && srg->integral && !crg::boring(*srg) && omega == 3) {
    if (thm44_parameters(*srg)) {
      std::cout << "tau-rho: skipped (strongly regular clique graph; outside the system's "
                   "hypothesis)\n";
    } else {
      auto sys = crg::build_tau_rho_system(*srg);
      crg::Graph cg = crg::clique_graph(g, 3);
      crg::CheckReport rep;
      for (int v = 0; v < cg.vertex_count() && rep.ok; ++v) {
        auto vec = crg::measure_tau_rho(cg, static_cast<int>(sys.omega_c.get_si()), v);
        auto check = crg::check_tau_rho_solution(sys, vec);
        if (!check.ok)
          rep = {false, "vertex " + std::to_string(v) + ": " + check.detail};
      }
      line("tau-rho", rep);
    }
  } else {
    std::cout << "tau-rho: skipped (not a locally linear srg with omega=3)\n";
  }

  return all_ok ? kExitOk : kExitAssertion;
}

int cmd_scan(long long max_k, bool with_solver) {
  auto sets = crg::enumerate_feasible_locally_linear(max_k);
  for (const auto& p : sets) {
    std::cout << p.n << " " << p.k << " " << p.lambda << " " << p.mu << " " << p.r << " " << p.f
              << " " << p.s << " " << p.g;
    if (with_solver) {
      try {
        auto sys = crg::build_tau_rho_system(p);
        auto witness = crg::solve_nonneg_integer(sys);
        std::cout << (witness ? " solvable" : " no-solution");
      } catch (const crg::error& e) {
        std::cout << " no-system";
      }
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique-regular graph toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a family member as a graph file");
  std::string family;
  std::vector<std::string> gen_args;
  gen->add_option("family", family,
                  "complete | complete-bipartite | rook | triangular | oa-block | gq22 | gq24 "
                  "| brouwer-haemers | gq-file")
      ->required();
  gen->add_option("args", gen_args, "family parameters");

  auto* analyze = app.add_subcommand("analyze", "clique/regularity report for a graph file");
  std::string analyze_path;
  analyze->add_option("file", analyze_path)->required();

  auto* transform = app.add_subcommand("transform", "line / clique / subdivision transform");
  std::string transform_path, transform_kind;
  int transform_omega = -1;
  transform->add_option("file", transform_path)->required();
  transform->add_option("kind", transform_kind, "line | clique | subdivision")->required();
  transform->add_option("--omega", transform_omega, "clique order");

  auto* verify = app.add_subcommand("verify", "run the theorem battery on a graph file");
  std::string verify_path;
  int verify_omega = 0;
  double tolerance = 1e-9;
  verify->add_option("file", verify_path)->required();
  verify->add_option("--omega", verify_omega, "clique order")->required();
  verify->add_option("--tolerance", tolerance, "numeric tolerance for spectral bounds");

  auto* scan = app.add_subcommand("scan", "feasible locally linear srg parameter scan");
  long long max_k = 0;
  bool with_solver = false;
  scan->add_option("--max-k", max_k, "largest degree k to scan")->required();
  scan->add_flag("--with-solver", with_solver, "append a tau/rho solver verdict per record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, gen_args);
    if (analyze->parsed()) return cmd_analyze(analyze_path);
    if (transform->parsed()) return cmd_transform(transform_path, transform_kind, transform_omega);
    if (verify->parsed()) return cmd_verify(verify_path, verify_omega, tolerance);
    if (scan->parsed()) return cmd_scan(max_k, with_solver);
  } catch (const crg::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const crg::hypothesis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const crg::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
