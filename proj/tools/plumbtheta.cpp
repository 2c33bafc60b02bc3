// plumbtheta: exact invariants of negative-definite plumbing trees.
//
// Exit codes: 0 success, 1 cross-check disagreement or internal fault,
// 2 I/O error, 3 parse error, 4 mathematical precondition, 5 cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plumbing/commands.hpp"
#include "plumbing/errors.hpp"

namespace {

int emit(const plumbing::Report& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    rep.render_text(std::cout);
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact theta and d invariants of negative-definite plumbing trees"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands hand --json up to the app
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the JSON report instead of text");

  std::string graph_path, embedding_path, root_id, route = "all";
  bool table = false, all_roots = false;
  bool no_parity = false, full_table = false;
  std::uint64_t cap = 1000000;
  std::string e0_text;
  std::vector<std::string> leg_texts;
  std::string max_vertices_text = "10", max_ell_text = "3";
  bool families = false, include_small_k = false, general = false;
  int general_max_vertices = 5;
  long long general_min_weight = -4;
  std::uint64_t general_cap = 1000000;

  auto* c_check = app.add_subcommand("check", "Parse a graph and report its structure");
  c_check->add_option("graph", graph_path, "graph file")->required();

  auto* c_theta = app.add_subcommand("theta", "Theta by recursion, cross-checked densely");
  c_theta->add_option("graph", graph_path, "graph file")->required();
  c_theta->add_option("--root", root_id, "root vertex id (default: first declared)");
  c_theta->add_flag("--table", table, "per-vertex contribution table");
  c_theta->add_flag("--all-roots", all_roots, "recompute theta at every root");

  auto* c_seifert =
      app.add_subcommand("theta-seifert", "Theta from Seifert invariants (e0; legs)");
  c_seifert->add_option("--e0", e0_text, "central integer e0")->required();
  c_seifert
      ->add_option("--leg", leg_texts,
                   "leg as p/q (the multiplicity pair; the fraction is q/p); repeatable")
      ->take_all();
  c_seifert->add_option("--route", route, "all | closed | nn | tree");

  auto* c_d = app.add_subcommand("d", "Correction term of the canonical spin-c structure");
  c_d->add_option("graph", graph_path, "graph file")->required();

  auto* c_rot = app.add_subcommand("rotations", "Rotation vectors and theta minimization");
  c_rot->add_option("graph", graph_path, "graph file")->required();
  c_rot->add_flag("--no-parity", no_parity, "drop the parity constraint");
  c_rot->add_option("--cap", cap, "enumeration cap (default 1000000)");
  c_rot->add_flag("--full", full_table, "emit every table row");

  auto* c_search = app.add_subcommand("search-theta2", "Search for theta = -2");
  c_search->add_option("--max-vertices", max_vertices_text, "bound on 1 + k*l");
  c_search->add_flag("--families", families, "list the three infinite families");
  c_search->add_option("--max-ell", max_ell_text, "family listing bound on l");
  c_search->add_flag("--include-small-k", include_small_k, "allow k < 3");
  c_search->add_flag("--general", general, "experimental sweep over small weighted trees");
  c_search->add_option("--general-max-vertices", general_max_vertices,
                       "tree sweep vertex bound");
  c_search->add_option("--general-min-weight", general_min_weight,
                       "tree sweep weight floor (<= -1)");
  c_search->add_option("--general-cap", general_cap, "tree sweep enumeration cap");

  auto* c_ssw = app.add_subcommand("verify-ssw", "Verify a lattice-embedding certificate");
  c_ssw->add_option("graph", graph_path, "graph file")->required();
  c_ssw->add_option("embedding", embedding_path, "N lines of N integers")->required();

  CLI11_PARSE(app, argc, argv);

  auto parse_integer = [](const std::string& text, const char* what) {
    try {
      return plumbing::Integer(text);
    } catch (const std::exception&) {
      throw plumbing::ParseError(std::string(what) + " \"" + text +
                                 "\" is not an integer");
    }
  };

  try {
    if (*c_check) return emit(plumbing::cmd_check(graph_path), as_json);
    if (*c_theta) {
      plumbing::ThetaOptions opt;
      opt.graph_path = graph_path;
      if (!root_id.empty()) opt.root = root_id;
      opt.table = table;
      opt.all_roots = all_roots;
      return emit(plumbing::cmd_theta(opt), as_json);
    }
    if (*c_seifert) {
      plumbing::SeifertOptions opt;
      opt.e0_raw = parse_integer(e0_text, "--e0");
      for (const std::string& leg : leg_texts) {
        const plumbing::Rational pq = plumbing::parse_fraction(leg);
        if (pq <= 0) throw plumbing::ParseError("leg \"" + leg + "\" must be positive");
        opt.fractions.push_back(1 / pq);  // CLI gives p/q, the fraction is q/p
      }
      opt.route = route;
      return emit(plumbing::cmd_theta_seifert(opt), as_json);
    }
    if (*c_d) return emit(plumbing::cmd_d(graph_path), as_json);
    if (*c_rot) {
      plumbing::RotationsOptions opt;
      opt.graph_path = graph_path;
      opt.parity = !no_parity;
      opt.cap = cap;
      opt.full_table = full_table;
      return emit(plumbing::cmd_rotations(opt), as_json);
    }
    if (*c_search) {
      plumbing::SearchOptions opt;
      opt.max_vertices = parse_integer(max_vertices_text, "--max-vertices");
      opt.families = families;
      opt.max_ell = parse_integer(max_ell_text, "--max-ell");
      opt.include_small_k = include_small_k;
      opt.general = general;
      opt.general_max_vertices = general_max_vertices;
      opt.general_min_weight = general_min_weight;
      opt.general_cap = general_cap;
      return emit(plumbing::cmd_search_theta2(opt), as_json);
    }
    if (*c_ssw)
      return emit(plumbing::cmd_verify_ssw(graph_path, embedding_path), as_json);
  } catch (const plumbing::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return plumbing::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
