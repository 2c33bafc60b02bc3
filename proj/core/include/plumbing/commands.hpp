#ifndef PLUMBING_COMMANDS_HPP
#define PLUMBING_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumbing/errors.hpp"
#include "plumbing/rational.hpp"
#include "plumbing/report.hpp"

namespace plumbing {

/// Reads a whole file; throws IoError on failure.
std::string read_file(const std::string& path);

/// Maps an error class to the CLI exit code:
/// 0 success, 1 cross-check disagreement / internal, 2 I/O, 3 parse,
/// 4 mathematical precondition, 5 cap exceeded.
int exit_code_for(const Error& e);

/// `check <graph>`: parse + structural report (definiteness, determinant,
/// minimality, bad vertices, almost-rational proxy).
Report cmd_check(const std::string& graph_path);

struct ThetaOptions {
  std::string graph_path;
  std::optional<std::string> root;  // vertex id; default first declared
  bool table = false;               // per-vertex contribution table
  bool all_roots = false;           // recompute theta at every root
};
/// `theta`: recursion route vs dense oracle, exact agreement required.
Report cmd_theta(const ThetaOptions& opt);

struct SeifertOptions {
  Integer e0_raw;
  std::vector<Rational> fractions;  // leg fractions r_i (given as p/q on the CLI, r = q/p)
  std::string route = "all";        // all | closed | nn | tree
};
/// `theta-seifert`: closed form / Dedekind-sum form / star-graph recursion.
Report cmd_theta_seifert(const SeifertOptions& opt);

/// `d <graph>`: correction term of the canonical spin-c structure, lower
/// bound (theta + 2)/4 and their gap.
Report cmd_d(const std::string& graph_path);

struct RotationsOptions {
  std::string graph_path;
  bool parity = true;
  std::uint64_t cap = 1000000;
  bool full_table = false;  // emit every row regardless of size
};
/// `rotations`: enumerate rotation vectors, theta-minimization verdict.
Report cmd_rotations(const RotationsOptions& opt);

struct SearchOptions {
  Integer max_vertices = 10;
  bool families = false;  // list family members instead of searching
  Integer max_ell = 3;
  bool include_small_k = false;
  bool general = false;  // experimental free-tree sweep
  int general_max_vertices = 5;
  long long general_min_weight = -4;
  std::uint64_t general_cap = 1000000;
};
/// `search-theta2`: symmetric-star hits with theta = -2 (or family listing,
/// or the experimental general tree sweep).
Report cmd_search_theta2(const SearchOptions& opt);

/// `verify-ssw <graph> <embedding>`: checks the lattice-embedding certificate
/// (N rows of N integers) and reports theta alongside.
Report cmd_verify_ssw(const std::string& graph_path, const std::string& embedding_path);

}  // namespace plumbing

#endif
