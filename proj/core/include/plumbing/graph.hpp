#ifndef PLUMBING_GRAPH_HPP
#define PLUMBING_GRAPH_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plumbing/matrix.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// A weighted plumbing tree: connected, acyclic, every framing <= -1.
/// Vertices are indexed 0..N-1 in declaration order; adjacency lists keep
/// declaration order too, so every traversal is deterministic.
class PlumbingGraph {
 public:
  PlumbingGraph(std::vector<std::string> ids, std::vector<Integer> weights,
                std::vector<std::pair<int, int>> edges);

  /// Parses the line-oriented format:
  ///   # comment
  ///   vertex <id> <weight>
  ///   edge <id1> <id2>
  static PlumbingGraph parse(std::string_view text);

  /// Convenience for programmatic construction; ids become "v1".."vN".
  static PlumbingGraph from_weights(const std::vector<long long>& weights,
                                    const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::string& id(int v) const { return ids_[v]; }
  /// Index for an id; throws MathError(domain) if unknown.
  int index_of(const std::string& id) const;
  const Integer& weight(int v) const { return weights_[v]; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Serializes back to the line-oriented format (round-trips through parse).
  std::string to_text() const;

 private:
  std::vector<std::string> ids_;
  std::vector<Integer> weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::string, int> index_;
};

/// Intersection form: Q_vv = weight(v), Q_vw = 1 iff v-w is an edge.
IntMatrix intersection_matrix(const PlumbingGraph& g);

/// det Q, exact.  For negative-definite trees its sign is (-1)^N.
Integer determinant(const PlumbingGraph& g);

/// Sylvester's criterion on -Q: all leading principal minors positive.
bool is_negative_definite(const PlumbingGraph& g);

/// True iff every framing is <= -2 (no blow-down available).
bool is_minimal(const PlumbingGraph& g);

/// Vertices with |weight| < degree, in declaration order.
std::vector<int> bad_vertices(const PlumbingGraph& g);

/// Conservative sufficient test: at most one bad vertex.  A `true` certifies
/// the graph is almost rational; `false` decides nothing.
bool is_almost_rational_proxy(const PlumbingGraph& g);

}  // namespace plumbing

#endif
