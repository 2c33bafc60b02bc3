#include "plumbing/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "plumbing/errors.hpp"

namespace plumbing {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<std::string> ids, std::vector<Integer> weights,
                             std::vector<std::pair<int, int>> edges)
    : ids_(std::move(ids)), weights_(std::move(weights)), edges_(std::move(edges)) {
  const int n = static_cast<int>(weights_.size());
  if (n == 0) throw ParseError("graph has no vertices");
  if (ids_.size() != weights_.size()) throw ParseError("vertex id/weight count mismatch");
  for (int v = 0; v < n; ++v) {
    const std::string& id = ids_[v];
    if (id.empty()) throw ParseError("empty vertex id");
    for (char c : id)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw ParseError("vertex id contains whitespace: \"" + id + "\"");
    if (!index_.emplace(id, v).second) throw ParseError("duplicate vertex id \"" + id + "\"");
    if (weights_[v] >= 0)
      throw ParseError("vertex \"" + id + "\" has weight " + weights_[v].str() +
                       "; weights must be <= -1");
  }
  adjacency_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("edge endpoint out of range");
    if (a == b) throw ParseError("self-loop at vertex \"" + ids_[a] + "\"");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw ParseError("duplicate edge " + ids_[a] + " - " + ids_[b]);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  if (static_cast<int>(edges_.size()) != n - 1)
    throw ParseError("graph is not a tree: " + std::to_string(n) + " vertices, " +
                     std::to_string(edges_.size()) + " edges");
  // Connected + |E| = N-1 is equivalent to being a tree.
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v])
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw ParseError("graph is disconnected");
}

PlumbingGraph PlumbingGraph::parse(std::string_view text) {
  std::vector<std::string> ids;
  std::vector<Integer> weights;
  struct PendingEdge {
    std::string a, b;
    int line;
  };
  std::vector<PendingEdge> pending;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 3)
        throw ParseError("expected \"vertex <id> <weight>\"", lineno);
      if (!is_integer_token(tok[2]))
        throw ParseError("weight \"" + tok[2] + "\" is not an integer", lineno,
                         static_cast<int>(raw.find(tok[2]) + 1));
      if (std::find(ids.begin(), ids.end(), tok[1]) != ids.end())
        throw ParseError("duplicate vertex id \"" + tok[1] + "\"", lineno);
      Integer w(tok[2]);
      if (w >= 0)
        throw ParseError("weight of \"" + tok[1] + "\" must be <= -1", lineno);
      ids.push_back(tok[1]);
      weights.push_back(std::move(w));
    } else if (tok[0] == "edge") {
      if (tok.size() != 3)
        throw ParseError("expected \"edge <id1> <id2>\"", lineno);
      pending.push_back({tok[1], tok[2], lineno});
    } else {
      throw ParseError("unknown directive \"" + tok[0] + "\"", lineno,
                       static_cast<int>(raw.find(tok[0]) + 1));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : pending) {
    auto find = [&](const std::string& id) {
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it == ids.end())
        throw ParseError("edge references undeclared vertex \"" + id + "\"", e.line);
      return static_cast<int>(it - ids.begin());
    };
    edges.emplace_back(find(e.a), find(e.b));
  }
  return PlumbingGraph(std::move(ids), std::move(weights), std::move(edges));
}

PlumbingGraph PlumbingGraph::from_weights(const std::vector<long long>& weights,
                                          const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> ids;
  std::vector<Integer> w;
  ids.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ids.push_back("v" + std::to_string(i + 1));
    w.emplace_back(weights[i]);
  }
  return PlumbingGraph(std::move(ids), std::move(w), edges);
}

int PlumbingGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw MathError(MathError::Code::domain, "unknown vertex id \"" + id + "\"", id);
  return it->second;
}

std::string PlumbingGraph::to_text() const {
  std::ostringstream out;
  for (int v = 0; v < size(); ++v)
    out << "vertex " << ids_[v] << " " << weights_[v].str() << "\n";
  for (const auto& [a, b] : edges_)
    out << "edge " << ids_[a] << " " << ids_[b] << "\n";
  return out.str();
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const int n = g.size();
  IntMatrix q(n, n);
  for (int v = 0; v < n; ++v) q(v, v) = g.weight(v);
  for (const auto& [a, b] : g.edges()) {
    q(a, b) = 1;
    q(b, a) = 1;
  }
  return q;
}

Integer determinant(const PlumbingGraph& g) {
  return bareiss_determinant(intersection_matrix(g));
}

bool is_negative_definite(const PlumbingGraph& g) {
  IntMatrix q = intersection_matrix(g);
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = -q(i, j);
  return is_positive_definite_sym(std::move(q));
}

bool is_minimal(const PlumbingGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.weight(v) == -1) return false;
  return true;
}

std::vector<int> bad_vertices(const PlumbingGraph& g) {
  std::vector<int> bad;
  for (int v = 0; v < g.size(); ++v)
    if (-g.weight(v) < g.degree(v)) bad.push_back(v);
  return bad;
}

bool is_almost_rational_proxy(const PlumbingGraph& g) {
  return bad_vertices(g).size() <= 1;
}

}  // namespace plumbing
