#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stanley/ideal.hpp"
#include "stanley/squarefree.hpp"

namespace stanley {

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  explicit Graph(std::size_t vertex_count) : n_(vertex_count) {}
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);

  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;  // sorted
};

/// J_G, the intersection of the edge primes <x_i, x_j>.
MonomialIdeal cover_ideal(const Graph& g);

// Minimal vertex covers, each as a set of vertices.
std::vector<VariableSet> minimal_vertex_covers(const Graph& g);

struct Bipartition {
  VariableSet left;
  VariableSet right;
};

/// Two-coloring by breadth-first search; nullopt when an odd cycle exists.
/// Each component's smallest vertex goes to the left side.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// A variable set meeting every minimal prime of `ideal` in exactly one
/// variable; the smallest such set, ties broken lexicographically.
std::optional<VariableSet> a_set_for(const MonomialIdeal& ideal);
std::optional<VariableSet> a_set_for(const PrimaryDecomposition& decomposition);

// Edge list text: first line `n`, then one `i j` pair (1-based) per line.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);
// {"n": 4, "edges": [[1,2], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
// Chooses JSON or edge-list text by the first non-blank character.
Graph parse_graph(std::string_view text);

}  // namespace stanley
