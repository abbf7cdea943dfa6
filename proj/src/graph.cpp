#include "stanley/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "stanley/io.hpp"

namespace stanley {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint outside the vertex range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw std::invalid_argument("duplicate edge");
  edges_.insert(it, e);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal cover_ideal(const Graph& g) {
  if (g.edges().empty()) throw std::invalid_argument("cover_ideal: graph has no edges");
  const std::size_t n = g.vertex_count();
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& [u, v] : g.edges()) acc = intersect(acc, MonomialIdeal::prime(n, VariableSet{u, v}));
  return acc;
}

std::vector<VariableSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VariableSet> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back(VariableSet{u, v});
  auto covers = minimal_transversals(edges);
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Bipartition parts;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right).insert(v);
  return parts;
}

std::optional<VariableSet> a_set_for(const PrimaryDecomposition& decomposition) {
  const std::size_t n = decomposition.source.ring_size();
  if (n > 20) throw std::invalid_argument("a_set_for: exhaustive search is limited to 20 variables");
  // Subsets in order of size, each size in lexicographic order of index lists.
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      VariableSet a;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) a.insert(i);
      }
      const bool ok = std::all_of(decomposition.primes.begin(), decomposition.primes.end(),
                                  [&](const PrimeIdeal& p) { return (p.support & a).size() == 1; });
      if (ok) return a;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

std::optional<VariableSet> a_set_for(const MonomialIdeal& ideal) { return a_set_for(minimal_primes(ideal)); }

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("graph line " + std::to_string(line_no) + ": expected integers");
    }
    if (!g) {
      std::string rest;
      if (fields >> rest || a < 1) throw ParseError("graph header must be a single positive vertex count");
      g.emplace(static_cast<std::size_t>(a));
      continue;
    }
    std::string rest;
    if (!(fields >> b) || (fields >> rest)) {
      throw ParseError("graph line " + std::to_string(line_no) + ": expected an `i j` pair");
    }
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > g->vertex_count() ||
        static_cast<std::size_t>(b) > g->vertex_count()) {
      throw ParseError("graph line " + std::to_string(line_no) + ": vertex out of range");
    }
    try {
      g->add_edge(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    } catch (const std::exception& e) {
      throw ParseError("graph line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!g) throw ParseError("empty graph file");
  return *g;
}

std::string format_graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 1) {
    throw ParseError("graph JSON needs a positive integer \"n\"");
  }
  Graph g(j.at("n").get<std::size_t>());
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError("each edge must be a pair of vertex indices");
      }
      const auto a = e[0].get<long long>();
      const auto b = e[1].get<long long>();
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > g.vertex_count() ||
          static_cast<std::size_t>(b) > g.vertex_count()) {
        throw ParseError("edge endpoint out of range");
      }
      try {
        g.add_edge(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
      } catch (const std::exception& ex) {
        throw ParseError(ex.what());
      }
    }
  }
  return g;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  return j;
}

Graph parse_graph(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    try {
      return graph_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }
  return parse_graph_text(text);
}

}  // namespace stanley
