#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penner/exact.hpp"

namespace penner {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws `invalid_parameter` on loops, repeated edges or bad endpoints.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count_ == vertex_count() - 1; }
  /// Two-colouring with the lowest vertex of each component coloured 0.
  std::optional<std::vector<int>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  Matrix<int> adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

  /// Compact form like "4: 0-1 1-2 2-3 3-0".
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
};

Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace penner
