#include "penner/graph.hpp"

#include <algorithm>
#include <sstream>

#include "penner/error.hpp"

namespace penner {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) fail(ErrorCode::invalid_parameter, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    fail(ErrorCode::invalid_parameter, "edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
  if (u == v) fail(ErrorCode::invalid_parameter, "loops are not allowed (vertex " + std::to_string(u) + ")");
  if (has_edge(u, v)) fail(ErrorCode::invalid_parameter, "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  auto insert_sorted = [](std::vector<int>& list, int x) { list.insert(std::lower_bound(list.begin(), list.end(), x), x); };
  insert_sorted(adjacency_[static_cast<std::size_t>(u)], v);
  insert_sorted(adjacency_[static_cast<std::size_t>(v)], u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  const int n = vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != -1) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        int& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Matrix<int> Graph::adjacency() const {
  Matrix<int> a = Matrix<int>::Zero(vertex_count(), vertex_count());
  for (const auto& [u, v] : edges()) a(u, v) = a(v, u) = 1;
  return a;
}

std::string Graph::to_string() const {
  std::ostringstream out;
  out << vertex_count() << ":";
  for (const auto& [u, v] : edges()) out << " " << u << "-" << v;
  return out.str();
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorCode::invalid_parameter, "a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace penner
