#include "inertia/generators.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace inertia {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++k)
      if ((mask >> k) & 1U) b.add_edge(u, v);
  return std::move(b).build();
}

void for_each_labeled_graph(std::size_t n,
                            const std::function<void(const Graph&, std::uint64_t)>& visit) {
  const std::size_t pairs = n * (n - (n > 0)) / 2;
  if (pairs >= 64) throw std::invalid_argument("labeled enumeration limited to order 11");
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_mask(n, mask), mask);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

Graph random_graph(std::size_t n, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() >> 63) b.add_edge(u, v);
  return std::move(b).build();
}

Graph tree_from_prufer(std::size_t n, const std::vector<Vertex>& code) {
  if (n == 0) return Graph(0);
  if (code.size() + 2 != n && !(n == 1 && code.empty()))
    throw std::invalid_argument("Prufer sequence must have length n-2");
  GraphBuilder b(n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) {
    if (c >= n) throw std::invalid_argument("Prufer entry out of range");
    ++degree[c];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    b.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  if (n >= 2) {
    const Vertex u = leaves.top();
    leaves.pop();
    b.add_edge(u, leaves.top());
  }
  return std::move(b).build();
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n <= 2) {
    visit(tree_from_prufer(n, {}));
    return;
  }
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    visit(tree_from_prufer(n, code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) return;
  }
}

Graph random_connected_graph(std::size_t n, std::size_t extra, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_connected_graph: empty order");
  std::vector<Vertex> code(n >= 2 ? n - 2 : 0);
  for (auto& c : code) c = static_cast<Vertex>(uniform_below(rng, n));
  const Graph tree = tree_from_prufer(n, code);
  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v)) missing.push_back({u, v});
  if (extra > missing.size()) throw std::invalid_argument("random_connected_graph: too many edges");
  GraphBuilder b(n);
  for (const auto& [u, v] : tree.edges()) b.add_edge(u, v);
  // Partial Fisher-Yates: the first `extra` slots become a uniform sample.
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + uniform_below(rng, missing.size() - i);
    std::swap(missing[i], missing[j]);
    b.add_edge(missing[i].first, missing[i].second);
  }
  return std::move(b).build();
}

}  // namespace inertia
