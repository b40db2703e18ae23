#include "inertia/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace inertia {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::size_t checked_order(std::size_t a, std::size_t b, std::size_t extra = 0) {
  if (a > kDefaultMaxOrder || b > kDefaultMaxOrder || a + b + extra > kDefaultMaxOrder)
    throw OrderOverflow("combined order " + std::to_string(a + b + extra) +
                        " exceeds maximum " + std::to_string(kDefaultMaxOrder));
  return a + b + extra;
}

// Figure-style fixture edge lists on 9 vertices.
constexpr Edge kH1Edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {4, 7}, {6, 7},
                             {7, 8}, {1, 7}, {3, 6}, {0, 6}, {6, 8}, {5, 8}, {2, 8}};
constexpr Edge kH2Edges[] = {{0, 1}, {1, 6}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {5, 7},
                             {5, 8}, {6, 8}, {3, 6}, {0, 4}, {0, 7}, {6, 7}, {3, 7}, {4, 8}};

}  // namespace

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  GraphBuilder b(edges.size());
  std::vector<std::vector<std::size_t>> incident(g.order());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  for (const auto& at : incident)
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) b.add_edge(at[i], at[j]);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(checked_order(g.order(), h.order()));
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b(checked_order(g.order(), h.order()));
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
  return std::move(b).build();
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  if (g.order() != 0 && m > kDefaultMaxOrder / g.order())
    throw OrderOverflow("tensor product order exceeds maximum " +
                        std::to_string(kDefaultMaxOrder));
  GraphBuilder b(g.order() * m);
  const auto ge = g.edges();
  const auto he = h.edges();
  for (auto [u1, u2] : ge)
    for (auto [v1, v2] : he) {
      b.add_edge(u1 * m + v1, u2 * m + v2);
      b.add_edge(u1 * m + v2, u2 * m + v1);
    }
  return std::move(b).build();
}

Graph kotlov_lovasz_double(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(checked_order(n, n, 2));
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(n + u, n + v);
    b.add_edge(u, n + v);
    b.add_edge(v, n + u);
  }
  const Vertex x = 2 * n, y = 2 * n + 1;
  for (Vertex v = 0; v < n; ++v) b.add_edge(x, n + v);
  b.add_edge(x, y);
  return std::move(b).build();
}

Graph add_twin(const Graph& g, Vertex v, bool closed) {
  if (v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  const std::size_t n = g.order();
  GraphBuilder b(checked_order(n, 0, 1));
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  for (Vertex w : g.neighbours(v)) b.add_edge(n, w);
  if (closed) b.add_edge(n, v);
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  const std::size_t parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::size_t n = 0;
  for (std::size_t p : parts) n = checked_order(n, p);
  GraphBuilder b(n);
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph triangular_graph(std::size_t n) { return line_graph(complete_graph(n)); }

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph paley_graph(std::size_t q) {
  require(is_prime(q), "paley order " + std::to_string(q) + " must be prime");
  require(q % 4 == 1, "paley order " + std::to_string(q) + " must be 1 mod 4");
  std::vector<bool> residue(q, false);
  for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = true;
  GraphBuilder b(q);
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (residue[v - u]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph petersen_graph() { return complement(triangular_graph(5)); }

Graph h1_graph() {
  return Graph::from_edges(9, std::vector<Edge>(std::begin(kH1Edges), std::end(kH1Edges)));
}

Graph h2_graph() {
  return Graph::from_edges(9, std::vector<Edge>(std::begin(kH2Edges), std::end(kH2Edges)));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "path",     "cycle",      "complete", "empty",    "complete_bipartite",
      "complete_multipartite", "star", "triangular", "paley", "petersen", "H1", "H2"};
  return names;
}

Graph family(std::string_view name, std::span<const std::size_t> params) {
  auto arity = [&](std::size_t count) {
    require(params.size() == count, std::string(name) + " takes " + std::to_string(count) +
                                        " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "path") return arity(1), path_graph(params[0]);
  if (name == "cycle") return arity(1), cycle_graph(params[0]);
  if (name == "complete") return arity(1), complete_graph(params[0]);
  if (name == "empty") return arity(1), empty_graph(params[0]);
  if (name == "complete_bipartite") return arity(2), complete_bipartite(params[0], params[1]);
  if (name == "complete_multipartite") {
    require(!params.empty(), "complete_multipartite needs at least one part size");
    return complete_multipartite(params);
  }
  if (name == "star") return arity(1), star_graph(params[0]);
  if (name == "triangular") return arity(1), triangular_graph(params[0]);
  if (name == "paley") return arity(1), paley_graph(params[0]);
  if (name == "petersen") return arity(0), petersen_graph();
  if (name == "H1") return arity(0), h1_graph();
  if (name == "H2") return arity(0), h2_graph();
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace inertia
