#include "inertia/graph.hpp"
#include "inertia/bigint.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace inertia {

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

Graph::Graph(std::size_t order, std::size_t max_order) {
  if (order > max_order)
    throw OrderOverflow("graph order " + std::to_string(order) + " exceeds maximum " +
                        std::to_string(max_order));
  order_ = order;
  words_ = (order + 63) / 64;
  rows_.assign(order * words_, 0);
}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges,
                        std::size_t max_order) {
  GraphBuilder builder(order, max_order);
  for (auto [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

VertexSet Graph::neighbours(Vertex v) const {
  VertexSet out;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order_);
  for (Vertex v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t order, std::size_t max_order)
    : graph_(order, max_order) {}

void GraphBuilder::set(Vertex u, Vertex v, bool on) {
  const std::size_t n = graph_.order_;
  if (u >= n || v >= n)
    throw std::out_of_range("edge endpoint out of range for order " + std::to_string(n));
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (graph_.adjacent(u, v) == on) return;
  auto flip = [&](Vertex a, Vertex b) {
    graph_.rows_[a * graph_.words_ + (b >> 6)] ^= std::uint64_t{1} << (b & 63);
  };
  flip(u, v);
  flip(v, u);
  if (on)
    ++graph_.size_;
  else
    --graph_.size_;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) { set(u, v, true); }
void GraphBuilder::remove_edge(Vertex u, Vertex v) { set(u, v, false); }

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n, std::max(n, kDefaultMaxOrder));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Subgraph induced_subgraph_mapped(const Graph& g, VertexSet keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= g.order())
    throw std::out_of_range("vertex " + std::to_string(keep.back()) +
                            " out of range for order " + std::to_string(g.order()));
  GraphBuilder b(keep.size(), std::max(keep.size(), kDefaultMaxOrder));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(i, j);
  return {std::move(b).build(), std::move(keep)};
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  return induced_subgraph_mapped(g, keep).graph;
}

Graph delete_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : drop) {
    if (v >= g.order())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    gone[v] = true;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbours(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet cut_vertices(const Graph& g) {
  // Iterative Hopcroft–Tarjan low-link.
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen);
  std::vector<bool> cut(n, false);
  std::vector<VertexSet> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbours(v);
  std::size_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::size_t root_children = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        Vertex w = adj[v][next++];
        if (disc[w] == kUnseen) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.emplace_back(w, 0);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        Vertex done = v;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().first;
          low[p] = std::min(low[p], low[done]);
          if (p != root && low[done] >= disc[p]) cut[p] = true;
        }
      }
    }
    if (root_children > 1) cut[root] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

IntSymMatrix adjacency_matrix(const Graph& g) {
  IntSymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntSymMatrix laplacian_matrix(const Graph& g) {
  IntSymMatrix l(g.order());
  for (auto [u, v] : g.edges()) l(u, v) = l(v, u) = -1;
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<std::int64_t>(g.degree(v));
  return l;
}

IntSymMatrix signless_laplacian_matrix(const Graph& g) {
  IntSymMatrix q = adjacency_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) q(v, v) = static_cast<std::int64_t>(g.degree(v));
  return q;
}

}  // namespace inertia
