#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inertia {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Default ceiling on the order of any constructed graph (dense storage).
inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// Raised when a construction would exceed the configured maximum order.
class OrderOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when an input exceeds an algorithm's configured size limit
/// (cycle enumeration, isomorphism search).
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Simple undirected loop-free graph on vertices 0..n-1 with bit-packed rows.
/// Immutable once built; share freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order, std::size_t max_order = kDefaultMaxOrder);

  /// Builds from an edge list; duplicates are merged, loops rejected.
  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges,
                          std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return order_; }
  std::size_t size() const { return size_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::size_t degree(Vertex v) const;
  VertexSet neighbours(Vertex v) const;
  std::vector<std::size_t> degrees() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Row `v` of the adjacency bitset, `words()` 64-bit words long.
  const std::uint64_t* row(Vertex v) const { return rows_.data() + v * words_; }
  std::size_t words() const { return words_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Mutable staging area for a Graph; `build()` freezes it.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order, std::size_t max_order = kDefaultMaxOrder);

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  std::size_t order() const { return graph_.order_; }

  Graph build() &&;

 private:
  void set(Vertex u, Vertex v, bool on);

  Graph graph_;
};

/// Square integer matrix; symmetry is validated by the consumers that need it.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dimension)
      : dimension_(dimension), entries_(dimension * dimension) {}

  std::size_t dimension() const { return dimension_; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * dimension_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dimension_ + j];
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dimension_; ++i)
      for (std::size_t j = i + 1; j < dimension_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  const std::vector<T>& data() const { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<T> entries_;
};

using IntSymMatrix = SquareMatrix<std::int64_t>;

// Structural queries.

Graph complement(const Graph& g);

/// Induced subgraph together with the original index of each kept vertex.
struct Subgraph {
  Graph graph;
  VertexSet origin;
};

/// Keeps the listed vertices (deduplicated, relabelled in increasing original order).
Subgraph induced_subgraph_mapped(const Graph& g, VertexSet keep);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Removes the listed vertices.
Graph delete_vertices(const Graph& g, const VertexSet& drop);

/// Components ordered by least vertex, each sorted ascending.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Articulation points in increasing order.
VertexSet cut_vertices(const Graph& g);

bool is_tree(const Graph& g);

IntSymMatrix adjacency_matrix(const Graph& g);
IntSymMatrix laplacian_matrix(const Graph& g);
IntSymMatrix signless_laplacian_matrix(const Graph& g);

}  // namespace inertia
