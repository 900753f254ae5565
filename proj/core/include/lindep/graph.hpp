#pragma once

// The linear dependence graph of F_q^n in canonical block order, a generic
// dense simple-graph type, and the adjacency / Laplacian / distance
// matrices.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lindep/gf.hpp"
#include "lindep/vspace.hpp"

namespace lindep {

// Undirected simple graph on vertices 0..order-1 with dense adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t order);

  static SimpleGraph complete(std::size_t order);
  static SimpleGraph edgeless(std::size_t order) { return SimpleGraph(order); }

  std::size_t order() const { return order_; }
  std::size_t edge_count() const { return edges_; }

  // Ignores loops and repeated edges.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return adj_[u * order_ + v] != 0;
  }
  std::size_t degree(std::size_t v) const { return neighbours_[v].size(); }
  const std::vector<std::size_t>& neighbours(std::size_t v) const {
    return neighbours_[v];
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t order_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

namespace graph {

// Default bound on q^n for graph construction.
inline constexpr std::uint64_t kDefaultMaxVertices = 4096;

struct GraphMeta {
  // p, k, n are 0 for graphs not built from a vector space (windmills).
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  // Number of 1-dimensional subspaces, (q^n - 1) / (q - 1).
  std::uint64_t N = 0;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

// Vertex i of `adjacency` is the vector with index vertex_order[i]. The null
// vector comes first, followed by the subspace classes in representative
// order, each class in ascending vector index.
struct DepGraph {
  GraphMeta meta;
  std::vector<std::uint64_t> vertex_order;
  std::vector<std::vector<std::uint64_t>> classes;
  SimpleGraph adjacency;

  std::size_t num_vertices() const { return adjacency.order(); }
};

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order)
      : order_(order), entries_(order * order, 0) {}

  std::size_t order() const { return order_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * order_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::int64_t> entries_;
};

// Edges are the pairs accepted by vspace::is_dependent.
DepGraph build_graph(const gf::FieldSpec& spec, std::uint32_t n,
                     std::uint64_t max_vertices = kDefaultMaxVertices);

// Hub 0 joined to N disjoint cliques K_(q-1) laid out consecutively.
DepGraph build_windmill(std::uint64_t q, std::uint64_t N);

IntMatrix adjacency_matrix(const SimpleGraph& g);
IntMatrix laplacian_matrix(const SimpleGraph& g);
// BFS distances; throws DisconnectedGraphError.
IntMatrix distance_matrix(const SimpleGraph& g);

inline IntMatrix adjacency_matrix(const DepGraph& g) {
  return adjacency_matrix(g.adjacency);
}
inline IntMatrix laplacian_matrix(const DepGraph& g) {
  return laplacian_matrix(g.adjacency);
}
inline IntMatrix distance_matrix(const DepGraph& g) {
  return distance_matrix(g.adjacency);
}

// {"meta": {...}, "vertex_order": [...], "classes": [[...]], "edges": [[i,j]]}
std::string to_json(const DepGraph& g);
// Undirected DOT; node ids are canonical positions, labels are coordinates
// (the null vector is labelled "theta").
std::string to_dot(const DepGraph& g);
// First line "order,<n>", then one comma-separated row per matrix row.
std::string to_csv(const IntMatrix& m);

}  // namespace graph
}  // namespace lindep
