#include "lindep/graph.hpp"

#include <deque>
#include <limits>

#include "lindep/errors.hpp"

namespace lindep {

SimpleGraph::SimpleGraph(std::size_t order)
    : order_(order), adj_(order * order, 0), neighbours_(order) {}

SimpleGraph SimpleGraph::complete(std::size_t order) {
  SimpleGraph g(order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = u + 1; v < order; ++v) g.add_edge(u, v);
  }
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || adjacent(u, v)) return;
  adj_[u * order_ + v] = 1;
  adj_[v * order_ + u] = 1;
  neighbours_[u].push_back(v);
  neighbours_[v].push_back(u);
  ++edges_;
}

namespace graph {

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

DepGraph build_graph(const gf::FieldSpec& spec, std::uint32_t n,
                     std::uint64_t max_vertices) {
  const auto vectors = vspace::enumerate_vectors(spec, n, max_vertices);
  auto partition = vspace::partition_subspaces(vectors, spec);

  DepGraph g;
  g.meta = GraphMeta{spec.p, spec.k, n, spec.q, partition.size()};
  g.vertex_order.reserve(vectors.size());
  g.vertex_order.push_back(0);
  for (const auto& cls : partition.classes) {
    g.vertex_order.insert(g.vertex_order.end(), cls.begin(), cls.end());
  }
  g.classes = std::move(partition.classes);

  std::vector<std::size_t> position(vectors.size());
  for (std::size_t i = 0; i < g.vertex_order.size(); ++i) {
    position[g.vertex_order[i]] = i;
  }

  g.adjacency = SimpleGraph(vectors.size());
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = a + 1; b < vectors.size(); ++b) {
      if (vspace::is_dependent(vectors[a], vectors[b], spec)) {
        g.adjacency.add_edge(position[a], position[b]);
      }
    }
  }
  return g;
}

DepGraph build_windmill(std::uint64_t q, std::uint64_t N) {
  if (q < 2 || N < 1) throw std::invalid_argument("windmill needs q >= 2, N >= 1");
  const std::uint64_t block = q - 1;
  const std::uint64_t order = 1 + N * block;

  DepGraph g;
  g.meta = GraphMeta{0, 0, 0, q, N};
  g.adjacency = SimpleGraph(order);
  g.vertex_order.resize(order);
  for (std::uint64_t v = 0; v < order; ++v) g.vertex_order[v] = v;
  for (std::uint64_t v = 1; v < order; ++v) g.adjacency.add_edge(0, v);
  for (std::uint64_t b = 0; b < N; ++b) {
    const std::uint64_t first = 1 + b * block;
    std::vector<std::uint64_t> cls;
    for (std::uint64_t u = first; u < first + block; ++u) {
      cls.push_back(u);
      for (std::uint64_t v = u + 1; v < first + block; ++v) {
        g.adjacency.add_edge(u, v);
      }
    }
    g.classes.push_back(std::move(cls));
  }
  return g;
}

IntMatrix adjacency_matrix(const SimpleGraph& g) {
  IntMatrix m(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v : g.neighbours(u)) m(u, v) = 1;
  }
  return m;
}

IntMatrix laplacian_matrix(const SimpleGraph& g) {
  IntMatrix m(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    m(u, u) = static_cast<std::int64_t>(g.degree(u));
    for (std::size_t v : g.neighbours(u)) m(u, v) = -1;
  }
  return m;
}

IntMatrix distance_matrix(const SimpleGraph& g) {
  constexpr auto kUnseen = std::numeric_limits<std::int64_t>::max();
  const std::size_t order = g.order();
  IntMatrix m(order);
  std::vector<std::int64_t> dist(order);
  std::deque<std::size_t> frontier;
  for (std::size_t src = 0; src < order; ++src) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[src] = 0;
    frontier.assign(1, src);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      for (std::size_t v : g.neighbours(u)) {
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          frontier.push_back(v);
        }
      }
    }
    for (std::size_t v = 0; v < order; ++v) {
      if (dist[v] == kUnseen) {
        throw DisconnectedGraphError("graph is disconnected: vertices " +
                                     std::to_string(src) + " and " +
                                     std::to_string(v) + " are at infinite distance");
      }
      m(src, v) = dist[v];
    }
  }
  return m;
}

}  // namespace graph
}  // namespace lindep
