#include <sstream>

#include <nlohmann/json.hpp>

#include "lindep/graph.hpp"

namespace lindep::graph {

namespace {

// Coordinates as field-element encodings, e.g. "(1,0,2)".
std::string vertex_label(const DepGraph& g, std::size_t position) {
  const std::uint64_t index = g.vertex_order[position];
  if (index == 0) return "theta";
  if (g.meta.n == 0) return std::to_string(index);
  std::ostringstream os;
  os << '(';
  std::uint64_t rest = index;
  for (std::uint32_t i = 0; i < g.meta.n; ++i) {
    if (i > 0) os << ',';
    os << rest % g.meta.q;
    rest /= g.meta.q;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string to_json(const DepGraph& g) {
  nlohmann::ordered_json j;
  j["meta"] = {{"p", g.meta.p}, {"k", g.meta.k}, {"n", g.meta.n},
               {"q", g.meta.q}, {"N", g.meta.N}};
  j["vertex_order"] = g.vertex_order;
  j["classes"] = g.classes;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < g.num_vertices(); ++v) {
      if (g.adjacency.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

std::string to_dot(const DepGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << " [label=\"" << vertex_label(g, v) << "\"];\n";
  }
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < g.num_vertices(); ++v) {
      if (g.adjacency.adjacent(u, v)) os << "  " << u << " -- " << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_csv(const IntMatrix& m) {
  std::ostringstream os;
  os << "order," << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j > 0) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace lindep::graph
