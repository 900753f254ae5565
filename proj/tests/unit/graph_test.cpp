#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "lindep/errors.hpp"
#include "lindep/graph.hpp"

using namespace lindep;
using gf::FieldSpec;

namespace {

graph::DepGraph g_of(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  return graph::build_graph(FieldSpec::make(p, k), n);
}

}  // namespace

TEST(BuildGraph, Examples) {
  const auto k2 = g_of(2, 1, 1);
  EXPECT_EQ(k2.adjacency, SimpleGraph::complete(2));

  const auto star = g_of(2, 1, 2);
  SimpleGraph k13(4);
  for (std::size_t v = 1; v < 4; ++v) k13.add_edge(0, v);
  EXPECT_EQ(star.adjacency, k13);

  const auto fr = g_of(3, 1, 2);
  EXPECT_EQ(fr.num_vertices(), 9u);
  EXPECT_EQ(fr.adjacency.edge_count(), 12u);
  EXPECT_EQ(fr.meta.N, 4u);
  EXPECT_EQ(fr.vertex_order.front(), 0u);
}

TEST(BuildGraph, WindmillStructureOnGrid) {
  for (auto [p, k, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 1}, {2, 1, 5}, {2, 1, 7}, {3, 1, 4}, {2, 2, 3}, {5, 1, 3}, {7, 1, 2},
           {2, 3, 2}, {3, 2, 1}, {11, 1, 2}, {3, 2, 2}}) {
    const auto g = g_of(p, k, n);
    const auto q = g.meta.q;
    const auto nv = g.num_vertices();
    const auto w = graph::build_windmill(q, g.meta.N);
    EXPECT_EQ(g.adjacency, w.adjacency) << p << "," << k << "," << n;
    EXPECT_EQ(g.adjacency.degree(0), nv - 1);
    for (std::size_t v = 1; v < nv; ++v) EXPECT_EQ(g.adjacency.degree(v), q - 1);
    EXPECT_EQ(2 * g.adjacency.edge_count(), q * (nv - 1));
    // Block i occupies [1 + i(q-1), 1 + (i+1)(q-1)).
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
      for (std::size_t a = 0; a < q - 1; ++a)
        for (std::size_t b = 0; b < q - 1; ++b)
          if (a != b) EXPECT_TRUE(g.adjacency.adjacent(1 + i * (q - 1) + a, 1 + i * (q - 1) + b));
    }
    // vertex_order is a permutation of the vector indices.
    auto order = g.vertex_order;
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < nv; ++i) EXPECT_EQ(order[i], i);
  }
}

TEST(BuildGraph, Capacity) {
  EXPECT_THROW(graph::build_graph(FieldSpec::make(2, 1), 8, 100), CapacityError);
  EXPECT_NO_THROW(graph::build_graph(FieldSpec::make(2, 1), 8, 256));
}

TEST(Windmill, Examples) {
  const auto w = graph::build_windmill(4, 5);
  EXPECT_EQ(w.num_vertices(), 16u);
  EXPECT_EQ(w.adjacency.degree(0), 15u);
  for (std::size_t v = 1; v < 16; ++v) EXPECT_EQ(w.adjacency.degree(v), 3u);
  EXPECT_EQ(graph::build_windmill(3, 1).adjacency, SimpleGraph::complete(3));
  EXPECT_EQ(graph::build_windmill(2, 3).adjacency.edge_count(), 3u);
}

TEST(Matrices, Examples) {
  const auto k2 = g_of(2, 1, 1);
  const auto a = graph::adjacency_matrix(k2);
  EXPECT_EQ(a(0, 1), 1);
  EXPECT_EQ(a(0, 0), 0);
  const auto l = graph::laplacian_matrix(k2);
  EXPECT_EQ(l(0, 0), 1);
  EXPECT_EQ(l(0, 1), -1);

  const auto star = g_of(2, 1, 2);
  const auto ls = graph::laplacian_matrix(star);
  EXPECT_EQ(ls(0, 0), 3);
  for (std::size_t v = 1; v < 4; ++v) EXPECT_EQ(ls(v, v), 1);
  const auto ds = graph::distance_matrix(star);
  EXPECT_EQ(ds(1, 2), 2);
  EXPECT_EQ(ds(0, 3), 1);

  const auto k3 = graph::adjacency_matrix(g_of(3, 1, 1));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k3(i, j), i == j ? 0 : 1);

  EXPECT_EQ(graph::laplacian_matrix(g_of(3, 1, 2))(0, 0), 8);
}

TEST(Matrices, Properties) {
  for (auto [p, k, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {3, 2, 1}}) {
    const auto g = g_of(p, k, n);
    const auto a = graph::adjacency_matrix(g);
    const auto l = graph::laplacian_matrix(g);
    const auto d = graph::distance_matrix(g);
    EXPECT_TRUE(a.is_symmetric());
    EXPECT_TRUE(l.is_symmetric());
    EXPECT_TRUE(d.is_symmetric());
    const std::size_t nv = g.num_vertices();
    for (std::size_t i = 0; i < nv; ++i) {
      std::int64_t row = 0;
      for (std::size_t j = 0; j < nv; ++j) {
        row += l(i, j);
        if (i != j) EXPECT_EQ(l(i, j), -a(i, j));
        EXPECT_TRUE(d(i, j) >= 0 && d(i, j) <= 2);
        EXPECT_EQ(d(i, j) == 0, i == j);
        if (a(i, j)) EXPECT_EQ(d(i, j), 1);
      }
      EXPECT_EQ(row, 0);
      EXPECT_EQ(l(i, i), static_cast<std::int64_t>(g.adjacency.degree(i)));
    }
  }
}

TEST(Matrices, DisconnectedDistance) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(graph::distance_matrix(g), DisconnectedGraphError);
}

TEST(Export, Json) {
  const auto g = g_of(2, 2, 1);
  const auto j = nlohmann::json::parse(graph::to_json(g));
  EXPECT_EQ(j["meta"]["q"], 4);
  EXPECT_EQ(j["meta"]["N"], 1);
  EXPECT_EQ(j["vertex_order"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 6u);
  for (const auto& e : j["edges"]) EXPECT_LT(e[0].get<int>(), e[1].get<int>());
}

TEST(Export, DotAndCsv) {
  const auto g = g_of(3, 1, 2);
  const auto dot = graph::to_dot(g);
  EXPECT_NE(dot.find("theta"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(edges, 12u);
  const auto csv = graph::to_csv(graph::adjacency_matrix(graph::build_graph(FieldSpec::make(2, 1), 1)));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "order,2");
  EXPECT_NE(csv.find("0,1"), std::string::npos);
}
