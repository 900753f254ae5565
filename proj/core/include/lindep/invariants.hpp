#pragma once

// Brute-force graph invariants. Every routine here is a generic algorithm
// over SimpleGraph: none of them knows about fields, dimensions or the
// block layout of the linear dependence graph.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lindep/graph.hpp"

namespace lindep::invariants {

// Exponential searches (clique, independence, chromatic, domination,
// maximal-clique enumeration) refuse graphs above this order by default.
inline constexpr std::size_t kDefaultSearchBound = 65;
inline constexpr std::size_t kIsomorphismBound = 32;

using VertexSet = std::vector<std::size_t>;
using Edge = std::pair<std::size_t, std::size_t>;

// Value plus a certificate vertex set (the clique, independent set,
// dominating set or separator that attains it).
struct SetResult {
  std::size_t value = 0;
  VertexSet witness;
};

struct ColoringResult {
  std::size_t colors = 0;
  // Colour of each vertex, in [0, colors).
  std::vector<std::size_t> assignment;
};

struct EdgeCutResult {
  std::size_t value = 0;
  std::vector<Edge> cut;
};

enum class Planarity { planar, nonplanar, unknown };
std::string_view to_string(Planarity p);

// Serializable summary of one oracle evaluation.
struct OracleResult {
  std::string name;
  std::variant<std::int64_t, bool, std::string> value;
  // "", "vertex_set", "coloring", "edge_cut", "cliques"
  std::string witness_kind;
  std::vector<std::vector<std::size_t>> witness;
};

std::size_t edge_count(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

// Largest BFS eccentricity; nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const SimpleGraph& g);

SetResult domination_number(const SimpleGraph& g,
                            std::size_t bound = kDefaultSearchBound);
SetResult independence_number(const SimpleGraph& g,
                              std::size_t bound = kDefaultSearchBound);
SetResult clique_number(const SimpleGraph& g,
                        std::size_t bound = kDefaultSearchBound);

// Bron-Kerbosch with pivoting. Each clique ascending; list sorted.
std::vector<VertexSet> maximal_cliques(const SimpleGraph& g,
                                       std::size_t bound = kDefaultSearchBound);

// Exact: tries k = omega, omega + 1, ... with DSATUR-ordered backtracking.
ColoringResult chromatic_number(const SimpleGraph& g,
                                std::size_t bound = kDefaultSearchBound);

// Connected with every degree even.
bool is_eulerian(const SimpleGraph& g);

// Minimum over t of the unit-capacity max flow from vertex 0 to t.
EdgeCutResult edge_connectivity(const SimpleGraph& g);

// Smallest separating vertex set, searched by size up to the minimum
// degree. Complete graphs report order - 1 with an empty witness.
SetResult vertex_connectivity(const SimpleGraph& g);

// Biconnected blocks (Tarjan), each ascending. Isolated vertices form
// singleton blocks.
std::vector<VertexSet> biconnected_blocks(const SimpleGraph& g);

// Planar iff every block is planar. Decides only when every block is a
// clique (K_m is planar iff m <= 4); otherwise unknown.
Planarity planarity_by_blocks(const SimpleGraph& g);

// Backtracking search with degree pruning. Throws CapacityError above
// `bound` vertices.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                    std::size_t bound = kIsomorphismBound);

// Certificate checks.
bool is_clique(const SimpleGraph& g, const VertexSet& s);
bool is_independent_set(const SimpleGraph& g, const VertexSet& s);
bool is_dominating_set(const SimpleGraph& g, const VertexSet& s);
bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& colors);
bool removal_disconnects(const SimpleGraph& g, const VertexSet& removed);
bool removal_disconnects(const SimpleGraph& g, const std::vector<Edge>& removed);

SimpleGraph complement(const SimpleGraph& g);

// Every oracle above, in a fixed order. Searches that exceed
// `search_bound` report the string value "skipped".
std::vector<OracleResult> evaluate_all(const SimpleGraph& g,
                                       std::size_t search_bound = kDefaultSearchBound);

// {"<name>": value, ..., "witnesses": {"<name>": {"kind": ..., "sets": [...]}}}
std::string to_json(const std::vector<OracleResult>& results);

}  // namespace lindep::invariants
