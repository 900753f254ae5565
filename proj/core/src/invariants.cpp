#include "lindep/invariants.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include <nlohmann/json.hpp>

#include "lindep/errors.hpp"

namespace lindep::invariants {

namespace {

void require_within(const SimpleGraph& g, std::size_t bound, const char* what) {
  if (g.order() > bound) {
    throw CapacityError(std::string(what) + ": " + std::to_string(g.order()) +
                        " vertices exceeds search bound " + std::to_string(bound));
  }
}

// Component label per vertex, skipping vertices with `skip[v]` set.
std::size_t count_components(const SimpleGraph& g, const std::vector<bool>& skip,
                             const std::vector<std::vector<bool>>* removed_edges) {
  std::vector<bool> seen(g.order(), false);
  std::size_t components = 0;
  std::deque<std::size_t> frontier;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (skip[s] || seen[s]) continue;
    ++components;
    seen[s] = true;
    frontier.assign(1, s);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      for (std::size_t v : g.neighbours(u)) {
        if (skip[v] || seen[v]) continue;
        if (removed_edges != nullptr && (*removed_edges)[u][v]) continue;
        seen[v] = true;
        frontier.push_back(v);
      }
    }
  }
  return components;
}

// Calls visit(subset) for every k-subset of [0, n) in lexicographic order
// until it returns true.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const VertexSet&)>& visit) {
  if (k > n) return false;
  VertexSet idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const SimpleGraph& g) : g_(g) {}

  VertexSet run() {
    VertexSet candidates(g_.order());
    std::iota(candidates.begin(), candidates.end(), 0);
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return g_.degree(a) > g_.degree(b);
    });
    VertexSet current;
    expand(current, candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential colouring of `p`; returns vertices reordered by colour
  // with the running colour count as an upper bound for each prefix.
  void colour_sort(const VertexSet& p, VertexSet& order, std::vector<std::size_t>& bounds) {
    std::vector<VertexSet> classes;
    for (std::size_t v : p) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        const bool clash = std::any_of(classes[c].begin(), classes[c].end(),
                                       [&](std::size_t u) { return g_.adjacent(u, v); });
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    order.clear();
    bounds.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t v : classes[c]) {
        order.push_back(v);
        bounds.push_back(c + 1);
      }
    }
  }

  void expand(VertexSet& current, const VertexSet& candidates) {
    VertexSet order;
    std::vector<std::size_t> bounds;
    colour_sort(candidates, order, bounds);
    VertexSet remaining = candidates;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bounds[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      VertexSet next;
      for (std::size_t u : remaining) {
        if (u != v && g_.adjacent(u, v)) next.push_back(u);
      }
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      remaining.erase(std::find(remaining.begin(), remaining.end(), v));
    }
  }

  const SimpleGraph& g_;
  VertexSet best_;
};

class ColouringSearch {
 public:
  ColouringSearch(const SimpleGraph& g, std::size_t k)
      : g_(g), k_(k), colour_(g.order(), kNone) {}

  bool run() { return extend(0); }
  const std::vector<std::size_t>& assignment() const { return colour_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t saturation(std::size_t v) const {
    std::vector<bool> used(k_, false);
    std::size_t count = 0;
    for (std::size_t u : g_.neighbours(v)) {
      const std::size_t c = colour_[u];
      if (c != kNone && !used[c]) {
        used[c] = true;
        ++count;
      }
    }
    return count;
  }

  bool extend(std::size_t coloured) {
    if (coloured == g_.order()) return true;
    std::size_t pick = kNone;
    std::size_t pick_sat = 0;
    for (std::size_t v = 0; v < g_.order(); ++v) {
      if (colour_[v] != kNone) continue;
      const std::size_t sat = saturation(v);
      if (pick == kNone || sat > pick_sat ||
          (sat == pick_sat && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    const std::size_t used = used_colours();
    // A fresh colour beyond the ones in use is interchangeable with any other.
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      const bool clash = std::any_of(g_.neighbours(pick).begin(), g_.neighbours(pick).end(),
                                     [&](std::size_t u) { return colour_[u] == c; });
      if (clash) continue;
      colour_[pick] = c;
      if (extend(coloured + 1)) return true;
      colour_[pick] = kNone;
    }
    return false;
  }

  std::size_t used_colours() const {
    std::size_t top = 0;
    for (std::size_t c : colour_) {
      if (c != kNone) top = std::max(top, c + 1);
    }
    return top;
  }

  const SimpleGraph& g_;
  std::size_t k_;
  std::vector<std::size_t> colour_;
};

// Unit-capacity max flow by BFS augmenting paths; `reachable` receives the
// source side of a minimum cut.
std::size_t max_flow(const SimpleGraph& g, std::size_t s, std::size_t t,
                     std::vector<bool>& reachable) {
  const std::size_t n = g.order();
  std::vector<int> residual(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : g.neighbours(u)) residual[u * n + v] = 1;
  }
  std::size_t flow = 0;
  std::vector<std::size_t> parent(n);
  while (true) {
    std::fill(parent.begin(), parent.end(), n);
    parent[s] = s;
    std::deque<std::size_t> frontier{s};
    while (!frontier.empty() && parent[t] == n) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == n && residual[u * n + v] > 0) {
          parent[v] = u;
          frontier.push_back(v);
        }
      }
    }
    if (parent[t] == n) break;
    for (std::size_t v = t; v != s; v = parent[v]) {
      const std::size_t u = parent[v];
      residual[u * n + v] -= 1;
      residual[v * n + u] += 1;
    }
    ++flow;
  }
  reachable.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) reachable[v] = parent[v] != n;
  return flow;
}

}  // namespace

std::string_view to_string(Planarity p) {
  switch (p) {
    case Planarity::planar:
      return "planar";
    case Planarity::nonplanar:
      return "nonplanar";
    case Planarity::unknown:
      return "unknown";
  }
  return "unknown";
}

std::size_t edge_count(const SimpleGraph& g) {
  std::size_t count = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) ++count;
    }
  }
  return count;
}

bool is_complete(const SimpleGraph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  return count_components(g, std::vector<bool>(g.order(), false), nullptr) == 1;
}

std::optional<std::size_t> diameter(const SimpleGraph& g) {
  std::size_t best = 0;
  std::vector<std::size_t> dist(g.order());
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<std::size_t> frontier{s};
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
    for (std::size_t d : dist) {
      if (d == kUnseen) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

SetResult domination_number(const SimpleGraph& g, std::size_t bound) {
  require_within(g, bound, "domination_number");
  if (g.order() == 0) return {};
  for (std::size_t size = 1; size <= g.order(); ++size) {
    SetResult result;
    const bool found = for_each_subset(g.order(), size, [&](const VertexSet& s) {
      if (!is_dominating_set(g, s)) return false;
      result = SetResult{size, s};
      return true;
    });
    if (found) return result;
  }
  return {};  // unreachable: the whole vertex set dominates
}

SetResult clique_number(const SimpleGraph& g, std::size_t bound) {
  require_within(g, bound, "clique_number");
  VertexSet best = MaxCliqueSearch(g).run();
  return SetResult{best.size(), best};
}

SetResult independence_number(const SimpleGraph& g, std::size_t bound) {
  require_within(g, bound, "independence_number");
  const SimpleGraph comp = complement(g);
  VertexSet best = MaxCliqueSearch(comp).run();
  return SetResult{best.size(), best};
}

std::vector<VertexSet> maximal_cliques(const SimpleGraph& g, std::size_t bound) {
  require_within(g, bound, "maximal_cliques");
  std::vector<VertexSet> out;
  VertexSet r;
  std::function<void(VertexSet, VertexSet)> recurse = [&](VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      VertexSet clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    // Pivot with the most neighbours in p.
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t pivot_hits = 0;
    for (const VertexSet* side : {&p, &x}) {
      for (std::size_t u : *side) {
        const auto hits = static_cast<std::size_t>(std::count_if(
            p.begin(), p.end(), [&](std::size_t v) { return g.adjacent(u, v); }));
        if (hits > pivot_hits) {
          pivot = u;
          pivot_hits = hits;
        }
      }
    }
    VertexSet branch;
    for (std::size_t v : p) {
      if (!g.adjacent(pivot, v)) branch.push_back(v);
    }
    for (std::size_t v : branch) {
      VertexSet p_next;
      VertexSet x_next;
      for (std::size_t u : p) {
        if (g.adjacent(u, v)) p_next.push_back(u);
      }
      for (std::size_t u : x) {
        if (g.adjacent(u, v)) x_next.push_back(u);
      }
      r.push_back(v);
      recurse(std::move(p_next), std::move(x_next));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  if (!all.empty()) recurse(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

ColoringResult chromatic_number(const SimpleGraph& g, std::size_t bound) {
  require_within(g, bound, "chromatic_number");
  if (g.order() == 0) return {};
  const std::size_t lower = std::max<std::size_t>(1, clique_number(g, bound).value);
  for (std::size_t k = lower; k <= g.order(); ++k) {
    ColouringSearch search(g, k);
    if (search.run()) return ColoringResult{k, search.assignment()};
  }
  return {};  // unreachable: order colours always suffice
}

bool is_eulerian(const SimpleGraph& g) {
  if (!is_connected(g)) return false;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

EdgeCutResult edge_connectivity(const SimpleGraph& g) {
  EdgeCutResult result;
  if (g.order() <= 1) return result;
  if (!is_connected(g)) return result;
  result.value = std::numeric_limits<std::size_t>::max();
  std::vector<bool> side;
  std::vector<bool> best_side;
  for (std::size_t t = 1; t < g.order(); ++t) {
    const std::size_t flow = max_flow(g, 0, t, side);
    if (flow < result.value) {
      result.value = flow;
      best_side = side;
    }
  }
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v : g.neighbours(u)) {
      if (best_side[u] && !best_side[v]) {
        result.cut.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  }
  std::sort(result.cut.begin(), result.cut.end());
  return result;
}

SetResult vertex_connectivity(const SimpleGraph& g) {
  if (is_complete(g)) {
    return SetResult{g.order() == 0 ? 0 : g.order() - 1, {}};
  }
  if (!is_connected(g)) return SetResult{0, {}};
  std::size_t min_degree = g.order();
  for (std::size_t v = 0; v < g.order(); ++v) min_degree = std::min(min_degree, g.degree(v));
  for (std::size_t size = 1; size <= min_degree; ++size) {
    SetResult result;
    const bool found = for_each_subset(g.order(), size, [&](const VertexSet& s) {
      if (!removal_disconnects(g, s)) return false;
      result = SetResult{size, s};
      return true;
    });
    if (found) return result;
  }
  // Non-complete connected graphs always have a separator of size <= min degree.
  return SetResult{min_degree, {}};
}

std::vector<VertexSet> biconnected_blocks(const SimpleGraph& g) {
  const std::size_t n = g.order();
  constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  std::size_t timer = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    disc[u] = low[u] = timer++;
    for (std::size_t v : g.neighbours(u)) {
      if (disc[v] == kUnvisited) {
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexSet block;
          while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, v}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (v != parent && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] != kUnvisited) continue;
    if (g.degree(v) == 0) {
      disc[v] = timer++;
      blocks.push_back({v});
      continue;
    }
    dfs(v, kUnvisited);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Planarity planarity_by_blocks(const SimpleGraph& g) {
  bool all_small = true;
  for (const auto& block : biconnected_blocks(g)) {
    if (!is_clique(g, block)) return Planarity::unknown;
    if (block.size() > 4) all_small = false;
  }
  return all_small ? Planarity::planar : Planarity::nonplanar;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, std::size_t bound) {
  if (a.order() > bound || b.order() > bound) {
    throw CapacityError("are_isomorphic: graphs above " + std::to_string(bound) +
                        " vertices are not searched");
  }
  const std::size_t n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> deg_a(n);
  std::vector<std::size_t> deg_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a;
    auto sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Visit order: BFS from the highest-degree vertex of each component so
  // every vertex after the first has an already-mapped neighbour.
  VertexSet order;
  std::vector<bool> queued(n, false);
  VertexSet by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t x, std::size_t y) { return deg_a[x] > deg_a[y]; });
  for (std::size_t root : by_degree) {
    if (queued[root]) continue;
    queued[root] = true;
    std::deque<std::size_t> frontier{root};
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      order.push_back(u);
      for (std::size_t v : a.neighbours(u)) {
        if (!queued[v]) {
          queued[v] = true;
          frontier.push_back(v);
        }
      }
    }
  }

  constexpr auto kUnmapped = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> map(n, kUnmapped);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t u = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || deg_b[w] != deg_a[u]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const std::size_t prev = order[i];
        consistent = a.adjacent(u, prev) == b.adjacent(w, map[prev]);
      }
      if (!consistent) continue;
      map[u] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      map[u] = kUnmapped;
    }
    return false;
  };
  return extend(0);
}

bool is_clique(const SimpleGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent_set(const SimpleGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_dominating_set(const SimpleGraph& g, const VertexSet& s) {
  std::vector<bool> covered(g.order(), false);
  for (std::size_t v : s) {
    covered[v] = true;
    for (std::size_t u : g.neighbours(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v : g.neighbours(u)) {
      if (colors[u] == colors[v]) return false;
    }
  }
  return true;
}

bool removal_disconnects(const SimpleGraph& g, const VertexSet& removed) {
  std::vector<bool> skip(g.order(), false);
  for (std::size_t v : removed) skip[v] = true;
  return count_components(g, skip, nullptr) > 1;
}

bool removal_disconnects(const SimpleGraph& g, const std::vector<Edge>& removed) {
  std::vector<std::vector<bool>> cut(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [u, v] : removed) {
    cut[u][v] = true;
    cut[v][u] = true;
  }
  return count_components(g, std::vector<bool>(g.order(), false), &cut) > 1;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<OracleResult> evaluate_all(const SimpleGraph& g, std::size_t search_bound) {
  std::vector<OracleResult> out;
  const bool searchable = g.order() <= search_bound;
  const auto skipped = [&](const char* name) {
    out.push_back(OracleResult{name, std::string("skipped"), "", {}});
  };

  out.push_back(OracleResult{"m", static_cast<std::int64_t>(edge_count(g)), "", {}});
  out.push_back(OracleResult{"complete", is_complete(g), "", {}});
  if (const auto d = diameter(g)) {
    out.push_back(OracleResult{"diameter", static_cast<std::int64_t>(*d), "", {}});
  } else {
    out.push_back(OracleResult{"diameter", std::string("infinite"), "", {}});
  }
  if (searchable) {
    const auto dom = domination_number(g, search_bound);
    out.push_back(OracleResult{"domination", static_cast<std::int64_t>(dom.value),
                               "vertex_set", {dom.witness}});
    const auto ind = independence_number(g, search_bound);
    out.push_back(OracleResult{"independence", static_cast<std::int64_t>(ind.value),
                               "vertex_set", {ind.witness}});
    const auto omega = clique_number(g, search_bound);
    out.push_back(OracleResult{"omega", static_cast<std::int64_t>(omega.value),
                               "vertex_set", {omega.witness}});
    const auto cliques = maximal_cliques(g, search_bound);
    out.push_back(OracleResult{"maximal_cliques", static_cast<std::int64_t>(cliques.size()),
                               "cliques", cliques});
    const auto chi = chromatic_number(g, search_bound);
    out.push_back(OracleResult{"chi", static_cast<std::int64_t>(chi.colors),
                               "coloring", {chi.assignment}});
  } else {
    for (const char* name : {"domination", "independence", "omega", "maximal_cliques", "chi"}) {
      skipped(name);
    }
  }
  out.push_back(OracleResult{"eulerian", is_eulerian(g), "", {}});
  const auto lambda = edge_connectivity(g);
  std::vector<std::vector<std::size_t>> cut;
  for (const auto& [u, v] : lambda.cut) cut.push_back({u, v});
  out.push_back(OracleResult{"edge_connectivity", static_cast<std::int64_t>(lambda.value),
                             "edge_cut", std::move(cut)});
  const auto kappa = vertex_connectivity(g);
  out.push_back(OracleResult{"vertex_connectivity", static_cast<std::int64_t>(kappa.value),
                             "vertex_set", {kappa.witness}});
  out.push_back(OracleResult{"planarity", std::string(to_string(planarity_by_blocks(g))),
                             "", {}});
  return out;
}

std::string to_json(const std::vector<OracleResult>& results) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  for (const auto& r : results) {
    std::visit([&](const auto& v) { j[r.name] = v; }, r.value);
    if (!r.witness_kind.empty()) {
      witnesses[r.name] = {{"kind", r.witness_kind}, {"sets", r.witness}};
    }
  }
  j["witnesses"] = std::move(witnesses);
  return j.dump();
}

}  // namespace lindep::invariants
