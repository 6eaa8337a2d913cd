#include "fairdiv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

AgentGraph::AgentGraph(int n, std::span<const Edge> edges) {
  if (n < 0) throw FairDivError(Errc::kInvalidArgument, "negative node count");
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw FairDivError(Errc::kInvalidArgument,
                         "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    if (i == j) throw FairDivError(Errc::kInvalidArgument, "self-loop at " + std::to_string(i));
    out_[i].push_back(j);
    in_[j].push_back(i);
  }
  for (auto& v : out_) sort_unique(v);
  for (auto& v : in_) sort_unique(v);
}

AgentGraph AgentGraph::undirected(int n, std::span<const Edge> edges) {
  std::vector<Edge> both;
  both.reserve(edges.size() * 2);
  for (const auto& [i, j] : edges) {
    both.emplace_back(i, j);
    both.emplace_back(j, i);
  }
  return AgentGraph(n, both);
}

bool AgentGraph::has_edge(int i, int j) const {
  return std::binary_search(out_[i].begin(), out_[i].end(), j);
}

std::vector<Edge> AgentGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n(); ++i) {
    for (int j : out_[i]) out.emplace_back(i, j);
  }
  return out;
}

std::size_t AgentGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& v : out_) m += v.size();
  return m;
}

bool AgentGraph::is_symmetric() const {
  for (int i = 0; i < n(); ++i) {
    for (int j : out_[i]) {
      if (!has_edge(j, i)) return false;
    }
  }
  return true;
}

std::vector<int> AgentGraph::undirected_neighbors(int i) const {
  std::vector<int> out;
  std::set_union(out_[i].begin(), out_[i].end(), in_[i].begin(), in_[i].end(),
                 std::back_inserter(out));
  return out;
}

AgentGraph AgentGraph::without_node(int c) const {
  std::vector<Edge> kept;
  for (const auto& e : edges()) {
    if (e.first != c && e.second != c) kept.push_back(e);
  }
  return AgentGraph(n(), kept);
}

AgentGraph AgentGraph::induced(std::span<const int> nodes) const {
  std::vector<int> local(static_cast<std::size_t>(n()), -1);
  for (std::size_t r = 0; r < nodes.size(); ++r) local[nodes[r]] = static_cast<int>(r);
  std::vector<Edge> kept;
  for (int u : nodes) {
    for (int v : out_[u]) {
      if (local[v] >= 0) kept.emplace_back(local[u], local[v]);
    }
  }
  return AgentGraph(static_cast<int>(nodes.size()), kept);
}

bool AgentGraph::is_subgraph_of(const AgentGraph& other) const {
  if (n() != other.n()) return false;
  for (int i = 0; i < n(); ++i) {
    if (!std::includes(other.out_[i].begin(), other.out_[i].end(), out_[i].begin(), out_[i].end())) {
      return false;
    }
  }
  return true;
}

std::vector<int> topological_sort(const AgentGraph& g) {
  const int n = g.n();
  std::vector<int> indeg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) indeg[i] = static_cast<int>(g.in_neighbors(i).size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : g.out_neighbors(u)) {
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Every unsorted node keeps an unsorted predecessor; walking predecessors
  // must revisit a node.
  int start = 0;
  while (indeg[start] == 0) ++start;
  std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
  std::vector<int> walk;
  int u = start;
  while (seen_at[u] < 0) {
    seen_at[u] = static_cast<int>(walk.size());
    walk.push_back(u);
    for (int p : g.in_neighbors(u)) {
      if (indeg[p] > 0) {
        u = p;
        break;
      }
    }
  }
  std::vector<int> cycle(walk.begin() + seen_at[u], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  // Rotate so the smallest node leads; the order stays a forward cycle.
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  throw CycleFound(std::move(cycle));
}

bool is_acyclic(const AgentGraph& g) {
  try {
    topological_sort(g);
    return true;
  } catch (const CycleFound&) {
    return false;
  }
}

std::optional<int> cone_apex(const AgentGraph& g) {
  for (int c = 0; c < g.n(); ++c) {
    if (is_acyclic(g.without_node(c))) return c;
  }
  return std::nullopt;
}

bool is_pseudoforest(const AgentGraph& g) {
  for (int i = 0; i < g.n(); ++i) {
    if (g.out_degree(i) > 1) return false;
  }
  return true;
}

PseudoforestBreak pseudoforest_break(const AgentGraph& g) {
  if (!is_pseudoforest(g)) throw FairDivError(Errc::kNotPseudoforest, "some node has out-degree above 1");
  PseudoforestBreak out;
  std::vector<Edge> removed;
  for (auto& nodes : weak_components(g)) {
    PseudoforestComponent comp;
    std::size_t edge_count = 0;
    for (int u : nodes) edge_count += g.out_neighbors(u).size();
    if (edge_count == nodes.size()) {
      // Exactly one cycle; following out-edges from any node reaches it.
      std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
      int u = nodes.front();
      while (!seen[u]) {
        seen[u] = true;
        u = g.out_neighbors(u).front();
      }
      int tail = u;
      for (int w = g.out_neighbors(u).front(); w != u; w = g.out_neighbors(w).front()) {
        tail = std::min(tail, w);
      }
      const Edge e{tail, g.out_neighbors(tail).front()};
      comp.apex = tail;
      comp.removed_edge = e;
      removed.push_back(e);
    } else {
      comp.apex = nodes.front();
      for (int u : nodes) {
        if (g.in_neighbors(u).empty()) {
          comp.apex = u;
          break;
        }
      }
    }
    comp.nodes = std::move(nodes);
    out.components.push_back(std::move(comp));
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  }
  out.graph = AgentGraph(g.n(), kept);
  return out;
}

AgentGraph complement(const AgentGraph& g) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (i != j && !g.has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  return AgentGraph(g.n(), edges);
}

std::vector<std::vector<int>> weak_components(const AgentGraph& g) {
  const int n = g.n();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (const auto* nbrs : {&g.out_neighbors(u), &g.in_neighbors(u)}) {
        for (int v : *nbrs) {
          if (comp[v] < 0) {
            comp[v] = id;
            stack.push_back(v);
          }
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_weakly_connected(const AgentGraph& g) { return weak_components(g).size() <= 1; }

SpanningTree spanning_tree(const AgentGraph& g, int root) {
  const int n = g.n();
  if (n == 0) throw FairDivError(Errc::kInvalidArgument, "empty graph has no spanning tree");
  SpanningTree t;
  t.root = root;
  t.parent.assign(static_cast<std::size_t>(n), -2);
  t.children.assign(static_cast<std::size_t>(n), {});
  t.parent[root] = -1;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const int u = t.order[head];
    for (int v : g.undirected_neighbors(u)) {
      if (t.parent[v] != -2) continue;
      t.parent[v] = u;
      t.children[u].push_back(v);
      t.order.push_back(v);
    }
  }
  if (static_cast<int>(t.order.size()) != n) {
    throw FairDivError(Errc::kDisconnected, "graph is not connected");
  }
  return t;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw FairDivError(Errc::kInvalidArgument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

namespace graphs {

AgentGraph empty(int n) { return AgentGraph(n, {}); }

AgentGraph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return AgentGraph(n, edges);
}

AgentGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  if (n == 2) edges.resize(1);
  return AgentGraph::undirected(n, n < 2 ? std::vector<Edge>{} : edges);
}

AgentGraph directed_cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; n > 1 && i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return AgentGraph(n, edges);
}

AgentGraph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return AgentGraph::undirected(n, edges);
}

AgentGraph star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return AgentGraph::undirected(n, edges);
}

AgentGraph binary_tree(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
  return AgentGraph::undirected(n, edges);
}

AgentGraph grid(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int u = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(u, u + 1);
      if (r + 1 < rows) edges.emplace_back(u, u + cols);
    }
  }
  return AgentGraph::undirected(rows * cols, edges);
}

AgentGraph cone_dag(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, 0);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return AgentGraph(n, edges);
}

AgentGraph example_a1(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  edges.emplace_back(1, 0);
  return AgentGraph(n, edges);
}

AgentGraph random_connected(int n, int extra, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(perm[uniform_below(rng, static_cast<std::uint64_t>(i))], perm[i]);
  }
  for (int e = 0; e < extra && n > 1; ++e) {
    const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (u != v) edges.emplace_back(u, v);
  }
  return AgentGraph::undirected(n, edges);
}

std::optional<AgentGraph> named(std::string_view name, int n) {
  if (name == "k4") return complete(4);
  if (name == "c4") return cycle(4);
  if (name == "complete") return complete(n);
  if (name == "cycle") return cycle(n);
  if (name == "directed-cycle") return directed_cycle(n);
  if (name == "path") return path(n);
  if (name == "star") return star(n);
  if (name == "binary-tree") return binary_tree(n);
  if (name == "empty") return empty(n);
  if (name == "cone_dag") return cone_dag(n);
  if (name == "example_a1") return example_a1(n);
  if (name == "grid") {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) return std::nullopt;
    return grid(side, side);
  }
  return std::nullopt;
}

}  // namespace graphs

}  // namespace fairdiv
