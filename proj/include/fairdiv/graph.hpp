#ifndef FAIRDIV_GRAPH_HPP_
#define FAIRDIV_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fairdiv {

using Edge = std::pair<int, int>;

// Directed graph on agents 0..n-1 without self-loops. An undirected graph is
// stored with both orientations of every edge.
class AgentGraph {
 public:
  AgentGraph() = default;
  // Throws kInvalidArgument for self-loops or out-of-range endpoints.
  // Duplicate edges collapse.
  AgentGraph(int n, std::span<const Edge> edges);
  static AgentGraph undirected(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(out_.size()); }
  const std::vector<int>& out_neighbors(int i) const { return out_[i]; }
  const std::vector<int>& in_neighbors(int i) const { return in_[i]; }
  int out_degree(int i) const { return static_cast<int>(out_[i].size()); }
  bool has_edge(int i, int j) const;
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  // True when every edge appears in both orientations.
  bool is_symmetric() const;
  // Neighbors in the underlying undirected graph, sorted.
  std::vector<int> undirected_neighbors(int i) const;

  // Same node ids, every edge touching c dropped.
  AgentGraph without_node(int c) const;
  // Graph on nodes.size() vertices; vertex r stands for nodes[r].
  AgentGraph induced(std::span<const int> nodes) const;
  // Subgraph test on the same node set.
  bool is_subgraph_of(const AgentGraph& other) const;

  friend bool operator==(const AgentGraph&, const AgentGraph&) = default;

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Order in which every edge points forward; among available nodes the
// smallest id goes first. Throws CycleFound with a witness cycle.
std::vector<int> topological_sort(const AgentGraph& g);
bool is_acyclic(const AgentGraph& g);

// Smallest c such that g without c is acyclic: g is then a subgraph of the
// cone over a DAG with apex c.
std::optional<int> cone_apex(const AgentGraph& g);

bool is_pseudoforest(const AgentGraph& g);

struct PseudoforestComponent {
  std::vector<int> nodes;
  int apex = 0;
  std::optional<Edge> removed_edge;
};

struct PseudoforestBreak {
  AgentGraph graph;
  std::vector<PseudoforestComponent> components;
};

// Removes one cycle edge (smallest tail) from each cyclic weak component and
// names an apex per component. Throws kNotPseudoforest.
PseudoforestBreak pseudoforest_break(const AgentGraph& g);

AgentGraph complement(const AgentGraph& g);

// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> weak_components(const AgentGraph& g);
bool is_weakly_connected(const AgentGraph& g);

// Breadth-first spanning tree of the underlying undirected graph.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent;  // parent[root] == -1
  std::vector<int> order;   // BFS order, root first
  std::vector<std::vector<int>> children;
};

// Throws kDisconnected.
SpanningTree spanning_tree(const AgentGraph& g, int root = 0);

// Graph families used by fixtures, tests and the CLI.
namespace graphs {

AgentGraph empty(int n);
AgentGraph complete(int n);
AgentGraph cycle(int n);           // undirected
AgentGraph directed_cycle(int n);  // 0 -> 1 -> ... -> n-1 -> 0
AgentGraph path(int n);            // undirected
AgentGraph star(int n);            // undirected, center 0
AgentGraph binary_tree(int n);     // undirected, heap layout
AgentGraph grid(int rows, int cols);
// Apex 0 joined both ways to every node, plus the DAG path 1 -> 2 -> ... -> n-1.
AgentGraph cone_dag(int n);
// Directed cycle on 0..n-1 plus the edge (1, 0).
AgentGraph example_a1(int n);
// Random spanning tree plus `extra` random undirected edges.
AgentGraph random_connected(int n, int extra, std::mt19937_64& rng);

// Resolves "k4", "c4", "cone_dag", "example_a1", or a family name with a
// size ("complete", "cycle", "path", "star", "binary-tree", "grid", "empty",
// "directed-cycle", "cone_dag", "example_a1"). Returns nullopt for unknown
// names.
std::optional<AgentGraph> named(std::string_view name, int n);

}  // namespace graphs

// Uniform integer in [0, bound) from raw engine output; unlike the standard
// distributions its results do not depend on the library implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace fairdiv

#endif  // FAIRDIV_GRAPH_HPP_
