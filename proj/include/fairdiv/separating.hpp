#ifndef FAIRDIV_SEPARATING_HPP_
#define FAIRDIV_SEPARATING_HPP_

#include <vector>

#include "fairdiv/cake.hpp"
#include "fairdiv/graph.hpp"

namespace fairdiv {

// Valuations and an allocation that are locally proportional on `holds_on`
// but not on `fails_on`, with the violation at `pivot_agent`.
struct SeparatingInstance {
  enum class Case {
    kStrictSubgraph,  // fails_on is a strict subgraph of holds_on
    kExtraEdge,       // fails_on has an edge holds_on lacks
  };
  std::vector<Valuation> valuations;
  Allocation allocation;
  AgentGraph holds_on;
  AgentGraph fails_on;
  int pivot_agent = 0;
  Case construction = Case::kStrictSubgraph;
};

// Both graphs must be undirected (symmetric), connected and on the same node
// set. Every agent but the pivot is uniform and agent j owns [j/n, (j+1)/n).
// Throws kGraphsEqual, kDisconnected, kNotUndirected and kSizeMismatch.
SeparatingInstance separate_lp(const AgentGraph& g, const AgentGraph& h);

// Four agents: agent 0 has density 2 on [0,1/4) and [3/4,1], the others are
// uniform; allocation [0,1/8), [1/8,3/8), [3/8,5/8), [5/8,1]. Locally
// proportional on K_4, not on C_4.
SeparatingInstance example_2_1();

}  // namespace fairdiv

#endif  // FAIRDIV_SEPARATING_HPP_
