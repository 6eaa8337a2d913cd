#ifndef FAIRDIV_PROTOCOLS_HPP_
#define FAIRDIV_PROTOCOLS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "fairdiv/agents.hpp"
#include "fairdiv/cake.hpp"
#include "fairdiv/graph.hpp"

namespace fairdiv {

struct TraceStep {
  enum class Kind {
    kCut,     // the cutter placed a boundary at `point`
    kChoose,  // a chooser took remaining piece `piece`
    kTake,    // the cutter took the last piece
  };
  int agent = 0;
  Kind kind = Kind::kCut;
  int piece = -1;
  std::optional<Rational> point;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ProtocolRun {
  Allocation allocation;
  QueryLedger ledger;
  std::vector<TraceStep> trace;
};

// Rebuilds per-agent shares of `cake` from a single-cutter trace: boundaries
// are read right to left, pieces are indexed left to right.
std::vector<Piece> replay_trace(const Piece& cake, std::span<const TraceStep> trace, int n);

// The apex cuts the cake into n pieces of equal value to it; the remaining
// agents choose in topological order of g without the apex, each taking the
// leftmost piece of maximum value; the apex keeps the last piece. The result
// is locally envy-free on the full cone over g without the apex. Throws
// kNotConeApex when g without the apex has a cycle.
ProtocolRun protocol1(std::span<const Agent> agents, const AgentGraph& g, int apex);

// Same protocol on an arbitrary region of the cake; shares[r] goes to
// agents[r]. On a region other than the whole cake the cutter spends one eval
// per interval it has to measure before cutting.
struct RegionRun {
  std::vector<Piece> shares;
  QueryLedger ledger;
  std::vector<TraceStep> trace;
};
RegionRun protocol1_on(const Piece& cake, std::span<const Agent> agents, const AgentGraph& g, int apex);

// Protocol 1 with apex 0 on bidirected K_2. Throws kWrongArity.
ProtocolRun cut_and_choose(std::span<const Agent> agents);

// Whole cake to the smallest-id source of an acyclic graph, zero queries.
// Throws CycleFound.
ProtocolRun dag_source_allocation(std::span<const Agent> agents, const AgentGraph& g);

enum class ComponentRule {
  kFirstEligible,     // first weak component, by smallest member, with a cone apex
  kUpstreamClosure,   // first ancestor-closed set {v} + ancestors(v) with a cone apex
};

// Runs protocol1 on one selected group of agents with the whole cake; every
// other agent receives nothing. Throws kNoEligibleComponent.
ProtocolRun allocate_by_components(std::span<const Agent> agents, const AgentGraph& g,
                                   ComponentRule rule = ComponentRule::kFirstEligible);

// Valuation worth 2 * 3^-r on piece r (r = 1..t-1) and the remainder
// 3^-(t-1) on the last piece, each spread uniformly. Throws
// kZeroMeasurePiece and kInvalidArgument (pieces do not partition the cake).
Valuation single_cutter_adversary(std::span<const Piece> pieces);

struct EnvyWitness {
  int envious = 0;
  int envied = 0;
  Rational envious_value;  // envious agent's value for its own bundle
  Rational envied_value;   // envious agent's value for the envied bundle
  std::vector<int> cycle;
};

// Every non-cutter agent is assumed to hold single_cutter_adversary(pieces).
// assignment[r] is the agent receiving pieces[r]. Finds a cycle of g without
// the cutter that passes through an agent holding a piece and returns the
// envy on that cycle forced by the lowest-index piece. Returns nullopt when
// no piece holder lies on a cycle. Throws kNoCycle when g without the cutter
// is acyclic.
std::optional<EnvyWitness> demonstrate_single_cutter_failure(const AgentGraph& g, int cutter,
                                                             std::span<const Piece> pieces,
                                                             std::span<const int> assignment);

struct ExtensionRun {
  ProtocolRun run;
  AgentGraph domination;
  AgentGraph domination_complement;
  std::vector<int> component;  // agents that shared the residue
  int apex = 0;
};

// Extends a partial envy-free allocation in which every agent dominates at
// least n-2 others to a complete envy-free allocation: the residue is divided
// by protocol1 among the weak component of the complement of the domination
// graph that holds agent 0. Preconditions are checked directly on the
// valuations; the ledger counts only the residue protocol. Throws
// kNotEnvyFreePartial and kInsufficientDomination.
ExtensionRun extend_partial(const PartialAllocation& pa, std::span<const Valuation> vals);

}  // namespace fairdiv

#endif  // FAIRDIV_PROTOCOLS_HPP_
