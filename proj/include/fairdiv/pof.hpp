#ifndef FAIRDIV_POF_HPP_
#define FAIRDIV_POF_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/cake.hpp"
#include "fairdiv/graph.hpp"

namespace fairdiv {

// Hub set L with one member set S_i per hub. In partition form |L| = k and
// the sets cover every non-hub; in subpartition form |L| >= k and nodes may
// be left out.
struct LinkedPartition {
  std::vector<int> hubs;                 // sorted
  std::map<int, std::vector<int>> sets;  // hub -> sorted members
  int k = 0;
  Rational epsilon;
  Rational b;  // epsilon * n / k - 1; every set needs at least b members

  friend bool operator==(const LinkedPartition&, const LinkedPartition&) = default;
};

enum class PartitionForm { kSubpartition, kPartition };

struct PartitionCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks hub count, disjointness, set sizes against b (exact rational
// comparison), coverage (partition form only) and that every member of S_i
// reaches i through non-hub nodes of g.
PartitionCheck validate_linked_partition(const LinkedPartition& lp, const AgentGraph& g,
                                         PartitionForm form);

// Builds a (k, epsilon)-linked subpartition on the breadth-first spanning
// tree of g rooted at node 0. With epsilon = 1/2 construction always succeeds;
// for other epsilon it may throw kSubpartitionTooSmall. Throws kDisconnected
// and kKTooSmall (k < 2).
LinkedPartition linked_subpartition(const AgentGraph& g, int k, const Rational& epsilon);

// Assigns leftover nodes to their nearest hub (smallest hub id on ties), then
// dissolves the smallest-id hub and reassigns its set until |L| = k. Throws
// kInvalidSubpartition when lp fails validation on g.
LinkedPartition complete_partition(const LinkedPartition& lp, const AgentGraph& g);

// The r-th hub (by id) gets density |L| on [r/|L|, (r+1)/|L|); every other
// node is uniform.
std::vector<Valuation> pof_valuations(const LinkedPartition& lp, int n);

struct WelfareResult {
  Rational welfare;
  Allocation allocation;
};

// Each elementary interval of the overlaid breakpoints goes to an agent of
// maximum density (smallest id on ties).
WelfareResult optimal_welfare(std::span<const Valuation> vals);

Rational welfare(const Allocation& alloc, std::span<const Valuation> vals);

enum class Criterion { kAny, kLocallyEnvyFree, kLocallyProportional };

struct OracleOptions {
  std::uint64_t cap = 50'000'000;  // maximum number of assignments n^m
  int workers = 1;
};

struct OracleResult {
  Rational welfare;
  Allocation allocation;
  std::uint64_t feasible = 0;  // assignments passing the criterion
  std::uint64_t enumerated = 0;
};

// One allocation of m equal atoms: owner[r] holds [r/m, (r+1)/m).
struct AtomAllocation {
  std::span<const int> owner;
  std::span<const Rational> own_values;  // V_i(A_i)
  std::span<const Rational> measures;    // mu_i
  Rational welfare;
};

// Calls visit for every assignment of m equal atoms to the agents that passes
// the criterion on g. The atoms must refine every valuation breakpoint
// (kInvalidArgument otherwise). Throws kTooLarge when n^m exceeds the cap.
// Returns the number of assignments visited.
std::uint64_t enumerate_atom_allocations(std::span<const Valuation> vals, const AgentGraph& g, int atoms,
                                         Criterion criterion, std::uint64_t cap,
                                         const std::function<void(const AtomAllocation&)>& visit);

// Best welfare over all feasible atom assignments; ties go to the first
// assignment in enumeration order, so the result does not depend on the
// worker count. Throws kInfeasible when nothing passes.
OracleResult brute_force_best_fair_welfare(std::span<const Valuation> vals, const AgentGraph& g, int atoms,
                                           Criterion criterion, const OracleOptions& options = {});

// Re-checks the welfare chain of the lower-bound argument on one locally
// envy-free allocation under pof_valuations(lp).
struct LefCertificate {
  bool mu_monotone = true;          // mu_j >= mu_i for every hub i and j in S_i
  bool in_asymptotic_regime = true;  // epsilon*k - 1 >= epsilon*k/2
  std::optional<bool> hub_share_bound;  // sum_{S_i} v_j >= epsilon v_i / 2 (regime only)
  bool welfare_bound = true;        // total welfare <= 2/epsilon + 1
  Rational welfare;
  Rational bound;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

LefCertificate certify_lef(const LinkedPartition& lp, std::span<const Rational> measures,
                           std::span<const Rational> own_values);
LefCertificate certify_lef(const LinkedPartition& lp, const Allocation& alloc,
                           std::span<const Valuation> vals);

struct WelfareSummary {
  Rational optimal_welfare;
  Rational fair_welfare;  // oracle best, or the proven upper bound
  Rational ratio;
  bool from_oracle = false;
};

struct PofExperiment {
  int n = 0;
  int k = 0;
  LinkedPartition partition;
  WelfareSummary summary;
  Rational bound;
  std::uint64_t lef_allocations = 0;  // enumerated (oracle mode)
  std::uint64_t certificate_failures = 0;
};

struct PofOptions {
  std::optional<int> atoms;  // enumerate LEF allocations when set
  OracleOptions oracle;
};

// k = floor(sqrt(n)), epsilon = 1/2. Without atoms the fair side is the
// bound 2/epsilon + 1 and the ratio is a lower bound on the price.
PofExperiment pof_experiment(const AgentGraph& g, const PofOptions& options = {});

// Graph families by name for experiments: path, star, binary-tree, grid,
// cycle, complete, random (random spanning tree plus n extra edges).
AgentGraph generate_graph(std::string_view family, int n, std::uint64_t seed);

}  // namespace fairdiv

#endif  // FAIRDIV_POF_HPP_
