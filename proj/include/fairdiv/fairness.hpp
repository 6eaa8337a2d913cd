#ifndef FAIRDIV_FAIRNESS_HPP_
#define FAIRDIV_FAIRNESS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "fairdiv/cake.hpp"
#include "fairdiv/graph.hpp"

namespace fairdiv {

// One violated inequality lhs >= rhs. `other` is the envied agent for
// envy-freeness checks and empty for proportionality checks.
struct Witness {
  int agent = 0;
  std::optional<int> other;
  Rational lhs;
  Rational rhs;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FairnessReport {
  bool satisfied = true;
  std::vector<Witness> witnesses;
  friend bool operator==(const FairnessReport&, const FairnessReport&) = default;
};

// Entry (i, j) is agent i's value for piece j.
class EnvyMatrix {
 public:
  EnvyMatrix(std::span<const Piece> pieces, std::span<const Valuation> vals);
  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

EnvyMatrix envy_matrix(const Allocation& alloc, std::span<const Valuation> vals);

// All of these throw kSizeMismatch unless alloc, graph and vals agree on n.
FairnessReport is_locally_envy_free(const Allocation& alloc, const AgentGraph& g,
                                    std::span<const Valuation> vals);
// Agents without out-neighbors impose no constraint.
FairnessReport is_locally_proportional(const Allocation& alloc, const AgentGraph& g,
                                       std::span<const Valuation> vals);
FairnessReport is_globally_envy_free(const Allocation& alloc, std::span<const Valuation> vals);
FairnessReport is_globally_proportional(const Allocation& alloc, std::span<const Valuation> vals);

// Envy-freeness among the agent pieces of a partial allocation, residue ignored.
FairnessReport is_envy_free_partial(const PartialAllocation& pa, std::span<const Valuation> vals);

// Edge (i, j) when V_i(P_i) >= V_i(P_j) + V_i(R).
AgentGraph domination_graph(const PartialAllocation& pa, std::span<const Valuation> vals);

}  // namespace fairdiv

#endif  // FAIRDIV_FAIRNESS_HPP_
