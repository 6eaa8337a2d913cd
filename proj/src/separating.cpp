#include "fairdiv/separating.hpp"

#include <string>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

void check_input(const AgentGraph& g, const char* name) {
  if (!g.is_symmetric()) throw FairDivError(Errc::kNotUndirected, std::string(name) + " is not undirected");
  if (!is_weakly_connected(g)) throw FairDivError(Errc::kDisconnected, std::string(name) + " is not connected");
}

// Agent j's slot [j/n, (j+1)/n).
Piece slot(int j, int n) { return Piece::interval(Rational(j, n), Rational(j + 1, n)); }

std::vector<Piece> slot_allocation(int n) {
  std::vector<Piece> pieces;
  for (int j = 0; j < n; ++j) pieces.push_back(slot(j, n));
  return pieces;
}

// Valuation spreading values[j] uniformly over slot j.
Valuation slot_valuation(const std::vector<Rational>& values) {
  const int n = static_cast<int>(values.size());
  return Valuation::from_piece_values(slot_allocation(n), values);
}

}  // namespace

SeparatingInstance separate_lp(const AgentGraph& g, const AgentGraph& h) {
  if (g.n() != h.n()) throw FairDivError(Errc::kSizeMismatch, "graphs on different node sets");
  check_input(g, "G");
  check_input(h, "H");
  if (g == h) throw FairDivError(Errc::kGraphsEqual, "G and H have the same edges");
  const int n = g.n();

  std::vector<Rational> pivot_values(static_cast<std::size_t>(n));
  int pivot = -1;
  auto construction = SeparatingInstance::Case::kStrictSubgraph;
  if (!h.is_subgraph_of(g)) {
    // An H-edge (i, j) missing from G: i values only j's slot.
    for (const auto& [i, j] : h.edges()) {
      if (!g.has_edge(i, j)) {
        pivot = i;
        pivot_values[j] = 1;
        break;
      }
    }
    construction = SeparatingInstance::Case::kExtraEdge;
  } else {
    for (int i = 0; i < n && pivot < 0; ++i) {
      if (h.out_degree(i) < g.out_degree(i)) pivot = i;
    }
    // Own slot worth 1/(d_G + 1); the rest spread over the H-neighbors'
    // slots in proportion to length, so equally.
    const Rational own(1, g.out_degree(pivot) + 1);
    const auto& h_nbrs = h.out_neighbors(pivot);
    const Rational each = (Rational(1) - own) / Rational(static_cast<std::int64_t>(h_nbrs.size()));
    pivot_values[pivot] = own;
    for (int j : h_nbrs) pivot_values[j] = each;
  }

  SeparatingInstance out{std::vector<Valuation>(static_cast<std::size_t>(n), Valuation::uniform()),
                         Allocation(slot_allocation(n)), g, h, pivot, construction};
  out.valuations[pivot] = slot_valuation(pivot_values);
  return out;
}

SeparatingInstance example_2_1() {
  const Rational q(1, 4);
  std::vector<Valuation> vals{Valuation({0, q, Rational(3, 4), 1}, {2, 0, 2}), Valuation::uniform(),
                              Valuation::uniform(), Valuation::uniform()};
  Allocation alloc({Piece::interval(0, Rational(1, 8)), Piece::interval(Rational(1, 8), Rational(3, 8)),
                    Piece::interval(Rational(3, 8), Rational(5, 8)), Piece::interval(Rational(5, 8), 1)});
  return {std::move(vals), std::move(alloc), graphs::complete(4), graphs::cycle(4), 0,
          SeparatingInstance::Case::kStrictSubgraph};
}

}  // namespace fairdiv
