#include "fairdiv/fairness.hpp"

#include <string>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

void check_sizes(std::size_t pieces, std::size_t vals, int graph_n = -1) {
  if (pieces != vals || (graph_n >= 0 && static_cast<std::size_t>(graph_n) != pieces)) {
    throw FairDivError(Errc::kSizeMismatch,
                       std::to_string(pieces) + " pieces, " + std::to_string(vals) + " valuations" +
                           (graph_n >= 0 ? ", " + std::to_string(graph_n) + " graph nodes" : ""));
  }
}

FairnessReport envy_report(const EnvyMatrix& m, const AgentGraph& g) {
  FairnessReport report;
  for (int i = 0; i < g.n(); ++i) {
    for (int j : g.out_neighbors(i)) {
      if (m(i, i) < m(i, j)) report.witnesses.push_back({i, j, m(i, i), m(i, j)});
    }
  }
  report.satisfied = report.witnesses.empty();
  return report;
}

}  // namespace

EnvyMatrix::EnvyMatrix(std::span<const Piece> pieces, std::span<const Valuation> vals)
    : n_(pieces.size()) {
  check_sizes(pieces.size(), vals.size());
  entries_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) entries_.push_back(value(vals[i], pieces[j]));
  }
}

EnvyMatrix envy_matrix(const Allocation& alloc, std::span<const Valuation> vals) {
  return EnvyMatrix(alloc.pieces(), vals);
}

FairnessReport is_locally_envy_free(const Allocation& alloc, const AgentGraph& g,
                                    std::span<const Valuation> vals) {
  check_sizes(alloc.size(), vals.size(), g.n());
  return envy_report(envy_matrix(alloc, vals), g);
}

FairnessReport is_locally_proportional(const Allocation& alloc, const AgentGraph& g,
                                       std::span<const Valuation> vals) {
  check_sizes(alloc.size(), vals.size(), g.n());
  FairnessReport report;
  for (int i = 0; i < g.n(); ++i) {
    const auto& nbrs = g.out_neighbors(i);
    if (nbrs.empty()) continue;
    const Rational own = value(vals[i], alloc[i]);
    Rational sum;
    for (int j : nbrs) sum += value(vals[i], alloc[j]);
    const Rational avg = sum / Rational(static_cast<std::int64_t>(nbrs.size()));
    if (own < avg) report.witnesses.push_back({i, std::nullopt, own, avg});
  }
  report.satisfied = report.witnesses.empty();
  return report;
}

FairnessReport is_globally_envy_free(const Allocation& alloc, std::span<const Valuation> vals) {
  check_sizes(alloc.size(), vals.size());
  return envy_report(envy_matrix(alloc, vals), graphs::complete(static_cast<int>(alloc.size())));
}

FairnessReport is_globally_proportional(const Allocation& alloc, std::span<const Valuation> vals) {
  check_sizes(alloc.size(), vals.size());
  FairnessReport report;
  const Rational share(1, static_cast<std::int64_t>(alloc.size()));
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    const Rational own = value(vals[i], alloc[i]);
    if (own < share) report.witnesses.push_back({static_cast<int>(i), std::nullopt, own, share});
  }
  report.satisfied = report.witnesses.empty();
  return report;
}

FairnessReport is_envy_free_partial(const PartialAllocation& pa, std::span<const Valuation> vals) {
  check_sizes(pa.size(), vals.size());
  return envy_report(EnvyMatrix(pa.pieces(), vals), graphs::complete(static_cast<int>(pa.size())));
}

AgentGraph domination_graph(const PartialAllocation& pa, std::span<const Valuation> vals) {
  check_sizes(pa.size(), vals.size());
  const EnvyMatrix m(pa.pieces(), vals);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const Rational residue = value(vals[i], pa.residue());
    for (std::size_t j = 0; j < pa.size(); ++j) {
      if (i != j && m(i, i) >= m(i, j) + residue) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return AgentGraph(static_cast<int>(pa.size()), edges);
}

}  // namespace fairdiv
