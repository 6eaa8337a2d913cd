#include "fairdiv/protocols.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fairdiv/error.hpp"
#include "fairdiv/fairness.hpp"

namespace fairdiv {

namespace {

// Boundaries of n pieces of equal value to the cutter, right to left,
// starting just after the right end of the cake.
std::vector<Rational> cut_region(const Piece& cake, const Agent& cutter, int n,
                                 QueryLedger& ledger, std::vector<TraceStep>& trace) {
  const auto& ivs = cake.intervals();
  std::vector<Rational> bounds;
  if (ivs.empty() || n == 1) return bounds;
  const Rational total = cake == Piece::whole() ? Rational(1) : eval_piece(cutter, cake, ledger);
  const Rational share = total / Rational(n);
  std::size_t k = ivs.size() - 1;
  Rational y = ivs[k].hi;
  for (int r = 1; r < n; ++r) {
    Rational need = share;
    Rational x;
    while (true) {
      if (need.is_zero()) {
        x = y;
        break;
      }
      if (k == 0) {
        x = cut_query(cutter, y, need, ledger);
        break;
      }
      const Rational avail = eval_query(cutter, ivs[k].lo, y, ledger);
      if (avail >= need) {
        x = cut_query(cutter, y, need, ledger);
        break;
      }
      need -= avail;
      --k;
      y = ivs[k].hi;
    }
    trace.push_back({cutter.index(), TraceStep::Kind::kCut, -1, x});
    bounds.push_back(x);
    y = x;
  }
  return bounds;
}

// Left-to-right pieces of `cake` delimited by right-to-left boundaries.
std::vector<Piece> slice(const Piece& cake, const std::vector<Rational>& right_to_left, int n) {
  if (cake.empty()) return std::vector<Piece>(static_cast<std::size_t>(n));
  std::vector<Rational> bounds{cake.intervals().front().lo};
  bounds.insert(bounds.end(), right_to_left.rbegin(), right_to_left.rend());
  bounds.push_back(cake.intervals().back().hi);
  std::vector<Piece> pieces;
  for (int r = 0; r < n; ++r) {
    pieces.push_back(piece_intersection(cake, Piece::interval(bounds[r], bounds[r + 1])));
  }
  return pieces;
}

std::vector<Piece> whole_to(int n, int owner) {
  std::vector<Piece> pieces(static_cast<std::size_t>(n));
  pieces[owner] = Piece::whole();
  return pieces;
}

}  // namespace

std::vector<Piece> replay_trace(const Piece& cake, std::span<const TraceStep> trace, int n) {
  std::vector<Rational> bounds;
  std::vector<std::pair<int, int>> picks;
  for (const auto& step : trace) {
    if (step.kind == TraceStep::Kind::kCut) {
      bounds.push_back(*step.point);
    } else {
      picks.emplace_back(step.agent, step.piece);
    }
  }
  const auto pieces = slice(cake, bounds, static_cast<int>(picks.size()));
  std::vector<Piece> out(static_cast<std::size_t>(n));
  for (const auto& [agent, piece] : picks) out[agent] = pieces[piece];
  return out;
}

RegionRun protocol1_on(const Piece& cake, std::span<const Agent> agents, const AgentGraph& g, int apex) {
  const int n = static_cast<int>(agents.size());
  if (g.n() != n) {
    throw FairDivError(Errc::kSizeMismatch,
                       std::to_string(n) + " agents on a graph with " + std::to_string(g.n()) + " nodes");
  }
  if (apex < 0 || apex >= n) throw FairDivError(Errc::kInvalidArgument, "apex out of range");
  std::vector<int> order;
  try {
    order = topological_sort(g.without_node(apex));
  } catch (const CycleFound& e) {
    throw FairDivError(Errc::kNotConeApex, "removing " + std::to_string(apex) + " leaves a " + e.what());
  }

  RegionRun run;
  const auto bounds = cut_region(cake, agents[apex], n, run.ledger, run.trace);
  const auto pieces = slice(cake, bounds, n);
  run.shares.assign(static_cast<std::size_t>(n), Piece());
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (int u : order) {
    if (u == apex) continue;
    int best = -1;
    Rational best_value;
    for (int r = 0; r < n; ++r) {
      if (taken[r]) continue;
      Rational v = eval_piece(agents[u], pieces[r], run.ledger);
      if (best < 0 || v > best_value) {
        best = r;
        best_value = std::move(v);
      }
    }
    taken[best] = true;
    run.shares[u] = pieces[best];
    run.trace.push_back({agents[u].index(), TraceStep::Kind::kChoose, best, std::nullopt});
  }
  const int last = static_cast<int>(std::find(taken.begin(), taken.end(), false) - taken.begin());
  run.shares[apex] = pieces[last];
  run.trace.push_back({agents[apex].index(), TraceStep::Kind::kTake, last, std::nullopt});
  return run;
}

ProtocolRun protocol1(std::span<const Agent> agents, const AgentGraph& g, int apex) {
  auto region = protocol1_on(Piece::whole(), agents, g, apex);
  return {Allocation(std::move(region.shares)), std::move(region.ledger), std::move(region.trace)};
}

ProtocolRun cut_and_choose(std::span<const Agent> agents) {
  if (agents.size() != 2) {
    throw FairDivError(Errc::kWrongArity, "cut-and-choose needs exactly 2 agents, got " +
                                              std::to_string(agents.size()));
  }
  return protocol1(agents, graphs::complete(2), 0);
}

ProtocolRun dag_source_allocation(std::span<const Agent> agents, const AgentGraph& g) {
  const int n = static_cast<int>(agents.size());
  if (g.n() != n || n == 0) throw FairDivError(Errc::kSizeMismatch, "one agent per graph node required");
  topological_sort(g);
  int source = 0;
  while (!g.in_neighbors(source).empty()) ++source;
  return {Allocation(whole_to(n, source)), QueryLedger{}, {}};
}

ProtocolRun allocate_by_components(std::span<const Agent> agents, const AgentGraph& g, ComponentRule rule) {
  const int n = static_cast<int>(agents.size());
  if (g.n() != n) throw FairDivError(Errc::kSizeMismatch, "one agent per graph node required");

  std::vector<std::vector<int>> candidates;
  if (rule == ComponentRule::kFirstEligible) {
    candidates = weak_components(g);
  } else {
    for (int v = 0; v < n; ++v) {
      std::vector<bool> in_set(static_cast<std::size_t>(n), false);
      std::vector<int> stack{v};
      in_set[v] = true;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int p : g.in_neighbors(u)) {
          if (!in_set[p]) {
            in_set[p] = true;
            stack.push_back(p);
          }
        }
      }
      std::vector<int> set;
      for (int u = 0; u < n; ++u) {
        if (in_set[u]) set.push_back(u);
      }
      candidates.push_back(std::move(set));
    }
  }

  for (const auto& nodes : candidates) {
    const AgentGraph sub = g.induced(nodes);
    const auto apex = cone_apex(sub);
    if (!apex) continue;
    std::vector<Agent> members;
    for (int u : nodes) members.push_back(agents[u]);
    auto region = protocol1_on(Piece::whole(), members, sub, *apex);
    std::vector<Piece> pieces(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < nodes.size(); ++r) pieces[nodes[r]] = std::move(region.shares[r]);
    return {Allocation(std::move(pieces)), std::move(region.ledger), std::move(region.trace)};
  }
  throw FairDivError(Errc::kNoEligibleComponent, "no candidate agent set has a cone apex");
}

Valuation single_cutter_adversary(std::span<const Piece> pieces) {
  const std::size_t t = pieces.size();
  if (t == 0) throw FairDivError(Errc::kInvalidArgument, "at least one piece required");
  for (std::size_t r = 0; r < t; ++r) {
    if (measure(pieces[r]).is_zero()) {
      throw FairDivError(Errc::kZeroMeasurePiece, "piece " + std::to_string(r + 1) + " has zero measure");
    }
  }
  std::vector<Rational> values;
  const Rational third(1, 3);
  for (std::size_t r = 1; r < t; ++r) values.push_back(Rational(2) * pow(third, static_cast<unsigned>(r)));
  values.push_back(pow(third, static_cast<unsigned>(t - 1)));
  return Valuation::from_piece_values(pieces, values);
}

namespace {

// A directed cycle through `start` inside g, as a node list starting at
// `start`, or empty if none exists.
std::vector<int> cycle_through(const AgentGraph& g, int start) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> queue;
  for (int v : g.out_neighbors(start)) {
    if (parent[v] < 0) {
      parent[v] = start;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    if (u == start) break;
    for (int v : g.out_neighbors(u)) {
      if (parent[v] < 0) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[start] < 0) return {};
  std::vector<int> cycle;
  for (int u = parent[start]; u != start; u = parent[u]) cycle.push_back(u);
  cycle.push_back(start);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

std::optional<EnvyWitness> demonstrate_single_cutter_failure(const AgentGraph& g, int cutter,
                                                             std::span<const Piece> pieces,
                                                             std::span<const int> assignment) {
  if (pieces.size() != assignment.size()) {
    throw FairDivError(Errc::kSizeMismatch, "one receiving agent per piece required");
  }
  const AgentGraph rest = g.without_node(cutter);
  if (is_acyclic(rest)) {
    throw FairDivError(Errc::kNoCycle, "graph without cutter " + std::to_string(cutter) + " is acyclic");
  }
  const Valuation adversary = single_cutter_adversary(pieces);

  std::map<int, std::vector<int>> bundles;
  for (std::size_t r = 0; r < assignment.size(); ++r) {
    if (assignment[r] < 0 || assignment[r] >= g.n()) {
      throw FairDivError(Errc::kInvalidArgument, "piece assigned to unknown agent");
    }
    bundles[assignment[r]].push_back(static_cast<int>(r));
  }
  auto bundle_value = [&](int agent) {
    Rational total;
    auto it = bundles.find(agent);
    if (it == bundles.end()) return total;
    for (int r : it->second) total += value(adversary, pieces[r]);
    return total;
  };

  for (const auto& entry : bundles) {
    const int holder = entry.first;
    if (holder == cutter) continue;
    const auto cycle = cycle_through(rest, holder);
    if (cycle.empty()) continue;
    // Lowest-index piece held on the cycle: its owner's predecessor holds only
    // higher-index pieces, which are worth less than that piece alone.
    int best_pos = -1;
    int best_piece = static_cast<int>(pieces.size());
    for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
      auto it = bundles.find(cycle[pos]);
      if (it != bundles.end() && it->second.front() < best_piece) {
        best_piece = it->second.front();
        best_pos = static_cast<int>(pos);
      }
    }
    const int envied = cycle[best_pos];
    const int envious = cycle[(best_pos + cycle.size() - 1) % cycle.size()];
    EnvyWitness w{envious, envied, bundle_value(envious), bundle_value(envied), cycle};
    if (!(w.envious_value < w.envied_value)) {
      throw FairDivError(Errc::kInvalidArgument, "adversary valuation failed to force envy");
    }
    return w;
  }
  return std::nullopt;
}

ExtensionRun extend_partial(const PartialAllocation& pa, std::span<const Valuation> vals) {
  const int n = static_cast<int>(pa.size());
  const auto ef = is_envy_free_partial(pa, vals);
  if (!ef.satisfied) {
    const auto& w = ef.witnesses.front();
    throw FairDivError(Errc::kNotEnvyFreePartial,
                       "agent " + std::to_string(w.agent) + " envies agent " + std::to_string(*w.other));
  }
  AgentGraph dom = domination_graph(pa, vals);
  for (int i = 0; i < n; ++i) {
    if (dom.out_degree(i) < n - 2) {
      throw FairDivError(Errc::kInsufficientDomination,
                         "agent " + std::to_string(i) + " dominates " + std::to_string(dom.out_degree(i)) +
                             " agents, needs " + std::to_string(n - 2));
    }
  }
  AgentGraph comp_graph = complement(dom);
  const auto broken = pseudoforest_break(comp_graph);
  const auto& chosen = broken.components.front();

  ExtensionRun out{ProtocolRun{Allocation(std::vector<Piece>{Piece::whole()}), {}, {}},
                   std::move(dom), std::move(comp_graph), chosen.nodes, chosen.apex};
  std::vector<Piece> pieces = pa.pieces();
  if (!pa.residue().empty()) {
    std::vector<Agent> members;
    int local_apex = 0;
    for (std::size_t r = 0; r < chosen.nodes.size(); ++r) {
      members.emplace_back(chosen.nodes[r], vals[chosen.nodes[r]]);
      if (chosen.nodes[r] == chosen.apex) local_apex = static_cast<int>(r);
    }
    auto region = protocol1_on(pa.residue(), members, out.domination_complement.induced(chosen.nodes),
                               local_apex);
    for (std::size_t r = 0; r < chosen.nodes.size(); ++r) {
      pieces[chosen.nodes[r]] = piece_union(pieces[chosen.nodes[r]], region.shares[r]);
    }
    out.run.ledger = std::move(region.ledger);
    out.run.trace = std::move(region.trace);
  }
  out.run.allocation = Allocation(std::move(pieces));
  return out;
}

}  // namespace fairdiv
