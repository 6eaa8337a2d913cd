// Independent reference computations and random generators shared by the
// test binaries. Nothing here calls the library routine it is used to check.
#ifndef FAIRDIV_TESTS_SUPPORT_HPP_
#define FAIRDIV_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "fairdiv/cake.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/graph.hpp"
#include "fairdiv/rational.hpp"

namespace support {

using fairdiv::AgentGraph;
using fairdiv::Allocation;
using fairdiv::Interval;
using fairdiv::Piece;
using fairdiv::Rational;
using fairdiv::Valuation;

// Integral of the density over [lo, hi) segment by segment.
inline Rational ref_value(const Valuation& v, const Rational& lo, const Rational& hi) {
  Rational total;
  const auto& b = v.breakpoints();
  for (std::size_t r = 0; r + 1 < b.size(); ++r) {
    const Rational a = fairdiv::max(lo, b[r]);
    const Rational c = fairdiv::min(hi, b[r + 1]);
    if (a < c) total += (c - a) * v.densities()[r];
  }
  return total;
}

inline Rational ref_value(const Valuation& v, const Piece& p) {
  Rational total;
  for (const auto& iv : p.intervals()) total += ref_value(v, iv.lo, iv.hi);
  return total;
}

inline Rational ref_measure(const Piece& p) {
  Rational total;
  for (const auto& iv : p.intervals()) total += iv.hi - iv.lo;
  return total;
}

inline bool ref_lef(const Allocation& a, const AgentGraph& g, const std::vector<Valuation>& vals) {
  for (int i = 0; i < g.n(); ++i) {
    const Rational own = ref_value(vals[i], a[i]);
    for (int j : g.out_neighbors(i)) {
      if (ref_value(vals[i], a[j]) > own) return false;
    }
  }
  return true;
}

inline bool ref_lp(const Allocation& a, const AgentGraph& g, const std::vector<Valuation>& vals) {
  for (int i = 0; i < g.n(); ++i) {
    const auto& nb = g.out_neighbors(i);
    if (nb.empty()) continue;
    Rational sum;
    for (int j : nb) sum += ref_value(vals[i], a[j]);
    if (ref_value(vals[i], a[i]) * Rational(static_cast<std::int64_t>(nb.size())) < sum) return false;
  }
  return true;
}

inline bool ref_global_ef(const Allocation& a, const std::vector<Valuation>& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t j = 0; j < vals.size(); ++j) {
      if (ref_value(vals[i], a[j]) > ref_value(vals[i], a[i])) return false;
    }
  }
  return true;
}

// Three-colour depth-first search, optionally ignoring one node.
inline bool ref_has_cycle(const AgentGraph& g, int skip = -1) {
  std::vector<int> colour(static_cast<std::size_t>(g.n()), 0);
  std::function<bool(int)> dfs = [&](int u) {
    colour[u] = 1;
    for (int v : g.out_neighbors(u)) {
      if (v == skip) continue;
      if (colour[v] == 1) return true;
      if (colour[v] == 0 && dfs(v)) return true;
    }
    colour[u] = 2;
    return false;
  };
  for (int s = 0; s < g.n(); ++s) {
    if (s != skip && colour[s] == 0 && dfs(s)) return true;
  }
  return false;
}

// Nodes reachable from `from` over undirected edges whose interior avoids
// `blocked`.
inline std::set<int> ref_reach_avoiding(const AgentGraph& g, int from, const std::set<int>& blocked) {
  std::set<int> seen;
  std::vector<int> stack;
  for (int v : g.undirected_neighbors(from)) {
    if (!blocked.contains(v) && seen.insert(v).second) stack.push_back(v);
  }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.undirected_neighbors(u)) {
      if (!blocked.contains(v) && seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen;
}

inline bool ref_connected(const AgentGraph& g) {
  if (g.n() == 0) return true;
  std::set<int> seen = ref_reach_avoiding(g, 0, {});
  seen.insert(0);
  return static_cast<int>(seen.size()) == g.n();
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// Random rational in [0, 1] with denominator up to max_den.
inline Rational random_point(std::mt19937_64& rng, int max_den = 24) {
  const auto den = static_cast<std::int64_t>(1 + below(rng, static_cast<std::uint64_t>(max_den)));
  return Rational(static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(den + 1))), den);
}

// Cuts the cake at random points and deals the intervals to n agents.
inline Allocation random_allocation(std::mt19937_64& rng, int n, int max_den = 24) {
  std::set<Rational> cuts;
  const int count = static_cast<int>(below(rng, static_cast<std::uint64_t>(2 * n + 1)));
  for (int r = 0; r < count; ++r) cuts.insert(random_point(rng, max_den));
  cuts.insert(Rational(0));
  cuts.insert(Rational(1));
  std::vector<Rational> pts(cuts.begin(), cuts.end());
  std::vector<std::vector<Interval>> parts(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r + 1 < pts.size(); ++r) {
    parts[below(rng, static_cast<std::uint64_t>(n))].push_back({pts[r], pts[r + 1]});
  }
  std::vector<Piece> pieces;
  for (auto& p : parts) pieces.emplace_back(std::move(p));
  return Allocation(std::move(pieces));
}

// Random directed graph with each ordered pair present with probability p/q.
inline AgentGraph random_digraph(std::mt19937_64& rng, int n, int p = 1, int q = 2) {
  std::vector<fairdiv::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && static_cast<int>(below(rng, static_cast<std::uint64_t>(q))) < p) edges.emplace_back(i, j);
    }
  }
  return AgentGraph(n, edges);
}

inline AgentGraph random_subgraph(std::mt19937_64& rng, const AgentGraph& g) {
  std::vector<fairdiv::Edge> kept;
  for (const auto& e : g.edges()) {
    if (below(rng, 2) == 0) kept.push_back(e);
  }
  return AgentGraph(g.n(), kept);
}

// Partial allocation over 2(n+1) equal atoms with atom-wise random
// valuations that favour the agent's own atoms. Returns nullopt unless the
// pieces are envy-free and every agent dominates at least n-2 others, both
// decided with ref_value.
inline std::optional<fairdiv::ExtensionInstance> random_extension_instance(std::mt19937_64& rng, int n) {
  const int m = 2 * (n + 1);
  std::vector<int> atoms(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) atoms[a] = a;
  std::shuffle(atoms.begin(), atoms.end(), rng);
  std::vector<int> owner(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) owner[atoms[r]] = r <= n ? r : static_cast<int>(below(rng, static_cast<std::uint64_t>(n + 1)));
  std::vector<Piece> atom_pieces;
  for (int a = 0; a < m; ++a) atom_pieces.push_back(Piece::interval(Rational(a, m), Rational(a + 1, m)));
  std::vector<std::vector<Interval>> parts(static_cast<std::size_t>(n + 1));
  for (int a = 0; a < m; ++a) parts[owner[a]].push_back({Rational(a, m), Rational(a + 1, m)});
  std::vector<Piece> pieces;
  for (auto& p : parts) pieces.emplace_back(std::move(p));
  const Piece residue = pieces.back();
  pieces.pop_back();

  std::vector<Valuation> vals;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(m));
    std::int64_t total = 0;
    for (int a = 0; a < m; ++a) {
      w[a] = static_cast<std::int64_t>(below(rng, 4));
      if (owner[a] == i) w[a] += 1 + static_cast<std::int64_t>(below(rng, 5));
      total += w[a];
    }
    std::vector<Rational> values;
    for (auto x : w) values.push_back(Rational(x, total));
    vals.push_back(Valuation::from_piece_values(atom_pieces, values));
  }
  for (int i = 0; i < n; ++i) {
    const Rational own = ref_value(vals[i], pieces[i]);
    const Rational res = ref_value(vals[i], residue);
    int dominated = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational other = ref_value(vals[i], pieces[j]);
      if (other > own) return std::nullopt;
      if (own >= other + res) ++dominated;
    }
    if (dominated < n - 2) return std::nullopt;
  }
  return fairdiv::ExtensionInstance{std::move(vals), fairdiv::PartialAllocation(std::move(pieces), residue)};
}

inline std::int64_t protocol1_queries(std::int64_t n) { return (n * n + 3 * n - 4) / 2; }

}  // namespace support

#endif  // FAIRDIV_TESTS_SUPPORT_HPP_
