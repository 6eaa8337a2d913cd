#include "fairdiv/pof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

std::string node_str(int v) { return std::to_string(v); }

int isqrt(int n) {
  int k = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (k * k > n) --k;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

Rational threshold(int n, int k, const Rational& epsilon) {
  return epsilon * Rational(n) / Rational(k) - Rational(1);
}

// Multi-source BFS from the hubs that never passes through a hub. Every
// node with owner -1 that is reached gets the nearest hub, smallest id on
// ties.
void assign_to_nearest(const AgentGraph& g, const std::vector<int>& hubs, std::vector<int>& owner,
                       std::map<int, std::vector<int>>& sets) {
  const int n = g.n();
  std::vector<int> nearest(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<bool> is_hub(static_cast<std::size_t>(n), false);
  std::vector<int> layer;
  for (int h : hubs) {
    is_hub[h] = true;
    nearest[h] = h;
    dist[h] = 0;
    layer.push_back(h);
  }
  while (!layer.empty()) {
    std::vector<int> next;
    for (int u : layer) {
      for (int v : g.undirected_neighbors(u)) {
        if (is_hub[v]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          nearest[v] = nearest[u];
          next.push_back(v);
        } else if (dist[v] == dist[u] + 1) {
          nearest[v] = std::min(nearest[v], nearest[u]);
        }
      }
    }
    layer = std::move(next);
  }
  for (int v = 0; v < n; ++v) {
    if (is_hub[v] || owner[v] >= 0 || nearest[v] < 0) continue;
    owner[v] = nearest[v];
    sets[nearest[v]].push_back(v);
  }
  for (auto& [hub, members] : sets) std::sort(members.begin(), members.end());
}

}  // namespace

PartitionCheck validate_linked_partition(const LinkedPartition& lp, const AgentGraph& g, PartitionForm form) {
  PartitionCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  const int n = g.n();
  const std::size_t k = static_cast<std::size_t>(lp.k);
  if (form == PartitionForm::kPartition ? lp.hubs.size() != k : lp.hubs.size() < k) {
    fail("hub count " + std::to_string(lp.hubs.size()) + " vs k = " + std::to_string(lp.k));
  }
  if (lp.b != threshold(n, lp.k, lp.epsilon)) fail("b != epsilon*n/k - 1");

  std::vector<int> owner(static_cast<std::size_t>(n), -2);  // -2 unused, -1 hub
  for (int h : lp.hubs) {
    if (h < 0 || h >= n) {
      fail("hub " + node_str(h) + " out of range");
      return check;
    }
    if (owner[h] != -2) fail("hub " + node_str(h) + " listed twice");
    owner[h] = -1;
  }
  for (const auto& [hub, members] : lp.sets) {
    if (hub < 0 || hub >= n || owner[hub] != -1) {
      fail("set keyed by non-hub " + node_str(hub));
      continue;
    }
    if (Rational(static_cast<std::int64_t>(members.size())) < lp.b) {
      fail("set of hub " + node_str(hub) + " has " + std::to_string(members.size()) + " < b = " + lp.b.str());
    }
    for (int j : members) {
      if (j < 0 || j >= n) {
        fail("member " + node_str(j) + " out of range");
        return check;
      }
      if (owner[j] != -2) {
        fail("node " + node_str(j) + " appears twice");
        continue;
      }
      owner[j] = hub;
    }
  }
  for (int h : lp.hubs) {
    if (!lp.sets.contains(h) && Rational(0) < lp.b) fail("hub " + node_str(h) + " has no set");
  }
  if (form == PartitionForm::kPartition) {
    for (int v = 0; v < n; ++v) {
      if (owner[v] == -2) fail("node " + node_str(v) + " not covered");
    }
  }

  // Members must sit in a component of g minus the hubs that touches their hub.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (owner[s] == -1 || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.undirected_neighbors(u)) {
        if (owner[v] != -1 && comp[v] < 0) {
          comp[v] = comps;
          stack.push_back(v);
        }
      }
    }
    ++comps;
  }
  for (const auto& [hub, members] : lp.sets) {
    if (hub < 0 || hub >= n || owner[hub] != -1) continue;
    std::set<int> touching;
    for (int v : g.undirected_neighbors(hub)) {
      if (owner[v] != -1) touching.insert(comp[v]);
    }
    for (int j : members) {
      if (j >= 0 && j < n && owner[j] == hub && !touching.contains(comp[j])) {
        fail("node " + node_str(j) + " cannot reach hub " + node_str(hub) + " avoiding other hubs");
      }
    }
  }
  return check;
}

LinkedPartition linked_subpartition(const AgentGraph& g, int k, const Rational& epsilon) {
  if (k < 2) throw FairDivError(Errc::kKTooSmall, "k = " + std::to_string(k) + " < 2");
  if (!(Rational(0) < epsilon) || Rational(1) < epsilon) {
    throw FairDivError(Errc::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
  const int n = g.n();
  const SpanningTree tree = spanning_tree(g, 0);
  LinkedPartition lp;
  lp.k = k;
  lp.epsilon = epsilon;
  lp.b = threshold(n, k, epsilon);

  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (tree.children[v].empty()) leaves.push_back(v);
  }

  if (static_cast<int>(leaves.size()) >= k) {
    // Any k leaves; removing leaves keeps the rest of the tree connected, so
    // every remaining node reaches every chosen leaf through non-hubs.
    lp.hubs.assign(leaves.begin(), leaves.begin() + k);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (!std::binary_search(lp.hubs.begin(), lp.hubs.end(), v)) rest.push_back(v);
    }
    const std::size_t base = rest.size() / static_cast<std::size_t>(k);
    const std::size_t extra = rest.size() % static_cast<std::size_t>(k);
    std::size_t at = 0;
    for (int r = 0; r < k; ++r) {
      const std::size_t len = base + (static_cast<std::size_t>(r) < extra ? 1 : 0);
      lp.sets[lp.hubs[r]] = std::vector<int>(rest.begin() + static_cast<std::ptrdiff_t>(at),
                                             rest.begin() + static_cast<std::ptrdiff_t>(at + len));
      at += len;
    }
    return lp;
  }

  // Fewer than k leaves: leaves start in L, then every other node, children
  // first, is either labeled with a downward-reachable hub whose set is still
  // below b, or becomes a hub itself.
  std::vector<bool> in_l(static_cast<std::size_t>(n), false);
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> reachable(static_cast<std::size_t>(n));
  auto open = [&](int w) { return Rational(count[w]) < lp.b; };
  for (int v : leaves) in_l[v] = true;

  for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
    const int v = *it;
    if (in_l[v]) continue;
    std::vector<int> cand;
    for (int c : tree.children[v]) {
      if (in_l[c]) {
        cand.push_back(c);
      } else {
        for (int w : reachable[c]) cand.push_back(w);
        std::vector<int>().swap(reachable[c]);
      }
    }
    std::erase_if(cand, [&](int w) { return !open(w); });
    if (cand.empty()) {
      in_l[v] = true;
      continue;
    }
    const int w = *std::min_element(cand.begin(), cand.end());
    label[v] = w;
    ++count[w];
    if (!open(w)) std::erase(cand, w);
    reachable[v] = std::move(cand);
  }

  const int root = tree.root;
  std::vector<int> hubs;
  for (int v = 0; v < n; ++v) {
    if (in_l[v] && v != root) hubs.push_back(v);
  }
  // Root placed in L: drop it. Otherwise keep only hubs whose sets reached b
  // (all of them when no hub is still below b).
  if (!in_l[root]) std::erase_if(hubs, [&](int w) { return open(w); });
  if (static_cast<int>(hubs.size()) < k) {
    throw FairDivError(Errc::kSubpartitionTooSmall, "only " + std::to_string(hubs.size()) +
                                                        " hubs with full sets for k = " + std::to_string(k));
  }
  lp.hubs = hubs;
  for (int h : hubs) lp.sets[h];
  for (int v = 0; v < n; ++v) {
    if (label[v] >= 0 && lp.sets.contains(label[v])) lp.sets[label[v]].push_back(v);
  }
  return lp;
}

LinkedPartition complete_partition(const LinkedPartition& lp, const AgentGraph& g) {
  const auto check = validate_linked_partition(lp, g, PartitionForm::kSubpartition);
  if (!check.ok) throw FairDivError(Errc::kInvalidSubpartition, check.failures.front());
  const int n = g.n();
  LinkedPartition out = lp;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int h : out.hubs) {
    owner[h] = h;
    out.sets[h];
  }
  for (const auto& [hub, members] : out.sets) {
    for (int j : members) owner[j] = hub;
  }
  assign_to_nearest(g, out.hubs, owner, out.sets);
  while (static_cast<int>(out.hubs.size()) > out.k) {
    const int gone = out.hubs.front();
    out.hubs.erase(out.hubs.begin());
    owner[gone] = -1;
    for (int j : out.sets[gone]) owner[j] = -1;
    out.sets.erase(gone);
    assign_to_nearest(g, out.hubs, owner, out.sets);
  }
  return out;
}

std::vector<Valuation> pof_valuations(const LinkedPartition& lp, int n) {
  std::vector<Valuation> vals(static_cast<std::size_t>(n), Valuation::uniform());
  const int k = static_cast<int>(lp.hubs.size());
  for (int r = 0; r < k; ++r) {
    std::vector<Rational> bps{0};
    std::vector<Rational> dens;
    if (r > 0) {
      bps.emplace_back(r, k);
      dens.emplace_back(0);
    }
    bps.emplace_back(r + 1, k);
    dens.emplace_back(k);
    if (r + 1 < k) {
      bps.emplace_back(1);
      dens.emplace_back(0);
    }
    vals[lp.hubs[r]] = Valuation(std::move(bps), std::move(dens));
  }
  return vals;
}

WelfareResult optimal_welfare(std::span<const Valuation> vals) {
  if (vals.empty()) throw FairDivError(Errc::kInvalidArgument, "no agents");
  std::vector<Rational> bps;
  for (const auto& v : vals) bps.insert(bps.end(), v.breakpoints().begin(), v.breakpoints().end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<std::vector<Interval>> parts(vals.size());
  Rational total;
  for (std::size_t s = 0; s + 1 < bps.size(); ++s) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < vals.size(); ++i) {
      if (vals[i].density_at(bps[s]) > vals[best].density_at(bps[s])) best = i;
    }
    total += vals[best].density_at(bps[s]) * (bps[s + 1] - bps[s]);
    parts[best].push_back({bps[s], bps[s + 1]});
  }
  std::vector<Piece> pieces;
  for (auto& p : parts) pieces.emplace_back(std::move(p));
  return {total, Allocation(std::move(pieces))};
}

Rational welfare(const Allocation& alloc, std::span<const Valuation> vals) {
  if (alloc.size() != vals.size()) throw FairDivError(Errc::kSizeMismatch, "one valuation per piece required");
  Rational total;
  for (std::size_t i = 0; i < vals.size(); ++i) total += value(vals[i], alloc[i]);
  return total;
}

namespace {

std::int64_t to_i64(const Rational& r) {
  if (!r.fits_int64() || r.denominator_i64() != 1) {
    throw FairDivError(Errc::kTooLarge, "scaled atom value " + r.str() + " is not a 64-bit integer");
  }
  return r.numerator_i64();
}

// Atom values of every agent scaled to integers, plus the fairness test.
class AtomTable {
 public:
  AtomTable(std::span<const Valuation> vals, const AgentGraph& g, int atoms, Criterion criterion,
            std::uint64_t cap)
      : n_(static_cast<int>(vals.size())), m_(atoms), criterion_(criterion), graph_(g) {
    if (g.n() != n_ || n_ == 0) throw FairDivError(Errc::kSizeMismatch, "one valuation per graph node required");
    if (m_ < 1) throw FairDivError(Errc::kInvalidArgument, "at least one atom required");
    for (const auto& v : vals) {
      for (const auto& b : v.breakpoints()) {
        if ((b * Rational(m_)).denominator_str() != "1") {
          throw FairDivError(Errc::kInvalidArgument,
                             "breakpoint " + b.str() + " is not on the " + std::to_string(m_) + "-atom grid");
        }
      }
    }
    total_ = 1;
    for (int r = 0; r < m_; ++r) {
      if (total_ > cap / static_cast<std::uint64_t>(n_)) {
        throw FairDivError(Errc::kTooLarge, std::to_string(n_) + "^" + std::to_string(m_) +
                                                " assignments exceed the cap of " + std::to_string(cap));
      }
      total_ *= static_cast<std::uint64_t>(n_);
    }
    Rational common(1);
    for (int i = 0; i < n_; ++i) {
      std::vector<Rational> atom_values;
      Rational den(1);
      for (int r = 0; r < m_; ++r) {
        atom_values.push_back(value(vals[i], Rational(r, m_), Rational(r + 1, m_)));
        den = lcm_denominator(Rational(1) / den, atom_values.back());
      }
      const Rational scale = den;
      scale_.push_back(scale);
      std::vector<std::int64_t> row;
      for (const auto& a : atom_values) row.push_back(to_i64(a * scale));
      weights_.push_back(std::move(row));
      common = lcm_denominator(Rational(1) / common, Rational(1) / scale);
    }
    common_ = common;
    for (int i = 0; i < n_; ++i) welfare_factor_.push_back(to_i64(common_ / scale_[i]));
  }

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t total() const { return total_; }

  // Fills bundle[i * n + j] = scaled V_i(A_j) and reports feasibility.
  bool evaluate(const std::vector<int>& owner, std::vector<std::int64_t>& bundle) const {
    std::fill(bundle.begin(), bundle.end(), 0);
    for (int i = 0; i < n_; ++i) {
      const auto& w = weights_[i];
      std::int64_t* row = &bundle[static_cast<std::size_t>(i) * n_];
      for (int r = 0; r < m_; ++r) row[owner[r]] += w[r];
    }
    if (criterion_ == Criterion::kAny) return true;
    for (int i = 0; i < n_; ++i) {
      const std::int64_t* row = &bundle[static_cast<std::size_t>(i) * n_];
      const auto& nbrs = graph_.out_neighbors(i);
      if (criterion_ == Criterion::kLocallyEnvyFree) {
        for (int j : nbrs) {
          if (row[i] < row[j]) return false;
        }
      } else if (!nbrs.empty()) {
        std::int64_t sum = 0;
        for (int j : nbrs) sum += row[j];
        if (row[i] * static_cast<std::int64_t>(nbrs.size()) < sum) return false;
      }
    }
    return true;
  }

  std::int64_t scaled_welfare(const std::vector<std::int64_t>& bundle) const {
    std::int64_t total = 0;
    for (int i = 0; i < n_; ++i) total += bundle[static_cast<std::size_t>(i) * n_ + i] * welfare_factor_[i];
    return total;
  }

  Rational own_value(const std::vector<std::int64_t>& bundle, int i) const {
    return Rational(bundle[static_cast<std::size_t>(i) * n_ + i]) / scale_[i];
  }
  Rational welfare(std::int64_t scaled) const { return Rational(scaled) / common_; }

  void decode(std::uint64_t index, std::vector<int>& owner) const {
    for (int r = m_ - 1; r >= 0; --r) {
      owner[r] = static_cast<int>(index % static_cast<std::uint64_t>(n_));
      index /= static_cast<std::uint64_t>(n_);
    }
  }

  void advance(std::vector<int>& owner) const {
    for (int r = m_ - 1; r >= 0; --r) {
      if (++owner[r] < n_) return;
      owner[r] = 0;
    }
  }

  Allocation allocation(const std::vector<int>& owner) const {
    std::vector<std::vector<Interval>> parts(static_cast<std::size_t>(n_));
    for (int r = 0; r < m_; ++r) parts[owner[r]].push_back({Rational(r, m_), Rational(r + 1, m_)});
    std::vector<Piece> pieces;
    for (auto& p : parts) pieces.emplace_back(std::move(p));
    return Allocation(std::move(pieces));
  }

 private:
  int n_;
  int m_;
  Criterion criterion_;
  const AgentGraph& graph_;
  std::uint64_t total_ = 0;
  std::vector<std::vector<std::int64_t>> weights_;
  std::vector<Rational> scale_;
  Rational common_;
  std::vector<std::int64_t> welfare_factor_;
};

}  // namespace

std::uint64_t enumerate_atom_allocations(std::span<const Valuation> vals, const AgentGraph& g, int atoms,
                                         Criterion criterion, std::uint64_t cap,
                                         const std::function<void(const AtomAllocation&)>& visit) {
  const AtomTable table(vals, g, atoms, criterion, cap);
  const int n = table.n();
  std::vector<int> owner(static_cast<std::size_t>(atoms), 0);
  std::vector<std::int64_t> bundle(static_cast<std::size_t>(n) * n);
  std::vector<Rational> own(static_cast<std::size_t>(n));
  std::vector<Rational> mu(static_cast<std::size_t>(n));
  std::uint64_t visited = 0;
  for (std::uint64_t idx = 0; idx < table.total(); ++idx, table.advance(owner)) {
    if (!table.evaluate(owner, bundle)) continue;
    std::vector<int> held(static_cast<std::size_t>(n), 0);
    for (int o : owner) ++held[o];
    for (int i = 0; i < n; ++i) {
      own[i] = table.own_value(bundle, i);
      mu[i] = Rational(held[i], atoms);
    }
    visit(AtomAllocation{owner, own, mu, table.welfare(table.scaled_welfare(bundle))});
    ++visited;
  }
  return visited;
}

OracleResult brute_force_best_fair_welfare(std::span<const Valuation> vals, const AgentGraph& g, int atoms,
                                           Criterion criterion, const OracleOptions& options) {
  const AtomTable table(vals, g, atoms, criterion, options.cap);
  const std::uint64_t total = table.total();
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, total));

  struct Best {
    std::int64_t welfare = std::numeric_limits<std::int64_t>::min();
    std::uint64_t index = 0;
    std::uint64_t feasible = 0;
  };
  std::vector<Best> best(static_cast<std::size_t>(workers));
  auto scan = [&](int w) {
    const std::uint64_t begin = total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(w);
    const std::uint64_t end = w + 1 == workers ? total
                                               : total / static_cast<std::uint64_t>(workers) *
                                                     static_cast<std::uint64_t>(w + 1);
    std::vector<int> owner(static_cast<std::size_t>(table.m()));
    std::vector<std::int64_t> bundle(static_cast<std::size_t>(table.n()) * table.n());
    table.decode(begin, owner);
    Best& b = best[w];
    for (std::uint64_t idx = begin; idx < end; ++idx, table.advance(owner)) {
      if (!table.evaluate(owner, bundle)) continue;
      ++b.feasible;
      const std::int64_t wf = table.scaled_welfare(bundle);
      if (wf > b.welfare) {
        b.welfare = wf;
        b.index = idx;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }

  Best overall;
  for (const auto& b : best) {
    overall.feasible += b.feasible;
    if (b.feasible > 0 && (b.welfare > overall.welfare ||
                           (b.welfare == overall.welfare && b.index < overall.index))) {
      overall.welfare = b.welfare;
      overall.index = b.index;
    }
  }
  if (overall.feasible == 0) {
    throw FairDivError(Errc::kInfeasible, "no assignment of " + std::to_string(atoms) + " atoms passes");
  }
  std::vector<int> owner(static_cast<std::size_t>(atoms));
  table.decode(overall.index, owner);
  return {table.welfare(overall.welfare), table.allocation(owner), overall.feasible, total};
}

LefCertificate certify_lef(const LinkedPartition& lp, std::span<const Rational> measures,
                           std::span<const Rational> own_values) {
  LefCertificate cert;
  const Rational& eps = lp.epsilon;
  const Rational k(lp.k);
  cert.bound = Rational(2) / eps + Rational(1);
  cert.in_asymptotic_regime = eps * k - Rational(1) >= eps * k / Rational(2);
  bool share_ok = true;
  for (const auto& [hub, members] : lp.sets) {
    Rational members_welfare;
    for (int j : members) {
      members_welfare += own_values[j];
      if (measures[j] < measures[hub]) {
        cert.mu_monotone = false;
        cert.failures.push_back("mu of " + node_str(j) + " below mu of hub " + node_str(hub));
      }
    }
    if (cert.in_asymptotic_regime && members_welfare < eps * own_values[hub] / Rational(2)) {
      share_ok = false;
      cert.failures.push_back("members of hub " + node_str(hub) + " hold less than epsilon/2 of its value");
    }
  }
  if (cert.in_asymptotic_regime) cert.hub_share_bound = share_ok;
  for (const auto& v : own_values) cert.welfare += v;
  cert.welfare_bound = cert.welfare <= cert.bound;
  if (!cert.welfare_bound) cert.failures.push_back("welfare " + cert.welfare.str() + " above " + cert.bound.str());
  return cert;
}

LefCertificate certify_lef(const LinkedPartition& lp, const Allocation& alloc, std::span<const Valuation> vals) {
  std::vector<Rational> mu;
  std::vector<Rational> own;
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    mu.push_back(measure(alloc[i]));
    own.push_back(value(vals[i], alloc[i]));
  }
  return certify_lef(lp, mu, own);
}

PofExperiment pof_experiment(const AgentGraph& g, const PofOptions& options) {
  PofExperiment ex;
  ex.n = g.n();
  ex.k = isqrt(ex.n);
  if (ex.k < 2) throw FairDivError(Errc::kKTooSmall, "floor(sqrt(" + std::to_string(ex.n) + ")) < 2");
  const Rational eps(1, 2);
  ex.partition = complete_partition(linked_subpartition(g, ex.k, eps), g);
  const auto check = validate_linked_partition(ex.partition, g, PartitionForm::kPartition);
  if (!check.ok) throw FairDivError(Errc::kInvalidSubpartition, check.failures.front());
  const auto vals = pof_valuations(ex.partition, ex.n);
  ex.summary.optimal_welfare = optimal_welfare(vals).welfare;
  ex.bound = Rational(2) / eps + Rational(1);

  if (options.atoms) {
    Rational best(-1);
    ex.lef_allocations = enumerate_atom_allocations(
        vals, g, *options.atoms, Criterion::kLocallyEnvyFree, options.oracle.cap, [&](const AtomAllocation& a) {
          if (!certify_lef(ex.partition, a.measures, a.own_values).ok()) ++ex.certificate_failures;
          if (a.welfare > best) best = a.welfare;
        });
    if (ex.lef_allocations > 0) {
      ex.summary.fair_welfare = best;
      ex.summary.from_oracle = true;
    }
  }
  if (!ex.summary.from_oracle) ex.summary.fair_welfare = ex.bound;
  ex.summary.ratio = ex.summary.optimal_welfare / ex.summary.fair_welfare;
  return ex;
}

AgentGraph generate_graph(std::string_view family, int n, std::uint64_t seed) {
  if (n < 1) throw FairDivError(Errc::kInvalidArgument, "graph needs at least one node");
  if (family == "random") {
    std::mt19937_64 rng(seed);
    return graphs::random_connected(n, n, rng);
  }
  auto g = graphs::named(family, n);
  if (!g) throw FairDivError(Errc::kInvalidArgument, "unknown graph family \"" + std::string(family) + "\"");
  return *g;
}

}  // namespace fairdiv
