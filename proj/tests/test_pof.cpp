#include "doctest.h"

#include <random>

#include "fairdiv/error.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/pof.hpp"
#include "fairdiv/separating.hpp"
#include "support.hpp"

using namespace fairdiv;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const FairDivError& e) {
    return e.code();
  }
  FAIL("expected a FairDivError");
  return Errc::kInvalidArgument;
}

// Direct check of the partition definition: disjoint cover, sizes against
// epsilon*n/k - 1, and every member reached from its hub avoiding all hubs.
bool ref_valid_partition(const LinkedPartition& lp, const AgentGraph& g, bool complete) {
  const int n = g.n();
  if (complete && static_cast<int>(lp.hubs.size()) != lp.k) return false;
  if (static_cast<int>(lp.hubs.size()) < lp.k) return false;
  const Rational b = lp.epsilon * R(n) / R(lp.k) - R(1);
  if (lp.b != b) return false;
  std::set<int> hubs(lp.hubs.begin(), lp.hubs.end());
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int h : lp.hubs) ++seen[h];
  for (int h : lp.hubs) {
    const auto it = lp.sets.find(h);
    const std::vector<int> members = it == lp.sets.end() ? std::vector<int>{} : it->second;
    if (R(static_cast<std::int64_t>(members.size())) < b) return false;
    const auto reach = support::ref_reach_avoiding(g, h, hubs);
    for (int j : members) {
      ++seen[j];
      if (!reach.contains(j)) return false;
    }
  }
  if (lp.sets.size() > lp.hubs.size()) return false;
  for (int v = 0; v < n; ++v) {
    if (seen[v] > 1 || (complete && seen[v] == 0)) return false;
  }
  return true;
}

int isqrt(int n) {
  int k = 0;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

}  // namespace

TEST_CASE("path of nine: subpartition and completion") {
  const AgentGraph g = graphs::path(9);
  const auto sub = linked_subpartition(g, 3, R(1, 2));
  CHECK(sub.b == R(1, 2));
  CHECK(sub.hubs == std::vector<int>{2, 4, 6, 8});
  CHECK(sub.sets == std::map<int, std::vector<int>>{{2, {1}}, {4, {3}}, {6, {5}}, {8, {7}}});
  CHECK(validate_linked_partition(sub, g, PartitionForm::kSubpartition).ok);
  CHECK_FALSE(validate_linked_partition(sub, g, PartitionForm::kPartition).ok);
  const auto full = complete_partition(sub, g);
  CHECK(full.hubs == std::vector<int>{4, 6, 8});
  CHECK(full.sets == std::map<int, std::vector<int>>{{4, {0, 1, 2, 3}}, {6, {5}}, {8, {7}}});
  CHECK(validate_linked_partition(full, g, PartitionForm::kPartition).ok);
}

TEST_CASE("star of nine: the leaf case") {
  const AgentGraph g = graphs::star(9);
  const auto sub = linked_subpartition(g, 3, R(1, 2));
  CHECK(sub.hubs == std::vector<int>{1, 2, 3});
  CHECK(sub.sets == std::map<int, std::vector<int>>{{1, {0, 4}}, {2, {5, 6}}, {3, {7, 8}}});
  CHECK(complete_partition(sub, g) == sub);
}

TEST_CASE("validator catches each kind of defect") {
  const AgentGraph g = graphs::path(9);
  const auto good = complete_partition(linked_subpartition(g, 3, R(1, 2)), g);
  REQUIRE(validate_linked_partition(good, g, PartitionForm::kPartition).ok);

  auto twice = good;
  twice.sets[6].push_back(0);
  CHECK_FALSE(validate_linked_partition(twice, g, PartitionForm::kPartition).ok);

  auto uncovered = good;
  uncovered.sets[4] = {1, 2, 3};
  CHECK_FALSE(validate_linked_partition(uncovered, g, PartitionForm::kPartition).ok);
  CHECK(validate_linked_partition(uncovered, g, PartitionForm::kSubpartition).ok);

  auto unreachable = good;  // 5 cannot reach hub 8 without passing hub 6
  unreachable.sets[6] = {7};
  unreachable.sets[8] = {5};
  const auto bad_path = validate_linked_partition(unreachable, g, PartitionForm::kPartition);
  CHECK_FALSE(bad_path.ok);

  auto small = good;
  small.sets[6] = {};
  small.sets[4].push_back(5);
  std::sort(small.sets[4].begin(), small.sets[4].end());
  CHECK_FALSE(validate_linked_partition(small, g, PartitionForm::kPartition).ok);

  auto wrong_b = good;
  wrong_b.b = R(1);
  CHECK_FALSE(validate_linked_partition(wrong_b, g, PartitionForm::kPartition).ok);

  CHECK(code_of([&] { complete_partition(twice, g); }) == Errc::kInvalidSubpartition);
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { linked_subpartition(graphs::path(9), 1, R(1, 2)); }) == Errc::kKTooSmall);
  CHECK(code_of([] { linked_subpartition(graphs::empty(4), 2, R(1, 2)); }) == Errc::kDisconnected);
  CHECK(code_of([] { linked_subpartition(graphs::path(9), 3, R(0)); }) == Errc::kInvalidArgument);
}

TEST_CASE("partitions on many graphs pass both validators") {
  std::mt19937_64 rng(17);
  for (int n : {4, 5, 9, 16, 30, 64, 200}) {
    const int k = isqrt(n);
    std::vector<AgentGraph> gs{graphs::path(n), graphs::star(n), graphs::binary_tree(n), graphs::cycle(n),
                               graphs::complete(std::min(n, 30))};
    for (int r = 0; r < 10; ++r) gs.push_back(graphs::random_connected(n, static_cast<int>(rng() % (2 * n)), rng));
    if (k * k == n) gs.push_back(graphs::grid(k, k));
    for (const auto& g : gs) {
      const int kk = isqrt(g.n());
      const auto sub = linked_subpartition(g, kk, R(1, 2));
      CHECK(ref_valid_partition(sub, g, false));
      const auto full = complete_partition(sub, g);
      CHECK(ref_valid_partition(full, g, true));
      CHECK(validate_linked_partition(full, g, PartitionForm::kPartition).ok);
    }
  }
}

TEST_CASE("other epsilon and k values") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 60);
    const AgentGraph g = graphs::random_connected(n, static_cast<int>(rng() % n), rng);
    const int k = 2 + static_cast<int>(rng() % 4);
    const Rational eps(1 + static_cast<std::int64_t>(rng() % 3), 4);
    try {
      const auto sub = linked_subpartition(g, k, eps);
      CHECK(ref_valid_partition(sub, g, false));
      CHECK(ref_valid_partition(complete_partition(sub, g), g, true));
    } catch (const FairDivError& e) {
      CHECK(e.code() == Errc::kSubpartitionTooSmall);
    }
  }
}

TEST_CASE("price-of-fairness valuations and optimal welfare") {
  const auto lp = complete_partition(linked_subpartition(graphs::path(9), 3, R(1, 2)), graphs::path(9));
  const auto vals = pof_valuations(lp, 9);
  CHECK(support::ref_value(vals[4], R(0), R(1, 3)) == R(1));
  CHECK(support::ref_value(vals[6], R(1, 3), R(2, 3)) == R(1));
  CHECK(support::ref_value(vals[8], R(2, 3), R(1)) == R(1));
  CHECK(vals[0] == Valuation::uniform());
  const auto opt = optimal_welfare(vals);
  CHECK(opt.welfare == R(3));
  CHECK(welfare(opt.allocation, vals) == R(3));
  CHECK(opt.allocation[4] == Piece::interval(R(0), R(1, 3)));
}

TEST_CASE("optimal welfare gives each point to a highest-density agent") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto vals = random_valuations(rng, n);
    const auto opt = optimal_welfare(vals);
    CHECK(welfare(opt.allocation, vals) == opt.welfare);
    // No random allocation does better.
    for (int r = 0; r < 5; ++r) CHECK(welfare(support::random_allocation(rng, n), vals) <= opt.welfare);
  }
}

TEST_CASE("atom enumeration") {
  const std::vector<Valuation> vals(2, Valuation::uniform());
  std::uint64_t seen = 0;
  const auto visited = enumerate_atom_allocations(vals, graphs::complete(2), 3, Criterion::kAny, 1000,
                                                  [&](const AtomAllocation& a) {
                                                    ++seen;
                                                    CHECK(a.welfare == R(1));
                                                    CHECK(a.measures[0] + a.measures[1] == R(1));
                                                  });
  CHECK(visited == 8);
  CHECK(seen == 8);
  // Envy-free between two uniform agents on three atoms: impossible.
  CHECK(enumerate_atom_allocations(vals, graphs::complete(2), 3, Criterion::kLocallyEnvyFree, 1000,
                                   [](const AtomAllocation&) {}) == 0);
  CHECK(enumerate_atom_allocations(vals, graphs::complete(2), 4, Criterion::kLocallyEnvyFree, 1000,
                                   [](const AtomAllocation&) {}) == 6);
  CHECK(code_of([&] {
          enumerate_atom_allocations(vals, graphs::complete(2), 20, Criterion::kAny, 1000, [](const AtomAllocation&) {});
        }) == Errc::kTooLarge);
  const std::vector<Valuation> quarter{Valuation({R(0), R(1, 4), R(1)}, {R(4), R(0)}), Valuation::uniform()};
  CHECK(code_of([&] {
          enumerate_atom_allocations(quarter, graphs::complete(2), 3, Criterion::kAny, 1000, [](const AtomAllocation&) {});
        }) == Errc::kInvalidArgument);
}

TEST_CASE("oracle matches greedy when nothing is required") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<Valuation> vals;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> w;
      std::int64_t total = 0;
      std::vector<std::int64_t> raw;
      for (int a = 0; a < m; ++a) {
        raw.push_back(static_cast<std::int64_t>(rng() % 5));
        total += raw.back();
      }
      if (total == 0) {
        raw[0] = 1;
        total = 1;
      }
      for (auto x : raw) w.push_back(R(x, total));
      std::vector<Rational> bps;
      for (int a = 0; a <= m; ++a) bps.push_back(R(a, m));
      vals.push_back(Valuation::from_segment_values(bps, w));
    }
    const auto r = brute_force_best_fair_welfare(vals, graphs::complete(n), m, Criterion::kAny);
    CHECK(r.welfare == optimal_welfare(vals).welfare);
    CHECK(welfare(r.allocation, vals) == r.welfare);
  }
}

TEST_CASE("oracle results do not depend on the worker count") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Valuation> vals;
    for (int i = 0; i < 4; ++i) {
      std::vector<Rational> w{R(1 + static_cast<std::int64_t>(rng() % 4)), R(static_cast<std::int64_t>(rng() % 4)),
                              R(1 + static_cast<std::int64_t>(rng() % 4)), R(static_cast<std::int64_t>(rng() % 4))};
      Rational t = w[0] + w[1] + w[2] + w[3];
      for (auto& x : w) x = x / t;
      vals.push_back(Valuation::from_segment_values({R(0), R(1, 4), R(1, 2), R(3, 4), R(1)}, w));
    }
    const AgentGraph g = graphs::cycle(4);
    const auto one = brute_force_best_fair_welfare(vals, g, 8, Criterion::kLocallyProportional, {1'000'000, 1});
    const auto four = brute_force_best_fair_welfare(vals, g, 8, Criterion::kLocallyProportional, {1'000'000, 4});
    CHECK(one.welfare == four.welfare);
    CHECK(one.allocation == four.allocation);
    CHECK(one.feasible == four.feasible);
    CHECK(is_locally_proportional(one.allocation, g, vals).satisfied);
  }
}

TEST_CASE("locally proportional oracle on the four-agent fixture beats the fixture welfare") {
  const auto ex = example_2_1();
  const Rational fixture = welfare(ex.allocation, ex.valuations);
  CHECK(fixture == R(9, 8));
  const auto r = brute_force_best_fair_welfare(ex.valuations, graphs::cycle(4), 8, Criterion::kLocallyProportional);
  CHECK(r.welfare >= fixture);
  CHECK(support::ref_lp(r.allocation, graphs::cycle(4), ex.valuations));
}

TEST_CASE("no envy-free atom allocation exists for the star of nine on sixths") {
  const AgentGraph g = graphs::star(9);
  const auto lp = complete_partition(linked_subpartition(g, 3, R(1, 2)), g);
  CHECK(code_of([&] { brute_force_best_fair_welfare(pof_valuations(lp, 9), g, 6, Criterion::kLocallyEnvyFree); }) ==
        Errc::kInfeasible);
}

TEST_CASE("certificate checks") {
  LinkedPartition lp;
  lp.k = 2;
  lp.epsilon = R(1, 2);
  lp.b = R(0);
  lp.hubs = {0, 1};
  lp.sets = {{0, {2}}, {1, {3}}};
  const std::vector<Rational> mu{R(1, 4), R(1, 4), R(1, 4), R(1, 4)};
  const std::vector<Rational> own{R(1, 2), R(1, 2), R(1, 4), R(1, 4)};
  const auto ok = certify_lef(lp, mu, own);
  CHECK(ok.ok());
  CHECK(ok.welfare == R(3, 2));
  CHECK(ok.bound == R(5));
  CHECK_FALSE(ok.in_asymptotic_regime);
  CHECK_FALSE(ok.hub_share_bound.has_value());

  const std::vector<Rational> mu_bad{R(1, 2), R(1, 4), R(1, 8), R(1, 8)};
  const auto bad = certify_lef(lp, mu_bad, own);
  CHECK_FALSE(bad.mu_monotone);
  CHECK_FALSE(bad.ok());

  lp.k = 4;
  const std::vector<Rational> starving{R(1), R(1), R(0), R(1, 2)};
  const auto regime = certify_lef(lp, mu, starving);
  CHECK(regime.in_asymptotic_regime);
  REQUIRE(regime.hub_share_bound.has_value());
  CHECK_FALSE(*regime.hub_share_bound);

  const std::vector<Rational> rich{R(3), R(3), R(0), R(0)};
  lp.k = 2;
  CHECK_FALSE(certify_lef(lp, mu, rich).welfare_bound);
}

TEST_CASE("experiment at desk scale on the path") {
  PofOptions opts;
  opts.atoms = 6;
  const auto ex = pof_experiment(graphs::path(9), opts);
  CHECK(ex.k == 3);
  CHECK(ex.summary.optimal_welfare == R(3));
  CHECK(ex.bound == R(5));
  CHECK(ex.summary.from_oracle);
  CHECK(ex.lef_allocations > 0);
  CHECK(ex.certificate_failures == 0);
  CHECK(ex.summary.fair_welfare <= R(5));
  CHECK(ex.summary.ratio == ex.summary.optimal_welfare / ex.summary.fair_welfare);
}

TEST_CASE("experiment without atoms uses the bound") {
  const auto ex = pof_experiment(graphs::star(100));
  CHECK(ex.k == 10);
  CHECK(ex.summary.optimal_welfare == R(10));
  CHECK_FALSE(ex.summary.from_oracle);
  CHECK(ex.summary.ratio == R(2));
}

TEST_CASE("graph generator") {
  CHECK(generate_graph("path", 5, 0) == graphs::path(5));
  CHECK(generate_graph("grid", 9, 0) == graphs::grid(3, 3));
  CHECK(generate_graph("random", 20, 5) == generate_graph("random", 20, 5));
  CHECK(support::ref_connected(generate_graph("random", 20, 5)));
  CHECK(code_of([] { generate_graph("moebius", 5, 0); }) == Errc::kInvalidArgument);
}
