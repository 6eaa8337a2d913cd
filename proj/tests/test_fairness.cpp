#include "doctest.h"

#include <random>

#include "fairdiv/error.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/fixtures.hpp"
#include "support.hpp"

using namespace fairdiv;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Agent 0 has density 2 on [0,1/4) and [3/4,1]; the rest are uniform.
std::vector<Valuation> four_agents() {
  std::vector<Valuation> vals(4, Valuation::uniform());
  vals[0] = Valuation({R(0), R(1, 4), R(3, 4), R(1)}, {R(2), R(0), R(2)});
  return vals;
}

Allocation eighths() {
  return Allocation({Piece::interval(R(0), R(1, 8)), Piece::interval(R(1, 8), R(3, 8)),
                     Piece::interval(R(3, 8), R(5, 8)), Piece::interval(R(5, 8), R(1))});
}

}  // namespace

TEST_CASE("envy matrix of the four-agent fixture") {
  const auto vals = four_agents();
  const auto m = envy_matrix(eighths(), vals);
  CHECK(m(0, 0) == R(1, 4));
  CHECK(m(0, 1) == R(1, 4));
  CHECK(m(0, 2) == R(0));
  CHECK(m(0, 3) == R(1, 2));
  CHECK(m(1, 1) == R(1, 4));
  CHECK(m(2, 2) == R(1, 4));
  CHECK(m(3, 3) == R(3, 8));
  for (std::size_t i = 0; i < 4; ++i) {
    Rational row;
    for (std::size_t j = 0; j < 4; ++j) row += m(i, j);
    CHECK(row == R(1));
  }
}

TEST_CASE("local proportionality holds on K4 and fails on C4 at agent 0") {
  const auto vals = four_agents();
  CHECK(is_locally_proportional(eighths(), graphs::complete(4), vals).satisfied);
  const auto c4 = is_locally_proportional(eighths(), graphs::cycle(4), vals);
  CHECK_FALSE(c4.satisfied);
  // Agent 2 also falls short: its C4 neighbours hold 1/4 and 3/8.
  REQUIRE(c4.witnesses.size() == 2);
  CHECK(c4.witnesses[0] == Witness{0, std::nullopt, R(1, 4), R(3, 8)});
  CHECK(c4.witnesses[1] == Witness{2, std::nullopt, R(1, 4), R(5, 16)});
}

TEST_CASE("local envy on C4 lists every violated edge") {
  const auto vals = four_agents();
  const auto r = is_locally_envy_free(eighths(), graphs::cycle(4), vals);
  CHECK_FALSE(r.satisfied);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0] == Witness{0, 3, R(1, 4), R(1, 2)});
  CHECK(r.witnesses[1] == Witness{2, 3, R(1, 4), R(3, 8)});
}

TEST_CASE("global checks") {
  const auto vals = four_agents();
  CHECK(is_globally_proportional(eighths(), vals).satisfied);
  const auto ef = is_globally_envy_free(eighths(), vals);
  CHECK(ef.witnesses.size() == 3);
  const std::vector<Valuation> uniform(4, Valuation::uniform());
  const Allocation quarters({Piece::interval(R(0), R(1, 4)), Piece::interval(R(1, 4), R(1, 2)),
                             Piece::interval(R(1, 2), R(3, 4)), Piece::interval(R(3, 4), R(1))});
  CHECK(is_globally_envy_free(quarters, uniform).satisfied);
  const auto prop = is_globally_proportional(eighths(), uniform);
  REQUIRE(prop.witnesses.size() == 1);
  CHECK(prop.witnesses[0] == Witness{0, std::nullopt, R(1, 8), R(1, 4)});
}

TEST_CASE("agents without neighbours impose no proportionality constraint") {
  const std::vector<Valuation> vals(3, Valuation::uniform());
  const Allocation all_to_0({Piece::whole(), Piece(), Piece()});
  CHECK(is_locally_proportional(all_to_0, graphs::empty(3), vals).satisfied);
  CHECK(is_locally_envy_free(all_to_0, graphs::empty(3), vals).satisfied);
}

TEST_CASE("size mismatches are rejected") {
  const auto vals = four_agents();
  CHECK_THROWS_AS(is_locally_envy_free(eighths(), graphs::complete(3), vals), FairDivError);
  const std::vector<Valuation> three(3, Valuation::uniform());
  try {
    is_globally_envy_free(eighths(), three);
    FAIL("expected SizeMismatch");
  } catch (const FairDivError& e) {
    CHECK(e.code() == Errc::kSizeMismatch);
  }
}

TEST_CASE("domination graph of the fifths fixture is complete") {
  const auto inst = domination_fixture();
  CHECK(is_envy_free_partial(inst.partial, inst.valuations).satisfied);
  CHECK(domination_graph(inst.partial, inst.valuations) == graphs::complete(4));
  for (const auto& v : inst.valuations) CHECK(value(v, Piece::whole()) == R(1));
}

TEST_CASE("the A.1 pattern has the expected domination complement") {
  const auto inst = example_a1_fixture(6);
  CHECK(is_envy_free_partial(inst.partial, inst.valuations).satisfied);
  const AgentGraph d = domination_graph(inst.partial, inst.valuations);
  CHECK(complement(d) == graphs::example_a1(6));
  CHECK(d.out_degree(1) == 3);
}

TEST_CASE("verifiers agree with direct recomputation; LEF is monotone and implies LP") {
  std::mt19937_64 rng(99);
  int lef_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto vals = random_valuations(rng, n, 3, 6);
    const Allocation a = support::random_allocation(rng, n, 6);
    const AgentGraph g = support::random_digraph(rng, n, 1, 3);
    const bool lef = is_locally_envy_free(a, g, vals).satisfied;
    const bool lp = is_locally_proportional(a, g, vals).satisfied;
    CHECK(lef == support::ref_lef(a, g, vals));
    CHECK(lp == support::ref_lp(a, g, vals));
    CHECK(is_globally_envy_free(a, vals).satisfied == support::ref_global_ef(a, vals));
    if (lef) {
      ++lef_seen;
      CHECK(lp);
      CHECK(is_locally_envy_free(a, support::random_subgraph(rng, g), vals).satisfied);
    }
  }
  CHECK(lef_seen > 20);
}
