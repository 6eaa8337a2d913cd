#include "doctest.h"

#include <random>

#include "fairdiv/error.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/io.hpp"
#include "support.hpp"

using namespace fairdiv;
using nlohmann::json;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Dumps and re-parses text so the round trip goes through bytes.
json reparse(const json& j) { return io::parse_text(j.dump()); }

std::string error_text(const std::function<void()>& f, Errc expected) {
  try {
    f();
  } catch (const FairDivError& e) {
    CHECK(e.code() == expected);
    return e.what();
  }
  FAIL("expected a FairDivError");
  return "";
}

}  // namespace

TEST_CASE("rational wire format") {
  CHECK(io::to_json(R(3, 4)) == json("3/4"));
  CHECK(io::to_json(R(2)) == json("2"));
  CHECK(io::parse_rational(json("6/8")) == R(3, 4));
  CHECK(io::parse_rational(json(5)) == R(5));
  const std::string msg = error_text([] { io::parse_rational(json("1/0"), "x"); }, Errc::kParseError);
  CHECK(msg.find("x:") != std::string::npos);
  error_text([] { io::parse_rational(json(0.5)); }, Errc::kParseError);
}

TEST_CASE("valuation, piece and allocation encodings") {
  const Valuation v({R(0), R(1, 4), R(1)}, {R(2), R(2, 3)});
  CHECK(io::to_json(v) == json{{"breakpoints", {"0", "1/4", "1"}}, {"densities", {"2", "2/3"}}});
  const Piece p({{R(0), R(1, 8)}, {R(1, 2), R(1)}});
  CHECK(io::to_json(p) == json::array({json::array({"0", "1/8"}), json::array({"1/2", "1"})}));
  CHECK(io::parse_valuation(reparse(io::to_json(v))) == v);
  CHECK(io::parse_piece(reparse(io::to_json(p))) == p);
  const Allocation a({p, Piece::interval(R(1, 8), R(1, 2))});
  CHECK(io::parse_allocation(reparse(io::to_json(a))) == a);
  const PartialAllocation pa({Piece::interval(R(0), R(1, 2))}, Piece::interval(R(1, 2), R(1)));
  CHECK(io::parse_partial_allocation(reparse(io::to_json(pa))) == pa);
}

TEST_CASE("graph encoding") {
  const auto c4 = io::to_json(graphs::cycle(4));
  CHECK(c4["undirected"] == true);
  CHECK(c4["edges"].size() == 4);
  for (const AgentGraph& g : {graphs::cycle(4), graphs::cone_dag(5), graphs::example_a1(6), graphs::empty(3)}) {
    CHECK(io::parse_graph(reparse(io::to_json(g))) == g);
  }
  const json directed_pair = {{"n", 2}, {"edges", {{0, 1}, {1, 0}}}, {"undirected", false}};
  CHECK(io::parse_graph(directed_pair) == graphs::complete(2));
}

TEST_CASE("ledger, report, trace and separating instance round trips") {
  QueryLedger l;
  l.record_eval(0, 3);
  l.record_cut(1);
  l.record_cut(1);
  const json lj = io::to_json(l);
  CHECK(lj["evals"] == 3);
  CHECK(lj["cuts"] == 2);
  CHECK(lj["per_agent"]["1"]["cuts"] == 2);
  CHECK(io::parse_ledger(reparse(lj)) == l);

  FairnessReport r{false, {{0, 3, R(1, 4), R(1, 2)}, {2, std::nullopt, R(1, 8), R(1, 4)}}};
  CHECK(io::parse_fairness_report(reparse(io::to_json(r))) == r);

  const std::vector<TraceStep> trace{{0, TraceStep::Kind::kCut, -1, R(2, 3)},
                                     {1, TraceStep::Kind::kChoose, 0, std::nullopt},
                                     {0, TraceStep::Kind::kTake, 1, std::nullopt}};
  CHECK(io::parse_trace(reparse(io::to_json(std::span<const TraceStep>(trace)))) == trace);
}

TEST_CASE("linked partition and welfare summary round trips") {
  LinkedPartition lp;
  lp.k = 2;
  lp.epsilon = R(1, 2);
  lp.b = R(1, 4);
  lp.hubs = {1, 3};
  lp.sets = {{1, {0}}, {3, {2, 4}}};
  CHECK(io::parse_linked_partition(reparse(io::to_json(lp))) == lp);
  const WelfareSummary w{R(3), R(2), R(3, 2), true};
  const auto back = io::parse_welfare_summary(reparse(io::to_json(w)));
  CHECK(back.optimal_welfare == w.optimal_welfare);
  CHECK(back.fair_welfare == w.fair_welfare);
  CHECK(back.ratio == w.ratio);
  CHECK(back.from_oracle);
}

TEST_CASE("random valuations and allocations round-trip") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto vals = random_valuations(rng, 3);
    CHECK(io::parse_valuations(reparse(io::to_json(std::span<const Valuation>(vals)))) == vals);
    const auto a = support::random_allocation(rng, 3);
    CHECK(io::parse_allocation(reparse(io::to_json(a))) == a);
  }
}

TEST_CASE("parse errors name the field") {
  const json bad_density = {{"breakpoints", {"0", "1"}}, {"densities", {"1/0"}}};
  CHECK(error_text([&] { io::parse_valuation(bad_density, "valuations[2]"); }, Errc::kParseError)
            .find("valuations[2].densities[0]") != std::string::npos);
  const json missing = {{"breakpoints", {"0", "1"}}};
  CHECK(error_text([&] { io::parse_valuation(missing); }, Errc::kParseError).find("densities") != std::string::npos);
  const json not_normalised = {{"breakpoints", {"0", "1"}}, {"densities", {"2"}}};
  CHECK(error_text([&] { io::parse_valuation(not_normalised, "v"); }, Errc::kInvalidArgument).find("v:") !=
        std::string::npos);
  const json overlap = json::array({json::array({json::array({"0", "1/2"}), json::array({"1/4", "1"})})});
  error_text([&] { io::parse_allocation(overlap); }, Errc::kOverlapError);
  const json bad_edge = {{"n", 2}, {"edges", {{0}}}};
  CHECK(error_text([&] { io::parse_graph(bad_edge); }, Errc::kParseError).find("edges[0]") != std::string::npos);
  error_text([] { io::parse_text("{\"n\": "); }, Errc::kParseError);
  error_text([] { io::load_file("/nonexistent/file.json"); }, Errc::kParseError);
  const json inconsistent = {{"evals", 5}, {"cuts", 0}, {"per_agent", {{"0", {{"evals", 1}, {"cuts", 0}}}}}};
  error_text([&] { io::parse_ledger(inconsistent); }, Errc::kParseError);
}
