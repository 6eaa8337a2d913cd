#include "fairdiv/fixtures.hpp"

#include <set>

#include "fairdiv/error.hpp"
#include "fairdiv/graph.hpp"

namespace fairdiv {

Valuation random_valuation(std::mt19937_64& rng, int max_segments, int max_den) {
  if (max_segments < 1 || max_den < 2) throw FairDivError(Errc::kInvalidArgument, "bad random valuation bounds");
  const int den = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_den - 1)));
  const int segments =
      1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::min(max_segments, den))));
  std::set<int> cuts;
  while (static_cast<int>(cuts.size()) < segments - 1) {
    cuts.insert(1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(den - 1))));
  }
  std::vector<Rational> bps{Rational(0)};
  for (int c : cuts) bps.emplace_back(c, den);
  bps.emplace_back(1);

  std::vector<std::int64_t> raw(static_cast<std::size_t>(segments));
  bool positive = false;
  for (auto& d : raw) {
    d = static_cast<std::int64_t>(uniform_below(rng, 10));
    positive = positive || d > 0;
  }
  if (!positive) raw[uniform_below(rng, raw.size())] = 1 + static_cast<std::int64_t>(uniform_below(rng, 9));
  Rational total;
  for (std::size_t r = 0; r < raw.size(); ++r) total += Rational(raw[r]) * (bps[r + 1] - bps[r]);
  std::vector<Rational> dens;
  for (auto d : raw) dens.push_back(Rational(d) / total);
  return Valuation(std::move(bps), std::move(dens));
}

std::vector<Valuation> random_valuations(std::mt19937_64& rng, int n, int max_segments, int max_den) {
  std::vector<Valuation> out;
  for (int i = 0; i < n; ++i) out.push_back(random_valuation(rng, max_segments, max_den));
  return out;
}

namespace {

std::vector<Piece> slots(int count) {
  std::vector<Piece> out;
  for (int r = 0; r < count; ++r) out.push_back(Piece::interval(Rational(r, count), Rational(r + 1, count)));
  return out;
}

}  // namespace

ExtensionInstance domination_fixture() {
  auto pieces = slots(5);
  const Piece residue = pieces.back();
  pieces.pop_back();
  std::vector<Valuation> vals;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> values(5, Rational(1, 10));
    values[i] = Rational(3, 5);
    vals.push_back(Valuation::from_piece_values(slots(5), values));
  }
  return {std::move(vals), PartialAllocation(std::move(pieces), residue)};
}

ExtensionInstance example_a1_fixture(int n) {
  if (n < 4) throw FairDivError(Errc::kInvalidArgument, "example_a1_fixture needs n >= 4");
  auto all = slots(n + 1);
  const AgentGraph not_dominated = graphs::example_a1(n);
  std::vector<Valuation> vals;
  for (int i = 0; i < n; ++i) {
    // Own piece and the pieces i does not dominate are worth a; the residue
    // is worth a/2; dominated pieces are worthless.
    const auto& open = not_dominated.out_neighbors(i);
    const Rational a = Rational(2) / Rational(2 * (1 + static_cast<std::int64_t>(open.size())) + 1);
    std::vector<Rational> values(static_cast<std::size_t>(n + 1), Rational(0));
    values[i] = a;
    for (int j : open) values[j] = a;
    values[n] = a / Rational(2);
    vals.push_back(Valuation::from_piece_values(all, values));
  }
  const Piece residue = all.back();
  all.pop_back();
  return {std::move(vals), PartialAllocation(std::move(all), residue)};
}

}  // namespace fairdiv
