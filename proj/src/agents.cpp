#include "fairdiv/agents.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {

void QueryLedger::record_eval(int agent, std::int64_t count) {
  evals_ += count;
  per_agent_[agent].evals += count;
}

void QueryLedger::record_cut(int agent) {
  ++cuts_;
  ++per_agent_[agent].cuts;
}

std::vector<Agent> make_agents(std::span<const Valuation> valuations) {
  std::vector<Agent> agents;
  agents.reserve(valuations.size());
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    agents.emplace_back(static_cast<int>(i), valuations[i]);
  }
  return agents;
}

Rational eval_query(const Agent& a, const Rational& x, const Rational& y, QueryLedger& ledger) {
  if (x > y) throw FairDivError(Errc::kBadRange, "eval query with x = " + x.str() + " > y = " + y.str());
  Rational out = value(a.valuation_, x, y);
  ledger.record_eval(a.index());
  return out;
}

Rational cut_query(const Agent& a, const Rational& y, const Rational& alpha, QueryLedger& ledger) {
  Rational out = cut_left(a.valuation_, y, alpha);
  ledger.record_cut(a.index());
  return out;
}

Rational eval_piece(const Agent& a, const Piece& p, QueryLedger& ledger) {
  Rational total;
  for (const auto& iv : p.intervals()) total += eval_query(a, iv.lo, iv.hi, ledger);
  return total;
}

}  // namespace fairdiv
