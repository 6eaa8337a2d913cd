#ifndef FAIRDIV_AGENTS_HPP_
#define FAIRDIV_AGENTS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fairdiv/cake.hpp"

namespace fairdiv {

// Query counts for one protocol run. Only executed queries are counted.
class QueryLedger {
 public:
  struct Counts {
    std::int64_t evals = 0;
    std::int64_t cuts = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
  };

  void record_eval(int agent, std::int64_t count = 1);
  void record_cut(int agent);

  std::int64_t evals() const { return evals_; }
  std::int64_t cuts() const { return cuts_; }
  std::int64_t total() const { return evals_ + cuts_; }
  const std::map<int, Counts>& per_agent() const { return per_agent_; }

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

 private:
  std::int64_t evals_ = 0;
  std::int64_t cuts_ = 0;
  std::map<int, Counts> per_agent_;
};

// A participant whose valuation is reachable only through queries.
class Agent {
 public:
  Agent(int index, Valuation valuation) : index_(index), valuation_(std::move(valuation)) {}
  int index() const { return index_; }

 private:
  friend Rational eval_query(const Agent&, const Rational&, const Rational&, QueryLedger&);
  friend Rational cut_query(const Agent&, const Rational&, const Rational&, QueryLedger&);

  int index_;
  Valuation valuation_;
};

// Agents 0..n-1 holding the given valuations.
std::vector<Agent> make_agents(std::span<const Valuation> valuations);

// V_a(x, y). Throws kBadRange when x > y or either end leaves [0,1].
Rational eval_query(const Agent& a, const Rational& x, const Rational& y, QueryLedger& ledger);
// cut_left on the agent's valuation. Failed queries leave the ledger as is.
Rational cut_query(const Agent& a, const Rational& y, const Rational& alpha, QueryLedger& ledger);
// One eval query per interval of p.
Rational eval_piece(const Agent& a, const Piece& p, QueryLedger& ledger);

}  // namespace fairdiv

#endif  // FAIRDIV_AGENTS_HPP_
