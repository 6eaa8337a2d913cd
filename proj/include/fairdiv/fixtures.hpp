#ifndef FAIRDIV_FIXTURES_HPP_
#define FAIRDIV_FIXTURES_HPP_

#include <random>
#include <vector>

#include "fairdiv/cake.hpp"

namespace fairdiv {

// Random piecewise-constant valuation with 1..max_segments segments whose
// breakpoints are multiples of 1/d for some d in 2..max_den and whose raw
// densities are integers in 0..9 before normalization.
Valuation random_valuation(std::mt19937_64& rng, int max_segments = 4, int max_den = 12);
std::vector<Valuation> random_valuations(std::mt19937_64& rng, int n, int max_segments = 4, int max_den = 12);

struct ExtensionInstance {
  std::vector<Valuation> valuations;
  PartialAllocation partial;
};

// n = 4, P_i = [i/5, (i+1)/5), residue [4/5, 1]; agent i has density 3 on
// P_i and 1/2 elsewhere, so every agent dominates every other.
ExtensionInstance domination_fixture();

// n agents (n >= 4), P_i = [i/(n+1), (i+1)/(n+1)), residue the last slot.
// Agent i fails to dominate i+1 (mod n); agent 1 also fails to dominate 0,
// so agent 1 dominates only n-3 others. The complement of the domination
// graph is graphs::example_a1(n).
ExtensionInstance example_a1_fixture(int n = 6);

}  // namespace fairdiv

#endif  // FAIRDIV_FIXTURES_HPP_
