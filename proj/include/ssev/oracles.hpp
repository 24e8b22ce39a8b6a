#pragma once

#include <cstdint>
#include <optional>

#include "ssev/check.hpp"
#include "ssev/game.hpp"
#include "ssev/mealy.hpp"
#include "ssev/zielonka.hpp"

namespace ssev {

/// Brute-force SSE check for deterministic machines: enumerates candidate
/// cycle sets of the deviating play per coalition, independent of the Streett
/// machinery. Intended for product graphs small enough to enumerate subsets;
/// `bound` caps the length of the lassos considered (prefix + covering cycle).
CheckVerdict oracle_witness_search(const ParityGame& g, const MealyMachine& m, int bound);

/// Default bound from the product size: 2n + n^2.
int oracle_default_bound(int product_vertices);

/// Winner at the initial vertex of a two-player zero-sum parity game, by
/// enumeration of protagonist positional strategies (cycle inspection on the
/// induced graphs). Guard: product of protagonist out-degrees <= 10^6.
bool oracle_solve_parity(const TwoPlayerParityGame& g);

/// Winners at every vertex by the same enumeration.
std::vector<char> oracle_solve_parity_regions(const TwoPlayerParityGame& g);

}  // namespace ssev
