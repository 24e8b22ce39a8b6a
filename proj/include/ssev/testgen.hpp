#pragma once

#include <random>

#include "ssev/game.hpp"
#include "ssev/mealy.hpp"
#include "ssev/zielonka.hpp"

namespace ssev {

using Rng = std::mt19937_64;

/// Random arena: every vertex gets >= 1 successor; owners uniform.
Arena random_arena(Rng& rng, int vertices, int players, int extra_edges);

/// Random coloring over the arena with colors < bound.
Coloring random_coloring(Rng& rng, int vertices, int color_bound);

/// Random complete deterministic all-players machine.
MealyMachine random_machine(Rng& rng, const Arena& a, int states);

/// Random multiplayer parity game.
ParityGame random_parity_game(Rng& rng, int vertices, int players, int color_bound,
                              int extra_edges);

/// Random two-player zero-sum parity game.
TwoPlayerParityGame random_two_player_game(Rng& rng, int vertices, int color_bound);

}  // namespace ssev
