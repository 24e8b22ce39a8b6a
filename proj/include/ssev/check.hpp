#pragma once

#include <optional>
#include <vector>

#include "ssev/game.hpp"
#include "ssev/mealy.hpp"
#include "ssev/product_graph.hpp"
#include "ssev/streett.hpp"
#include "ssev/witness.hpp"

namespace ssev {

/// Outcome of an SSE check. When not-SSE, `witness` lives in the product
/// graph the check ran on and `alpha_play`/`beta_play` are its projections to
/// the original arena.
struct CheckVerdict {
  bool all_sse = true;
  std::optional<WitnessPair> witness;
  Lasso alpha_play, beta_play;

  struct Stats {
    int emptiness_checks = 0;
    int product_vertices = 0;
  } stats;
};

/// All payoff vectors where every coalition member does at least as well as in
/// x and some outsider does strictly worse. Requires a nonempty proper
/// coalition. Descending binary order (player 0 most significant).
std::vector<PayoffVector> upward_harm_set(const PayoffVector& x, PlayerSet coalition);

/// Decides whether every strategy profile compatible with the machine is an
/// SSE, by Streett emptiness over deviator-restricted product graphs.
CheckVerdict check_sse(const ParityGame& g, const MealyMachine& m);

/// Same verdict contract, machine given per player; the product machine is
/// never materialized.
CheckVerdict check_sse_compositional(const ParityGame& g, const std::vector<MealyMachine>& ms);

/// Omega-regular variants: run over the synchronized product, machine lifted
/// to read product vertices; witnesses are projected back to arena vertices.
CheckVerdict check_sse_omega(const OmegaRegularGame& g, const MealyMachine& m);
CheckVerdict check_sse_omega_compositional(const OmegaRegularGame& g,
                                           const std::vector<MealyMachine>& ms);

/// Shared worker: check over an already-built product of `g.arena` x machine.
CheckVerdict check_product_graph(const ProductGraph& p, const ParityGame& g);

/// Lift a machine over `g`'s arena to one over the synchronized product's
/// vertex set (the machine keeps reading the arena component).
MealyMachine lift_machine(const SynchronizedProduct& sp, const Arena& base,
                          const MealyMachine& m);

}  // namespace ssev
