#pragma once

#include <string>
#include <vector>

#include "ssev/base.hpp"
#include "ssev/coloring.hpp"
#include "ssev/lasso.hpp"
#include "ssev/product_graph.hpp"

namespace ssev {

/// Certificate of a harmful deviation: a compliant lasso alpha and a deviating
/// lasso beta in the product graph, sharing a prefix and splitting on a
/// deviating edge, such that some outsider strictly loses while no player who
/// deviated along beta does.
struct WitnessPair {
  Lasso alpha;  // product-graph vertices, no deviating edges
  Lasso beta;   // product-graph vertices
  PlayerId harmed = -1;
  PlayerSet deviators = 0;
};

/// Re-validates a witness pair against the product graph and the per-player
/// payoff evaluation (colorings over arena vertices). Empty result = valid.
std::vector<std::string> validate_witness(const WitnessPair& w, const ProductGraph& p,
                                          const std::vector<Coloring>& objectives);

}  // namespace ssev
