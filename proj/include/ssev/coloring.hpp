#pragma once

#include <vector>

#include "ssev/base.hpp"
#include "ssev/lasso.hpp"

namespace ssev {

/// Color map over the vertices (or automaton states) of a host structure.
/// `bound` records the color range {0..bound}.
struct Coloring {
  std::vector<int> colors;
  int bound = 0;

  int at(int v) const {
    if (v < 0 || v >= static_cast<int>(colors.size()))
      throw input_error("vertex missing from coloring");
    return colors[static_cast<size_t>(v)];
  }

  static Coloring constant(int n, int c) {
    Coloring k;
    k.colors.assign(static_cast<size_t>(n), c);
    k.bound = c;
    return k;
  }

  static Coloring of(std::vector<int> cs) {
    Coloring k;
    k.colors = std::move(cs);
    k.bound = 0;
    for (int c : k.colors) k.bound = std::max(k.bound, c);
    return k;
  }
};

/// Shift colors down without changing parity: subtract the minimum if it is
/// even, the minimum minus one otherwise. Keeps Streett pair indices small.
Coloring normalize_coloring(const Coloring& k);

/// Parity payoff of the denoted play: min color over cycle vertices is even.
/// Prefix colors are irrelevant (only Inf matters).
bool lasso_parity_payoff(const Coloring& k, const Lasso& l);

}  // namespace ssev
