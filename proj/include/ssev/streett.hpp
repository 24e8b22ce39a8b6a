#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ssev/coloring.hpp"
#include "ssev/game.hpp"
#include "ssev/lasso.hpp"

namespace ssev {

/// Conjunction of request/grant pairs: a lasso satisfies the condition iff
/// for every pair, Inf meets R implies Inf meets G.
struct StreettCondition {
  struct Pair {
    std::vector<char> R, G;  // membership masks over the host graph
  };
  int n = 0;
  std::vector<Pair> pairs;

  bool satisfied_by_inf_set(const std::vector<int>& inf) const {
    for (const auto& pr : pairs) {
      bool r = false, g = false;
      for (int v : inf) {
        r = r || pr.R[static_cast<size_t>(v)];
        g = g || pr.G[static_cast<size_t>(v)];
      }
      if (r && !g) return false;
    }
    return true;
  }

  bool satisfied_by_lasso(const Lasso& l) const { return satisfied_by_inf_set(l.cycle); }
};

/// Streett pairs whose satisfying lassos are exactly those whose parity payoff
/// vector equals the target. All colorings share the domain size.
StreettCondition streett_pairs_for_payoff(const std::vector<Coloring>& objectives,
                                          const PayoffVector& target);

/// Same pairs over a host graph whose vertices project into the coloring
/// domain (e.g. product vertices onto arena vertices).
StreettCondition lift_condition(const StreettCondition& cond, const std::vector<int>& projection);

/// Extra pair requiring the given parity objective to hold (win) or fail.
void add_parity_pairs(StreettCondition& cond, const Coloring& k, bool win,
                      const std::vector<int>* projection = nullptr);

/// Emptiness by recursive SCC refinement: returns a lasso from `start`
/// satisfying the condition, or nothing. The lasso's prefix is BFS-shortest
/// to the accepting component found first in deterministic order.
std::optional<Lasso> streett_nonempty(const std::vector<std::vector<int>>& succ, int start,
                                      const StreettCondition& cond);

/// Strongly connected components of the subgraph induced by `active`,
/// deterministic order (Tarjan over ascending vertex ids).
std::vector<std::vector<int>> scc_decompose(const std::vector<std::vector<int>>& succ,
                                            const std::vector<int>& active);

}  // namespace ssev
