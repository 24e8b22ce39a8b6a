#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssev/arena.hpp"
#include "ssev/automaton.hpp"
#include "ssev/coloring.hpp"

namespace ssev {

/// One Boolean payoff per player, total over the game's players.
struct PayoffVector {
  std::vector<uint8_t> wins;

  int size() const { return static_cast<int>(wins.size()); }
  bool win(PlayerId p) const { return wins.at(static_cast<size_t>(p)) != 0; }

  bool operator==(const PayoffVector& o) const { return wins == o.wins; }
  bool operator!=(const PayoffVector& o) const { return wins != o.wins; }

  static PayoffVector all(int n, bool w) {
    PayoffVector x;
    x.wins.assign(static_cast<size_t>(n), w ? 1 : 0);
    return x;
  }

  /// "1101" in declared player order.
  std::string bits() const {
    std::string s;
    for (uint8_t w : wins) s.push_back(w ? '1' : '0');
    return s;
  }
  static PayoffVector from_bits(const std::string& bits, int n);
};

/// Multiplayer game with one parity coloring per player over the arena
/// vertices, plus an optional correctness coloring.
struct ParityGame {
  Arena arena;
  std::vector<Coloring> objectives;  // per player
  std::optional<Coloring> correctness;

  int max_color() const {
    int k = 0;
    for (const auto& o : objectives) k = std::max(k, o.bound);
    return k;
  }

  PayoffVector payoff_of_lasso(const Lasso& l) const {
    PayoffVector x;
    for (const auto& o : objectives) x.wins.push_back(lasso_parity_payoff(o, l) ? 1 : 0);
    return x;
  }

  std::vector<std::string> validate() const;
};

/// Multiplayer game with one deterministic parity automaton per player over
/// the arena's vertex alphabet, plus an optional correctness automaton.
struct OmegaRegularGame {
  Arena arena;
  std::vector<ParityAutomaton> objectives;  // per player
  std::optional<ParityAutomaton> correctness;

  PayoffVector payoff_of_lasso(const Lasso& l) const {
    PayoffVector x;
    for (const auto& a : objectives) x.wins.push_back(automaton_accepts_lasso(a, l) ? 1 : 0);
    return x;
  }

  std::vector<std::string> validate() const;
};

/// Reachable synchronized product: vertices are (arena vertex, one state per
/// objective automaton, correctness state if present); owner inherited from
/// the arena vertex; player colorings read their own automaton component.
struct SynchronizedProduct {
  ParityGame game;                       // product arena + lifted colorings
  std::vector<VertexId> arena_vertex;    // per product vertex
  std::vector<std::vector<StateId>> states;  // per product vertex, objective states (+corr last)

  /// Project a lasso over product vertices to arena vertices.
  Lasso project(const Lasso& l) const;
};

SynchronizedProduct synchronized_product(const OmegaRegularGame& g);

/// Views a parity game as an omega-regular one via per-vertex-memory automata.
OmegaRegularGame parity_as_omega_regular(const ParityGame& g);

}  // namespace ssev
