#pragma once

#include <vector>

#include "ssev/base.hpp"

namespace ssev {

/// Two-player zero-sum parity game. The protagonist wins a play iff the
/// minimum color seen infinitely often is even.
struct TwoPlayerParityGame {
  std::vector<char> protagonist_owns;      // per vertex
  std::vector<std::vector<int>> succ;
  std::vector<int> color;
  int initial = 0;

  int size() const { return static_cast<int>(succ.size()); }
};

/// Winning regions with positional strategies for both players.
/// strategy[v] is the winner's move at v when v belongs to the winner's
/// player, -1 elsewhere.
struct ZielonkaResult {
  std::vector<char> protagonist_wins;
  std::vector<int> strategy;
};

/// Recursive attractor decomposition.
ZielonkaResult zielonka_solve(const TwoPlayerParityGame& g);

/// Attractor of `target` for side `prot` (true = protagonist) within the
/// subgame induced by `active`; fills `strategy` on attracted owned vertices.
std::vector<char> attractor(const TwoPlayerParityGame& g, const std::vector<char>& active,
                            const std::vector<char>& target, bool prot,
                            std::vector<int>* strategy);

}  // namespace ssev
