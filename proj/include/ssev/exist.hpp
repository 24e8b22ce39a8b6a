#pragma once

#include <map>
#include <memory>
#include <optional>

#include "ssev/deviator.hpp"
#include "ssev/el.hpp"
#include "ssev/game.hpp"
#include "ssev/mealy.hpp"

namespace ssev {

/// Per-deviator-set slice of the deviator game, solved as an Emerson-Lei game
/// whose leaves (deviations enlarging the set) are pre-resolved recursively.
struct RegionSolution {
  PlayerSet deviators = 0;
  bool trivial_prover_win = false;  // deviators cover all target winners

  // Region graph: prover vertices [0, nV), challenger vertices [nV, nV+nE),
  // then one absorbing slot per leaf status: prover-win, challenger-win.
  ElToParity reduction;
  // Expansion: reachable (region vertex, memory) pairs.
  std::map<std::pair<int, int>, int> expansion_index;
  std::vector<char> prover_wins;  // per expansion vertex
  std::vector<int> strategy;      // winner's move per expansion vertex, -1 otherwise
  std::vector<std::pair<int, int>> expansion_vertex;  // id -> (region vertex, memory)

  // Entry status of a prover vertex with fresh memory.
  bool entry_win(int arena_vertex) const;
  int entry_expansion(int arena_vertex) const;
};

struct ExistSolution {
  DeviatorGame dev;
  std::map<PlayerSet, RegionSolution> regions;
  bool exists = false;
};

/// Outcome of the fixed-payoff constrained existence question.
struct ExistVerdict {
  bool exists = false;
  std::shared_ptr<ExistSolution> solution;
  struct Stats {
    int regions_solved = 0;
    int largest_expansion = 0;
  } stats;
};

/// Decides whether an SSE with exactly the target payoff (and satisfying the
/// game's correctness condition, when present) exists, by the recursive
/// region construction over the deviator game.
ExistVerdict exists_sse(const ParityGame& g, const PayoffVector& target);

struct OmegaExistVerdict {
  ExistVerdict verdict;
  std::shared_ptr<SynchronizedProduct> product;
};

/// Omega-regular variant: the deviator game additionally tracks objective and
/// correctness automata states via the synchronized product.
OmegaExistVerdict exists_sse_omega(const OmegaRegularGame& g, const PayoffVector& target);

/// Deterministic all-players machine realizing Prover's winning strategy:
/// its unique compliant outcome has the target payoff, and the machine reacts
/// to observed deviations with the corresponding region strategies.
MealyMachine extract_protocol_machine(const ExistVerdict& v, const ParityGame& g);

/// Extraction over the synchronized product, projected back onto the arena.
MealyMachine extract_protocol_machine_omega(const OmegaExistVerdict& v,
                                            const OmegaRegularGame& g);

}  // namespace ssev
