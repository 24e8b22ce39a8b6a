#pragma once

#include <vector>

#include "ssev/game.hpp"

namespace ssev {

/// Two-player Prover/Challenger game over an underlying multiplayer game:
/// Prover proposes edges, Challenger accepts or redirects them, collecting
/// the owners of redirected vertices in a monotone deviator set.
/// Vertices are materialized lazily through the successor function.
struct DeviatorGame {
  struct Vertex {
    bool challenger = false;  // false: (v, D); true: (edge, D)
    int idx = 0;              // arena vertex id, or edge id
    PlayerSet deviators = 0;

    bool operator==(const Vertex& o) const {
      return challenger == o.challenger && idx == o.idx && deviators == o.deviators;
    }
    bool operator<(const Vertex& o) const {
      if (challenger != o.challenger) return challenger < o.challenger;
      if (idx != o.idx) return idx < o.idx;
      return deviators < o.deviators;
    }
  };

  const ParityGame* base = nullptr;
  PayoffVector target;
  std::vector<std::pair<VertexId, VertexId>> edges;        // arena edges, indexed
  std::vector<std::vector<int>> edges_from;                // arena vertex -> edge ids

  Vertex initial_vertex() const { return {false, base->arena.initial, 0}; }
  std::vector<Vertex> successors(const Vertex& v) const;

  /// Deviator sets reachable from the initial vertex.
  std::vector<PlayerSet> reachable_deviator_sets() const;
};

DeviatorGame build_deviator_game(const ParityGame& g, const PayoffVector& target);

}  // namespace ssev
