#pragma once

#include <string>
#include <vector>

#include "ssev/arena.hpp"
#include "ssev/lasso.hpp"
#include "ssev/mealy.hpp"

namespace ssev {

/// Arena x machine graph, reachable part only. Each edge is non-deviating
/// (the machine proposed exactly this move) or deviating by the owner of the
/// source arena vertex.
struct ProductGraph {
  struct Edge {
    int to;
    PlayerId deviator;  // -1 on non-deviating edges
  };

  std::vector<VertexId> arena_vertex;   // per product vertex
  std::vector<StateId> machine_state;   // per product vertex
  std::vector<PlayerId> owner;          // owner of the arena component
  std::vector<std::vector<Edge>> succ;  // insertion order
  int initial = 0;

  int size() const { return static_cast<int>(arena_vertex.size()); }

  bool has_edge(int u, int v) const {
    for (const Edge& e : succ.at(static_cast<size_t>(u)))
      if (e.to == v) return true;
    return false;
  }

  /// Label of a concrete edge; requires the edge to exist.
  PlayerId edge_deviator(int u, int v) const;

  Lasso project(const Lasso& l) const {
    Lasso out;
    for (int x : l.prefix) out.prefix.push_back(arena_vertex.at(static_cast<size_t>(x)));
    for (int x : l.cycle) out.cycle.push_back(arena_vertex.at(static_cast<size_t>(x)));
    return out;
  }

  std::string vertex_name(const Arena& a, const MealyMachine& m, int x) const {
    return "(" + a.vertices.name(arena_vertex[static_cast<size_t>(x)]) + "," +
           m.states.name(machine_state[static_cast<size_t>(x)]) + ")";
  }
};

/// Explicit product of an arena with an all-players machine.
ProductGraph build_product_graph(const Arena& a, const MealyMachine& m);

/// Product of an arena with per-player machines, expanded over reachable
/// state tuples without materializing the product machine. The tuple index
/// per product vertex is reported through `machine_state` as an opaque id.
ProductGraph build_product_graph_compositional(const Arena& a,
                                               const std::vector<MealyMachine>& machines);

/// Drops every i-deviating edge with i outside the coalition, then prunes
/// vertices unreachable from the initial pair. Vertex ids are renumbered;
/// `origin[x]` maps back into the input graph.
ProductGraph restrict_deviators(const ProductGraph& p, PlayerSet coalition,
                                std::vector<int>* origin = nullptr);

}  // namespace ssev
