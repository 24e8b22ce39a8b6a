#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssev/base.hpp"

namespace ssev {

/// Turn-based game graph: finite vertices, one owner per vertex, no sinks.
struct Arena {
  NameTable players;
  NameTable vertices;
  std::vector<PlayerId> owner;            // per vertex
  std::vector<std::vector<VertexId>> succ;  // insertion order, deduplicated
  VertexId initial = -1;

  int num_players() const { return players.size(); }
  int num_vertices() const { return vertices.size(); }

  PlayerId add_player(const std::string& name) { return players.intern(name); }

  VertexId add_vertex(const std::string& name, PlayerId own) {
    VertexId v = vertices.intern(name);
    if (v == static_cast<int>(owner.size())) {
      owner.push_back(own);
      succ.emplace_back();
    } else if (owner[v] != own) {
      throw input_error("vertex redeclared with different owner: " + name);
    }
    return v;
  }

  void add_edge(VertexId u, VertexId v) {
    for (VertexId w : succ.at(u))
      if (w == v) return;
    succ[u].push_back(v);
  }

  bool has_edge(VertexId u, VertexId v) const {
    for (VertexId w : succ.at(u))
      if (w == v) return true;
    return false;
  }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (VertexId u = 0; u < num_vertices(); ++u)
      for (VertexId v : succ[u]) es.emplace_back(u, v);
    return es;
  }
};

/// Diagnostic check of the Arena invariants; empty result means the arena is valid.
std::vector<std::string> validate_arena(const Arena& a);

/// Reachable vertices from the initial vertex, in BFS order.
std::vector<VertexId> reachable_vertices(const Arena& a);

}  // namespace ssev
