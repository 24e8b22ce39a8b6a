#include "ssev/deviator.hpp"

#include <deque>
#include <set>

namespace ssev {

DeviatorGame build_deviator_game(const ParityGame& g, const PayoffVector& target) {
  if (target.size() != g.arena.num_players())
    throw input_error("target payoff must be total over the players");
  DeviatorGame d;
  d.base = &g;
  d.target = target;
  d.edges_from.resize(static_cast<size_t>(g.arena.num_vertices()));
  for (VertexId u = 0; u < g.arena.num_vertices(); ++u)
    for (VertexId v : g.arena.succ[static_cast<size_t>(u)]) {
      d.edges_from[static_cast<size_t>(u)].push_back(static_cast<int>(d.edges.size()));
      d.edges.emplace_back(u, v);
    }
  return d;
}

std::vector<DeviatorGame::Vertex> DeviatorGame::successors(const Vertex& v) const {
  std::vector<Vertex> out;
  if (!v.challenger) {
    for (int e : edges_from[static_cast<size_t>(v.idx)]) out.push_back({true, e, v.deviators});
    return out;
  }
  auto [u, w] = edges[static_cast<size_t>(v.idx)];
  out.push_back({false, w, v.deviators});  // accept
  PlayerId i = base->arena.owner[static_cast<size_t>(u)];
  for (VertexId alt : base->arena.succ[static_cast<size_t>(u)])
    if (alt != w) out.push_back({false, alt, with(v.deviators, i)});
  return out;
}

std::vector<PlayerSet> DeviatorGame::reachable_deviator_sets() const {
  std::set<PlayerSet> seen{0};
  std::set<Vertex> visited;
  std::deque<Vertex> work{initial_vertex()};
  visited.insert(initial_vertex());
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    for (const Vertex& s : successors(v)) {
      if (visited.insert(s).second) {
        seen.insert(s.deviators);
        work.push_back(s);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ssev
