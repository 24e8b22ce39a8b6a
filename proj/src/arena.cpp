#include "ssev/arena.hpp"

#include <deque>

namespace ssev {

std::vector<std::string> validate_arena(const Arena& a) {
  std::vector<std::string> out;
  if (a.num_players() == 0) out.push_back("no players declared");
  if (a.num_vertices() == 0) {
    out.push_back("no vertices declared");
    return out;
  }
  if (a.initial < 0 || a.initial >= a.num_vertices())
    out.push_back("initial vertex missing or out of range");
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    if (a.owner[v] < 0 || a.owner[v] >= a.num_players())
      out.push_back("vertex " + a.vertices.name(v) + " has no valid owner");
    if (a.succ[v].empty())
      out.push_back("sink vertex: " + a.vertices.name(v));
    for (VertexId w : a.succ[v])
      if (w < 0 || w >= a.num_vertices())
        out.push_back("edge from " + a.vertices.name(v) + " to undeclared vertex");
  }
  return out;
}

std::vector<VertexId> reachable_vertices(const Arena& a) {
  std::vector<VertexId> order;
  if (a.initial < 0) return order;
  std::vector<char> seen(a.num_vertices(), 0);
  std::deque<VertexId> work{a.initial};
  seen[a.initial] = 1;
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    order.push_back(v);
    for (VertexId w : a.succ[v])
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
  }
  return order;
}

}  // namespace ssev
