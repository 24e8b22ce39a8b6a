#include "ssev/testgen.hpp"

namespace ssev {

Arena random_arena(Rng& rng, int vertices, int players, int extra_edges) {
  Arena a;
  for (int p = 0; p < players; ++p) a.add_player("p" + std::to_string(p));
  for (int v = 0; v < vertices; ++v)
    a.add_vertex("v" + std::to_string(v), static_cast<PlayerId>(rng() % players));
  for (int v = 0; v < vertices; ++v)
    a.add_edge(v, static_cast<VertexId>(rng() % vertices));
  for (int e = 0; e < extra_edges; ++e)
    a.add_edge(static_cast<VertexId>(rng() % vertices), static_cast<VertexId>(rng() % vertices));
  a.initial = 0;
  return a;
}

Coloring random_coloring(Rng& rng, int vertices, int color_bound) {
  std::vector<int> cs;
  for (int v = 0; v < vertices; ++v) cs.push_back(static_cast<int>(rng() % color_bound));
  Coloring k = Coloring::of(std::move(cs));
  k.bound = color_bound - 1;
  return k;
}

MealyMachine random_machine(Rng& rng, const Arena& a, int states) {
  MealyMachine m;
  m.scope = MealyMachine::kAllPlayers;
  m.num_vertices = a.num_vertices();
  for (int s = 0; s < states; ++s) m.add_state("m" + std::to_string(s));
  m.initial = 0;
  for (int s = 0; s < states; ++s)
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
      StateId t = static_cast<StateId>(rng() % states);
      const auto& sux = a.succ[static_cast<size_t>(v)];
      VertexId out = sux[rng() % sux.size()];
      m.add_output(s, v, t, out);
    }
  return m;
}

ParityGame random_parity_game(Rng& rng, int vertices, int players, int color_bound,
                              int extra_edges) {
  ParityGame g;
  g.arena = random_arena(rng, vertices, players, extra_edges);
  for (int p = 0; p < players; ++p)
    g.objectives.push_back(random_coloring(rng, vertices, color_bound));
  return g;
}

TwoPlayerParityGame random_two_player_game(Rng& rng, int vertices, int color_bound) {
  TwoPlayerParityGame g;
  for (int v = 0; v < vertices; ++v) {
    g.protagonist_owns.push_back(rng() % 2 ? 1 : 0);
    g.color.push_back(static_cast<int>(rng() % color_bound));
    g.succ.emplace_back();
  }
  for (int v = 0; v < vertices; ++v) {
    g.succ[static_cast<size_t>(v)].push_back(static_cast<int>(rng() % vertices));
    if (rng() % 2) g.succ[static_cast<size_t>(v)].push_back(static_cast<int>(rng() % vertices));
    if (rng() % 2) g.succ[static_cast<size_t>(v)].push_back(static_cast<int>(rng() % vertices));
  }
  g.initial = 0;
  return g;
}

}  // namespace ssev
