#include "ssev/game.hpp"

#include <deque>
#include <map>

namespace ssev {

PayoffVector PayoffVector::from_bits(const std::string& bits, int n) {
  if (static_cast<int>(bits.size()) != n)
    throw input_error("payoff bitstring has " + std::to_string(bits.size()) +
                      " bits, expected " + std::to_string(n));
  PayoffVector x;
  for (char c : bits) {
    if (c != '0' && c != '1') throw input_error("payoff bitstring must be 0/1");
    x.wins.push_back(c == '1');
  }
  return x;
}

std::vector<std::string> ParityGame::validate() const {
  std::vector<std::string> out = validate_arena(arena);
  if (static_cast<int>(objectives.size()) != arena.num_players())
    out.push_back("expected one coloring per player");
  for (const auto& o : objectives)
    if (static_cast<int>(o.colors.size()) != arena.num_vertices())
      out.push_back("objective coloring not total over vertices");
  if (correctness && static_cast<int>(correctness->colors.size()) != arena.num_vertices())
    out.push_back("correctness coloring not total over vertices");
  return out;
}

std::vector<std::string> OmegaRegularGame::validate() const {
  std::vector<std::string> out = validate_arena(arena);
  if (static_cast<int>(objectives.size()) != arena.num_players())
    out.push_back("expected one automaton per player");
  for (const auto& a : objectives) {
    if (a.alphabet_size != arena.num_vertices())
      out.push_back("objective automaton alphabet does not match the arena");
    auto sub = a.validate();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  if (correctness) {
    if (correctness->alphabet_size != arena.num_vertices())
      out.push_back("correctness automaton alphabet does not match the arena");
    auto sub = correctness->validate();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Lasso SynchronizedProduct::project(const Lasso& l) const {
  Lasso out;
  for (int v : l.prefix) out.prefix.push_back(arena_vertex.at(static_cast<size_t>(v)));
  for (int v : l.cycle) out.cycle.push_back(arena_vertex.at(static_cast<size_t>(v)));
  return out;
}

SynchronizedProduct synchronized_product(const OmegaRegularGame& g) {
  auto bad = g.validate();
  if (!bad.empty()) throw input_error("synchronized product on invalid game: " + bad.front());

  int n = g.arena.num_players();
  int comps = n + (g.correctness ? 1 : 0);
  auto automaton = [&](int i) -> const ParityAutomaton& {
    return i < n ? g.objectives[static_cast<size_t>(i)] : *g.correctness;
  };

  SynchronizedProduct out;
  ParityGame& pg = out.game;
  for (int p = 0; p < n; ++p) pg.arena.add_player(g.arena.players.name(p));

  std::map<std::pair<VertexId, std::vector<StateId>>, VertexId> index;
  auto vertex_name = [&](VertexId v, const std::vector<StateId>& ss) {
    std::string nm = g.arena.vertices.name(v);
    for (int i = 0; i < comps; ++i) nm += "," + automaton(i).states.name(ss[static_cast<size_t>(i)]);
    return nm;
  };
  auto get = [&](VertexId v, const std::vector<StateId>& ss) -> VertexId {
    auto key = std::make_pair(v, ss);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    VertexId id = pg.arena.add_vertex(vertex_name(v, ss), g.arena.owner[v]);
    index.emplace(key, id);
    out.arena_vertex.push_back(v);
    out.states.push_back(ss);
    return id;
  };

  std::vector<StateId> init_states;
  for (int i = 0; i < comps; ++i)
    init_states.push_back(automaton(i).step(automaton(i).initial, g.arena.initial));
  VertexId init = get(g.arena.initial, init_states);
  pg.arena.initial = init;

  std::deque<VertexId> work{init};
  while (!work.empty()) {
    VertexId pv = work.front();
    work.pop_front();
    VertexId v = out.arena_vertex[static_cast<size_t>(pv)];
    std::vector<StateId> ss = out.states[static_cast<size_t>(pv)];
    for (VertexId w : g.arena.succ[v]) {
      std::vector<StateId> ts(static_cast<size_t>(comps));
      for (int i = 0; i < comps; ++i)
        ts[static_cast<size_t>(i)] = automaton(i).step(ss[static_cast<size_t>(i)], w);
      int before = pg.arena.num_vertices();
      VertexId pw = get(w, ts);
      if (pg.arena.num_vertices() > before) work.push_back(pw);
      pg.arena.add_edge(pv, pw);
    }
  }

  int pv_count = pg.arena.num_vertices();
  for (int p = 0; p < n; ++p) {
    Coloring k;
    k.bound = g.objectives[static_cast<size_t>(p)].coloring.bound;
    for (int pv = 0; pv < pv_count; ++pv)
      k.colors.push_back(g.objectives[static_cast<size_t>(p)].coloring.at(
          out.states[static_cast<size_t>(pv)][static_cast<size_t>(p)]));
    pg.objectives.push_back(std::move(k));
  }
  if (g.correctness) {
    Coloring k;
    k.bound = g.correctness->coloring.bound;
    for (int pv = 0; pv < pv_count; ++pv)
      k.colors.push_back(
          g.correctness->coloring.at(out.states[static_cast<size_t>(pv)][static_cast<size_t>(n)]));
    pg.correctness = std::move(k);
  }
  return out;
}

OmegaRegularGame parity_as_omega_regular(const ParityGame& g) {
  OmegaRegularGame out;
  out.arena = g.arena;
  for (const auto& o : g.objectives)
    out.objectives.push_back(coloring_to_automaton(o, g.arena.num_vertices(), g.arena.initial));
  if (g.correctness)
    out.correctness = coloring_to_automaton(*g.correctness, g.arena.num_vertices(), g.arena.initial);
  return out;
}

}  // namespace ssev
