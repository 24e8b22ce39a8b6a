#include "ssev/automaton.hpp"

#include <limits>
#include <map>

namespace ssev {

std::vector<std::string> ParityAutomaton::validate() const {
  std::vector<std::string> out;
  if (initial < 0 || initial >= num_states()) out.push_back("automaton initial state missing");
  for (StateId s = 0; s < num_states(); ++s)
    for (int x = 0; x < alphabet_size; ++x)
      if (delta[s][static_cast<size_t>(x)] < 0)
        out.push_back("automaton transition missing at state " + states.name(s));
  if (static_cast<int>(coloring.colors.size()) != num_states())
    out.push_back("automaton coloring not total over states");
  return out;
}

ParityAutomaton ParityAutomaton::universal(int alphabet, bool accepting) {
  ParityAutomaton a;
  a.alphabet_size = alphabet;
  StateId s = a.add_state("u");
  a.initial = s;
  for (int x = 0; x < alphabet; ++x) a.set_trans(s, x, s);
  a.coloring = Coloring::constant(1, accepting ? 0 : 1);
  return a;
}

Lasso run_lasso(const ParityAutomaton& a, const Lasso& l) {
  for (int v : l.prefix)
    if (v < 0 || v >= a.alphabet_size) throw input_error("lasso letter outside automaton alphabet");
  for (int v : l.cycle)
    if (v < 0 || v >= a.alphabet_size) throw input_error("lasso letter outside automaton alphabet");

  StateId s = a.initial;
  Lasso out;
  out.prefix.push_back(s);
  for (int v : l.prefix) {
    s = a.step(s, v);
    out.prefix.push_back(s);
  }
  // Pump the cycle until (state, cycle position) repeats.
  std::map<std::pair<StateId, size_t>, size_t> seen;  // -> index in trace
  std::vector<StateId> trace;                          // states after each cycle letter
  size_t pos = 0;
  while (true) {
    auto key = std::make_pair(s, pos);
    auto it = seen.find(key);
    if (it != seen.end()) {
      // States trace[it->second ..] repeat forever.
      out.cycle.assign(trace.begin() + static_cast<long>(it->second), trace.end());
      for (size_t i = 0; i < it->second; ++i) out.prefix.push_back(trace[i]);
      if (out.cycle.empty()) out.cycle.push_back(s);
      return out;
    }
    seen.emplace(key, trace.size());
    s = a.step(s, l.cycle[pos]);
    trace.push_back(s);
    pos = (pos + 1) % l.cycle.size();
  }
}

bool automaton_accepts_lasso(const ParityAutomaton& a, const Lasso& l) {
  Lasso rl = run_lasso(a, l);
  return lasso_parity_payoff(a.coloring, rl);
}

ParityAutomaton coloring_to_automaton(const Coloring& vertex_colors, int num_vertices,
                                      int initial_vertex) {
  ParityAutomaton a;
  a.alphabet_size = num_vertices;
  for (int v = 0; v < num_vertices; ++v) a.add_state("s" + std::to_string(v));
  for (int s = 0; s < num_vertices; ++s)
    for (int v = 0; v < num_vertices; ++v) a.set_trans(s, v, v);
  a.initial = initial_vertex;
  a.coloring = vertex_colors;
  return a;
}

}  // namespace ssev
