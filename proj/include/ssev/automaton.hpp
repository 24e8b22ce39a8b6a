#pragma once

#include <string>
#include <vector>

#include "ssev/base.hpp"
#include "ssev/coloring.hpp"
#include "ssev/lasso.hpp"

namespace ssev {

/// Deterministic complete parity automaton over the vertex alphabet of a host
/// arena. Acceptance: min color seen infinitely often along the run is even.
struct ParityAutomaton {
  int alphabet_size = 0;  // number of host vertices
  NameTable states;
  StateId initial = -1;
  std::vector<std::vector<StateId>> delta;  // [state][letter]
  Coloring coloring;                        // over states

  int num_states() const { return states.size(); }

  StateId add_state(const std::string& name) {
    StateId s = states.intern(name);
    if (s == static_cast<int>(delta.size()))
      delta.emplace_back(static_cast<size_t>(alphabet_size), -1);
    return s;
  }

  void set_trans(StateId s, int letter, StateId t) { delta.at(s).at(letter) = t; }

  StateId step(StateId s, int letter) const {
    StateId t = delta.at(s).at(letter);
    if (t < 0) throw input_error("automaton transition undefined at state " +
                                 states.name(s));
    return t;
  }

  /// Missing transitions (determinism holes in a total function table).
  std::vector<std::string> validate() const;

  /// One-state automaton accepting everything (color 0) or nothing (color 1).
  static ParityAutomaton universal(int alphabet, bool accepting);
};

/// Membership of prefix.cycle^omega in L(a): runs the prefix, pumps the cycle
/// until the (state, cycle position) pair repeats, then checks the parity of
/// the min color on the induced state cycle.
bool automaton_accepts_lasso(const ParityAutomaton& a, const Lasso& l);

/// The state lasso induced by running `a` on `l` (prefix up to the repeat
/// point, then the repeating state cycle).
Lasso run_lasso(const ParityAutomaton& a, const Lasso& l);

/// Encodes a vertex coloring as the per-vertex-memory automaton: one state per
/// vertex remembering the last letter read, colored by that vertex's color.
ParityAutomaton coloring_to_automaton(const Coloring& vertex_colors, int num_vertices,
                                      int initial_vertex);

}  // namespace ssev
