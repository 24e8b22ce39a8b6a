#pragma once

#include <string>
#include <vector>

#include "ssev/arena.hpp"

namespace ssev {

/// Finite-state transducer encoding a strategy profile. Scope is either one
/// player (read-only tuples at foreign vertices, output tuples at owned ones)
/// or all players (output tuples everywhere). May be nondeterministic.
struct MealyMachine {
  static constexpr PlayerId kAllPlayers = -1;

  struct Transition {
    StateId next;
    VertexId out;  // -1 on read-only tuples
  };

  PlayerId scope = kAllPlayers;
  NameTable states;
  StateId initial = -1;
  // trans[state][vertex] -> alternatives, in insertion order
  std::vector<std::vector<std::vector<Transition>>> trans;
  int num_vertices = 0;

  int num_states() const { return states.size(); }

  StateId add_state(const std::string& name) {
    StateId s = states.intern(name);
    if (s == static_cast<int>(trans.size()))
      trans.emplace_back(static_cast<size_t>(num_vertices));
    return s;
  }

  void add_read(StateId s, VertexId v, StateId t) {
    trans.at(s).at(v).push_back({t, -1});
  }
  void add_output(StateId s, VertexId v, StateId t, VertexId out) {
    trans.at(s).at(v).push_back({t, out});
  }

  const std::vector<Transition>& at(StateId s, VertexId v) const { return trans.at(s).at(v); }

  /// Violations of the machine invariants against its host arena:
  /// completeness, edge-validity of outputs, scope/ownership consistency.
  std::vector<std::string> validate(const Arena& a) const;
};

/// True iff exactly one tuple exists per (state, vertex).
bool is_deterministic(const MealyMachine& m);

/// Combines one machine per player into an all-players machine over the
/// reachable part of the Cartesian state space. Requires distinct scopes
/// covering all players.
MealyMachine product_machine(const Arena& a, const std::vector<MealyMachine>& machines);

}  // namespace ssev
