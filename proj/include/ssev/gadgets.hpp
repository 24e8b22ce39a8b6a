#pragma once

#include <string>
#include <vector>

#include "ssev/game.hpp"
#include "ssev/mealy.hpp"
#include "ssev/testgen.hpp"

namespace ssev {

/// CNF formula over variables 1..n; literals are signed indices.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

/// Quantified Boolean formula with strictly alternating prefix starting
/// existential: exists x1, forall x2, ...
struct QbfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

/// Complete DFA over the alphabet {a, b}.
struct Dfa {
  int states = 0;
  int initial = 0;
  std::vector<std::array<int, 2>> delta;  // [state][letter a=0, b=1]
  std::vector<char> accepting;
};

/// Independent truth-table evaluators.
bool cnf_satisfiable(const CnfFormula& f);
bool qbf_holds(const QbfFormula& f);

/// Emptiness of the intersection over nonempty words; words constrained to
/// begin with 'a' when `first_letter_a` (the compositional gadget reads the
/// initial arena vertex into the automata).
bool dfa_intersection_empty(const std::vector<Dfa>& dfas, bool nonempty_words_only,
                            bool first_letter_a);

/// Satisfiability encoded into SSE-checking: the all-to-sink profile is an
/// SSE iff the formula is unsatisfiable. Players: Solver + one per literal.
std::pair<ParityGame, MealyMachine> sat_to_checking(const CnfFormula& f);

/// Quantified satisfaction encoded into fixed-payoff SSE existence with
/// co-Buechi objectives: an SSE with payoff all-1 exists iff the formula does
/// NOT hold. Players: literals + Solver + Opponent.
std::pair<ParityGame, PayoffVector> qsat_to_existence(const QbfFormula& f);

/// DFA-intersection emptiness into omega-regular SSE-checking; returns the
/// game and one machine per player (product them for the monolithic path).
std::pair<OmegaRegularGame, std::vector<MealyMachine>> dfa_intersection_to_checking(
    const std::vector<Dfa>& dfas);

/// DFA-intersection emptiness into compositional parity SSE-checking:
/// Solver loops on 'a'; player machines approve words their DFA accepts.
std::pair<ParityGame, std::vector<MealyMachine>> dfa_intersection_to_compositional_checking(
    const std::vector<Dfa>& dfas);

Dfa random_dfa(Rng& rng, int max_states);
CnfFormula random_cnf(Rng& rng, int variables, int clauses, int max_literals);

}  // namespace ssev
