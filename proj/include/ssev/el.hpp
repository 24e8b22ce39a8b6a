#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ssev/coloring.hpp"
#include "ssev/game.hpp"
#include "ssev/lasso.hpp"

namespace ssev {

/// Vertex sets serving as Inf/Fin atoms; deduplicated by content.
struct AtomTable {
  std::vector<std::vector<char>> sets;

  int add(std::vector<char> mask);
  bool hits(int atom, int vertex) const { return sets[static_cast<size_t>(atom)][static_cast<size_t>(vertex)] != 0; }
  int domain() const { return sets.empty() ? 0 : static_cast<int>(sets.front().size()); }
};

/// Positive Boolean combination of Inf(S) atoms and their negations Fin(S),
/// in negation normal form.
struct ELFormula {
  enum class Kind { True, False, Inf, Fin, And, Or };
  Kind kind = Kind::True;
  int atom = -1;
  std::vector<ELFormula> kids;

  static ELFormula t() { return {Kind::True, -1, {}}; }
  static ELFormula f() { return {Kind::False, -1, {}}; }
  static ELFormula inf(int a) { return {Kind::Inf, a, {}}; }
  static ELFormula fin(int a) { return {Kind::Fin, a, {}}; }
  static ELFormula conj(std::vector<ELFormula> ks);
  static ELFormula disj(std::vector<ELFormula> ks);

  ELFormula negated() const;

  /// Evaluation under "the Inf-hit atoms are exactly those where `hit` holds".
  bool eval(const std::function<bool(int)>& hit) const;

  /// Evaluation on a lasso: an atom is hit iff its set meets the cycle.
  bool eval_on_lasso(const AtomTable& atoms, const Lasso& l) const;

  std::string to_string() const;
};

/// Condition bundle: formula plus the sets its atoms refer to.
struct ELCondition {
  AtomTable atoms;
  ELFormula formula;
};

/// Parity(k) as an EL formula: union over even colors c of
/// Inf(color c) and Fin(colors < c). `negate` builds the complement.
ELFormula parity_formula(AtomTable& atoms, const Coloring& k, bool negate);

/// The Challenger's objective in the deviator game region with deviator set D:
/// for empty D, payoff differs from the target or correctness fails; else all
/// deviators keep their target payoff and some outsider drops below it.
ELCondition challenger_objective(const ParityGame& g, PlayerSet D, const PayoffVector& target,
                                 bool correctness_present);

/// Simplification: flattening, constant folding (empty and full sets),
/// merging of Inf-unions and Fin-unions, deduplication.
ELFormula simplify(const ELFormula& f, AtomTable& atoms);

/// Deterministic memory structure turning an EL condition into a parity
/// condition over (vertex, memory) pairs. Memory updates on the target vertex
/// of each step; the color is read off the memory reached.
struct ElToParity {
  int mem_count = 1;
  int mem_init = 0;
  std::function<int(int mem, int vertex)> update;
  std::function<int(int mem)> color;  // parity color after the update
  int max_color = 0;
};

/// Chooses the cheapest sound reduction for the (simplified) formula:
/// direct parity colorings for recognizable shapes, a counter for
/// generalized-Buechi conjunctions, and a latest-appearance-record over the
/// atoms as the general fallback (guarded at 8 atoms).
ElToParity el_to_parity(const ELFormula& f, const AtomTable& atoms);

/// Latest-appearance-record expansion over the full atom set (the fallback
/// path of el_to_parity, exposed for direct use and testing).
ElToParity lar_reduce(const ELFormula& f, const AtomTable& atoms);

}  // namespace ssev
