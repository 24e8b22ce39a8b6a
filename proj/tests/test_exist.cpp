#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ssev/check.hpp"
#include "ssev/deviator.hpp"
#include "ssev/el.hpp"
#include "ssev/exist.hpp"
#include "ssev/gadgets.hpp"
#include "ssev/testgen.hpp"

using namespace ssev;

namespace {

ParityGame two_choice_game() {
  // u (p0) -> v | w, both loops; p1 loses at w.
  ParityGame g;
  g.arena.add_player("p0");
  g.arena.add_player("p1");
  VertexId u = g.arena.add_vertex("u", 0);
  VertexId v = g.arena.add_vertex("v", 0);
  VertexId w = g.arena.add_vertex("w", 0);
  g.arena.add_edge(u, v);
  g.arena.add_edge(u, w);
  g.arena.add_edge(v, v);
  g.arena.add_edge(w, w);
  g.arena.initial = u;
  g.objectives.push_back(Coloring::of({0, 0, 0}));
  g.objectives.push_back(Coloring::of({0, 0, 1}));
  return g;
}

}  // namespace

TEST_CASE("deviator game: single-vertex arena never grows the deviator set") {
  ParityGame g;
  g.arena.add_player("p");
  VertexId v = g.arena.add_vertex("v", 0);
  g.arena.add_edge(v, v);
  g.arena.initial = v;
  g.objectives.push_back(Coloring::of({0}));

  DeviatorGame d = build_deviator_game(g, PayoffVector::all(1, true));
  auto sets = d.reachable_deviator_sets();
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == 0);
}

TEST_CASE("deviator game: two-successor vertex yields accept plus deviate") {
  ParityGame g = two_choice_game();
  DeviatorGame d = build_deviator_game(g, PayoffVector::all(2, true));
  // Challenger vertex for the edge u->v.
  DeviatorGame::Vertex cv{true, 0, 0};
  auto succ = d.successors(cv);
  REQUIRE(succ.size() == 2);
  CHECK(succ[0].deviators == 0);
  CHECK(succ[1].deviators == with(0u, 0));

  auto sets = d.reachable_deviator_sets();
  CHECK(sets.size() == 2);  // {} and {p0}
}

TEST_CASE("deviator set is monotone along random plays") {
  Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    ParityGame g = random_parity_game(rng, 5, 3, 3, 5);
    DeviatorGame d = build_deviator_game(g, PayoffVector::all(3, true));
    DeviatorGame::Vertex v = d.initial_vertex();
    PlayerSet last = 0;
    for (int step = 0; step < 60; ++step) {
      auto succ = d.successors(v);
      REQUIRE_FALSE(succ.empty());
      v = succ[rng() % succ.size()];
      CHECK((v.deviators & last) == last);
      last = v.deviators;
    }
  }
}

TEST_CASE("challenger objective shapes") {
  ParityGame g = two_choice_game();
  PayoffVector all1 = PayoffVector::all(2, true);

  // Empty deviator set, no correctness: disjunction of losing conditions.
  ELCondition c0 = challenger_objective(g, 0, all1, false);
  CHECK(c0.formula.kind != ELFormula::Kind::False);

  // Full deviator set: unsatisfiable.
  ELCondition cf = challenger_objective(g, 3, all1, false);
  CHECK(cf.formula.kind == ELFormula::Kind::False);

  // D = {p0}: Parity(p0) & !Parity(p1); on the w-loop lasso the challenger
  // wins (p0 keeps 1, p1 drops), on the v-loop he does not.
  ELCondition c1 = challenger_objective(g, with(0u, 0), all1, false);
  Lasso w_loop{{0}, {2}};
  Lasso v_loop{{0}, {1}};
  CHECK(c1.formula.eval_on_lasso(c1.atoms, w_loop));
  CHECK_FALSE(c1.formula.eval_on_lasso(c1.atoms, v_loop));
}

TEST_CASE("exists_sse on the two-choice game") {
  ParityGame g = two_choice_game();
  // Payoff 11 requires reaching v and surviving the deviation to w; the
  // deviation harms p1 while p0 keeps payoff 1, so no SSE with 11 exists...
  // except the harmful deviation requires a deviator: the deviation at u is
  // by p0 who keeps 1 >= 1 and p1 < 1: Challenger wins. Hence not-exists.
  CHECK_FALSE(exists_sse(g, PayoffVector::from_bits("11", 2)).exists);

  // Payoff 10 is realized by the w-loop; deviating to v gives everyone 1,
  // which harms nobody relative to 10? Deviation by p0 to v: p0 keeps 1,
  // p1 improves: no outsider drops below target, so Prover wins.
  CHECK(exists_sse(g, PayoffVector::from_bits("10", 2)).exists);
}

TEST_CASE("single-player existence matches reachable payoffs") {
  // One player, two loops: color 0 at v, color 1 at w.
  ParityGame g;
  g.arena.add_player("p");
  VertexId u = g.arena.add_vertex("u", 0);
  VertexId v = g.arena.add_vertex("v", 0);
  VertexId w = g.arena.add_vertex("w", 0);
  g.arena.add_edge(u, v);
  g.arena.add_edge(u, w);
  g.arena.add_edge(v, v);
  g.arena.add_edge(w, w);
  g.arena.initial = u;
  g.objectives.push_back(Coloring::of({1, 0, 1}));

  CHECK(exists_sse(g, PayoffVector::from_bits("1", 1)).exists);
  CHECK(exists_sse(g, PayoffVector::from_bits("0", 1)).exists);

  ExistVerdict v1 = exists_sse(g, PayoffVector::from_bits("1", 1));
  MealyMachine m = extract_protocol_machine(v1, g);
  CHECK(m.validate(g.arena).empty());
  CHECK(is_deterministic(m));
  CheckVerdict back = check_sse(g, m);
  CHECK(back.all_sse);
}

TEST_CASE("closed loop: extracted machines realize the target and pass check_sse") {
  Rng rng(31);
  int exists_count = 0;
  for (int iter = 0; iter < 60; ++iter) {
    ParityGame g = random_parity_game(rng, 2 + static_cast<int>(rng() % 4),
                                      2 + static_cast<int>(rng() % 2), 3, 4);
    int n = g.arena.num_players();
    PayoffVector target;
    for (int p = 0; p < n; ++p) target.wins.push_back(rng() % 2);
    ExistVerdict v = exists_sse(g, target);
    if (!v.exists) continue;
    ++exists_count;
    MealyMachine m = extract_protocol_machine(v, g);
    REQUIRE(m.validate(g.arena).empty());
    REQUIRE(is_deterministic(m));

    // The unique compliant outcome realizes the target payoff.
    ProductGraph p = build_product_graph(g.arena, m);
    ProductGraph p0 = restrict_deviators(p, 0);
    int cur = p0.initial;
    std::vector<int> pos(static_cast<size_t>(p0.size()), -1);
    std::vector<int> walk;
    while (pos[static_cast<size_t>(cur)] < 0) {
      pos[static_cast<size_t>(cur)] = static_cast<int>(walk.size());
      walk.push_back(cur);
      REQUIRE(p0.succ[static_cast<size_t>(cur)].size() == 1);
      cur = p0.succ[static_cast<size_t>(cur)].front().to;
    }
    Lasso outcome;
    int split = pos[static_cast<size_t>(cur)];
    outcome.prefix.assign(walk.begin(), walk.begin() + split);
    outcome.cycle.assign(walk.begin() + split, walk.end());
    CHECK(g.payoff_of_lasso(p0.project(outcome)) == target);

    CHECK(check_sse(g, m).all_sse);
  }
  CHECK(exists_count > 10);
}

TEST_CASE("existence with universal correctness agrees with no correctness") {
  Rng rng(77);
  for (int iter = 0; iter < 25; ++iter) {
    ParityGame g = random_parity_game(rng, 4, 2, 3, 4);
    PayoffVector target;
    for (int p = 0; p < 2; ++p) target.wins.push_back(rng() % 2);
    bool plain = exists_sse(g, target).exists;
    ParityGame g2 = g;
    g2.correctness = Coloring::constant(g.arena.num_vertices(), 0);
    CHECK(exists_sse(g2, target).exists == plain);
  }
}

TEST_CASE("unsatisfiable correctness forbids existence") {
  ParityGame g = two_choice_game();
  g.correctness = Coloring::constant(3, 1);
  CHECK_FALSE(exists_sse(g, PayoffVector::from_bits("10", 2)).exists);
}

TEST_CASE("omega existence via the synchronized product") {
  // Universal automata reduce to the trivially-colored parity game.
  OmegaRegularGame g;
  g.arena.add_player("a");
  g.arena.add_player("b");
  VertexId u = g.arena.add_vertex("u", 0);
  VertexId v = g.arena.add_vertex("v", 1);
  g.arena.add_edge(u, v);
  g.arena.add_edge(v, u);
  g.arena.add_edge(v, v);
  g.arena.initial = u;
  g.objectives.push_back(ParityAutomaton::universal(2, true));
  g.objectives.push_back(ParityAutomaton::universal(2, true));

  OmegaExistVerdict ov = exists_sse_omega(g, PayoffVector::from_bits("11", 2));
  CHECK(ov.verdict.exists);
  MealyMachine m = extract_protocol_machine_omega(ov, g);
  CHECK(m.validate(g.arena).empty());
  CHECK(check_sse_omega(g, m).all_sse);

  CHECK_FALSE(exists_sse_omega(g, PayoffVector::from_bits("10", 2)).verdict.exists);
}

TEST_CASE("qsat closed loop") {
  QbfFormula f{2, {{1}, {2}}};  // fails -> exists
  auto [g, target] = qsat_to_existence(f);
  ExistVerdict v = exists_sse(g, target);
  REQUIRE(v.exists);
  MealyMachine m = extract_protocol_machine(v, g);
  REQUIRE(m.validate(g.arena).empty());
  CheckVerdict back = check_sse(g, m);
  CHECK(back.all_sse);
}
