#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssev/arena.hpp"
#include "ssev/automaton.hpp"
#include "ssev/check.hpp"
#include "ssev/coloring.hpp"
#include "ssev/game.hpp"
#include "ssev/lasso.hpp"
#include "ssev/mealy.hpp"
#include "ssev/oracles.hpp"
#include "ssev/product_graph.hpp"
#include <random>

#include "ssev/streett.hpp"

using namespace ssev;

namespace {

Arena loop_arena() {
  Arena a;
  a.add_player("p");
  VertexId v = a.add_vertex("v", 0);
  a.add_edge(v, v);
  a.initial = v;
  return a;
}

}  // namespace

TEST_CASE("minimal arena validates; sinks are reported") {
  Arena a = loop_arena();
  CHECK(validate_arena(a).empty());

  Arena b;
  b.add_player("p");
  VertexId v1 = b.add_vertex("v1", 0);
  VertexId v2 = b.add_vertex("v2", 0);
  b.add_edge(v2, v1);
  b.initial = v1;
  auto viol = validate_arena(b);
  REQUIRE(viol.size() == 1);
  CHECK(viol.front().find("v1") != std::string::npos);
}

TEST_CASE("lasso parity payoff") {
  Coloring k = Coloring::of({0});
  Lasso l{{}, {0}};
  CHECK(lasso_parity_payoff(k, l));

  Coloring k2 = Coloring::of({1, 2});
  CHECK_FALSE(lasso_parity_payoff(k2, Lasso{{}, {0, 1}}));

  // Prefix colors are ignored.
  Coloring k3 = Coloring::of({1, 0});
  CHECK(lasso_parity_payoff(k3, Lasso{{0}, {1}}));
}

TEST_CASE("lasso payoff invariant under rotation and unrolling") {
  Coloring k = Coloring::of({3, 0, 1, 2});
  Lasso l{{3}, {0, 1, 2}};
  bool base = lasso_parity_payoff(k, l);
  for (size_t r = 1; r < 5; ++r) CHECK(lasso_parity_payoff(k, l.rotated(r)) == base);
  for (size_t u = 2; u < 4; ++u) CHECK(lasso_parity_payoff(k, l.unrolled(u)) == base);
}

TEST_CASE("universal and empty one-state automata") {
  ParityAutomaton yes = ParityAutomaton::universal(3, true);
  ParityAutomaton no = ParityAutomaton::universal(3, false);
  Lasso l{{0}, {1, 2}};
  CHECK(automaton_accepts_lasso(yes, l));
  CHECK_FALSE(automaton_accepts_lasso(no, l));
}

TEST_CASE("automaton acceptance matches the parity of its run lasso") {
  // Two-state automaton over letters {0,1}: toggles on letter 1.
  ParityAutomaton a;
  a.alphabet_size = 2;
  StateId s0 = a.add_state("s0");
  StateId s1 = a.add_state("s1");
  a.initial = s0;
  a.set_trans(s0, 0, s0);
  a.set_trans(s0, 1, s1);
  a.set_trans(s1, 0, s1);
  a.set_trans(s1, 1, s0);
  a.coloring = Coloring::of({1, 0});

  Lasso l{{}, {1}};  // toggles forever
  Lasso run = run_lasso(a, l);
  CHECK(automaton_accepts_lasso(a, l) == lasso_parity_payoff(a.coloring, run));
  CHECK(automaton_accepts_lasso(a, l));  // visits s1 infinitely often

  Lasso l2{{1}, {0}};  // one toggle, then stay in s1
  CHECK(automaton_accepts_lasso(a, l2));
  Lasso l3{{}, {0}};  // never toggles
  CHECK_FALSE(automaton_accepts_lasso(a, l3));
}

TEST_CASE("synchronized product of universal automata is the arena") {
  OmegaRegularGame g;
  g.arena.add_player("a");
  g.arena.add_player("b");
  VertexId u = g.arena.add_vertex("u", 0);
  VertexId v = g.arena.add_vertex("v", 1);
  g.arena.add_edge(u, v);
  g.arena.add_edge(v, u);
  g.arena.initial = u;
  g.objectives.push_back(ParityAutomaton::universal(2, true));
  g.objectives.push_back(ParityAutomaton::universal(2, false));

  SynchronizedProduct sp = synchronized_product(g);
  CHECK(sp.game.arena.num_vertices() == 2);
  CHECK(sp.game.objectives[0].colors == std::vector<int>{0, 0});
  CHECK(sp.game.objectives[1].colors == std::vector<int>{1, 1});
}

TEST_CASE("product payoffs agree with automata acceptance on lassos") {
  // 2 vertices, 2 players with small automata; compare payoffs on the
  // product against direct acceptance of the projection.
  OmegaRegularGame g;
  g.arena.add_player("a");
  g.arena.add_player("b");
  VertexId u = g.arena.add_vertex("u", 0);
  VertexId v = g.arena.add_vertex("v", 1);
  g.arena.add_edge(u, u);
  g.arena.add_edge(u, v);
  g.arena.add_edge(v, u);
  g.arena.initial = u;

  ParityAutomaton a1;
  a1.alphabet_size = 2;
  a1.add_state("x");
  a1.add_state("y");
  a1.initial = 0;
  a1.set_trans(0, 0, 0);
  a1.set_trans(0, 1, 1);
  a1.set_trans(1, 0, 0);
  a1.set_trans(1, 1, 1);
  a1.coloring = Coloring::of({1, 0});
  g.objectives.push_back(a1);
  g.objectives.push_back(ParityAutomaton::universal(2, true));

  SynchronizedProduct sp = synchronized_product(g);
  // Walk some lassos of the product and compare.
  for (int pv = 0; pv < sp.game.arena.num_vertices(); ++pv) {
    for (VertexId pw : sp.game.arena.succ[static_cast<size_t>(pv)]) {
      if (!sp.game.arena.has_edge(pw, pv)) continue;
      Lasso pl{{}, {pv, pw}};
      Lasso proj = sp.project(pl);
      for (int player = 0; player < 2; ++player) {
        CHECK(lasso_parity_payoff(sp.game.objectives[static_cast<size_t>(player)], pl) ==
              automaton_accepts_lasso(g.objectives[static_cast<size_t>(player)], proj));
      }
    }
  }
}

TEST_CASE("mealy determinism and product machine") {
  Arena a;
  a.add_player("p1");
  a.add_player("p2");
  VertexId u = a.add_vertex("u", 0);
  VertexId v = a.add_vertex("v", 1);
  a.add_edge(u, v);
  a.add_edge(u, u);
  a.add_edge(v, u);
  a.initial = u;

  MealyMachine m1;
  m1.scope = 0;
  m1.num_vertices = 2;
  StateId s = m1.add_state("s");
  m1.initial = s;
  m1.add_output(s, u, s, v);
  m1.add_read(s, v, s);
  CHECK(is_deterministic(m1));

  MealyMachine m2;
  m2.scope = 1;
  m2.num_vertices = 2;
  StateId t0 = m2.add_state("t0");
  StateId t1 = m2.add_state("t1");
  m2.initial = t0;
  m2.add_read(t0, u, t1);
  m2.add_read(t1, u, t0);
  m2.add_output(t0, v, t0, u);
  m2.add_output(t1, v, t1, u);
  CHECK(is_deterministic(m2));

  MealyMachine pm = product_machine(a, {m1, m2});
  CHECK(pm.scope == MealyMachine::kAllPlayers);
  CHECK(pm.num_states() <= 2);
  CHECK(pm.validate(a).empty());
  CHECK(is_deterministic(pm));

  // Nondeterminism is detected.
  MealyMachine nd = m1;
  nd.add_output(s, u, s, u);
  CHECK_FALSE(is_deterministic(nd));
}

TEST_CASE("product graph labels deviations by the owner") {
  Arena a;
  a.add_player("p");
  VertexId u = a.add_vertex("u", 0);
  VertexId v = a.add_vertex("v", 0);
  a.add_edge(u, v);
  a.add_edge(u, u);
  a.add_edge(v, u);
  a.initial = u;

  MealyMachine m;
  m.scope = MealyMachine::kAllPlayers;
  m.num_vertices = 2;
  StateId s = m.add_state("s");
  m.initial = s;
  m.add_output(s, u, s, v);
  m.add_output(s, v, s, u);

  ProductGraph p = build_product_graph(a, m);
  CHECK(p.size() == 2);
  REQUIRE(p.succ[0].size() == 2);
  int dev_edges = 0, comp_edges = 0;
  for (const auto& e : p.succ[0]) (e.deviator >= 0 ? dev_edges : comp_edges)++;
  CHECK(dev_edges == 1);
  CHECK(comp_edges == 1);

  ProductGraph none = restrict_deviators(p, 0);
  for (int x = 0; x < none.size(); ++x)
    for (const auto& e : none.succ[static_cast<size_t>(x)]) CHECK(e.deviator < 0);

  // Full coalition keeps everything.
  ProductGraph full = restrict_deviators(p, 1);
  int total = 0, total_full = 0;
  for (int x = 0; x < p.size(); ++x) total += static_cast<int>(p.succ[static_cast<size_t>(x)].size());
  for (int x = 0; x < full.size(); ++x)
    total_full += static_cast<int>(full.succ[static_cast<size_t>(x)].size());
  CHECK(total == total_full);
}

TEST_CASE("streett pairs characterize payoff vectors") {
  // Single player, colors {0,1}, win: one pair (R = color 1, G = color 0).
  std::vector<Coloring> obj{Coloring::of({1, 0, 1, 3})};
  StreettCondition cond = streett_pairs_for_payoff(obj, PayoffVector::from_bits("1", 1));
  REQUIRE(cond.pairs.size() == 2);  // j=0 and j=1 (color 3)
  CHECK(cond.pairs[0].R == std::vector<char>{1, 0, 1, 0});
  CHECK(cond.pairs[0].G == std::vector<char>{0, 1, 0, 0});
}

TEST_CASE("streett emptiness finds satisfying lassos") {
  // Cycle 0 -> 1 -> 0 and self-loop at 2 reachable from 0.
  std::vector<std::vector<int>> succ{{1, 2}, {0}, {2}};
  StreettCondition none;
  none.n = 3;
  auto l = streett_nonempty(succ, 0, none);
  REQUIRE(l);
  CHECK(lasso_valid(*l, [&](int x, int y) {
    for (int w : succ[static_cast<size_t>(x)])
      if (w == y) return true;
    return false;
  }));

  StreettCondition unsat;
  unsat.n = 3;
  unsat.pairs.push_back({{1, 1, 1}, {0, 0, 0}});
  CHECK_FALSE(streett_nonempty(succ, 0, unsat));

  // Requires visiting vertex 1 infinitely: the 0-1 cycle qualifies.
  StreettCondition need1;
  need1.n = 3;
  need1.pairs.push_back({{1, 1, 1}, {0, 1, 0}});
  auto l2 = streett_nonempty(succ, 0, need1);
  REQUIRE(l2);
  bool has1 = false;
  for (int v : l2->cycle) has1 = has1 || v == 1;
  CHECK(has1);
}

TEST_CASE("brute-force lasso payoff equivalence for random 4-vertex games") {
  // Every simple lasso's payoff vector matches the Streett condition built
  // for it, across all 4 payoff vectors of a 2-player random coloring.
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 4;
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      succ[static_cast<size_t>(v)].push_back(static_cast<int>(rng() % n));
      if (rng() % 2) succ[static_cast<size_t>(v)].push_back(static_cast<int>(rng() % n));
    }
    std::vector<Coloring> obj;
    for (int p = 0; p < 2; ++p) {
      std::vector<int> cs;
      for (int v = 0; v < n; ++v) cs.push_back(static_cast<int>(rng() % 4));
      obj.push_back(Coloring::of(cs));
    }
    // Enumerate simple cycles by subsets.
    for (int bits = 1; bits < (1 << 4); ++bits) {
      for (int x = 0; x < 16; ++x) {
        PayoffVector target;
        target.wins = {static_cast<uint8_t>((x >> 1) & 1), static_cast<uint8_t>(x & 1)};
        if (target.wins.size() != 2) continue;
        StreettCondition cond = streett_pairs_for_payoff(obj, target);
        std::vector<int> set;
        for (int v = 0; v < 4; ++v)
          if ((bits >> v) & 1) set.push_back(v);
        // Payoff of a lasso with Inf exactly `set`.
        PayoffVector actual;
        for (int p = 0; p < 2; ++p) {
          int mn = 100;
          for (int v : set) mn = std::min(mn, obj[static_cast<size_t>(p)].at(v));
          actual.wins.push_back(mn % 2 == 0);
        }
        CHECK(cond.satisfied_by_inf_set(set) == (actual == target));
        if (x >= 3) break;  // all four vectors covered by x in 0..3
      }
    }
  }
}

TEST_CASE("check_sse on a single-vertex game is all-SSE") {
  ParityGame g;
  g.arena = loop_arena();
  g.objectives.push_back(Coloring::of({0}));

  MealyMachine m;
  m.scope = MealyMachine::kAllPlayers;
  m.num_vertices = 1;
  StateId s = m.add_state("s");
  m.initial = s;
  m.add_output(s, 0, s, 0);

  CheckVerdict v = check_sse(g, m);
  CHECK(v.all_sse);
}

TEST_CASE("check_sse finds the obvious harmful deviation") {
  // Two players; owner p0 can keep p1 happy (v) or hurt them (w).
  // Machine goes to v; deviation to w harms p1 while p0 stays indifferent.
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
  g.objectives.push_back(Coloring::of({0, 0, 0}));  // p0 always wins
  g.objectives.push_back(Coloring::of({0, 0, 1}));  // p1 loses at w

  MealyMachine m;
  m.scope = MealyMachine::kAllPlayers;
  m.num_vertices = 3;
  StateId s = m.add_state("s");
  m.initial = s;
  m.add_output(s, u, s, v);
  m.add_output(s, v, s, v);
  m.add_output(s, w, s, w);

  CheckVerdict res = check_sse(g, m);
  REQUIRE_FALSE(res.all_sse);
  REQUIRE(res.witness);
  CHECK(res.witness->harmed == 1);
  CHECK(contains(res.witness->deviators, 0));

  ProductGraph p = build_product_graph(g.arena, m);
  CHECK(validate_witness(*res.witness, p, g.objectives).empty());

  // The oracle agrees.
  CheckVerdict ov = oracle_witness_search(g, m, oracle_default_bound(p.size()));
  CHECK_FALSE(ov.all_sse);
  CHECK(validate_witness(*ov.witness, p, g.objectives).empty());
}

TEST_CASE("upward harm sets") {
  PayoffVector x11 = PayoffVector::from_bits("11", 2);
  auto s1 = upward_harm_set(x11, with(0, 0));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].bits() == "10");

  PayoffVector x10 = PayoffVector::from_bits("10", 2);
  auto s2 = upward_harm_set(x10, with(0, 1));
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].bits() == "01");
  CHECK(s2[1].bits() == "00");

  PayoffVector x111 = PayoffVector::from_bits("111", 3);
  PlayerSet c12 = with(with(0, 0), 1);
  auto s3 = upward_harm_set(x111, c12);
  CHECK(s3.size() == 1);  // only 110: both members must keep 1, outsider drops
  CHECK(s3[0].bits() == "110");

  CHECK_THROWS_AS(upward_harm_set(x11, 0), input_error);
  CHECK_THROWS_AS(upward_harm_set(x11, 3), input_error);
}
