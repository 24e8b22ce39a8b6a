#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssev/check.hpp"
#include "ssev/el.hpp"
#include "ssev/oracles.hpp"
#include "ssev/testgen.hpp"
#include "ssev/zielonka.hpp"

using namespace ssev;

TEST_CASE("check_sse agrees with the brute-force oracle on random instances") {
  int disagreements = 0;
  int not_sse_seen = 0;
  for (uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed);
    ParityGame g = random_parity_game(rng, 2 + static_cast<int>(rng() % 5),
                                      2 + static_cast<int>(rng() % 2), 4, 4);
    MealyMachine m = random_machine(rng, g.arena, 1 + static_cast<int>(rng() % 3));

    CheckVerdict fast = check_sse(g, m);
    ProductGraph p = build_product_graph(g.arena, m);
    CheckVerdict slow = oracle_witness_search(g, m, oracle_default_bound(p.size()));
    if (fast.all_sse != slow.all_sse) ++disagreements;
    if (!fast.all_sse) {
      ++not_sse_seen;
      CHECK(validate_witness(*fast.witness, p, g.objectives).empty());
    }
    if (!slow.all_sse) CHECK(validate_witness(*slow.witness, p, g.objectives).empty());
  }
  CHECK(disagreements == 0);
  CHECK(not_sse_seen > 5);  // generator produces both verdicts
}

TEST_CASE("check verdict is invariant under renaming") {
  for (uint64_t seed = 200; seed < 220; ++seed) {
    Rng rng(seed);
    ParityGame g = random_parity_game(rng, 5, 2, 3, 4);
    MealyMachine m = random_machine(rng, g.arena, 2);
    bool before = check_sse(g, m).all_sse;

    // Rename vertices and players (swap names only; ids preserved).
    ParityGame g2 = g;
    g2.arena.players = NameTable();
    g2.arena.vertices = NameTable();
    for (int p = 0; p < g.arena.num_players(); ++p)
      g2.arena.players.intern("renamed_player_" + std::to_string(p));
    for (int v = 0; v < g.arena.num_vertices(); ++v)
      g2.arena.vertices.intern("renamed_vertex_" + std::to_string(v));
    CHECK(check_sse(g2, m).all_sse == before);
  }
}

TEST_CASE("compositional check equals monolithic on singleton-state machines") {
  for (uint64_t seed = 300; seed < 330; ++seed) {
    Rng rng(seed);
    ParityGame g = random_parity_game(rng, 4, 2, 3, 4);
    // Per-player singleton machines.
    std::vector<MealyMachine> ms;
    for (int p = 0; p < 2; ++p) {
      MealyMachine m;
      m.scope = p;
      m.num_vertices = g.arena.num_vertices();
      m.add_state("s");
      m.initial = 0;
      for (VertexId v = 0; v < g.arena.num_vertices(); ++v) {
        if (g.arena.owner[static_cast<size_t>(v)] == p) {
          const auto& sux = g.arena.succ[static_cast<size_t>(v)];
          m.add_output(0, v, 0, sux[rng() % sux.size()]);
        } else {
          m.add_read(0, v, 0);
        }
      }
      ms.push_back(std::move(m));
    }
    CheckVerdict comp = check_sse_compositional(g, ms);
    CheckVerdict mono = check_sse(g, product_machine(g.arena, ms));
    CHECK(comp.all_sse == mono.all_sse);
  }
}

TEST_CASE("zielonka agrees with positional enumeration on random games") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    TwoPlayerParityGame g = random_two_player_game(rng, 2 + static_cast<int>(rng() % 5), 4);
    ZielonkaResult z = zielonka_solve(g);
    std::vector<char> oracle = oracle_solve_parity_regions(g);
    for (int v = 0; v < g.size(); ++v) CHECK(z.protagonist_wins[static_cast<size_t>(v)] == oracle[static_cast<size_t>(v)]);
  }
}

TEST_CASE("zielonka self-loop base cases") {
  TwoPlayerParityGame g;
  g.protagonist_owns = {1};
  g.succ = {{0}};
  g.color = {0};
  g.initial = 0;
  CHECK(zielonka_solve(g).protagonist_wins[0] == 1);
  g.color = {1};
  CHECK(zielonka_solve(g).protagonist_wins[0] == 0);
}

TEST_CASE("EL formula on lassos equals the reduced parity condition") {
  // Random small graphs and formulas with <= 3 atoms; random lassos.
  for (uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed);
    int n = 4;
    AtomTable atoms;
    std::vector<int> ids;
    int r = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < r; ++i) {
      std::vector<char> s(static_cast<size_t>(n), 0);
      for (int v = 0; v < n; ++v) s[static_cast<size_t>(v)] = rng() % 2;
      ids.push_back(atoms.add(std::move(s)));
    }
    // Random formula tree over the atoms.
    std::function<ELFormula(int)> mk = [&](int depth) -> ELFormula {
      int pickf = static_cast<int>(rng() % (depth > 1 ? 4 : 2));
      switch (pickf) {
        case 0:
          return ELFormula::inf(ids[rng() % ids.size()]);
        case 1:
          return ELFormula::fin(ids[rng() % ids.size()]);
        case 2:
          return ELFormula::conj({mk(depth - 1), mk(depth - 1)});
        default:
          return ELFormula::disj({mk(depth - 1), mk(depth - 1)});
      }
    };
    ELFormula f = mk(3);

    // Random lasso over a complete graph on n vertices.
    Lasso l;
    int plen = static_cast<int>(rng() % 3);
    for (int i = 0; i < plen; ++i) l.prefix.push_back(static_cast<int>(rng() % n));
    int clen = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < clen; ++i) l.cycle.push_back(static_cast<int>(rng() % n));

    bool direct = f.eval_on_lasso(atoms, l);

    for (int variant = 0; variant < 2; ++variant) {
      ElToParity red = variant == 0 ? lar_reduce(f, atoms) : el_to_parity(simplify(f, atoms), atoms);
      // Walk the lasso through the memory. Pump until (position-in-cycle,
      // memory) repeats, then take the parity of the min color on the loop.
      int mem = red.mem_init;
      for (int v : l.prefix) mem = red.update(mem, v);
      std::map<std::pair<size_t, int>, size_t> seen;
      std::vector<int> colors;
      size_t pos = 0;
      bool reduced = false;
      while (true) {
        auto key = std::make_pair(pos, mem);
        auto it = seen.find(key);
        if (it != seen.end()) {
          int mn = 1 << 30;
          for (size_t i = it->second; i < colors.size(); ++i) mn = std::min(mn, colors[i]);
          reduced = mn % 2 == 0;
          break;
        }
        seen.emplace(key, colors.size());
        mem = red.update(mem, l.cycle[pos]);
        colors.push_back(red.color(mem));
        pos = (pos + 1) % l.cycle.size();
      }
      CHECK(reduced == direct);
    }
  }
}

TEST_CASE("lar_reduce + zielonka agrees with the enumeration oracle on EL games") {
  // Random 4-vertex arenas, formulas with <= 3 atoms. The expansion is solved
  // once by zielonka and once by positional enumeration over the expansion.
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    TwoPlayerParityGame arena = random_two_player_game(rng, 4, 2);
    AtomTable atoms;
    std::vector<int> ids;
    int r = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < r; ++i) {
      std::vector<char> s(4, 0);
      for (int v = 0; v < 4; ++v) s[static_cast<size_t>(v)] = rng() % 2;
      ids.push_back(atoms.add(std::move(s)));
    }
    std::vector<ELFormula> kids;
    for (int i : ids) kids.push_back(rng() % 2 ? ELFormula::inf(i) : ELFormula::fin(i));
    ELFormula f = rng() % 2 ? ELFormula::conj(kids) : ELFormula::disj(kids);

    ElToParity red = lar_reduce(f, atoms);
    // Expansion over (vertex, memory).
    TwoPlayerParityGame exp;
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::pair<int, int>> verts;
    std::function<int(int, int)> get = [&](int v, int mem) {
      auto it = idx.find({v, mem});
      if (it != idx.end()) return it->second;
      int id = static_cast<int>(verts.size());
      idx[{v, mem}] = id;
      verts.emplace_back(v, mem);
      exp.protagonist_owns.push_back(arena.protagonist_owns[static_cast<size_t>(v)]);
      exp.color.push_back(red.color(mem));
      exp.succ.emplace_back();
      return id;
    };
    int init = get(arena.initial, red.update(red.mem_init, arena.initial));
    for (size_t i = 0; i < verts.size(); ++i) {
      auto [v, mem] = verts[i];
      for (int w : arena.succ[static_cast<size_t>(v)]) {
        int id = get(w, red.update(mem, w));
        exp.succ[i].push_back(id);
      }
    }
    exp.initial = init;
    if (exp.size() > 60) continue;  // keep the oracle cheap
    bool z = zielonka_solve(exp).protagonist_wins[static_cast<size_t>(init)] != 0;
    bool o;
    try {
      o = oracle_solve_parity(exp);
    } catch (const input_error&) {
      continue;
    }
    CHECK(z == o);
  }
}
