#include "ssev/gadgets.hpp"

#include <array>
#include <deque>
#include <map>
#include <set>

namespace ssev {

bool cnf_satisfiable(const CnfFormula& f) {
  if (f.clauses.empty()) return true;
  for (int val = 0; val < (1 << f.variables); ++val) {
    bool all = true;
    for (const auto& cl : f.clauses) {
      bool one = false;
      for (int lit : cl) {
        int var = std::abs(lit) - 1;
        bool v = (val >> var) & 1;
        one = one || (lit > 0 ? v : !v);
      }
      if (!one) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace {

bool qbf_holds_rec(const QbfFormula& f, int var, int val) {
  if (var == f.variables) {
    for (const auto& cl : f.clauses) {
      bool one = false;
      for (int lit : cl) {
        int v = std::abs(lit) - 1;
        bool b = (val >> v) & 1;
        one = one || (lit > 0 ? b : !b);
      }
      if (!one) return false;
    }
    return true;
  }
  bool exists_q = (var % 2 == 0);  // x1 existential, x2 universal, ...
  bool with0 = qbf_holds_rec(f, var + 1, val);
  bool with1 = qbf_holds_rec(f, var + 1, val | (1 << var));
  return exists_q ? (with0 || with1) : (with0 && with1);
}

}  // namespace

bool qbf_holds(const QbfFormula& f) { return qbf_holds_rec(f, 0, 0); }

bool dfa_intersection_empty(const std::vector<Dfa>& dfas, bool nonempty_words_only,
                            bool first_letter_a) {
  size_t n = dfas.size();
  std::vector<int> start;
  for (const auto& d : dfas) start.push_back(d.initial);

  auto step = [&](const std::vector<int>& t, int letter) {
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = dfas[i].delta[static_cast<size_t>(t[i])][static_cast<size_t>(letter)];
    return out;
  };
  auto all_accepting = [&](const std::vector<int>& t) {
    for (size_t i = 0; i < n; ++i)
      if (!dfas[i].accepting[static_cast<size_t>(t[i])]) return false;
    return true;
  };

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> work;
  if (first_letter_a) {
    work.push_back(step(start, 0));
  } else if (nonempty_words_only) {
    work.push_back(step(start, 0));
    work.push_back(step(start, 1));
  } else {
    work.push_back(start);
  }
  while (!work.empty()) {
    auto t = work.front();
    work.pop_front();
    if (!seen.insert(t).second) continue;
    if (all_accepting(t)) return false;
    work.push_back(step(t, 0));
    work.push_back(step(t, 1));
  }
  return true;
}

std::pair<ParityGame, MealyMachine> sat_to_checking(const CnfFormula& f) {
  if (f.clauses.empty()) throw input_error("sat gadget needs at least one clause");
  for (const auto& cl : f.clauses)
    if (cl.empty()) throw input_error("sat gadget found an empty clause");

  ParityGame g;
  Arena& a = g.arena;
  PlayerId solver = a.add_player("S");
  std::vector<PlayerId> pos_player, neg_player;
  for (int i = 1; i <= f.variables; ++i) {
    pos_player.push_back(a.add_player("x" + std::to_string(i)));
    neg_player.push_back(a.add_player("!x" + std::to_string(i)));
  }

  auto lit_player = [&](int lit) {
    return lit > 0 ? pos_player[static_cast<size_t>(lit - 1)]
                   : neg_player[static_cast<size_t>(-lit - 1)];
  };

  std::vector<VertexId> ask, posv, negv, clausev;
  for (int i = 1; i <= f.variables; ++i) {
    ask.push_back(a.add_vertex("?x" + std::to_string(i), solver));
    posv.push_back(a.add_vertex("x" + std::to_string(i) + "^s", pos_player[static_cast<size_t>(i - 1)]));
    negv.push_back(a.add_vertex("!x" + std::to_string(i) + "^s", neg_player[static_cast<size_t>(i - 1)]));
  }
  VertexId sink = a.add_vertex("\u25bc", solver);
  for (size_t c = 0; c < f.clauses.size(); ++c)
    clausev.push_back(a.add_vertex("C" + std::to_string(c + 1), solver));
  std::vector<std::vector<VertexId>> litv(f.clauses.size());
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (size_t j = 0; j < f.clauses[c].size(); ++j)
      litv[c].push_back(a.add_vertex("l" + std::to_string(c + 1) + "," + std::to_string(j + 1),
                                     solver));
  VertexId check = a.add_vertex("\u2713", solver);

  for (int i = 0; i < f.variables; ++i) {
    a.add_edge(ask[static_cast<size_t>(i)], posv[static_cast<size_t>(i)]);
    a.add_edge(ask[static_cast<size_t>(i)], negv[static_cast<size_t>(i)]);
    VertexId next = (i + 1 < f.variables) ? ask[static_cast<size_t>(i + 1)] : clausev.front();
    a.add_edge(posv[static_cast<size_t>(i)], next);
    a.add_edge(posv[static_cast<size_t>(i)], sink);
    a.add_edge(negv[static_cast<size_t>(i)], next);
    a.add_edge(negv[static_cast<size_t>(i)], sink);
  }
  a.add_edge(sink, sink);
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    VertexId next = (c + 1 < f.clauses.size()) ? clausev[c + 1] : check;
    for (VertexId lv : litv[c]) {
      a.add_edge(clausev[c], lv);
      a.add_edge(lv, next);
    }
  }
  a.add_edge(check, clausev.front());
  a.initial = ask.front();

  // Colorings: sink 0; negated-literal occurrences 1; the checking loop head
  // 2; everything else 3. Solver is constant 0.
  int nv = a.num_vertices();
  for (int p = 0; p < a.num_players(); ++p) g.objectives.push_back(Coloring::constant(nv, 0));
  for (int i = 1; i <= f.variables; ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      int lit = sign ? -i : i;
      PlayerId pl = lit_player(lit);
      Coloring k = Coloring::constant(nv, 3);
      k.colors[static_cast<size_t>(sink)] = 0;
      for (size_t c = 0; c < f.clauses.size(); ++c)
        for (size_t j = 0; j < f.clauses[c].size(); ++j)
          if (f.clauses[c][j] == -lit) k.colors[static_cast<size_t>(litv[c][j])] = 1;
      k.colors[static_cast<size_t>(check)] = 2;
      k.bound = 3;
      g.objectives[static_cast<size_t>(pl)] = std::move(k);
    }
  }

  MealyMachine m;
  m.scope = MealyMachine::kAllPlayers;
  m.num_vertices = nv;
  StateId s = m.add_state("s");
  m.initial = s;
  for (VertexId v = 0; v < nv; ++v) {
    bool setting = false;
    for (int i = 0; i < f.variables; ++i)
      setting = setting || v == posv[static_cast<size_t>(i)] || v == negv[static_cast<size_t>(i)];
    VertexId out = setting ? sink : a.succ[static_cast<size_t>(v)].front();
    m.add_output(s, v, s, out);
  }
  return {std::move(g), std::move(m)};
}

std::pair<ParityGame, PayoffVector> qsat_to_existence(const QbfFormula& f) {
  if (f.clauses.empty()) throw input_error("qsat gadget needs at least one clause");
  for (const auto& cl : f.clauses)
    if (cl.empty()) throw input_error("qsat gadget found an empty clause");

  ParityGame g;
  Arena& a = g.arena;
  std::vector<PlayerId> pos_player, neg_player;
  for (int i = 1; i <= f.variables; ++i) {
    pos_player.push_back(a.add_player("x" + std::to_string(i)));
    neg_player.push_back(a.add_player("!x" + std::to_string(i)));
  }
  PlayerId solver = a.add_player("S");
  PlayerId opponent = a.add_player("O");

  std::vector<VertexId> ask, posv, negv, clausev, punish_ask, punish_pos, punish_neg;
  for (int i = 1; i <= f.variables; ++i) {
    PlayerId q_owner = (i % 2 == 1) ? solver : opponent;
    ask.push_back(a.add_vertex("?x" + std::to_string(i), q_owner));
    posv.push_back(a.add_vertex("x" + std::to_string(i) + "^s", pos_player[static_cast<size_t>(i - 1)]));
    negv.push_back(a.add_vertex("!x" + std::to_string(i) + "^s", neg_player[static_cast<size_t>(i - 1)]));
  }
  VertexId sink = a.add_vertex("\u25bc", solver);
  for (size_t c = 0; c < f.clauses.size(); ++c)
    clausev.push_back(a.add_vertex("C" + std::to_string(c + 1), solver));
  std::vector<std::vector<VertexId>> litv(f.clauses.size());
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (size_t j = 0; j < f.clauses[c].size(); ++j)
      litv[c].push_back(a.add_vertex("l" + std::to_string(c + 1) + "," + std::to_string(j + 1),
                                     solver));
  VertexId ok = a.add_vertex("ok", solver);
  for (int i = 1; i <= f.variables; ++i) {
    punish_ask.push_back(a.add_vertex("x" + std::to_string(i) + "?", solver));
    punish_pos.push_back(a.add_vertex("x" + std::to_string(i) + "^p", solver));
    punish_neg.push_back(a.add_vertex("!x" + std::to_string(i) + "^p", solver));
  }
  VertexId endv = a.add_vertex("end", solver);

  for (int i = 0; i < f.variables; ++i) {
    a.add_edge(ask[static_cast<size_t>(i)], posv[static_cast<size_t>(i)]);
    a.add_edge(ask[static_cast<size_t>(i)], negv[static_cast<size_t>(i)]);
    VertexId next = (i + 1 < f.variables) ? ask[static_cast<size_t>(i + 1)] : clausev.front();
    a.add_edge(posv[static_cast<size_t>(i)], next);
    a.add_edge(posv[static_cast<size_t>(i)], sink);
    a.add_edge(negv[static_cast<size_t>(i)], next);
    a.add_edge(negv[static_cast<size_t>(i)], sink);
  }
  a.add_edge(sink, sink);
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    VertexId next = (c + 1 < f.clauses.size()) ? clausev[c + 1] : ok;
    for (VertexId lv : litv[c]) {
      a.add_edge(clausev[c], lv);
      a.add_edge(lv, next);
    }
  }
  a.add_edge(ok, punish_ask.front());
  for (int i = 0; i < f.variables; ++i) {
    a.add_edge(punish_ask[static_cast<size_t>(i)], punish_pos[static_cast<size_t>(i)]);
    a.add_edge(punish_ask[static_cast<size_t>(i)], punish_neg[static_cast<size_t>(i)]);
    VertexId next = (i + 1 < f.variables) ? punish_ask[static_cast<size_t>(i + 1)] : endv;
    a.add_edge(punish_pos[static_cast<size_t>(i)], next);
    a.add_edge(punish_neg[static_cast<size_t>(i)], next);
  }
  a.add_edge(endv, clausev.front());
  a.initial = ask.front();

  // Co-Buechi objectives: color 1 on the player's co-Buechi set, 2 elsewhere
  // (losing iff the set is visited infinitely often).
  int nv = a.num_vertices();
  for (int p = 0; p < a.num_players(); ++p) g.objectives.push_back(Coloring::constant(nv, 2));
  auto cobuchi = [&](PlayerId pl, VertexId v) {
    g.objectives[static_cast<size_t>(pl)].colors[static_cast<size_t>(v)] = 1;
    g.objectives[static_cast<size_t>(pl)].bound = 2;
  };
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (size_t j = 0; j < f.clauses[c].size(); ++j) {
      int lit = f.clauses[c][j];
      PlayerId negp = lit > 0 ? neg_player[static_cast<size_t>(lit - 1)]
                              : pos_player[static_cast<size_t>(-lit - 1)];
      cobuchi(negp, litv[c][j]);
    }
  for (int i = 0; i < f.variables; ++i) {
    cobuchi(neg_player[static_cast<size_t>(i)], punish_pos[static_cast<size_t>(i)]);
    cobuchi(pos_player[static_cast<size_t>(i)], punish_neg[static_cast<size_t>(i)]);
  }
  cobuchi(opponent, endv);

  PayoffVector target = PayoffVector::all(a.num_players(), true);
  return {std::move(g), std::move(target)};
}

std::pair<OmegaRegularGame, std::vector<MealyMachine>> dfa_intersection_to_checking(
    const std::vector<Dfa>& dfas) {
  if (dfas.empty()) throw input_error("need at least one automaton");
  for (const auto& d : dfas)
    if (d.states == 0 || static_cast<int>(d.delta.size()) != d.states)
      throw input_error("automata must be complete");

  int n = static_cast<int>(dfas.size());
  OmegaRegularGame g;
  Arena& a = g.arena;
  std::vector<PlayerId> num_p;
  for (int i = 1; i <= n; ++i) num_p.push_back(a.add_player(std::to_string(i)));
  PlayerId solver = a.add_player("S");
  PlayerId innocent = a.add_player("I");

  std::vector<VertexId> numv;
  for (int i = 1; i <= n; ++i)
    numv.push_back(a.add_vertex(std::to_string(i), num_p[static_cast<size_t>(i - 1)]));
  VertexId c = a.add_vertex("c", solver);
  VertexId va = a.add_vertex("a", solver);
  VertexId vb = a.add_vertex("b", solver);
  VertexId up = a.add_vertex("\u25b2", innocent);    // the accepting sink
  VertexId down = a.add_vertex("\u25bc", innocent);  // the refusal sink

  for (int i = 0; i < n; ++i) {
    a.add_edge(numv[static_cast<size_t>(i)], (i + 1 < n) ? numv[static_cast<size_t>(i + 1)] : c);
    a.add_edge(numv[static_cast<size_t>(i)], down);
  }
  a.add_edge(c, va);
  a.add_edge(c, vb);
  for (VertexId x : {va, vb}) {
    a.add_edge(x, va);
    a.add_edge(x, vb);
    a.add_edge(x, up);
  }
  a.add_edge(up, up);
  a.add_edge(down, down);
  a.initial = numv.front();

  int nv = a.num_vertices();
  // Player i's automaton: waits for c, then tracks its DFA over a/b and
  // resolves on T; reaching V early wins directly.
  for (int i = 0; i < n; ++i) {
    const Dfa& d = dfas[static_cast<size_t>(i)];
    ParityAutomaton au;
    au.alphabet_size = nv;
    StateId init = au.add_state("wait");
    StateId win = au.add_state("win");
    StateId lose = au.add_state("lose");
    std::vector<StateId> q;
    for (int s = 0; s < d.states; ++s) q.push_back(au.add_state("q" + std::to_string(s)));
    au.initial = init;
    for (int v = 0; v < nv; ++v) {
      au.set_trans(init, v, init);
      au.set_trans(win, v, win);
      au.set_trans(lose, v, lose);
      for (int s = 0; s < d.states; ++s) au.set_trans(q[static_cast<size_t>(s)], v, q[static_cast<size_t>(s)]);
    }
    au.set_trans(init, c, q[static_cast<size_t>(d.initial)]);
    au.set_trans(init, down, win);
    for (int s = 0; s < d.states; ++s) {
      au.set_trans(q[static_cast<size_t>(s)], va, q[static_cast<size_t>(d.delta[static_cast<size_t>(s)][0])]);
      au.set_trans(q[static_cast<size_t>(s)], vb, q[static_cast<size_t>(d.delta[static_cast<size_t>(s)][1])]);
      au.set_trans(q[static_cast<size_t>(s)], up, d.accepting[static_cast<size_t>(s)] ? win : lose);
    }
    std::vector<int> colors(static_cast<size_t>(au.num_states()), 1);
    colors[static_cast<size_t>(win)] = 0;
    au.coloring = Coloring::of(std::move(colors));
    g.objectives.push_back(std::move(au));
  }
  // Solver always wins.
  g.objectives.push_back(ParityAutomaton::universal(nv, true));
  // Innocent loses iff c is reached.
  {
    ParityAutomaton au;
    au.alphabet_size = nv;
    StateId fine = au.add_state("fine");
    StateId harmed = au.add_state("harmed");
    au.initial = fine;
    for (int v = 0; v < nv; ++v) {
      au.set_trans(fine, v, fine);
      au.set_trans(harmed, v, harmed);
    }
    au.set_trans(fine, c, harmed);
    au.coloring = Coloring::of({0, 1});
    g.objectives.push_back(std::move(au));
  }

  std::vector<MealyMachine> machines;
  for (int i = 0; i < n; ++i) {
    MealyMachine m;
    m.scope = num_p[static_cast<size_t>(i)];
    m.num_vertices = nv;
    m.add_state("s");
    m.initial = 0;
    for (VertexId v = 0; v < nv; ++v) {
      if (v == numv[static_cast<size_t>(i)])
        m.add_output(0, v, 0, down);
      else
        m.add_read(0, v, 0);
    }
    machines.push_back(std::move(m));
  }
  {
    MealyMachine m;
    m.scope = solver;
    m.num_vertices = nv;
    m.add_state("s");
    m.initial = 0;
    for (VertexId v = 0; v < nv; ++v) {
      if (v == c || v == va || v == vb)
        m.add_output(0, v, 0, va);
      else
        m.add_read(0, v, 0);
    }
    machines.push_back(std::move(m));
  }
  {
    MealyMachine m;
    m.scope = innocent;
    m.num_vertices = nv;
    m.add_state("s");
    m.initial = 0;
    for (VertexId v = 0; v < nv; ++v) {
      if (v == up)
        m.add_output(0, v, 0, up);
      else if (v == down)
        m.add_output(0, v, 0, down);
      else
        m.add_read(0, v, 0);
    }
    machines.push_back(std::move(m));
  }
  return {std::move(g), std::move(machines)};
}

std::pair<ParityGame, std::vector<MealyMachine>> dfa_intersection_to_compositional_checking(
    const std::vector<Dfa>& dfas) {
  if (dfas.empty()) throw input_error("need at least one automaton");
  int n = static_cast<int>(dfas.size());

  ParityGame g;
  Arena& a = g.arena;
  std::vector<PlayerId> num_p;
  for (int i = 1; i <= n; ++i) num_p.push_back(a.add_player(std::to_string(i)));
  PlayerId solver = a.add_player("S");

  VertexId va = a.add_vertex("a", solver);
  VertexId vb = a.add_vertex("b", solver);
  std::vector<VertexId> numv;
  for (int i = 1; i <= n; ++i)
    numv.push_back(a.add_vertex(std::to_string(i), num_p[static_cast<size_t>(i - 1)]));
  VertexId reject = a.add_vertex("\u25b2", solver);  // refusal sink
  VertexId accept = a.add_vertex("\u25bc", solver);  // all-approved sink

  for (VertexId x : {va, vb}) {
    a.add_edge(x, va);
    a.add_edge(x, vb);
    a.add_edge(x, numv.front());
  }
  for (int i = 0; i < n; ++i) {
    a.add_edge(numv[static_cast<size_t>(i)], (i + 1 < n) ? numv[static_cast<size_t>(i + 1)] : accept);
    a.add_edge(numv[static_cast<size_t>(i)], reject);
  }
  a.add_edge(reject, reject);
  a.add_edge(accept, accept);
  a.initial = va;

  int nv = a.num_vertices();
  for (int p = 0; p < a.num_players(); ++p) g.objectives.push_back(Coloring::constant(nv, 0));
  for (int i = 0; i < n; ++i) {
    Coloring k = Coloring::constant(nv, 0);
    k.colors[static_cast<size_t>(accept)] = 1;
    k.bound = 1;
    g.objectives[static_cast<size_t>(num_p[static_cast<size_t>(i)])] = std::move(k);
  }

  std::vector<MealyMachine> machines;
  for (int i = 0; i < n; ++i) {
    const Dfa& d = dfas[static_cast<size_t>(i)];
    MealyMachine m;
    m.scope = num_p[static_cast<size_t>(i)];
    m.num_vertices = nv;
    for (int s = 0; s < d.states; ++s) m.add_state("q" + std::to_string(s));
    m.initial = d.initial;
    for (int s = 0; s < d.states; ++s) {
      for (VertexId v = 0; v < nv; ++v) {
        if (v == va) {
          m.add_read(s, v, d.delta[static_cast<size_t>(s)][0]);
        } else if (v == vb) {
          m.add_read(s, v, d.delta[static_cast<size_t>(s)][1]);
        } else if (v == numv[static_cast<size_t>(i)]) {
          VertexId go = (i + 1 < n) ? numv[static_cast<size_t>(i + 1)] : accept;
          m.add_output(s, v, s, d.accepting[static_cast<size_t>(s)] ? go : reject);
        } else {
          m.add_read(s, v, s);
        }
      }
    }
    machines.push_back(std::move(m));
  }
  {
    MealyMachine m;
    m.scope = solver;
    m.num_vertices = nv;
    m.add_state("s");
    m.initial = 0;
    for (VertexId v = 0; v < nv; ++v) {
      if (v == va)
        m.add_output(0, v, 0, va);
      else if (v == vb)
        m.add_output(0, v, 0, vb);
      else if (v == reject)
        m.add_output(0, v, 0, reject);
      else if (v == accept)
        m.add_output(0, v, 0, accept);
      else
        m.add_read(0, v, 0);
    }
    machines.push_back(std::move(m));
  }
  return {std::move(g), std::move(machines)};
}

Dfa random_dfa(Rng& rng, int max_states) {
  Dfa d;
  d.states = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_states));
  d.initial = 0;
  for (int s = 0; s < d.states; ++s) {
    d.delta.push_back({static_cast<int>(rng() % d.states), static_cast<int>(rng() % d.states)});
    d.accepting.push_back(rng() % 2 ? 1 : 0);
  }
  return d;
}

CnfFormula random_cnf(Rng& rng, int variables, int clauses, int max_literals) {
  CnfFormula f;
  f.variables = variables;
  for (int c = 0; c < clauses; ++c) {
    int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_literals));
    std::vector<int> cl;
    for (int j = 0; j < len; ++j) {
      int var = 1 + static_cast<int>(rng() % static_cast<uint64_t>(variables));
      cl.push_back(rng() % 2 ? var : -var);
    }
    f.clauses.push_back(std::move(cl));
  }
  return f;
}

}  // namespace ssev
