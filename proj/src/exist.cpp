#include "ssev/exist.hpp"

#include <algorithm>
#include <deque>

#include "ssev/zielonka.hpp"

namespace ssev {

namespace {

struct RegionContext {
  const ParityGame& g;
  const PayoffVector& target;
  const DeviatorGame& dev;
  std::map<PlayerSet, RegionSolution>& regions;
  ExistVerdict::Stats& stats;

  int nV() const { return g.arena.num_vertices(); }
  int nE() const { return static_cast<int>(dev.edges.size()); }
  int interior() const { return nV() + nE(); }

  PlayerSet winners() const {
    PlayerSet w = 0;
    for (int p = 0; p < target.size(); ++p)
      if (target.win(p)) w = with(w, p);
    return w;
  }

  Coloring region_coloring(const Coloring& base) const {
    Coloring k;
    k.bound = base.bound;
    k.colors.reserve(static_cast<size_t>(interior()));
    for (int v = 0; v < nV(); ++v) k.colors.push_back(base.at(v));
    for (const auto& [u, w] : dev.edges) {
      (void)w;
      k.colors.push_back(base.at(u));
    }
    return k;
  }

  ELCondition prover_condition(PlayerSet D) const {
    ELCondition cond;
    int n = g.arena.num_players();
    if (D == 0) {
      std::vector<ELFormula> parts;
      for (int p = 0; p < n; ++p)
        parts.push_back(parity_formula(
            cond.atoms, region_coloring(g.objectives[static_cast<size_t>(p)]), !target.win(p)));
      if (g.correctness)
        parts.push_back(parity_formula(cond.atoms, region_coloring(*g.correctness), false));
      cond.formula = simplify(ELFormula::conj(std::move(parts)), cond.atoms);
      return cond;
    }
    std::vector<ELFormula> keep_all;
    for (int p = 0; p < n; ++p)
      if (target.win(p) && !contains(D, p))
        keep_all.push_back(parity_formula(
            cond.atoms, region_coloring(g.objectives[static_cast<size_t>(p)]), false));
    std::vector<ELFormula> escape;
    for (int p = 0; p < n; ++p)
      if (target.win(p) && contains(D, p))
        escape.push_back(parity_formula(
            cond.atoms, region_coloring(g.objectives[static_cast<size_t>(p)]), true));
    std::vector<ELFormula> parts;
    parts.push_back(keep_all.empty() ? ELFormula::t() : ELFormula::conj(std::move(keep_all)));
    for (auto& e : escape) parts.push_back(std::move(e));
    cond.formula = simplify(ELFormula::disj(std::move(parts)), cond.atoms);
    return cond;
  }

  const RegionSolution& solve(PlayerSet D) {
    auto it = regions.find(D);
    if (it != regions.end()) return it->second;

    RegionSolution sol;
    sol.deviators = D;
    if ((winners() & ~D) == 0) {
      sol.trivial_prover_win = true;
      ++stats.regions_solved;
      return regions.emplace(D, std::move(sol)).first->second;
    }

    // Leaf status per (challenger edge, deviating target).
    // Region graph ids: prover v -> v; challenger e -> nV+e;
    // absorbing prover-win -> interior(); absorbing challenger-win -> interior()+1.
    const int leaf_win = interior();
    const int leaf_lose = interior() + 1;
    std::vector<std::vector<int>> succ(static_cast<size_t>(interior() + 2));
    for (int v = 0; v < nV(); ++v)
      for (int e : dev.edges_from[static_cast<size_t>(v)])
        succ[static_cast<size_t>(v)].push_back(nV() + e);
    for (int e = 0; e < nE(); ++e) {
      auto [u, w] = dev.edges[static_cast<size_t>(e)];
      succ[static_cast<size_t>(nV() + e)].push_back(w);
      PlayerId i = g.arena.owner[static_cast<size_t>(u)];
      for (VertexId alt : g.arena.succ[static_cast<size_t>(u)]) {
        if (alt == w) continue;
        if (contains(D, i)) {
          succ[static_cast<size_t>(nV() + e)].push_back(alt);
        } else {
          const RegionSolution& child = solve(with(D, i));
          bool prover = child.trivial_prover_win || child.entry_win(alt);
          succ[static_cast<size_t>(nV() + e)].push_back(prover ? leaf_win : leaf_lose);
        }
      }
    }
    succ[static_cast<size_t>(leaf_win)].push_back(leaf_win);
    succ[static_cast<size_t>(leaf_lose)].push_back(leaf_lose);

    ELCondition cond = prover_condition(D);
    sol.reduction = el_to_parity(cond.formula, cond.atoms);

    // Expansion game over reachable (region vertex, memory) pairs, seeded at
    // every prover vertex with fresh memory, plus the two absorbing slots.
    TwoPlayerParityGame exp;
    auto add_exp = [&](int rv, int m) {
      auto key = std::make_pair(rv, m);
      auto f = sol.expansion_index.find(key);
      if (f != sol.expansion_index.end()) return f->second;
      int id = static_cast<int>(sol.expansion_vertex.size());
      sol.expansion_index.emplace(key, id);
      sol.expansion_vertex.push_back(key);
      exp.protagonist_owns.push_back(rv < nV() ? 1 : 0);
      exp.succ.emplace_back();
      exp.color.push_back(sol.reduction.color(m) + 2);
      return id;
    };
    // Absorbing slots use memory -1 and fixed colors.
    sol.expansion_index.emplace(std::make_pair(leaf_win, -1), 0);
    sol.expansion_vertex.emplace_back(leaf_win, -1);
    exp.protagonist_owns.push_back(0);
    exp.succ.emplace_back();
    exp.color.push_back(0);
    sol.expansion_index.emplace(std::make_pair(leaf_lose, -1), 1);
    sol.expansion_vertex.emplace_back(leaf_lose, -1);
    exp.protagonist_owns.push_back(0);
    exp.succ.emplace_back();
    exp.color.push_back(1);
    exp.succ[0].push_back(0);
    exp.succ[1].push_back(1);

    std::deque<int> work;
    for (int v = 0; v < nV(); ++v) {
      int m = sol.reduction.update(sol.reduction.mem_init, v);
      int before = static_cast<int>(sol.expansion_vertex.size());
      int id = add_exp(v, m);
      if (static_cast<int>(sol.expansion_vertex.size()) > before) work.push_back(id);
    }
    while (!work.empty()) {
      int id = work.front();
      work.pop_front();
      auto [rv, m] = sol.expansion_vertex[static_cast<size_t>(id)];
      for (int rw : succ[static_cast<size_t>(rv)]) {
        int target_id;
        if (rw >= interior()) {
          target_id = (rw == leaf_win) ? 0 : 1;
        } else {
          int m2 = sol.reduction.update(m, rw);
          int before = static_cast<int>(sol.expansion_vertex.size());
          target_id = add_exp(rw, m2);
          if (static_cast<int>(sol.expansion_vertex.size()) > before) work.push_back(target_id);
        }
        exp.succ[static_cast<size_t>(id)].push_back(target_id);
      }
    }

    ZielonkaResult zr = zielonka_solve(exp);
    sol.prover_wins.assign(zr.protagonist_wins.begin(), zr.protagonist_wins.end());
    sol.strategy.assign(zr.strategy.begin(), zr.strategy.end());
    stats.largest_expansion =
        std::max(stats.largest_expansion, static_cast<int>(sol.expansion_vertex.size()));
    ++stats.regions_solved;
    return regions.emplace(D, std::move(sol)).first->second;
  }
};

}  // namespace

bool RegionSolution::entry_win(int arena_vertex) const {
  if (trivial_prover_win) return true;
  int id = entry_expansion(arena_vertex);
  return prover_wins[static_cast<size_t>(id)] != 0;
}

int RegionSolution::entry_expansion(int arena_vertex) const {
  int m = reduction.update(reduction.mem_init, arena_vertex);
  auto it = expansion_index.find({arena_vertex, m});
  if (it == expansion_index.end()) throw input_error("region entry missing from expansion");
  return it->second;
}

ExistVerdict exists_sse(const ParityGame& g, const PayoffVector& target) {
  auto bad = g.validate();
  if (!bad.empty()) throw input_error(bad.front());
  if (target.size() != g.arena.num_players())
    throw input_error("target payoff must be total over the players");

  ExistVerdict v;
  v.solution = std::make_shared<ExistSolution>();
  v.solution->dev = build_deviator_game(g, target);
  RegionContext ctx{g, target, v.solution->dev, v.solution->regions, v.stats};
  const RegionSolution& root = ctx.solve(0);
  v.exists = root.trivial_prover_win || root.entry_win(g.arena.initial);
  v.solution->exists = v.exists;
  return v;
}

OmegaExistVerdict exists_sse_omega(const OmegaRegularGame& g, const PayoffVector& target) {
  OmegaExistVerdict out;
  out.product = std::make_shared<SynchronizedProduct>(synchronized_product(g));
  out.verdict = exists_sse(out.product->game, target);
  return out;
}

namespace {

struct MachineKey {
  int kind;  // 0 start, 1 sink, 2 normal
  PlayerSet D = 0;
  int mem = -1;
  VertexId expect = -1;
  PlayerId prev_owner = -1;

  bool operator<(const MachineKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (D != o.D) return D < o.D;
    if (mem != o.mem) return mem < o.mem;
    if (expect != o.expect) return expect < o.expect;
    return prev_owner < o.prev_owner;
  }
};

}  // namespace

MealyMachine extract_protocol_machine(const ExistVerdict& v, const ParityGame& g) {
  if (!v.exists || !v.solution) throw input_error("no machine: the verdict is not-exists");
  const ExistSolution& sol = *v.solution;
  const Arena& a = g.arena;
  int nV = a.num_vertices();

  MealyMachine m;
  m.scope = MealyMachine::kAllPlayers;
  m.num_vertices = nV;

  std::map<MachineKey, StateId> index;
  std::vector<MachineKey> keys;
  auto state_of = [&](const MachineKey& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    StateId s = m.add_state("q" + std::to_string(m.num_states()));
    index.emplace(k, s);
    keys.push_back(k);
    return s;
  };

  MachineKey start{0};
  MachineKey sink{1};
  m.initial = state_of(start);
  StateId sink_id = state_of(sink);

  auto first_succ = [&](VertexId u) { return a.succ[static_cast<size_t>(u)].front(); };

  // One step inside a region: propose the strategy edge at (prover u, mem m1).
  // Returns (next key, output vertex), or sink on any miss.
  auto propose = [&](PlayerSet D, int m1, VertexId u) -> std::pair<MachineKey, VertexId> {
    auto rit = sol.regions.find(D);
    if (rit == sol.regions.end()) return {sink, first_succ(u)};
    const RegionSolution& reg = rit->second;
    if (reg.trivial_prover_win) {
      VertexId out = first_succ(u);
      MachineKey k{2, D, 0, out, a.owner[static_cast<size_t>(u)]};
      return {k, out};
    }
    auto xit = reg.expansion_index.find({u, m1});
    if (xit == reg.expansion_index.end()) return {sink, first_succ(u)};
    int x = xit->second;
    if (!reg.prover_wins[static_cast<size_t>(x)] || reg.strategy[static_cast<size_t>(x)] < 0)
      return {sink, first_succ(u)};
    int y = reg.strategy[static_cast<size_t>(x)];
    auto [rv, m2] = reg.expansion_vertex[static_cast<size_t>(y)];
    int e = rv - nV;
    if (e < 0 || e >= static_cast<int>(sol.dev.edges.size()))
      return {sink, first_succ(u)};
    VertexId out = sol.dev.edges[static_cast<size_t>(e)].second;
    MachineKey k{2, D, m2, out, a.owner[static_cast<size_t>(u)]};
    return {k, out};
  };

  auto fresh_mem = [&](PlayerSet D, VertexId u) -> int {
    auto rit = sol.regions.find(D);
    if (rit == sol.regions.end() || rit->second.trivial_prover_win) return 0;
    const auto& red = rit->second.reduction;
    return red.update(red.mem_init, u);
  };

  std::deque<StateId> work{m.initial, sink_id};
  std::vector<char> done;
  while (!work.empty()) {
    StateId s = work.front();
    work.pop_front();
    if (s < static_cast<int>(done.size()) && done[static_cast<size_t>(s)]) continue;
    done.resize(static_cast<size_t>(m.num_states()), 0);
    done[static_cast<size_t>(s)] = 1;
    MachineKey k = keys[static_cast<size_t>(s)];

    for (VertexId u = 0; u < nV; ++u) {
      MachineKey next = sink;
      VertexId out = first_succ(u);
      if (k.kind == 1) {
        // sink: stay
      } else if (k.kind == 0) {
        if (u == a.initial) {
          auto [nk, o] = propose(0, fresh_mem(0, u), u);
          next = nk;
          out = o;
        }
      } else {
        PlayerSet D2 = k.D;
        bool fresh = false;
        if (u != k.expect) {
          PlayerSet grown = with(k.D, k.prev_owner);
          if (grown != k.D) {
            D2 = grown;
            fresh = true;
          }
        }
        auto rit = sol.regions.find(D2);
        int m1;
        if (rit != sol.regions.end() && rit->second.trivial_prover_win) {
          m1 = 0;
        } else if (fresh || rit == sol.regions.end()) {
          m1 = fresh_mem(D2, u);
        } else {
          m1 = rit->second.reduction.update(k.mem, u);
        }
        auto [nk, o] = propose(D2, m1, u);
        next = nk;
        out = o;
      }
      int before = m.num_states();
      StateId t = state_of(next);
      if (m.num_states() > before) work.push_back(t);
      m.add_output(s, u, t, out);
    }
  }
  return m;
}

MealyMachine extract_protocol_machine_omega(const OmegaExistVerdict& v,
                                            const OmegaRegularGame& g) {
  if (!v.verdict.exists) throw input_error("no machine: the verdict is not-exists");
  const SynchronizedProduct& sp = *v.product;
  MealyMachine inner = extract_protocol_machine(v.verdict, sp.game);
  const Arena& pa = sp.game.arena;
  const Arena& a = g.arena;

  MealyMachine out;
  out.scope = MealyMachine::kAllPlayers;
  out.num_vertices = a.num_vertices();

  // Wrapper state: (inner state, current product vertex); -2 marks the start,
  // -1 the sink.
  std::map<std::pair<StateId, int>, StateId> index;
  std::vector<std::pair<StateId, int>> keys;
  auto state_of = [&](StateId q, int pv) {
    auto it = index.find({q, pv});
    if (it != index.end()) return it->second;
    StateId s = out.add_state("w" + std::to_string(out.num_states()));
    index.emplace(std::make_pair(q, pv), s);
    keys.emplace_back(q, pv);
    return s;
  };
  out.initial = state_of(inner.initial, -2);
  StateId sink_id = state_of(-1, -1);

  auto product_step = [&](int pv, VertexId varena) -> int {
    if (pv == -2) {
      return (varena == a.initial) ? pa.initial : -1;
    }
    for (VertexId pw : pa.succ[static_cast<size_t>(pv)])
      if (sp.arena_vertex[static_cast<size_t>(pw)] == varena) return pw;
    return -1;
  };

  std::deque<StateId> work{out.initial, sink_id};
  std::vector<char> done;
  while (!work.empty()) {
    StateId s = work.front();
    work.pop_front();
    if (s < static_cast<int>(done.size()) && done[static_cast<size_t>(s)]) continue;
    done.resize(static_cast<size_t>(out.num_states()), 0);
    done[static_cast<size_t>(s)] = 1;
    auto [q, pv] = keys[static_cast<size_t>(s)];

    for (VertexId u = 0; u < a.num_vertices(); ++u) {
      int before = out.num_states();
      StateId tgt = sink_id;
      VertexId o = a.succ[static_cast<size_t>(u)].front();
      if (q >= 0) {
        int pw = product_step(pv, u);
        if (pw >= 0) {
          const auto& tr = inner.at(q, pw).front();
          o = sp.arena_vertex[static_cast<size_t>(tr.out)];
          tgt = state_of(tr.next, pw);
        }
      }
      if (out.num_states() > before) work.push_back(tgt);
      out.add_output(s, u, tgt, o);
    }
  }
  return out;
}

}  // namespace ssev
