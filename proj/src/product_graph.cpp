#include "ssev/product_graph.hpp"

#include <deque>
#include <map>

namespace ssev {

PlayerId ProductGraph::edge_deviator(int u, int v) const {
  for (const Edge& e : succ.at(static_cast<size_t>(u)))
    if (e.to == v) return e.deviator;
  throw input_error("no such product edge");
}

namespace {

struct Builder {
  ProductGraph g;
  std::map<std::pair<VertexId, StateId>, int> index;

  int get(const Arena& a, VertexId v, StateId s) {
    auto it = index.find({v, s});
    if (it != index.end()) return it->second;
    int id = g.size();
    index.emplace(std::make_pair(v, s), id);
    g.arena_vertex.push_back(v);
    g.machine_state.push_back(s);
    g.owner.push_back(a.owner[v]);
    g.succ.emplace_back();
    return id;
  }
};

}  // namespace

ProductGraph build_product_graph(const Arena& a, const MealyMachine& m) {
  if (m.scope != MealyMachine::kAllPlayers)
    throw input_error("product graph needs an all-players machine");
  auto bad = m.validate(a);
  if (!bad.empty()) throw input_error(bad.front());

  Builder b;
  int init = b.get(a, a.initial, m.initial);
  b.g.initial = init;
  std::deque<int> work{init};
  std::vector<char> done;
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    if (x < static_cast<int>(done.size()) && done[static_cast<size_t>(x)]) continue;
    done.resize(static_cast<size_t>(b.g.size()), 0);
    done[static_cast<size_t>(x)] = 1;
    VertexId u = b.g.arena_vertex[static_cast<size_t>(x)];
    StateId s = b.g.machine_state[static_cast<size_t>(x)];
    for (const auto& tr : m.at(s, u)) {
      for (VertexId v : a.succ[u]) {
        int before = b.g.size();
        int y = b.get(a, v, tr.next);
        if (b.g.size() > before) work.push_back(y);
        PlayerId dev = (tr.out == v) ? -1 : a.owner[u];
        // Keep at most one edge per (y); a non-deviating label wins.
        bool found = false;
        for (auto& e : b.g.succ[static_cast<size_t>(x)])
          if (e.to == y) {
            if (dev == -1) e.deviator = -1;
            found = true;
            break;
          }
        if (!found) b.g.succ[static_cast<size_t>(x)].push_back({y, dev});
      }
    }
  }
  return b.g;
}

ProductGraph build_product_graph_compositional(const Arena& a,
                                               const std::vector<MealyMachine>& machines) {
  int n = a.num_players();
  std::vector<int> machine_of(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < machines.size(); ++i) {
    PlayerId p = machines[i].scope;
    if (p == MealyMachine::kAllPlayers)
      throw input_error("compositional product needs per-player machines");
    if (p < 0 || p >= n || machine_of[static_cast<size_t>(p)] >= 0)
      throw input_error("machine scopes must be distinct players");
    machine_of[static_cast<size_t>(p)] = static_cast<int>(i);
    auto bad = machines[i].validate(a);
    if (!bad.empty()) throw input_error(bad.front());
  }
  for (PlayerId p = 0; p < n; ++p)
    if (machine_of[static_cast<size_t>(p)] < 0)
      throw input_error("no machine covers player " + a.players.name(p));

  ProductGraph g;
  std::map<std::vector<StateId>, StateId> tuple_index;
  std::vector<std::vector<StateId>> tuples;
  auto tuple_id = [&](const std::vector<StateId>& q) {
    auto it = tuple_index.find(q);
    if (it != tuple_index.end()) return it->second;
    StateId id = static_cast<StateId>(tuples.size());
    tuple_index.emplace(q, id);
    tuples.push_back(q);
    return id;
  };

  std::map<std::pair<VertexId, StateId>, int> index;
  auto get = [&](VertexId v, StateId t) {
    auto it = index.find({v, t});
    if (it != index.end()) return it->second;
    int id = g.size();
    index.emplace(std::make_pair(v, t), id);
    g.arena_vertex.push_back(v);
    g.machine_state.push_back(t);
    g.owner.push_back(a.owner[v]);
    g.succ.emplace_back();
    return id;
  };

  std::vector<StateId> q0;
  for (PlayerId p = 0; p < n; ++p)
    q0.push_back(machines[static_cast<size_t>(machine_of[static_cast<size_t>(p)])].initial);
  g.initial = get(a.initial, tuple_id(q0));

  std::deque<int> work{g.initial};
  std::vector<char> done;
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    if (x < static_cast<int>(done.size()) && done[static_cast<size_t>(x)]) continue;
    done.resize(static_cast<size_t>(g.size()), 0);
    done[static_cast<size_t>(x)] = 1;
    VertexId u = g.arena_vertex[static_cast<size_t>(x)];
    std::vector<StateId> q = tuples[static_cast<size_t>(g.machine_state[static_cast<size_t>(x)])];
    PlayerId own = a.owner[u];

    std::vector<const std::vector<MealyMachine::Transition>*> alts;
    for (PlayerId p = 0; p < n; ++p)
      alts.push_back(&machines[static_cast<size_t>(machine_of[static_cast<size_t>(p)])].at(
          q[static_cast<size_t>(p)], u));
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    while (true) {
      std::vector<StateId> t(static_cast<size_t>(n));
      VertexId outv = -1;
      for (PlayerId p = 0; p < n; ++p) {
        const auto& tr = (*alts[static_cast<size_t>(p)])[pick[static_cast<size_t>(p)]];
        t[static_cast<size_t>(p)] = tr.next;
        if (p == own) outv = tr.out;
      }
      StateId tid = tuple_id(t);
      for (VertexId v : a.succ[u]) {
        int before = g.size();
        int y = get(v, tid);
        if (g.size() > before) work.push_back(y);
        PlayerId dev = (outv == v) ? -1 : own;
        bool found = false;
        for (auto& e : g.succ[static_cast<size_t>(x)])
          if (e.to == y) {
            if (dev == -1) e.deviator = -1;
            found = true;
            break;
          }
        if (!found) g.succ[static_cast<size_t>(x)].push_back({y, dev});
      }
      int p = 0;
      for (; p < n; ++p) {
        if (++pick[static_cast<size_t>(p)] < alts[static_cast<size_t>(p)]->size()) break;
        pick[static_cast<size_t>(p)] = 0;
      }
      if (p == n) break;
    }
  }
  return g;
}

ProductGraph restrict_deviators(const ProductGraph& p, PlayerSet coalition,
                                std::vector<int>* origin) {
  std::vector<int> remap(static_cast<size_t>(p.size()), -1);
  ProductGraph g;
  std::deque<int> work{p.initial};
  remap[static_cast<size_t>(p.initial)] = 0;
  g.arena_vertex.push_back(p.arena_vertex[static_cast<size_t>(p.initial)]);
  g.machine_state.push_back(p.machine_state[static_cast<size_t>(p.initial)]);
  g.owner.push_back(p.owner[static_cast<size_t>(p.initial)]);
  g.succ.emplace_back();
  g.initial = 0;
  std::vector<int> back{p.initial};

  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    int gx = remap[static_cast<size_t>(x)];
    for (const auto& e : p.succ[static_cast<size_t>(x)]) {
      if (e.deviator >= 0 && !contains(coalition, e.deviator)) continue;
      if (remap[static_cast<size_t>(e.to)] < 0) {
        remap[static_cast<size_t>(e.to)] = g.size();
        g.arena_vertex.push_back(p.arena_vertex[static_cast<size_t>(e.to)]);
        g.machine_state.push_back(p.machine_state[static_cast<size_t>(e.to)]);
        g.owner.push_back(p.owner[static_cast<size_t>(e.to)]);
        g.succ.emplace_back();
        back.push_back(e.to);
        work.push_back(e.to);
      }
      g.succ[static_cast<size_t>(gx)].push_back({remap[static_cast<size_t>(e.to)], e.deviator});
    }
  }
  if (origin) *origin = back;
  return g;
}

}  // namespace ssev
