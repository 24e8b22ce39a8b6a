#include "ssev/mealy.hpp"

#include <deque>
#include <map>

namespace ssev {

std::vector<std::string> MealyMachine::validate(const Arena& a) const {
  std::vector<std::string> out;
  if (num_vertices != a.num_vertices())
    out.push_back("machine alphabet does not match the arena");
  if (initial < 0 || initial >= num_states()) out.push_back("machine initial state missing");
  if (scope != kAllPlayers && (scope < 0 || scope >= a.num_players()))
    out.push_back("machine scope names an unknown player");
  for (StateId s = 0; s < num_states() && num_vertices == a.num_vertices(); ++s) {
    for (VertexId v = 0; v < num_vertices; ++v) {
      bool owned = scope == kAllPlayers || a.owner[v] == scope;
      const auto& alts = trans[s][static_cast<size_t>(v)];
      if (alts.empty())
        out.push_back("machine incomplete at (" + states.name(s) + ", " +
                      a.vertices.name(v) + ")");
      for (const auto& t : alts) {
        if (owned && t.out < 0)
          out.push_back("read-only tuple at owned vertex " + a.vertices.name(v));
        if (!owned && t.out >= 0)
          out.push_back("output tuple at foreign vertex " + a.vertices.name(v));
        if (t.out >= 0 && !a.has_edge(v, t.out))
          out.push_back("machine output " + a.vertices.name(v) + " -> " +
                        a.vertices.name(t.out) + " is not an arena edge");
      }
    }
  }
  return out;
}

bool is_deterministic(const MealyMachine& m) {
  for (const auto& per_state : m.trans)
    for (const auto& alts : per_state)
      if (alts.size() != 1) return false;
  return true;
}

MealyMachine product_machine(const Arena& a, const std::vector<MealyMachine>& machines) {
  int n = a.num_players();
  std::vector<int> machine_of(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < machines.size(); ++i) {
    PlayerId p = machines[i].scope;
    if (p == MealyMachine::kAllPlayers)
      throw input_error("product_machine expects per-player machines");
    if (p < 0 || p >= n) throw input_error("machine scope names an unknown player");
    if (machine_of[static_cast<size_t>(p)] >= 0)
      throw input_error("two machines share the scope " + a.players.name(p));
    machine_of[static_cast<size_t>(p)] = static_cast<int>(i);
  }
  for (PlayerId p = 0; p < n; ++p)
    if (machine_of[static_cast<size_t>(p)] < 0)
      throw input_error("no machine covers player " + a.players.name(p));

  MealyMachine out;
  out.scope = MealyMachine::kAllPlayers;
  out.num_vertices = a.num_vertices();

  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> tuples;
  auto name_of = [&](const std::vector<StateId>& q) {
    std::string nm;
    for (PlayerId p = 0; p < n; ++p) {
      if (p) nm += "|";
      nm += machines[static_cast<size_t>(machine_of[static_cast<size_t>(p)])].states.name(
          q[static_cast<size_t>(p)]);
    }
    return nm;
  };
  auto get = [&](const std::vector<StateId>& q) {
    auto it = index.find(q);
    if (it != index.end()) return it->second;
    StateId s = out.add_state(name_of(q));
    index.emplace(q, s);
    tuples.push_back(q);
    return s;
  };

  std::vector<StateId> q0;
  for (PlayerId p = 0; p < n; ++p)
    q0.push_back(machines[static_cast<size_t>(machine_of[static_cast<size_t>(p)])].initial);
  out.initial = get(q0);

  std::deque<StateId> work{out.initial};
  std::vector<char> done;
  while (!work.empty()) {
    StateId s = work.front();
    work.pop_front();
    if (s < static_cast<int>(done.size()) && done[static_cast<size_t>(s)]) continue;
    if (s >= static_cast<int>(done.size())) done.resize(static_cast<size_t>(s) + 1, 0);
    done[static_cast<size_t>(s)] = 1;
    std::vector<StateId> q = tuples[static_cast<size_t>(s)];
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
      PlayerId own = a.owner[v];
      // Cross product of each component's alternatives at (state, v).
      std::vector<std::vector<MealyMachine::Transition>> alts;
      for (PlayerId p = 0; p < n; ++p) {
        const auto& m = machines[static_cast<size_t>(machine_of[static_cast<size_t>(p)])];
        alts.push_back(m.at(q[static_cast<size_t>(p)], v));
      }
      std::vector<size_t> pick(static_cast<size_t>(n), 0);
      while (true) {
        std::vector<StateId> t(static_cast<size_t>(n));
        VertexId outv = -1;
        bool ok = true;
        for (PlayerId p = 0; p < n && ok; ++p) {
          if (alts[static_cast<size_t>(p)].empty()) {
            ok = false;
            break;
          }
          const auto& tr = alts[static_cast<size_t>(p)][pick[static_cast<size_t>(p)]];
          t[static_cast<size_t>(p)] = tr.next;
          if (p == own) outv = tr.out;
        }
        if (ok) {
          int before = out.num_states();
          StateId ts = get(t);
          if (out.num_states() > before) work.push_back(ts);
          out.add_output(s, v, ts, outv);
        }
        // Advance the cross-product counter.
        int p = 0;
        for (; p < n; ++p) {
          size_t sz = alts[static_cast<size_t>(p)].size();
          if (sz == 0) break;
          if (++pick[static_cast<size_t>(p)] < sz) break;
          pick[static_cast<size_t>(p)] = 0;
        }
        if (p == n || alts[static_cast<size_t>(p)].empty()) break;
      }
    }
  }
  return out;
}

}  // namespace ssev
