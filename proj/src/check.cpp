#include "ssev/check.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ssev {

std::vector<PayoffVector> upward_harm_set(const PayoffVector& x, PlayerSet coalition) {
  int n = x.size();
  PlayerSet full = (PlayerSet{1} << n) - 1;
  if (coalition == 0 || coalition == full)
    throw input_error("coalition must be a nonempty proper subset of the players");

  std::vector<PayoffVector> out;
  for (int bits = (1 << n) - 1; bits >= 0; --bits) {
    PayoffVector y;
    for (int p = 0; p < n; ++p) y.wins.push_back((bits >> (n - 1 - p)) & 1);
    bool ok = true;
    for (int p = 0; p < n && ok; ++p)
      if (contains(coalition, p) && y.wins[static_cast<size_t>(p)] < x.wins[static_cast<size_t>(p)])
        ok = false;
    bool harm = false;
    for (int p = 0; p < n; ++p)
      if (!contains(coalition, p) && y.wins[static_cast<size_t>(p)] < x.wins[static_cast<size_t>(p)])
        harm = true;
    if (ok && harm) out.push_back(std::move(y));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> plain_succ(const ProductGraph& p) {
  std::vector<std::vector<int>> s(static_cast<size_t>(p.size()));
  for (int v = 0; v < p.size(); ++v)
    for (const auto& e : p.succ[static_cast<size_t>(v)]) s[static_cast<size_t>(v)].push_back(e.to);
  return s;
}

bool functional(const std::vector<std::vector<int>>& s) {
  for (const auto& out : s)
    if (out.size() != 1) return false;
  return true;
}

// Nonempty proper coalitions: increasing size, lexicographic within a size.
std::vector<PlayerSet> coalition_order(int n) {
  std::vector<PlayerSet> out;
  for (int size = 1; size < n; ++size) {
    std::vector<int> comb(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
      PlayerSet c = 0;
      for (int p : comb) c = with(c, p);
      out.push_back(c);
      int i = size - 1;
      while (i >= 0 && comb[static_cast<size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<int> bfs_path_within(const std::vector<std::vector<int>>& succ, int from, int to,
                                 const std::vector<char>& allowed) {
  std::vector<int> parent(succ.size(), -2);
  std::deque<int> q{from};
  parent[static_cast<size_t>(from)] = -1;
  while (!q.empty() && parent[static_cast<size_t>(to)] == -2) {
    int v = q.front();
    q.pop_front();
    for (int w : succ[static_cast<size_t>(v)]) {
      if (!allowed[static_cast<size_t>(w)] || parent[static_cast<size_t>(w)] != -2) continue;
      parent[static_cast<size_t>(w)] = v;
      q.push_back(w);
    }
  }
  std::vector<int> path;
  if (parent[static_cast<size_t>(to)] == -2) return path;
  for (int v = to; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

struct Checker {
  const ProductGraph& p;
  const ParityGame& g;

  CheckVerdict verdict;
  ProductGraph p0;
  std::vector<int> origin0;  // p0 id -> p id
  std::vector<std::vector<int>> p0_succ;
  bool p0_functional = false;

  std::optional<Lasso> nonempty(const std::vector<std::vector<int>>& succ, int start,
                                const StreettCondition& cond) {
    ++verdict.stats.emptiness_checks;
    return streett_nonempty(succ, start, cond);
  }

  StreettCondition condition_for(const PayoffVector& x, const std::vector<int>& projection) {
    return lift_condition(streett_pairs_for_payoff(g.objectives, x), projection);
  }

  std::vector<char> payoff_support(const PayoffVector&, const StreettCondition& cond0) {
    std::vector<char> in(static_cast<size_t>(p0.size()), 0);
    if (p0_functional) {
      std::fill(in.begin(), in.end(), 1);
      return in;
    }
    for (int q = 0; q < p0.size(); ++q)
      if (nonempty(p0_succ, q, cond0)) in[static_cast<size_t>(q)] = 1;
    return in;
  }

  Lasso functional_lasso() const {
    std::vector<int> pos(static_cast<size_t>(p0.size()), -1);
    std::vector<int> walk;
    int v = p0.initial;
    while (pos[static_cast<size_t>(v)] < 0) {
      pos[static_cast<size_t>(v)] = static_cast<int>(walk.size());
      walk.push_back(v);
      v = p0_succ[static_cast<size_t>(v)].front();
    }
    Lasso l;
    int split = pos[static_cast<size_t>(v)];
    l.prefix.assign(walk.begin(), walk.begin() + split);
    l.cycle.assign(walk.begin() + split, walk.end());
    return l;
  }

  std::vector<PayoffVector> achievable_payoffs() {
    std::vector<PayoffVector> out;
    int n = g.arena.num_players();
    if (p0_functional) {
      Lasso a = functional_lasso();
      Lasso proj;
      for (int x : a.prefix) proj.prefix.push_back(p0.arena_vertex[static_cast<size_t>(x)]);
      for (int x : a.cycle) proj.cycle.push_back(p0.arena_vertex[static_cast<size_t>(x)]);
      out.push_back(g.payoff_of_lasso(proj));
      return out;
    }
    for (int bits = (1 << n) - 1; bits >= 0; --bits) {
      PayoffVector x;
      for (int pl = 0; pl < n; ++pl) x.wins.push_back((bits >> (n - 1 - pl)) & 1);
      if (nonempty(p0_succ, p0.initial, condition_for(x, p0.arena_vertex)))
        out.push_back(std::move(x));
    }
    return out;
  }

  CheckVerdict run() {
    verdict.stats.product_vertices = p.size();
    p0_succ = plain_succ(p0);
    p0_functional = functional(p0_succ);

    int n = g.arena.num_players();
    auto coalitions = coalition_order(n);

    for (const PayoffVector& x : achievable_payoffs()) {
      StreettCondition cond0 = condition_for(x, p0.arena_vertex);
      std::vector<char> support = payoff_support(x, cond0);
      if (!support[static_cast<size_t>(p0.initial)]) continue;

      // Compliant prefix states that can still realize payoff x.
      std::vector<char> on(static_cast<size_t>(p0.size()), 0);
      {
        std::deque<int> q{p0.initial};
        on[static_cast<size_t>(p0.initial)] = 1;
        while (!q.empty()) {
          int v = q.front();
          q.pop_front();
          for (int w : p0_succ[static_cast<size_t>(v)])
            if (support[static_cast<size_t>(w)] && !on[static_cast<size_t>(w)]) {
              on[static_cast<size_t>(w)] = 1;
              q.push_back(w);
            }
        }
      }

      for (PlayerSet C : coalitions) {
        std::vector<int> originC;
        ProductGraph pc = restrict_deviators(p, C, &originC);
        std::vector<int> p_to_pc(static_cast<size_t>(p.size()), -1);
        for (size_t i = 0; i < originC.size(); ++i)
          p_to_pc[static_cast<size_t>(originC[i])] = static_cast<int>(i);

        struct Entry {
          int q0;      // divergence point, p0 id
          int w_pc;    // deviating target, pc id
          int alt_p0;  // compliant alternative with x-support, p0 id
        };
        std::vector<Entry> entries;
        for (int q0 = 0; q0 < p0.size(); ++q0) {
          if (!on[static_cast<size_t>(q0)]) continue;
          int alt = -1;
          for (int w : p0_succ[static_cast<size_t>(q0)])
            if (support[static_cast<size_t>(w)]) {
              alt = w;
              break;
            }
          if (alt < 0) continue;
          int pq = origin0[static_cast<size_t>(q0)];
          for (const auto& e : p.succ[static_cast<size_t>(pq)]) {
            if (e.deviator < 0 || !contains(C, e.deviator)) continue;
            int w_pc = p_to_pc[static_cast<size_t>(e.to)];
            if (w_pc < 0) continue;
            entries.push_back({q0, w_pc, alt});
          }
        }
        if (entries.empty()) continue;

        std::vector<std::vector<int>> h = plain_succ(pc);
        int virt = static_cast<int>(h.size());
        h.emplace_back();
        for (const auto& e : entries) {
          bool dup = false;
          for (int t : h[static_cast<size_t>(virt)]) dup = dup || t == e.w_pc;
          if (!dup) h[static_cast<size_t>(virt)].push_back(e.w_pc);
        }

        for (const PayoffVector& y : upward_harm_set(x, C)) {
          StreettCondition condH = condition_for(y, pc.arena_vertex);
          condH.n = static_cast<int>(h.size());
          for (auto& pr : condH.pairs) {
            pr.R.push_back(0);
            pr.G.push_back(0);
          }
          auto found = nonempty(h, virt, condH);
          if (!found) continue;
          build_witness(x, y, cond0, on, *found, entries, p_to_pc, originC, virt);
          return verdict;
        }
      }
    }
    verdict.all_sse = true;
    return verdict;
  }

  template <typename Entries>
  void build_witness(const PayoffVector& x, const PayoffVector& y, const StreettCondition& cond0,
                     const std::vector<char>& on, const Lasso& h_lasso, const Entries& entries,
                     const std::vector<int>& p_to_pc, const std::vector<int>& originC, int virt) {
    // Real beta tail in pc ids: drop the virtual start.
    std::vector<int> tail_prefix(h_lasso.prefix.begin(), h_lasso.prefix.end());
    if (!tail_prefix.empty() && tail_prefix.front() == virt)
      tail_prefix.erase(tail_prefix.begin());
    int w0 = tail_prefix.empty() ? h_lasso.cycle.front() : tail_prefix.front();

    const auto* entry = &entries.front();
    for (const auto& e : entries)
      if (e.w_pc == w0) {
        entry = &e;
        break;
      }

    auto shared = bfs_path_within(p0_succ, p0.initial, entry->q0, on);

    WitnessPair w;
    for (int v : shared) w.beta.prefix.push_back(origin0[static_cast<size_t>(v)]);
    for (int v : tail_prefix) w.beta.prefix.push_back(originC[static_cast<size_t>(v)]);
    for (int v : h_lasso.cycle) w.beta.cycle.push_back(originC[static_cast<size_t>(v)]);

    auto alpha_tail = nonempty(p0_succ, entry->alt_p0, cond0);
    for (int v : shared) w.alpha.prefix.push_back(origin0[static_cast<size_t>(v)]);
    for (int v : alpha_tail->prefix) w.alpha.prefix.push_back(origin0[static_cast<size_t>(v)]);
    for (int v : alpha_tail->cycle) w.alpha.cycle.push_back(origin0[static_cast<size_t>(v)]);

    for (int pl = 0; pl < x.size(); ++pl)
      if (x.wins[static_cast<size_t>(pl)] && !y.wins[static_cast<size_t>(pl)]) {
        w.harmed = pl;
        break;
      }
    std::vector<int> bwalk = w.beta.prefix;
    bwalk.insert(bwalk.end(), w.beta.cycle.begin(), w.beta.cycle.end());
    bwalk.push_back(w.beta.cycle.front());
    for (size_t i = 0; i + 1 < bwalk.size(); ++i) {
      PlayerId d = p.edge_deviator(bwalk[i], bwalk[i + 1]);
      if (d >= 0) w.deviators = with(w.deviators, d);
    }

    verdict.all_sse = false;
    verdict.alpha_play = p.project(w.alpha);
    verdict.beta_play = p.project(w.beta);
    verdict.witness = std::move(w);
    (void)p_to_pc;
  }
};

}  // namespace

CheckVerdict check_product_graph(const ProductGraph& p, const ParityGame& g) {
  Checker c{p, g, {}, {}, {}, {}, false};
  c.p0 = restrict_deviators(p, 0, &c.origin0);
  return c.run();
}

CheckVerdict check_sse(const ParityGame& g, const MealyMachine& m) {
  auto bad = g.validate();
  if (!bad.empty()) throw input_error(bad.front());
  ProductGraph p = build_product_graph(g.arena, m);
  return check_product_graph(p, g);
}

CheckVerdict check_sse_compositional(const ParityGame& g, const std::vector<MealyMachine>& ms) {
  auto bad = g.validate();
  if (!bad.empty()) throw input_error(bad.front());
  ProductGraph p = build_product_graph_compositional(g.arena, ms);
  return check_product_graph(p, g);
}

MealyMachine lift_machine(const SynchronizedProduct& sp, const Arena& base,
                          const MealyMachine& m) {
  if (m.num_vertices != base.num_vertices())
    throw input_error("machine alphabet does not match the arena");
  const Arena& pa = sp.game.arena;
  MealyMachine out;
  out.scope = m.scope;
  out.num_vertices = pa.num_vertices();
  for (StateId s = 0; s < m.num_states(); ++s) out.add_state(m.states.name(s));
  out.initial = m.initial;
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (VertexId pv = 0; pv < pa.num_vertices(); ++pv) {
      VertexId v = sp.arena_vertex[static_cast<size_t>(pv)];
      for (const auto& tr : m.at(s, v)) {
        if (tr.out < 0) {
          out.add_read(s, pv, tr.next);
        } else {
          VertexId target = -1;
          for (VertexId pw : pa.succ[static_cast<size_t>(pv)])
            if (sp.arena_vertex[static_cast<size_t>(pw)] == tr.out) {
              target = pw;
              break;
            }
          if (target < 0) throw input_error("machine output has no successor in the product");
          out.add_output(s, pv, tr.next, target);
        }
      }
    }
  }
  return out;
}

CheckVerdict check_sse_omega(const OmegaRegularGame& g, const MealyMachine& m) {
  SynchronizedProduct sp = synchronized_product(g);
  MealyMachine lifted = lift_machine(sp, g.arena, m);
  CheckVerdict v = check_sse(sp.game, lifted);
  if (v.witness) {
    v.alpha_play = sp.project(v.alpha_play);
    v.beta_play = sp.project(v.beta_play);
  }
  return v;
}

CheckVerdict check_sse_omega_compositional(const OmegaRegularGame& g,
                                           const std::vector<MealyMachine>& ms) {
  SynchronizedProduct sp = synchronized_product(g);
  std::vector<MealyMachine> lifted;
  for (const auto& m : ms) lifted.push_back(lift_machine(sp, g.arena, m));
  CheckVerdict v = check_sse_compositional(sp.game, lifted);
  if (v.witness) {
    v.alpha_play = sp.project(v.alpha_play);
    v.beta_play = sp.project(v.beta_play);
  }
  return v;
}

}  // namespace ssev
