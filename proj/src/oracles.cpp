#include "ssev/oracles.hpp"

#include <algorithm>
#include <deque>

#include "ssev/streett.hpp"

namespace ssev {

int oracle_default_bound(int n) { return 2 * n + n * n; }

namespace {

std::vector<PlayerSet> coalitions_ordered(int n) {
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

uint32_t reach_mask(const std::vector<uint32_t>& adj, uint32_t allowed, uint32_t seeds) {
  uint32_t reach = seeds & allowed;
  while (true) {
    uint32_t next = reach;
    uint32_t frontier = reach;
    while (frontier) {
      int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      next |= adj[static_cast<size_t>(v)] & allowed;
    }
    if (next == reach) return reach;
    reach = next;
  }
}

std::vector<int> bfs_path(const std::vector<std::vector<int>>& succ, int from,
                          const std::function<bool(int)>& target) {
  std::vector<int> parent(succ.size(), -2);
  parent[static_cast<size_t>(from)] = -1;
  std::deque<int> q{from};
  int found = target(from) ? from : -1;
  while (found < 0 && !q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : succ[static_cast<size_t>(v)])
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = v;
        if (target(w)) {
          found = w;
          break;
        }
        q.push_back(w);
      }
  }
  std::vector<int> path;
  if (found < 0) return path;
  for (int v = found; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Cover walk visiting every vertex of `set` and closing back on its first
// vertex, inside the subgraph induced by `set`.
std::vector<int> cover_cycle(const std::vector<std::vector<int>>& succ, uint32_t set) {
  std::vector<char> in(succ.size(), 0);
  std::vector<int> members;
  for (uint32_t m = set; m;) {
    int v = __builtin_ctz(m);
    m &= m - 1;
    in[static_cast<size_t>(v)] = 1;
    members.push_back(v);
  }
  auto inside = [&](int v) { return in[static_cast<size_t>(v)] != 0; };
  std::vector<std::vector<int>> sub(succ.size());
  for (int v : members)
    for (int w : succ[static_cast<size_t>(v)])
      if (inside(w)) sub[static_cast<size_t>(v)].push_back(w);

  int start = members.front();
  std::vector<int> cyc{start};
  std::vector<char> seen(succ.size(), 0);
  seen[static_cast<size_t>(start)] = 1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int v : members)
      if (!seen[static_cast<size_t>(v)]) {
        next = v;
        break;
      }
    if (next < 0) break;
    auto leg = bfs_path(sub, cur, [&](int v) { return v == next; });
    for (size_t i = 1; i < leg.size(); ++i) {
      cyc.push_back(leg[i]);
      seen[static_cast<size_t>(leg[i])] = 1;
    }
    cur = next;
  }
  if (cur != start) {
    auto back = bfs_path(sub, cur, [&](int v) { return v == start; });
    for (size_t i = 1; i + 1 < back.size(); ++i) cyc.push_back(back[i]);
  } else if (cyc.size() == 1) {
    // Self-loop cycle.
  }
  return cyc;
}

}  // namespace

CheckVerdict oracle_witness_search(const ParityGame& g, const MealyMachine& m, int bound) {
  if (!is_deterministic(m)) throw input_error("oracle handles deterministic machines only");
  auto bad = g.validate();
  if (!bad.empty()) throw input_error(bad.front());

  ProductGraph p = build_product_graph(g.arena, m);
  CheckVerdict verdict;
  verdict.stats.product_vertices = p.size();

  // Unique compliant lasso.
  std::vector<int> origin0;
  ProductGraph p0 = restrict_deviators(p, 0, &origin0);
  Lasso alpha;
  {
    std::vector<int> pos(static_cast<size_t>(p0.size()), -1);
    std::vector<int> walk;
    int v = p0.initial;
    while (pos[static_cast<size_t>(v)] < 0) {
      pos[static_cast<size_t>(v)] = static_cast<int>(walk.size());
      walk.push_back(v);
      int next = -1;
      for (const auto& e : p0.succ[static_cast<size_t>(v)])
        if (e.deviator < 0) {
          next = e.to;
          break;
        }
      v = next;
    }
    int split = pos[static_cast<size_t>(v)];
    for (int i = 0; i < split; ++i) alpha.prefix.push_back(origin0[static_cast<size_t>(walk[i])]);
    for (size_t i = static_cast<size_t>(split); i < walk.size(); ++i)
      alpha.cycle.push_back(origin0[walk[i]]);
  }
  PayoffVector x = g.payoff_of_lasso(p.project(alpha));

  int n_players = g.arena.num_players();
  for (PlayerSet C : coalitions_ordered(n_players)) {
    std::vector<int> originC;
    ProductGraph pc = restrict_deviators(p, C, &originC);
    int n = pc.size();
    if (n > 25) throw input_error("oracle guard: restricted product too large to enumerate");

    std::vector<std::vector<int>> succ = [&] {
      std::vector<std::vector<int>> s(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v)
        for (const auto& e : pc.succ[static_cast<size_t>(v)]) s[static_cast<size_t>(v)].push_back(e.to);
      return s;
    }();
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0), radj(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      for (int w : succ[static_cast<size_t>(v)]) {
        adj[static_cast<size_t>(v)] |= 1u << w;
        radj[static_cast<size_t>(w)] |= 1u << v;
      }
    std::vector<int> dist(static_cast<size_t>(n), -1);
    {
      std::deque<int> q{pc.initial};
      dist[static_cast<size_t>(pc.initial)] = 0;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : succ[static_cast<size_t>(v)])
          if (dist[static_cast<size_t>(w)] < 0) {
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
            q.push_back(w);
          }
      }
    }

    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      int lo = __builtin_ctz(mask);
      if (popcount(mask) == 1 && !(adj[static_cast<size_t>(lo)] & mask)) continue;
      if (reach_mask(adj, mask, 1u << lo) != mask) continue;
      if (reach_mask(radj, mask, 1u << lo) != mask) continue;

      int best_dist = -1;
      for (uint32_t mm = mask; mm;) {
        int v = __builtin_ctz(mm);
        mm &= mm - 1;
        if (dist[static_cast<size_t>(v)] >= 0 &&
            (best_dist < 0 || dist[static_cast<size_t>(v)] < best_dist))
          best_dist = dist[static_cast<size_t>(v)];
      }
      if (best_dist < 0) continue;
      int size = popcount(mask);
      if (best_dist + size * size > bound) continue;

      PayoffVector y;
      for (int pl = 0; pl < n_players; ++pl) {
        int mn = 1 << 30;
        for (uint32_t mm = mask; mm;) {
          int v = __builtin_ctz(mm);
          mm &= mm - 1;
          mn = std::min(mn, g.objectives[static_cast<size_t>(pl)].at(
                                pc.arena_vertex[static_cast<size_t>(v)]));
        }
        y.wins.push_back(mn % 2 == 0);
      }
      bool ok = true, harm = false;
      for (int pl = 0; pl < n_players; ++pl) {
        if (contains(C, pl) && y.wins[static_cast<size_t>(pl)] < x.wins[static_cast<size_t>(pl)])
          ok = false;
        if (!y.wins[static_cast<size_t>(pl)] && x.wins[static_cast<size_t>(pl)]) harm = true;
      }
      if (!ok || !harm) continue;

      // Build the pair: beta = path to the set + cover cycle.
      WitnessPair w;
      std::vector<char> inset(static_cast<size_t>(n), 0);
      for (uint32_t mm = mask; mm;) {
        int v = __builtin_ctz(mm);
        mm &= mm - 1;
        inset[static_cast<size_t>(v)] = 1;
      }
      auto pre = bfs_path(succ, pc.initial, [&](int v) { return inset[static_cast<size_t>(v)] != 0; });
      int entry = pre.back();
      pre.pop_back();
      uint32_t rot = mask;
      (void)rot;
      auto cyc = cover_cycle(succ, mask);
      // Rotate the cover cycle to start at the entry vertex.
      size_t at = 0;
      while (cyc[at] != entry) ++at;
      std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(at), cyc.end());
      for (int v : pre) w.beta.prefix.push_back(originC[static_cast<size_t>(v)]);
      for (int v : cyc) w.beta.cycle.push_back(originC[static_cast<size_t>(v)]);
      w.alpha = alpha;
      for (int pl = 0; pl < n_players; ++pl)
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
      if (w.deviators == 0) continue;  // beta never deviates: it is alpha itself

      verdict.all_sse = false;
      verdict.alpha_play = p.project(w.alpha);
      verdict.beta_play = p.project(w.beta);
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  verdict.all_sse = true;
  return verdict;
}

bool oracle_solve_parity(const TwoPlayerParityGame& g) {
  return oracle_solve_parity_regions(g)[static_cast<size_t>(g.initial)] != 0;
}

std::vector<char> oracle_solve_parity_regions(const TwoPlayerParityGame& g) {
  int n = g.size();
  std::vector<int> prot_vertices;
  long long combos = 1;
  for (int v = 0; v < n; ++v)
    if (g.protagonist_owns[static_cast<size_t>(v)]) {
      prot_vertices.push_back(v);
      combos *= static_cast<long long>(g.succ[static_cast<size_t>(v)].size());
      if (combos > 1000000) throw input_error("oracle guard: too many positional strategies");
    }

  std::vector<char> wins(static_cast<size_t>(n), 0);
  std::vector<size_t> pick(prot_vertices.size(), 0);
  while (true) {
    // Induced graph: protagonist edges fixed by pick, antagonist edges free.
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (g.protagonist_owns[static_cast<size_t>(v)]) continue;
      succ[static_cast<size_t>(v)] = g.succ[static_cast<size_t>(v)];
    }
    for (size_t i = 0; i < prot_vertices.size(); ++i) {
      int v = prot_vertices[i];
      succ[static_cast<size_t>(v)].push_back(g.succ[static_cast<size_t>(v)][pick[i]]);
    }

    // Vertices on cycles with odd minimum color.
    std::vector<char> bad(static_cast<size_t>(n), 0);
    int maxc = 0;
    for (int v = 0; v < n; ++v) maxc = std::max(maxc, g.color[static_cast<size_t>(v)]);
    for (int c = 1; c <= maxc; c += 2) {
      std::vector<int> active;
      for (int v = 0; v < n; ++v)
        if (g.color[static_cast<size_t>(v)] >= c) active.push_back(v);
      for (const auto& comp : scc_decompose(succ, active)) {
        bool nontrivial = false;
        std::vector<char> in(static_cast<size_t>(n), 0);
        for (int v : comp) in[static_cast<size_t>(v)] = 1;
        for (int v : comp) {
          for (int w : succ[static_cast<size_t>(v)])
            if (in[static_cast<size_t>(w)]) nontrivial = true;
          if (nontrivial) break;
        }
        if (!nontrivial) continue;
        bool has_c = false;
        for (int v : comp) has_c = has_c || g.color[static_cast<size_t>(v)] == c;
        if (has_c)
          for (int v : comp) bad[static_cast<size_t>(v)] = 1;
      }
    }
    // Vertices that can reach a bad cycle lose under this strategy.
    std::vector<char> lose = bad;
    std::vector<std::vector<int>> pred(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      for (int w : succ[static_cast<size_t>(v)]) pred[static_cast<size_t>(w)].push_back(v);
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
      if (lose[static_cast<size_t>(v)]) q.push_back(v);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : pred[static_cast<size_t>(v)])
        if (!lose[static_cast<size_t>(u)]) {
          lose[static_cast<size_t>(u)] = 1;
          q.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!lose[static_cast<size_t>(v)]) wins[static_cast<size_t>(v)] = 1;

    size_t i = 0;
    for (; i < prot_vertices.size(); ++i) {
      if (++pick[i] < g.succ[static_cast<size_t>(prot_vertices[i])].size()) break;
      pick[i] = 0;
    }
    if (i == prot_vertices.size()) break;
    if (prot_vertices.empty()) break;
  }
  return wins;
}

}  // namespace ssev
