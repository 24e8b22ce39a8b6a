#include "ssev/streett.hpp"

#include <algorithm>
#include <deque>

namespace ssev {

StreettCondition streett_pairs_for_payoff(const std::vector<Coloring>& objectives,
                                          const PayoffVector& target) {
  if (objectives.size() != target.wins.size())
    throw input_error("payoff vector size does not match objectives");
  size_t dom = objectives.empty() ? 0 : objectives.front().colors.size();
  int k = 0;
  for (const auto& o : objectives) {
    if (o.colors.size() != dom) throw input_error("objective colorings over different domains");
    k = std::max(k, o.bound);
  }

  StreettCondition cond;
  cond.n = static_cast<int>(dom);
  for (size_t i = 0; i < objectives.size(); ++i) {
    const auto& colors = objectives[i].colors;
    if (target.wins[i]) {
      // Winning player: every odd color 2j+1 seen infinitely often must be
      // dominated by some even color <= 2j.
      for (int j = 0; 2 * j + 1 <= k; ++j) {
        StreettCondition::Pair pr;
        pr.R.assign(dom, 0);
        pr.G.assign(dom, 0);
        bool any = false;
        for (size_t v = 0; v < dom; ++v) {
          if (colors[v] == 2 * j + 1) {
            pr.R[v] = 1;
            any = true;
          }
          if (colors[v] % 2 == 0 && colors[v] <= 2 * j) pr.G[v] = 1;
        }
        if (any) cond.pairs.push_back(std::move(pr));
      }
    } else {
      for (int j = 0; 2 * j <= k + 1; ++j) {
        StreettCondition::Pair pr;
        pr.R.assign(dom, 0);
        pr.G.assign(dom, 0);
        bool any = false;
        for (size_t v = 0; v < dom; ++v) {
          if (colors[v] == 2 * j) {
            pr.R[v] = 1;
            any = true;
          }
          if (colors[v] % 2 == 1 && colors[v] <= 2 * j - 1) pr.G[v] = 1;
        }
        if (any) cond.pairs.push_back(std::move(pr));
      }
    }
  }
  return cond;
}

StreettCondition lift_condition(const StreettCondition& cond, const std::vector<int>& projection) {
  StreettCondition out;
  out.n = static_cast<int>(projection.size());
  for (const auto& pr : cond.pairs) {
    StreettCondition::Pair lifted;
    lifted.R.resize(projection.size());
    lifted.G.resize(projection.size());
    for (size_t x = 0; x < projection.size(); ++x) {
      lifted.R[x] = pr.R[static_cast<size_t>(projection[x])];
      lifted.G[x] = pr.G[static_cast<size_t>(projection[x])];
    }
    out.pairs.push_back(std::move(lifted));
  }
  return out;
}

void add_parity_pairs(StreettCondition& cond, const Coloring& k, bool win,
                      const std::vector<int>* projection) {
  std::vector<Coloring> one{k};
  PayoffVector t;
  t.wins.push_back(win ? 1 : 0);
  StreettCondition extra = streett_pairs_for_payoff(one, t);
  if (projection) extra = lift_condition(extra, *projection);
  if (cond.n == 0) cond.n = extra.n;
  if (cond.n != extra.n) throw input_error("streett pair domain mismatch");
  for (auto& pr : extra.pairs) cond.pairs.push_back(std::move(pr));
}

std::vector<std::vector<int>> scc_decompose(const std::vector<std::vector<int>>& succ,
                                            const std::vector<int>& active) {
  int n = static_cast<int>(succ.size());
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (int v : active) in[static_cast<size_t>(v)] = 1;

  std::vector<int> idx(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> on(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    size_t ei;
  };
  for (int root : active) {
    if (idx[static_cast<size_t>(root)] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    idx[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
    stack.push_back(root);
    on[static_cast<size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.ei < succ[static_cast<size_t>(f.v)].size()) {
        int w = succ[static_cast<size_t>(f.v)][f.ei++];
        if (!in[static_cast<size_t>(w)]) continue;
        if (idx[static_cast<size_t>(w)] < 0) {
          idx[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          stack.push_back(w);
          on[static_cast<size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], idx[static_cast<size_t>(w)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[static_cast<size_t>(frames.back().v)] =
              std::min(low[static_cast<size_t>(frames.back().v)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] == idx[static_cast<size_t>(v)]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on[static_cast<size_t>(w)] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  return comps;
}

namespace {

// BFS path (vertex sequence) from one of `sources` to `target` within
// `allowed`; ties broken by vertex id through the queue order.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& succ, const std::vector<int>& sources,
                          const std::function<bool(int)>& is_target,
                          const std::vector<char>& allowed) {
  int n = static_cast<int>(succ.size());
  std::vector<int> parent(static_cast<size_t>(n), -2);
  std::deque<int> q;
  for (int s : sources) {
    if (parent[static_cast<size_t>(s)] != -2) continue;
    parent[static_cast<size_t>(s)] = -1;
    q.push_back(s);
  }
  int found = -1;
  for (int s : sources)
    if (is_target(s)) {
      found = s;
      break;
    }
  while (found < 0 && !q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : succ[static_cast<size_t>(v)]) {
      if (!allowed[static_cast<size_t>(w)] || parent[static_cast<size_t>(w)] != -2) continue;
      parent[static_cast<size_t>(w)] = v;
      if (is_target(w)) {
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

// Search for an accepting component inside `active`, recursively discarding
// request sets of violated pairs.
std::optional<std::vector<int>> find_good_component(const std::vector<std::vector<int>>& succ,
                                                    const StreettCondition& cond,
                                                    const std::vector<int>& active) {
  for (const auto& comp : scc_decompose(succ, active)) {
    std::vector<char> in(succ.size(), 0);
    for (int v : comp) in[static_cast<size_t>(v)] = 1;
    bool nontrivial = false;
    for (int v : comp) {
      for (int w : succ[static_cast<size_t>(v)])
        if (in[static_cast<size_t>(w)]) {
          nontrivial = true;
          break;
        }
      if (nontrivial) break;
    }
    if (!nontrivial) continue;

    std::vector<char> drop(succ.size(), 0);
    bool violated = false;
    for (const auto& pr : cond.pairs) {
      bool r = false, g = false;
      for (int v : comp) {
        r = r || pr.R[static_cast<size_t>(v)];
        g = g || pr.G[static_cast<size_t>(v)];
      }
      if (r && !g) {
        violated = true;
        for (int v : comp)
          if (pr.R[static_cast<size_t>(v)]) drop[static_cast<size_t>(v)] = 1;
      }
    }
    if (!violated) return comp;
    std::vector<int> rest;
    for (int v : comp)
      if (!drop[static_cast<size_t>(v)]) rest.push_back(v);
    if (!rest.empty()) {
      auto sub = find_good_component(succ, cond, rest);
      if (sub) return sub;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lasso> streett_nonempty(const std::vector<std::vector<int>>& succ, int start,
                                      const StreettCondition& cond) {
  int n = static_cast<int>(succ.size());
  if (n == 0) return std::nullopt;
  std::vector<char> reach(static_cast<size_t>(n), 0);
  std::vector<int> order;
  std::deque<int> q{start};
  reach[static_cast<size_t>(start)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int w : succ[static_cast<size_t>(v)])
      if (!reach[static_cast<size_t>(w)]) {
        reach[static_cast<size_t>(w)] = 1;
        q.push_back(w);
      }
  }

  auto comp = find_good_component(succ, cond, order);
  if (!comp) return std::nullopt;

  std::vector<char> in_comp(static_cast<size_t>(n), 0);
  for (int v : *comp) in_comp[static_cast<size_t>(v)] = 1;

  auto prefix_path = bfs_path(
      succ, {start}, [&](int v) { return in_comp[static_cast<size_t>(v)] != 0; }, reach);
  int entry = prefix_path.back();
  prefix_path.pop_back();

  // Cover walk through the whole component, back to the entry.
  Lasso l;
  l.prefix = prefix_path;
  int cur = entry;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  visited[static_cast<size_t>(entry)] = 1;
  l.cycle.push_back(entry);
  while (true) {
    int next_target = -1;
    for (int v : *comp)
      if (!visited[static_cast<size_t>(v)]) {
        next_target = v;
        break;
      }
    auto leg = bfs_path(
        succ, {cur}, [&](int v) { return v == (next_target < 0 ? entry : next_target); }, in_comp);
    if (next_target < 0) {
      // Close the cycle; drop the closing entry vertex.
      for (size_t i = 1; i + 1 < leg.size(); ++i) l.cycle.push_back(leg[i]);
      if (leg.size() == 1) {
        // cur == entry already: need an actual loop through the component.
        std::vector<int> seeds;
        for (int w : succ[static_cast<size_t>(cur)])
          if (in_comp[static_cast<size_t>(w)]) seeds.push_back(w);
        auto loop = bfs_path(succ, seeds, [&](int v) { return v == entry; }, in_comp);
        for (size_t i = 0; i + 1 < loop.size(); ++i) l.cycle.push_back(loop[i]);
      }
      break;
    }
    for (size_t i = 1; i < leg.size(); ++i) {
      l.cycle.push_back(leg[i]);
      visited[static_cast<size_t>(leg[i])] = 1;
    }
    cur = next_target;
  }
  return l;
}

}  // namespace ssev
