#include "ssev/zielonka.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace ssev {

std::vector<char> attractor(const TwoPlayerParityGame& g, const std::vector<char>& active,
                            const std::vector<char>& target, bool prot,
                            std::vector<int>* strategy) {
  int n = g.size();
  std::vector<std::vector<int>> pred(static_cast<size_t>(n));
  std::vector<int> out_deg(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (!active[static_cast<size_t>(v)]) continue;
    for (int w : g.succ[static_cast<size_t>(v)]) {
      if (!active[static_cast<size_t>(w)]) continue;
      pred[static_cast<size_t>(w)].push_back(v);
      ++out_deg[static_cast<size_t>(v)];
    }
  }

  std::vector<char> attr(static_cast<size_t>(n), 0);
  std::deque<int> work;
  for (int v = 0; v < n; ++v)
    if (active[static_cast<size_t>(v)] && target[static_cast<size_t>(v)]) {
      attr[static_cast<size_t>(v)] = 1;
      work.push_back(v);
    }
  while (!work.empty()) {
    int w = work.front();
    work.pop_front();
    for (int v : pred[static_cast<size_t>(w)]) {
      if (attr[static_cast<size_t>(v)]) continue;
      bool mine = (g.protagonist_owns[static_cast<size_t>(v)] != 0) == prot;
      if (mine) {
        attr[static_cast<size_t>(v)] = 1;
        if (strategy && (*strategy)[static_cast<size_t>(v)] < 0)
          (*strategy)[static_cast<size_t>(v)] = w;
        work.push_back(v);
      } else if (--out_deg[static_cast<size_t>(v)] == 0) {
        attr[static_cast<size_t>(v)] = 1;
        work.push_back(v);
      }
    }
  }
  return attr;
}

namespace {

void solve_rec(const TwoPlayerParityGame& g, std::vector<char> active, ZielonkaResult& res) {
  int n = g.size();
  int c = std::numeric_limits<int>::max();
  bool any = false;
  for (int v = 0; v < n; ++v)
    if (active[static_cast<size_t>(v)]) {
      c = std::min(c, g.color[static_cast<size_t>(v)]);
      any = true;
    }
  if (!any) return;
  bool prot_side = (c % 2 == 0);

  std::vector<char> target(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (active[static_cast<size_t>(v)] && g.color[static_cast<size_t>(v)] == c)
      target[static_cast<size_t>(v)] = 1;

  std::vector<int> attr_strat(static_cast<size_t>(n), -1);
  std::vector<char> A = attractor(g, active, target, prot_side, &attr_strat);

  std::vector<char> rest = active;
  bool rest_any = false;
  for (int v = 0; v < n; ++v) {
    if (A[static_cast<size_t>(v)]) rest[static_cast<size_t>(v)] = 0;
    rest_any = rest_any || rest[static_cast<size_t>(v)];
  }

  ZielonkaResult sub;
  sub.protagonist_wins.assign(static_cast<size_t>(n), 0);
  sub.strategy.assign(static_cast<size_t>(n), -1);
  if (rest_any) solve_rec(g, rest, sub);

  bool opp_wins_rest = false;
  for (int v = 0; v < n; ++v)
    if (rest[static_cast<size_t>(v)] &&
        (sub.protagonist_wins[static_cast<size_t>(v)] != 0) != prot_side)
      opp_wins_rest = true;

  if (!opp_wins_rest) {
    for (int v = 0; v < n; ++v) {
      if (!active[static_cast<size_t>(v)]) continue;
      res.protagonist_wins[static_cast<size_t>(v)] = prot_side ? 1 : 0;
      bool v_owned_by_side = (g.protagonist_owns[static_cast<size_t>(v)] != 0) == prot_side;
      if (!v_owned_by_side) continue;
      if (rest[static_cast<size_t>(v)]) {
        res.strategy[static_cast<size_t>(v)] = sub.strategy[static_cast<size_t>(v)];
      } else if (attr_strat[static_cast<size_t>(v)] >= 0) {
        res.strategy[static_cast<size_t>(v)] = attr_strat[static_cast<size_t>(v)];
      } else {
        // On the target set: any move staying in the subgame.
        for (int w : g.succ[static_cast<size_t>(v)])
          if (active[static_cast<size_t>(w)]) {
            res.strategy[static_cast<size_t>(v)] = w;
            break;
          }
      }
    }
    return;
  }

  std::vector<char> opp_region(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (rest[static_cast<size_t>(v)] &&
        (sub.protagonist_wins[static_cast<size_t>(v)] != 0) != prot_side)
      opp_region[static_cast<size_t>(v)] = 1;

  std::vector<int> b_strat(static_cast<size_t>(n), -1);
  std::vector<char> B = attractor(g, active, opp_region, !prot_side, &b_strat);

  std::vector<char> remain = active;
  bool remain_any = false;
  for (int v = 0; v < n; ++v) {
    if (B[static_cast<size_t>(v)]) remain[static_cast<size_t>(v)] = 0;
    remain_any = remain_any || remain[static_cast<size_t>(v)];
  }
  ZielonkaResult sub2;
  sub2.protagonist_wins.assign(static_cast<size_t>(n), 0);
  sub2.strategy.assign(static_cast<size_t>(n), -1);
  if (remain_any) solve_rec(g, remain, sub2);

  for (int v = 0; v < n; ++v) {
    if (!active[static_cast<size_t>(v)]) continue;
    if (B[static_cast<size_t>(v)]) {
      res.protagonist_wins[static_cast<size_t>(v)] = prot_side ? 0 : 1;
      bool opp_owned = (g.protagonist_owns[static_cast<size_t>(v)] != 0) != prot_side;
      if (opp_owned) {
        if (opp_region[static_cast<size_t>(v)] && sub.strategy[static_cast<size_t>(v)] >= 0)
          res.strategy[static_cast<size_t>(v)] = sub.strategy[static_cast<size_t>(v)];
        else if (b_strat[static_cast<size_t>(v)] >= 0)
          res.strategy[static_cast<size_t>(v)] = b_strat[static_cast<size_t>(v)];
        else if (opp_region[static_cast<size_t>(v)])
          res.strategy[static_cast<size_t>(v)] = sub.strategy[static_cast<size_t>(v)];
      }
    } else {
      res.protagonist_wins[static_cast<size_t>(v)] = sub2.protagonist_wins[static_cast<size_t>(v)];
      if (sub2.strategy[static_cast<size_t>(v)] >= 0)
        res.strategy[static_cast<size_t>(v)] = sub2.strategy[static_cast<size_t>(v)];
    }
  }
}

}  // namespace

ZielonkaResult zielonka_solve(const TwoPlayerParityGame& g) {
  ZielonkaResult res;
  res.protagonist_wins.assign(static_cast<size_t>(g.size()), 0);
  res.strategy.assign(static_cast<size_t>(g.size()), -1);
  std::vector<char> active(static_cast<size_t>(g.size()), 1);
  solve_rec(g, std::move(active), res);
  return res;
}

}  // namespace ssev
