#include "ssev/witness.hpp"

namespace ssev {

namespace {

std::vector<int> walk_of(const Lasso& l, size_t upto) {
  std::vector<int> w;
  for (size_t i = 0; i < upto; ++i) w.push_back(l.at(i));
  return w;
}

}  // namespace

std::vector<std::string> validate_witness(const WitnessPair& w, const ProductGraph& p,
                                          const std::vector<Coloring>& objectives) {
  std::vector<std::string> out;
  auto edge_ok = [&](int u, int v) { return p.has_edge(u, v); };
  if (!lasso_valid(w.alpha, edge_ok)) out.push_back("alpha is not a lasso of the product graph");
  if (!lasso_valid(w.beta, edge_ok)) out.push_back("beta is not a lasso of the product graph");
  if (!out.empty()) return out;

  size_t horizon = w.alpha.prefix.size() + w.alpha.cycle.size() + w.beta.prefix.size() +
                   w.beta.cycle.size() + 2;
  auto av = walk_of(w.alpha, horizon);
  auto bv = walk_of(w.beta, horizon);

  for (size_t i = 0; i + 1 < horizon; ++i)
    if (p.edge_deviator(av[i], av[i + 1]) >= 0) {
      out.push_back("alpha uses a deviating edge");
      break;
    }

  size_t k = horizon;
  for (size_t i = 0; i < horizon; ++i)
    if (av[i] != bv[i]) {
      k = i;
      break;
    }
  if (k == horizon) {
    out.push_back("alpha and beta never diverge within the periodic horizon");
  } else if (k == 0) {
    out.push_back("alpha and beta start at different vertices");
  } else if (p.edge_deviator(bv[k - 1], bv[k]) < 0) {
    out.push_back("first divergence is not a deviating edge");
  }

  PlayerSet used = 0;
  for (size_t i = 0; i + 1 < horizon; ++i) {
    PlayerId d = p.edge_deviator(bv[i], bv[i + 1]);
    if (d >= 0) used = with(used, d);
  }
  // Deviating edges inside beta's cycle recur; recompute over one period.
  {
    std::vector<int> cyc = w.beta.cycle;
    for (size_t i = 0; i < cyc.size(); ++i) {
      PlayerId d = p.edge_deviator(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (d >= 0) used = with(used, d);
    }
  }
  if ((w.deviators & used) != used)
    out.push_back("deviators field misses a player who deviates along beta");
  if (contains(w.deviators, w.harmed)) out.push_back("harmed player listed as deviator");

  Lasso pa = p.project(w.alpha), pb = p.project(w.beta);
  for (size_t i = 0; i < objectives.size(); ++i) {
    bool xa = lasso_parity_payoff(objectives[i], pa);
    bool xb = lasso_parity_payoff(objectives[i], pb);
    if (static_cast<PlayerId>(i) == w.harmed && !(xa && !xb))
      out.push_back("harmed player does not strictly lose on beta");
    if (contains(used, static_cast<PlayerId>(i)) && xa && !xb)
      out.push_back("a deviating player strictly loses on beta");
  }
  return out;
}

}  // namespace ssev
