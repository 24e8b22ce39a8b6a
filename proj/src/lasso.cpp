#include "ssev/lasso.hpp"

namespace ssev {

bool lasso_valid(const Lasso& l, const std::function<bool(int, int)>& has_edge) {
  if (l.cycle.empty()) return false;
  std::vector<int> walk = l.prefix;
  walk.insert(walk.end(), l.cycle.begin(), l.cycle.end());
  for (size_t i = 0; i + 1 < walk.size(); ++i)
    if (!has_edge(walk[i], walk[i + 1])) return false;
  return has_edge(l.cycle.back(), l.cycle.front());
}

Lasso canonical_lasso(const Lasso& l, const std::function<const std::string&(int)>& name_of) {
  size_t best = 0;
  for (size_t i = 1; i < l.cycle.size(); ++i)
    if (name_of(l.cycle[i]) < name_of(l.cycle[best])) best = i;
  return l.rotated(best);
}

}  // namespace ssev
