#include "ssev/coloring.hpp"

#include <algorithm>
#include <limits>

namespace ssev {

Coloring normalize_coloring(const Coloring& k) {
  if (k.colors.empty()) return k;
  int mn = *std::min_element(k.colors.begin(), k.colors.end());
  int shift = (mn % 2 == 0) ? mn : mn - 1;
  Coloring out;
  out.colors.reserve(k.colors.size());
  for (int c : k.colors) out.colors.push_back(c - shift);
  out.bound = *std::max_element(out.colors.begin(), out.colors.end());
  return out;
}

bool lasso_parity_payoff(const Coloring& k, const Lasso& l) {
  int mn = std::numeric_limits<int>::max();
  for (int v : l.cycle) mn = std::min(mn, k.at(v));
  return mn % 2 == 0;
}

}  // namespace ssev
