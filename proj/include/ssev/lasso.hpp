#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "ssev/base.hpp"

namespace ssev {

/// Ultimately periodic play prefix.cycle^omega given by vertex ids of some host graph.
struct Lasso {
  std::vector<int> prefix;  // possibly empty
  std::vector<int> cycle;   // nonempty

  bool operator==(const Lasso& o) const { return prefix == o.prefix && cycle == o.cycle; }

  /// Vertex at position i of the infinite play.
  int at(size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return cycle[(i - prefix.size()) % cycle.size()];
  }

  /// Cycle rotated r steps left, prefix extended to keep the same play.
  Lasso rotated(size_t r) const {
    Lasso out = *this;
    r %= cycle.size();
    for (size_t i = 0; i < r; ++i) out.prefix.push_back(cycle[i]);
    std::rotate(out.cycle.begin(), out.cycle.begin() + static_cast<long>(r), out.cycle.end());
    return out;
  }

  /// Cycle repeated r >= 1 times; denotes the same play.
  Lasso unrolled(size_t r) const {
    Lasso out = *this;
    for (size_t i = 1; i < r; ++i)
      out.cycle.insert(out.cycle.end(), cycle.begin(), cycle.end());
    return out;
  }
};

/// True iff consecutive steps of prefix.cycle and the cycle closure are edges.
bool lasso_valid(const Lasso& l, const std::function<bool(int, int)>& has_edge);

/// Canonical form: cycle rotated so its name-least vertex comes first.
Lasso canonical_lasso(const Lasso& l, const std::function<const std::string&(int)>& name_of);

}  // namespace ssev
