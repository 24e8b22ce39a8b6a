#include "ssev/el.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ssev {

int AtomTable::add(std::vector<char> mask) {
  for (size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == mask) return static_cast<int>(i);
  sets.push_back(std::move(mask));
  return static_cast<int>(sets.size() - 1);
}

ELFormula ELFormula::conj(std::vector<ELFormula> ks) {
  ELFormula f;
  f.kind = Kind::And;
  f.kids = std::move(ks);
  return f;
}

ELFormula ELFormula::disj(std::vector<ELFormula> ks) {
  ELFormula f;
  f.kind = Kind::Or;
  f.kids = std::move(ks);
  return f;
}

ELFormula ELFormula::negated() const {
  ELFormula f;
  switch (kind) {
    case Kind::True:
      return ELFormula::f();
    case Kind::False:
      return t();
    case Kind::Inf:
      return fin(atom);
    case Kind::Fin:
      return inf(atom);
    case Kind::And:
      f.kind = Kind::Or;
      break;
    case Kind::Or:
      f.kind = Kind::And;
      break;
  }
  for (const auto& k : kids) f.kids.push_back(k.negated());
  return f;
}

bool ELFormula::eval(const std::function<bool(int)>& hit) const {
  switch (kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Inf:
      return hit(atom);
    case Kind::Fin:
      return !hit(atom);
    case Kind::And:
      for (const auto& k : kids)
        if (!k.eval(hit)) return false;
      return true;
    case Kind::Or:
      for (const auto& k : kids)
        if (k.eval(hit)) return true;
      return false;
  }
  return false;
}

bool ELFormula::eval_on_lasso(const AtomTable& atoms, const Lasso& l) const {
  return eval([&](int a) {
    for (int v : l.cycle)
      if (atoms.hits(a, v)) return true;
    return false;
  });
}

std::string ELFormula::to_string() const {
  switch (kind) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Inf:
      return "Inf(" + std::to_string(atom) + ")";
    case Kind::Fin:
      return "Fin(" + std::to_string(atom) + ")";
    case Kind::And:
    case Kind::Or: {
      std::string join = kind == Kind::And ? " & " : " | ";
      std::string s = "(";
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) s += join;
        s += kids[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

ELFormula parity_formula(AtomTable& atoms, const Coloring& k, bool negate) {
  // Parity(k) = union over even c of Inf(color c) & Fin(colors < c).
  // The complement is the same expression over odd colors.
  int n = static_cast<int>(k.colors.size());
  std::vector<ELFormula> parts;
  for (int c = negate ? 1 : 0; c <= k.bound; c += 2) {
    std::vector<char> at(static_cast<size_t>(n), 0);
    std::vector<char> below(static_cast<size_t>(n), 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (k.colors[static_cast<size_t>(v)] == c) {
        at[static_cast<size_t>(v)] = 1;
        any = true;
      }
      if (k.colors[static_cast<size_t>(v)] < c) below[static_cast<size_t>(v)] = 1;
    }
    if (!any) continue;
    std::vector<ELFormula> conj{ELFormula::inf(atoms.add(std::move(at)))};
    bool any_below = false;
    for (char b : below) any_below = any_below || b;
    if (any_below) conj.push_back(ELFormula::fin(atoms.add(std::move(below))));
    parts.push_back(conj.size() == 1 ? conj.front() : ELFormula::conj(std::move(conj)));
  }
  if (parts.empty()) return ELFormula::f();
  return parts.size() == 1 ? parts.front() : ELFormula::disj(std::move(parts));
}

ELCondition challenger_objective(const ParityGame& g, PlayerSet D, const PayoffVector& target,
                                 bool correctness_present) {
  ELCondition out;
  int n = g.arena.num_players();
  if (D == 0) {
    std::vector<ELFormula> parts;
    for (int p = 0; p < n; ++p)
      parts.push_back(
          parity_formula(out.atoms, g.objectives[static_cast<size_t>(p)], target.win(p)));
    if (correctness_present && g.correctness)
      parts.push_back(parity_formula(out.atoms, *g.correctness, /*negate=*/true));
    out.formula = simplify(ELFormula::disj(std::move(parts)), out.atoms);
    return out;
  }
  std::vector<ELFormula> harmed;
  for (int p = 0; p < n; ++p)
    if (target.win(p) && !contains(D, p))
      harmed.push_back(parity_formula(out.atoms, g.objectives[static_cast<size_t>(p)], true));
  std::vector<ELFormula> keep;
  for (int p = 0; p < n; ++p)
    if (target.win(p) && contains(D, p))
      keep.push_back(parity_formula(out.atoms, g.objectives[static_cast<size_t>(p)], false));
  std::vector<ELFormula> both;
  both.push_back(harmed.empty() ? ELFormula::f() : ELFormula::disj(std::move(harmed)));
  if (!keep.empty()) both.push_back(ELFormula::conj(std::move(keep)));
  out.formula = simplify(ELFormula::conj(std::move(both)), out.atoms);
  return out;
}

namespace {

bool atom_empty(const AtomTable& atoms, int a) {
  for (char c : atoms.sets[static_cast<size_t>(a)])
    if (c) return false;
  return true;
}

bool atom_full(const AtomTable& atoms, int a) {
  for (char c : atoms.sets[static_cast<size_t>(a)])
    if (!c) return false;
  return true;
}

std::vector<char> union_sets(const AtomTable& atoms, const std::vector<int>& ids) {
  std::vector<char> u(atoms.sets[static_cast<size_t>(ids.front())].size(), 0);
  for (int a : ids)
    for (size_t i = 0; i < u.size(); ++i)
      u[i] = u[i] || atoms.sets[static_cast<size_t>(a)][i];
  return u;
}

ELFormula simplify_rec(const ELFormula& f, AtomTable& atoms) {
  using K = ELFormula::Kind;
  switch (f.kind) {
    case K::True:
    case K::False:
      return f;
    case K::Inf:
      if (atom_empty(atoms, f.atom)) return ELFormula::f();
      if (atom_full(atoms, f.atom)) return ELFormula::t();
      return f;
    case K::Fin:
      if (atom_empty(atoms, f.atom)) return ELFormula::t();
      if (atom_full(atoms, f.atom)) return ELFormula::f();
      return f;
    case K::And:
    case K::Or:
      break;
  }
  bool is_and = f.kind == K::And;
  std::vector<ELFormula> kids;
  for (const auto& k : f.kids) {
    ELFormula s = simplify_rec(k, atoms);
    if (s.kind == (is_and ? K::True : K::False)) continue;
    if (s.kind == (is_and ? K::False : K::True))
      return is_and ? ELFormula::f() : ELFormula::t();
    if (s.kind == f.kind) {
      for (auto& kk : s.kids) kids.push_back(std::move(kk));
    } else {
      kids.push_back(std::move(s));
    }
  }
  // Merge mergeable atoms: Inf-union under Or, Fin-union under And.
  std::vector<int> mergeable;
  std::vector<ELFormula> rest;
  for (auto& k : kids) {
    if ((is_and && k.kind == K::Fin) || (!is_and && k.kind == K::Inf))
      mergeable.push_back(k.atom);
    else
      rest.push_back(std::move(k));
  }
  if (mergeable.size() > 1) {
    int merged = atoms.add(union_sets(atoms, mergeable));
    rest.push_back(is_and ? ELFormula::fin(merged) : ELFormula::inf(merged));
  } else if (mergeable.size() == 1) {
    rest.push_back(is_and ? ELFormula::fin(mergeable.front()) : ELFormula::inf(mergeable.front()));
  }
  // Deduplicate syntactically.
  std::vector<ELFormula> uniq;
  std::set<std::string> seen;
  for (auto& k : rest)
    if (seen.insert(k.to_string()).second) uniq.push_back(std::move(k));
  if (uniq.empty()) return is_and ? ELFormula::t() : ELFormula::f();
  if (uniq.size() == 1) return uniq.front();
  return is_and ? ELFormula::conj(std::move(uniq)) : ELFormula::disj(std::move(uniq));
}

}  // namespace

ELFormula simplify(const ELFormula& f, AtomTable& atoms) { return simplify_rec(f, atoms); }

namespace {

ElToParity constant_reduction(bool value) {
  ElToParity r;
  r.mem_count = 1;
  r.update = [](int, int) { return 0; };
  r.color = [value](int) { return value ? 0 : 1; };
  r.max_color = 1;
  return r;
}

// Membership snapshot per vertex for a fixed atom list.
std::vector<uint32_t> hit_masks(const AtomTable& atoms, const std::vector<int>& ids) {
  int n = atoms.domain();
  std::vector<uint32_t> mask(static_cast<size_t>(n), 0);
  for (size_t j = 0; j < ids.size(); ++j)
    for (int v = 0; v < n; ++v)
      if (atoms.hits(ids[j], v)) mask[static_cast<size_t>(v)] |= 1u << j;
  return mask;
}

}  // namespace

ElToParity lar_reduce(const ELFormula& f, const AtomTable& atoms) {
  // Collect the atoms appearing in the formula.
  std::vector<int> ids;
  std::function<void(const ELFormula&)> collect = [&](const ELFormula& g) {
    if (g.kind == ELFormula::Kind::Inf || g.kind == ELFormula::Kind::Fin) {
      if (std::find(ids.begin(), ids.end(), g.atom) == ids.end()) ids.push_back(g.atom);
    }
    for (const auto& k : g.kids) collect(k);
  };
  collect(f);
  int r = static_cast<int>(ids.size());
  if (r == 0) return constant_reduction(f.eval([](int) { return false; }));
  if (r > 8) throw input_error("emerson-lei condition too complex: " + std::to_string(r) + " atoms");

  // Enumerate permutations of the atom positions.
  std::vector<std::vector<int>> perms;
  std::vector<int> base(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) base[static_cast<size_t>(i)] = i;
  std::vector<int> perm = base;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, int> perm_index;
  for (size_t i = 0; i < perms.size(); ++i) perm_index[perms[i]] = static_cast<int>(i);

  // Truth of the formula when the hit set is exactly the given atom subset.
  std::vector<char> truth(1u << r, 0);
  for (uint32_t sub = 0; sub < (1u << r); ++sub) {
    bool val = f.eval([&](int a) {
      for (int j = 0; j < r; ++j)
        if (ids[static_cast<size_t>(j)] == a) return ((sub >> j) & 1u) != 0;
      return false;
    });
    truth[sub] = val ? 1 : 0;
  }

  auto masks = std::make_shared<std::vector<uint32_t>>(hit_masks(atoms, ids));
  auto perms_p = std::make_shared<std::vector<std::vector<int>>>(std::move(perms));
  auto perm_index_p = std::make_shared<std::map<std::vector<int>, int>>(std::move(perm_index));
  auto truth_p = std::make_shared<std::vector<char>>(std::move(truth));

  // Memory = (permutation, pointer h, formula bit) packed.
  int slots = (r + 1) * 2;
  ElToParity red;
  red.mem_count = static_cast<int>(perms_p->size()) * slots;
  red.mem_init = 0;  // identity permutation, pointer 0; bit from truth(front-0)
  {
    int b0 = (*truth_p)[0] ? 1 : 0;
    red.mem_init = 0 * slots + 0 * 2 + b0;
  }
  int rr = r;
  red.update = [masks, perms_p, perm_index_p, truth_p, slots, rr](int mem, int v) {
    int pi = mem / slots;
    const std::vector<int>& p = (*perms_p)[static_cast<size_t>(pi)];
    uint32_t hit = (*masks)[static_cast<size_t>(v)];
    if (hit == 0) {
      int b = (*truth_p)[0] ? 1 : 0;
      return pi * slots + 0 * 2 + b;
    }
    int deepest = 0;  // 1-based position of the deepest hit atom
    for (int pos = 0; pos < rr; ++pos)
      if ((hit >> p[static_cast<size_t>(pos)]) & 1u) deepest = pos + 1;
    // Front segment of the old permutation, as an atom subset.
    uint32_t front = 0;
    for (int pos = 0; pos < deepest; ++pos) front |= 1u << p[static_cast<size_t>(pos)];
    int b = (*truth_p)[front] ? 1 : 0;
    // Move hit atoms to the front, keeping relative order on both sides.
    std::vector<int> np;
    for (int pos = 0; pos < rr; ++pos)
      if ((hit >> p[static_cast<size_t>(pos)]) & 1u) np.push_back(p[static_cast<size_t>(pos)]);
    for (int pos = 0; pos < rr; ++pos)
      if (!((hit >> p[static_cast<size_t>(pos)]) & 1u)) np.push_back(p[static_cast<size_t>(pos)]);
    int npi = (*perm_index_p)[np];
    return npi * slots + deepest * 2 + b;
  };
  red.color = [slots, rr](int mem) {
    int rem = mem % slots;
    int h = rem / 2;
    int b = rem & 1;
    return 2 * (rr - h) + (b ? 0 : 1);
  };
  red.max_color = 2 * r + 1;
  return red;
}

ElToParity el_to_parity(const ELFormula& f, const AtomTable& atoms) {
  using K = ELFormula::Kind;
  if (f.kind == K::True) return constant_reduction(true);
  if (f.kind == K::False) return constant_reduction(false);

  auto stateless = [&](std::function<int(int)> color_of_vertex, int maxc) {
    ElToParity r;
    r.mem_count = atoms.domain() + 1;
    r.mem_init = atoms.domain();  // pre-initial slot; never queried for color
    r.update = [](int, int v) { return v; };
    r.color = [color_of_vertex = std::move(color_of_vertex)](int mem) { return color_of_vertex(mem); };
    r.max_color = maxc;
    return r;
  };

  if (f.kind == K::Inf) {
    auto s = atoms.sets[static_cast<size_t>(f.atom)];
    return stateless([s = std::move(s)](int v) { return s[static_cast<size_t>(v)] ? 0 : 1; }, 1);
  }
  if (f.kind == K::Fin) {
    auto s = atoms.sets[static_cast<size_t>(f.atom)];
    return stateless([s = std::move(s)](int v) { return s[static_cast<size_t>(v)] ? 1 : 2; }, 2);
  }

  if (f.kind == K::And) {
    bool all_inf = true, one_fin = true;
    int fins = 0;
    for (const auto& k : f.kids) {
      if (k.kind == K::Fin) ++fins;
      if (k.kind != K::Inf) all_inf = false;
      if (k.kind != K::Inf && k.kind != K::Fin) one_fin = false;
    }
    if (all_inf || (one_fin && fins == 1)) {
      // Generalized-Buechi conjunction, optionally with one co-Buechi part
      // (Fin-kids were already merged by simplify).
      auto bs = std::make_shared<std::vector<std::vector<char>>>();
      std::shared_ptr<std::vector<char>> avoid;
      for (const auto& k : f.kids) {
        if (k.kind == K::Inf) bs->push_back(atoms.sets[static_cast<size_t>(k.atom)]);
        else avoid = std::make_shared<std::vector<char>>(atoms.sets[static_cast<size_t>(k.atom)]);
      }
      int kk = static_cast<int>(bs->size());
      ElToParity r;
      r.mem_count = kk * 2;
      r.mem_init = 0;
      r.update = [bs, kk](int mem, int v) {
        int c = mem / 2;
        if ((*bs)[static_cast<size_t>(c)][static_cast<size_t>(v)]) {
          ++c;
          if (c == kk) return 0 * 2 + 1;
          return c * 2 + 0;
        }
        return c * 2 + 0;
      };
      if (avoid) {
        // Colors: avoid-set 1, wrap 2, else 3; but the avoid test needs the
        // vertex, so fold it into the memory.
        ElToParity r2;
        r2.mem_count = kk * 2 * 2;
        r2.mem_init = 0;
        r2.update = [bs, kk, avoid](int mem, int v) {
          int c = (mem / 2) % kk;
          int hit_avoid = (*avoid)[static_cast<size_t>(v)] ? 1 : 0;
          int wrap = 0;
          if ((*bs)[static_cast<size_t>(c)][static_cast<size_t>(v)]) {
            ++c;
            if (c == kk) {
              c = 0;
              wrap = 1;
            }
          }
          return ((hit_avoid * kk + c) * 2) + wrap;
        };
        r2.color = [kk](int mem) {
          int wrap = mem & 1;
          int hit_avoid = (mem / 2) / kk;
          if (hit_avoid) return 1;
          return wrap ? 2 : 3;
        };
        r2.max_color = 3;
        return r2;
      }
      r.color = [](int mem) { return (mem & 1) ? 0 : 1; };
      r.max_color = 1;
      return r;
    }
    if (f.kids.size() == 2) {
      // Inf(Y) & Fin(X): one-pair Rabin shape.
      const ELFormula *yk = nullptr, *xk = nullptr;
      for (const auto& k : f.kids) {
        if (k.kind == K::Inf) yk = &k;
        if (k.kind == K::Fin) xk = &k;
      }
      if (yk && xk) {
        auto Y = atoms.sets[static_cast<size_t>(yk->atom)];
        auto X = atoms.sets[static_cast<size_t>(xk->atom)];
        return stateless(
            [Y = std::move(Y), X = std::move(X)](int v) {
              if (X[static_cast<size_t>(v)]) return 1;
              if (Y[static_cast<size_t>(v)]) return 2;
              return 3;
            },
            3);
      }
    }
  }

  if (f.kind == K::Or && f.kids.size() == 2) {
    const ELFormula *yk = nullptr, *xk = nullptr;
    for (const auto& k : f.kids) {
      if (k.kind == K::Inf) yk = &k;
      if (k.kind == K::Fin) xk = &k;
    }
    if (yk && xk) {
      // Inf(Y) | Fin(X).
      auto Y = atoms.sets[static_cast<size_t>(yk->atom)];
      auto X = atoms.sets[static_cast<size_t>(xk->atom)];
      return stateless(
          [Y = std::move(Y), X = std::move(X)](int v) {
            if (Y[static_cast<size_t>(v)]) return 0;
            if (X[static_cast<size_t>(v)]) return 1;
            return 2;
          },
          2);
    }
  }

  return lar_reduce(f, atoms);
}

}  // namespace ssev
