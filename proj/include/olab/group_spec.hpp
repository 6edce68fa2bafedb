#pragma once

// Truncated automorphism groups of tree windows.
//
// Every automorphism of a ball window fixes the base (the window's unique
// graph center), hence preserves depth and type.  The modeled groups are the
// base stabilizers of the corresponding infinite groups acting on the window.
//
// Both constructions go through a legal edge coloring: around each vertex v
// the incident edges carry distinct colors from Y_{type(v)}, with the parent
// edge always colored 0.  The truncated group of a local-group family F is
// then { window automorphisms whose local color action at every internal
// vertex lies in F }, generated by one localized color move per (vertex,
// local generator) with canonical color-matching propagation below.  The
// full automorphism group is the special case F = Sym(Y).

#include <deque>
#include <map>
#include <vector>

#include "olab/group.hpp"
#include "olab/tree.hpp"

namespace olab {

struct group_spec {
  enum class kind_t { full_aut, full_aut_plus, universal_local };
  kind_t kind = kind_t::full_aut;
  // Local generators on colors {0..d0-1} / {0..d1-1}; universal_local only.
  std::vector<perm> local0, local1;

  static group_spec full_aut() { return {kind_t::full_aut, {}, {}}; }
  static group_spec full_aut_plus() { return {kind_t::full_aut_plus, {}, {}}; }
  static group_spec universal(std::vector<perm> g0, std::vector<perm> g1) {
    return {kind_t::universal_local, std::move(g0), std::move(g1)};
  }
};

inline perm_group symmetric_group(int d) {
  std::vector<perm> gens;
  if (d >= 2) {
    std::vector<int> tr(d);
    for (int i = 0; i < d; ++i)
      tr[i] = i;
    std::swap(tr[0], tr[1]);
    gens.emplace_back(tr);
    if (d >= 3) {
      std::vector<int> cyc(d);
      for (int i = 0; i < d; ++i)
        cyc[i] = (i + 1) % d;
      gens.emplace_back(cyc);
    }
  }
  return perm_group(d, gens);
}

inline perm_group cyclic_group(int d) {
  std::vector<int> cyc(d);
  for (int i = 0; i < d; ++i)
    cyc[i] = (i + 1) % d;
  return perm_group(d, {perm(cyc)});
}

// Canonical legal coloring: parent edges colored 0 at the child end,
// children edges colored 1.. (0.. at the base) in id order.
class edge_coloring {
public:
  explicit edge_coloring(const tree &t) : t_(&t), ccol_(t.n()) {
    for (int v = 0; v < t.n(); ++v) {
      auto kids = t.children(v);
      int next = (v == t.base()) ? 0 : 1;
      for (int c : kids)
        ccol_[v][c] = next++;
    }
  }

  // Color of edge {v, u} at v's end.
  int at(int v, int u) const {
    if (t_->parent(v) == u)
      return 0;
    return ccol_[v].at(u);
  }

  // Child of v whose edge has the given color at v's end; -1 if absent.
  int child_with_color(int v, int col) const {
    for (auto [c, x] : ccol_[v])
      if (x == col)
        return c;
    return -1;
  }

private:
  const tree *t_;
  std::vector<std::map<int, int>> ccol_; // child -> color at the parent end
};

namespace detail {

// Automorphism moving branch(a) onto branch(b) (and back) below a common
// parent, matching descendants color-by-color.
inline void map_branches(const tree &t, const edge_coloring &col, int a, int b,
                         std::vector<int> &img) {
  std::deque<std::pair<int, int>> q{{a, b}};
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    img[x] = y;
    for (int cx : t.children(x)) {
      int cy = col.child_with_color(y, col.at(x, cx));
      if (cy < 0)
        throw config_error("branch color mismatch during propagation");
      q.emplace_back(cx, cy);
    }
  }
}

// Localized color move at v: permute v's child branches by sigma on colors.
inline perm color_move(const tree &t, const edge_coloring &col, int v,
                       const perm &sigma) {
  std::vector<int> img(t.n());
  for (int i = 0; i < t.n(); ++i)
    img[i] = i;
  for (int c : t.children(v)) {
    int target_col = sigma[col.at(v, c)];
    int c2 = col.child_with_color(v, target_col);
    if (c2 < 0)
      throw config_error("color move leaves the star");
    if (c2 != c)
      map_branches(t, col, c, c2, img);
  }
  return perm(img);
}

} // namespace detail

// Local permutation groups on colors for each vertex type.
inline std::pair<perm_group, perm_group> local_groups(const tree &t,
                                                      const group_spec &spec) {
  int d0 = t.target_degree(t.base());
  int d1 = d0;
  for (int v = 1; v < t.n(); ++v)
    if (t.type(v) != t.type(t.base())) {
      d1 = t.target_degree(v);
      break;
    }
  if (spec.kind == group_spec::kind_t::universal_local) {
    for (const perm &p : spec.local0)
      if (p.degree() != static_cast<std::size_t>(d0))
        throw config_error("type-0 local generator degree mismatch");
    for (const perm &p : spec.local1)
      if (p.degree() != static_cast<std::size_t>(d1))
        throw config_error("type-1 local generator degree mismatch");
    return {perm_group(d0, spec.local0), perm_group(d1, spec.local1)};
  }
  return {symmetric_group(d0), symmetric_group(d1)};
}

// Color action of g at an internal vertex v; well-defined for rooted window
// automorphisms (parent maps to parent).
inline perm local_action(const tree &t, const edge_coloring &col,
                         const perm &g, int v) {
  int d = t.target_degree(v);
  std::vector<int> sigma(d, -1);
  int gv = g[v];
  for (int u : t.neighbors(v)) {
    int c1 = col.at(v, u);
    int c2 = col.at(gv, g[u]);
    if (sigma[c1] != -1)
      throw config_error("local action not well-defined");
    sigma[c1] = c2;
  }
  for (int c = 0; c < d; ++c)
    if (sigma[c] < 0)
      throw config_error("local action undefined on an internal vertex");
  return perm(sigma);
}

// Ground-truth membership: every internal vertex acts by a local-group
// element.  (Boundary vertices have incomplete stars and impose nothing.)
inline bool local_actions_ok(const tree &t, const edge_coloring &col,
                             const perm_group &f0, const perm_group &f1,
                             const perm &g) {
  for (int v = 0; v < t.n(); ++v) {
    if (!t.is_internal(v))
      continue;
    perm sigma = local_action(t, col, g, v);
    if (!(t.type(v) == 0 ? f0 : f1).contains(sigma))
      return false;
  }
  return true;
}

// Truncated group of the given specification acting on the window.
inline perm_group truncated_group(const tree &t, const group_spec &spec) {
  edge_coloring col(t);
  auto [f0, f1] = local_groups(t, spec);
  std::vector<perm> gens;
  for (int v = 0; v < t.n(); ++v) {
    if (!t.is_internal(v) || t.children(v).empty())
      continue;
    const perm_group &f = t.type(v) == 0 ? f0 : f1;
    std::vector<perm> moves =
        (v == t.base()) ? f.generators()
                        : f.pointwise_stabilizer({0}).generators();
    for (const perm &sigma : moves) {
      perm g = detail::color_move(t, col, v, sigma);
      if (!g.is_identity())
        gens.push_back(g);
    }
  }
  return perm_group(t.n(), gens);
}

// Expected truncated order: free local choice at the base, parent-color-fixing
// choice at every other internal vertex.
inline order_t truncated_order_formula(const tree &t, const group_spec &spec) {
  auto [f0, f1] = local_groups(t, spec);
  order_t o = 1;
  for (int v = 0; v < t.n(); ++v) {
    if (!t.is_internal(v) || t.children(v).empty())
      continue;
    const perm_group &f = t.type(v) == 0 ? f0 : f1;
    o *= (v == t.base()) ? f.order() : f.pointwise_stabilizer({0}).order();
  }
  return o;
}

// ---------------------------------------------------------------------------
// Pinned closure: the exact fixed-point set of Fix_G(A0) in the modeled
// group, computed combinatorially.
//
// anchored=true models the truncated group (every element fixes the base):
// start from hull(A0 + base).  anchored=false models the infinite group
// (no distinguished base): start from hull(A0).  In both modes a vertex u
// adjacent to a fixed vertex v is forced fixed exactly when the stabilizer
// of the already-fixed edge colors at v keeps u's color in a singleton
// orbit; iterate to the fixpoint.  Cross-checked against group-side fixed
// points in the test suite.
inline vset fixed_closure(const tree &t, const group_spec &spec,
                          const vset &a0, bool anchored) {
  if (a0.empty())
    throw config_error("fixed_closure of an empty set");
  edge_coloring col(t);
  auto [f0, f1] = local_groups(t, spec);
  vset a = anchored ? t.hull(vunion(a0, vset{t.base()})) : t.hull(a0);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int v = a[i];
      std::vector<int> fixed_cols, free_nbrs;
      for (int u : t.neighbors(v))
        if (vcontains(a, u))
          fixed_cols.push_back(col.at(v, u));
        else
          free_nbrs.push_back(u);
      if (free_nbrs.empty())
        continue;
      const perm_group &f = t.type(v) == 0 ? f0 : f1;
      perm_group stab = f.pointwise_stabilizer(fixed_cols);
      for (int u : free_nbrs)
        if (stab.orbit(col.at(v, u)).size() == 1) {
          vinsert(a, u);
          grew = true;
        }
    }
  }
  return a;
}

} // namespace olab
