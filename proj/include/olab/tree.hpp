#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "olab/config.hpp"
#include "olab/perm.hpp"

namespace olab {

// Vertex sets are sorted id vectors throughout.
using vset = std::vector<int>;

inline bool vcontains(const vset &s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}
inline bool vsubset(const vset &a, const vset &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline vset vunion(const vset &a, const vset &b) {
  vset r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
inline vset vintersect(const vset &a, const vset &b) {
  vset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}
inline vset vminus(const vset &a, const vset &b) {
  vset r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}
inline void vinsert(vset &s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v)
    s.insert(it, v);
}

// Finite window of an infinite (bi)regular tree: the ball of a fixed radius
// around a base vertex, with deterministic breadth-first ids (base = 0).
// Vertices at depth == radius are truncation boundary: they exist but miss
// their outward neighbors, so any result depending on them "fails loudly".
//
// The same container models the chamber/residue incidence tree of a building
// (vertex types 0/1 with per-vertex target degrees); see building.hpp.
class tree {
public:
  tree() = default;

  // Fresh tree with only a base vertex.
  static tree rooted(int base_type, int base_target_degree, int radius) {
    tree t;
    t.radius_ = radius;
    t.type_ = {base_type};
    t.depth_ = {0};
    t.parent_ = {-1};
    t.target_deg_ = {base_target_degree};
    t.adj_.resize(1);
    return t;
  }

  int add_child(int parent, int type, int target_degree) {
    int v = static_cast<int>(type_.size());
    type_.push_back(type);
    depth_.push_back(depth_[parent] + 1);
    parent_.push_back(parent);
    target_deg_.push_back(target_degree);
    adj_.emplace_back();
    adj_[parent].push_back(v);
    adj_[v].push_back(parent);
    return v;
  }

  int n() const { return static_cast<int>(type_.size()); }
  int base() const { return 0; }
  int radius() const { return radius_; }
  int type(int v) const { return type_[v]; }
  int depth(int v) const { return depth_[v]; }
  int parent(int v) const { return parent_[v]; }
  int target_degree(int v) const { return target_deg_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int> &neighbors(int v) const { return adj_[v]; }

  // Children = neighbors away from base, in id (= breadth-first) order.
  std::vector<int> children(int v) const {
    std::vector<int> c;
    for (int u : adj_[v])
      if (u != parent_[v])
        c.push_back(u);
    return c;
  }

  // A vertex is internal when its whole star is inside the window.
  bool is_internal(int v) const { return degree(v) == target_deg_[v]; }

  bool adjacent(int u, int v) const {
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
  }

  int distance(int u, int v) const {
    int d = 0;
    while (u != v) {
      if (depth_[u] < depth_[v])
        std::swap(u, v);
      u = parent_[u];
      ++d;
    }
    return d;
  }

  // Vertices of the geodesic, endpoints included.
  std::vector<int> path(int u, int v) const {
    std::vector<int> a, b;
    while (u != v) {
      if (depth_[u] >= depth_[v]) {
        a.push_back(u);
        u = parent_[u];
      } else {
        b.push_back(v);
        v = parent_[v];
      }
    }
    a.push_back(u);
    a.insert(a.end(), b.rbegin(), b.rend());
    return a;
  }

  int max_depth(const vset &s) const {
    int m = 0;
    for (int v : s)
      m = std::max(m, depth_[v]);
    return m;
  }

  // Largest r such that ball(s, r) is faithful to the infinite tree.
  int margin(const vset &s) const { return radius_ - max_depth(s); }

  // Ball of radius r around a vertex set.  Throws window_error when the
  // result would be clipped by the truncation; clipped() never throws.
  vset ball(const vset &s, int r) const {
    if (max_depth(s) + r > radius_)
      throw window_error("ball of radius " + std::to_string(r) +
                         " around a set at depth " +
                         std::to_string(max_depth(s)) +
                         " exceeds window radius " + std::to_string(radius_));
    return ball_clipped(s, r);
  }
  vset ball(int v, int r) const { return ball(vset{v}, r); }

  vset ball_clipped(const vset &s, int r) const {
    std::vector<int> dist(type_.size(), -1);
    std::deque<int> q;
    for (int v : s) {
      dist[v] = 0;
      q.push_back(v);
    }
    vset out;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      out.push_back(v);
      if (dist[v] == r)
        continue;
      for (int u : adj_[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Half tree at the oriented edge (u, v): all vertices strictly closer to u
  // than to v, i.e. the u-side component of the tree minus that edge.
  vset half_tree(int u, int v) const {
    assert(adjacent(u, v));
    vset out;
    std::deque<int> q{u};
    std::vector<char> seen(type_.size(), 0);
    seen[u] = 1;
    seen[v] = 1; // barrier
    while (!q.empty()) {
      int w = q.front();
      q.pop_front();
      out.push_back(w);
      for (int x : adj_[w])
        if (!seen[x]) {
          seen[x] = 1;
          q.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_connected(const vset &s) const {
    if (s.empty())
      return false;
    std::deque<int> q{s[0]};
    std::set<int> seen{s[0]};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : adj_[v])
        if (vcontains(s, u) && !seen.count(u)) {
          seen.insert(u);
          q.push_back(u);
        }
    }
    return seen.size() == s.size();
  }

  int set_degree(const vset &s, int v) const {
    int d = 0;
    for (int u : adj_[v])
      if (vcontains(s, u))
        ++d;
    return d;
  }

  // Complete subtree: connected, and every vertex is isolated (singleton),
  // a leaf, or has its full infinite-tree degree inside the set.
  bool is_complete(const vset &s) const {
    if (!is_connected(s))
      return false;
    for (int v : s) {
      int d = set_degree(s, v);
      if (d == 0 && s.size() != 1)
        return false;
      if (d > 1 && d != target_deg_[v])
        return false;
    }
    return true;
  }

  vset interior(const vset &s) const {
    vset r;
    for (int v : s)
      if (set_degree(s, v) >= 2)
        r.push_back(v);
    return r;
  }

  vset set_leaves(const vset &s) const {
    vset r;
    for (int v : s)
      if (set_degree(s, v) <= 1)
        r.push_back(v);
    return r;
  }

  // Boundary oriented edges of a complete subtree with >= 2 vertices:
  // one per leaf w, stored as (w, inward neighbor u).  The matching half
  // tree half_tree(u, w) is the side containing the subtree.
  std::vector<std::pair<int, int>> boundary_edges(const vset &s) const {
    std::vector<std::pair<int, int>> out;
    for (int w : s)
      if (set_degree(s, w) == 1)
        for (int u : adj_[w])
          if (vcontains(s, u))
            out.emplace_back(w, u);
    return out;
  }

  // Convex hull: union of all pairwise geodesics.
  vset hull(const vset &s) const {
    std::set<int> acc(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        for (int v : path(s[i], s[j]))
          acc.insert(v);
    return vset(acc.begin(), acc.end());
  }

  // Vertices of the given type whose 2-ball lies inside the set.  A clipped
  // 2-ball already proves non-membership (the full ball leaves the window,
  // hence the set), so the answer is exact at any depth.
  vset q_set(const vset &s, int vtype) const {
    vset r;
    for (int v : s) {
      if (type_[v] != vtype || depth_[v] + 2 > radius_)
        continue;
      if (vsubset(ball_clipped(vset{v}, 2), s))
        r.push_back(v);
    }
    return r;
  }

  vset translate(const vset &s, const perm &g) const {
    vset r;
    r.reserve(s.size());
    for (int v : s)
      r.push_back(g[v]);
    std::sort(r.begin(), r.end());
    return r;
  }

  // All complete subtrees inside `window` with at most max_interior interior
  // vertices: singletons, edges, and N[I] for connected interior sets I.
  std::vector<vset> complete_subtrees(const vset &window,
                                      int max_interior) const {
    std::vector<vset> out;
    for (int v : window)
      out.push_back(vset{v});
    for (int v : window)
      for (int u : adj_[v])
        if (u > v && vcontains(window, u))
          out.push_back(vset{std::min(u, v), std::max(u, v)});
    if (max_interior <= 0)
      return out;

    // Candidate interior vertices: full star inside the window.
    vset cand;
    for (int v : window) {
      if (!is_internal(v))
        continue;
      bool ok = true;
      for (int u : adj_[v])
        if (!vcontains(window, u))
          ok = false;
      if (ok)
        cand.push_back(v);
    }

    // Connected subsets of cand (in the tree metric), sizes 1..max_interior.
    std::set<vset> level, all;
    for (int v : cand) {
      level.insert(vset{v});
      all.insert(vset{v});
    }
    for (int sz = 2; sz <= max_interior; ++sz) {
      std::set<vset> next;
      for (const vset &s : level)
        for (int v : s)
          for (int u : adj_[v])
            if (vcontains(cand, u) && !vcontains(s, u)) {
              vset e = s;
              vinsert(e, u);
              next.insert(e);
            }
      for (const vset &s : next)
        all.insert(s);
      level = std::move(next);
    }
    for (const vset &I : all) {
      std::set<int> t(I.begin(), I.end());
      for (int v : I)
        for (int u : adj_[v])
          t.insert(u);
      out.emplace_back(t.begin(), t.end());
    }
    return out;
  }

private:
  int radius_ = 0;
  std::vector<int> type_, depth_, parent_, target_deg_;
  std::vector<std::vector<int>> adj_;
};

// Truncated (d0, d1)-biregular tree: base of type 0 and degree d0, its
// neighbors of type 1 and degree d1, alternating outward to the radius.
inline tree build_semiregular(int d0, int d1, int radius) {
  if (d0 < 3 || d1 < 3)
    throw config_error("semiregular tree needs degrees >= 3");
  if (radius < 0)
    throw config_error("negative radius");
  int deg[2] = {d0, d1};
  tree t = tree::rooted(0, d0, radius);
  std::deque<int> q{0};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (t.depth(v) == radius)
      continue;
    int ct = 1 - t.type(v);
    int want = deg[t.type(v)] - (v == 0 ? 0 : 1);
    for (int i = 0; i < want; ++i)
      q.push_back(t.add_child(v, ct, deg[ct]));
  }
  return t;
}

} // namespace olab
