#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "olab/config.hpp"
#include "olab/perm.hpp"

namespace olab {

// Group orders can exceed 2^64 for wide trees; keep them exact.
using order_t = unsigned __int128;

inline std::string order_to_string(order_t x) {
  if (x == 0)
    return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

struct tuple_hash {
  std::size_t operator()(const std::vector<int> &t) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : t) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Finite permutation group with a base and strong generating set
// (Schreier-Sims with explicit transversals; a seeded random pre-sift fills
// the chain quickly, then every Schreier generator is verified
// deterministically, so the chain is exact regardless of the draws).
class perm_group {
public:
  perm_group() : n_(0) {}

  explicit perm_group(int degree, std::vector<perm> gens = {},
                      const std::vector<int> &base_hint = {})
      : n_(degree) {
    for (int b : base_hint)
      push_level(b);
    for (const perm &g : gens)
      if (g.degree() != static_cast<std::size_t>(n_))
        throw config_error("generator degree mismatch");
    gens_.reserve(gens.size());
    for (const perm &g : gens)
      if (!g.is_identity())
        gens_.push_back(g);
    build();
  }

  int degree() const { return n_; }
  const std::vector<perm> &generators() const { return gens_; }

  order_t order() const {
    order_t o = 1;
    for (const auto &lv : levels_)
      o *= static_cast<order_t>(lv.orbit.size());
    return o;
  }

  bool trivial() const { return order() == 1; }

  bool contains(const perm &g) const {
    if (g.degree() != static_cast<std::size_t>(n_))
      return false;
    auto [res, lvl] = strip(g, 0);
    (void)lvl;
    return res.is_identity();
  }

  bool is_subgroup_of(const perm_group &other) const {
    for (const perm &g : gens_)
      if (!other.contains(g))
        return false;
    return true;
  }

  // Base points in chain order.
  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto &lv : levels_)
      b.push_back(lv.beta);
    return b;
  }

  // Generators of the pointwise stabilizer of `points`: rebuild the chain
  // with the prescribed prefix and keep the levels past it.
  perm_group pointwise_stabilizer(const std::vector<int> &points) const {
    perm_group chain(n_, gens_, points);
    std::vector<perm> sub;
    for (std::size_t i = points.size(); i < chain.levels_.size(); ++i)
      for (const perm &g : chain.levels_[i].gens)
        sub.push_back(g);
    return perm_group(n_, sub);
  }

  // Orbit of a point, sorted.
  std::vector<int> orbit(int p) const {
    std::vector<char> seen(n_, 0);
    std::deque<int> q{p};
    seen[p] = 1;
    std::vector<int> out;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      out.push_back(v);
      for (const perm &g : gens_)
        if (!seen[g[v]]) {
          seen[g[v]] = 1;
          q.push_back(g[v]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Orbit of an ordered tuple under the diagonal action, with transversal
  // elements: for each reached tuple an element mapping the start to it.
  struct tuple_orbit_t {
    std::vector<std::vector<int>> tuples;
    std::vector<perm> reps; // reps[i] maps the start tuple to tuples[i]
    std::unordered_map<std::vector<int>, int, tuple_hash> index;
    bool contains(const std::vector<int> &t) const { return index.count(t); }
  };

  tuple_orbit_t orbit_of_tuple(const std::vector<int> &start,
                               std::uint64_t cap = 0) const {
    if (cap == 0)
      cap = global_limits().max_tuple_orbit;
    tuple_orbit_t o;
    o.tuples.push_back(start);
    o.reps.push_back(perm(static_cast<std::size_t>(n_)));
    o.index.emplace(start, 0);
    for (std::size_t i = 0; i < o.tuples.size(); ++i) {
      for (const perm &g : gens_) {
        std::vector<int> img(o.tuples[i].size());
        for (std::size_t k = 0; k < img.size(); ++k)
          img[k] = g[o.tuples[i][k]];
        if (!o.index.count(img)) {
          if (o.tuples.size() >= cap)
            throw capacity_error("tuple orbit exceeds cap " +
                                 std::to_string(cap));
          o.index.emplace(img, static_cast<int>(o.tuples.size()));
          o.tuples.push_back(std::move(img));
          o.reps.push_back(g * o.reps[i]);
        }
      }
    }
    return o;
  }

  // Enumerate all elements (product of transversals), calling f on each.
  // Throws capacity_error beyond `cap`.
  void for_each_element(const std::function<void(const perm &)> &f,
                        std::uint64_t cap = 0) const {
    if (cap == 0)
      cap = global_limits().max_enumerated_order;
    if (order() > static_cast<order_t>(cap))
      throw capacity_error("group order " + order_to_string(order()) +
                           " exceeds enumeration cap " + std::to_string(cap));
    perm id(static_cast<std::size_t>(n_));
    enumerate_rec(0, id, f);
  }

  std::vector<perm> elements(std::uint64_t cap = 0) const {
    std::vector<perm> out;
    for_each_element([&](const perm &g) { out.push_back(g); }, cap);
    return out;
  }

  // Vertices fixed by every generator (= by the whole group).
  std::vector<int> fixed_points() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      bool fix = true;
      for (const perm &g : gens_)
        if (g[v] != v) {
          fix = false;
          break;
        }
      if (fix)
        out.push_back(v);
    }
    return out;
  }

  perm random_element(rng_t &rng) const {
    perm g(static_cast<std::size_t>(n_));
    for (const auto &lv : levels_) {
      auto it = lv.transversal.begin();
      std::advance(it, static_cast<long>(rng() % lv.transversal.size()));
      g = g * it->second;
    }
    return g;
  }

private:
  struct level {
    int beta = -1;
    std::vector<perm> gens; // strong generators entering at this level
    std::unordered_map<int, perm> transversal;
    std::vector<int> orbit; // insertion order, orbit[0] == beta
  };

  int n_;
  std::vector<perm> gens_;
  std::vector<level> levels_;

  void push_level(int beta) {
    level lv;
    lv.beta = beta;
    lv.transversal.emplace(beta, perm(static_cast<std::size_t>(n_)));
    lv.orbit.push_back(beta);
    levels_.push_back(std::move(lv));
  }

  // Generators available at level i: everything entering at levels >= i
  // (all of which fix beta_0..beta_{i-1}).
  std::vector<const perm *> gen_set(std::size_t i) const {
    std::vector<const perm *> out;
    for (std::size_t j = i; j < levels_.size(); ++j)
      for (const perm &g : levels_[j].gens)
        out.push_back(&g);
    return out;
  }

  void rebuild_orbit(std::size_t i) {
    level &lv = levels_[i];
    lv.transversal.clear();
    lv.orbit.clear();
    lv.transversal.emplace(lv.beta, perm(static_cast<std::size_t>(n_)));
    lv.orbit.push_back(lv.beta);
    auto gens = gen_set(i);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      int p = lv.orbit[k];
      for (const perm *g : gens) {
        int q = (*g)[p];
        if (!lv.transversal.count(q)) {
          lv.transversal.emplace(q, (*g) * lv.transversal.at(p));
          lv.orbit.push_back(q);
        }
      }
    }
  }

  std::pair<perm, std::size_t> strip(perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      int img = g[levels_[i].beta];
      auto it = levels_[i].transversal.find(img);
      if (it == levels_[i].transversal.end())
        return {g, i};
      g = it->second.inverse() * g;
    }
    return {g, levels_.size()};
  }

  // Insert a nontrivial residue at the level where strip stopped, extending
  // the base when it fixes every existing base point.
  std::size_t insert_residue(const perm &g, std::size_t at) {
    if (at == levels_.size()) {
      int moved = -1;
      for (int p = 0; p < n_; ++p)
        if (g[p] != p) {
          moved = p;
          break;
        }
      push_level(moved);
    }
    levels_[at].gens.push_back(g);
    return at;
  }

  // Deterministic verification: every Schreier generator of level i strips
  // to the identity through the deeper chain.
  void schreier_sims(std::size_t i) {
    for (;;) {
      rebuild_orbit(i);
      level &lv = levels_[i];
      bool dirty = false;
      for (std::size_t k = 0; k < lv.orbit.size() && !dirty; ++k) {
        int p = lv.orbit[k];
        auto gens = gen_set(i);
        for (const perm *g : gens) {
          int q = (*g)[p];
          perm schreier =
              lv.transversal.at(q).inverse() * (*g) * lv.transversal.at(p);
          auto [res, at] = strip(schreier, i + 1);
          if (!res.is_identity()) {
            std::size_t j = insert_residue(res, std::max(at, i + 1));
            for (std::size_t l = j; l > i; --l)
              schreier_sims(l);
            dirty = true;
            break;
          }
        }
      }
      if (!dirty)
        return;
    }
  }

  void build() {
    // Place every input generator.
    for (const perm &g : gens_) {
      auto [res, at] = strip(g, 0);
      if (!res.is_identity()) {
        insert_residue(res, at);
        for (std::size_t i = levels_.size(); i-- > 0;)
          rebuild_orbit(i);
      }
    }
    if (!gens_.empty()) {
      // Seeded random subproducts accelerate chain filling; correctness
      // comes from the verification pass below.
      rng_t rng(global_limits().rng_seed);
      for (int trial = 0; trial < 24; ++trial) {
        perm g(static_cast<std::size_t>(n_));
        for (int k = 0; k < 3; ++k)
          g = g * gens_[rng() % gens_.size()];
        auto [res, at] = strip(g, 0);
        if (!res.is_identity()) {
          insert_residue(res, at);
          for (std::size_t i = levels_.size(); i-- > 0;)
            rebuild_orbit(i);
        }
      }
    }
    for (std::size_t i = levels_.size(); i-- > 0;)
      schreier_sims(i);
  }

  // Unique factorization g = t_0 * t_1 * ... over the left transversals:
  // level 0 must sit leftmost so g[beta_0] identifies t_0.
  void enumerate_rec(std::size_t lvl, const perm &acc,
                     const std::function<void(const perm &)> &f) const {
    if (lvl == levels_.size()) {
      f(acc);
      return;
    }
    for (int p : levels_[lvl].orbit)
      enumerate_rec(lvl + 1, acc * levels_[lvl].transversal.at(p), f);
  }
};

// ---------------------------------------------------------------------------
// Conjugacy classes (full enumeration; capped by limits).

struct conjugacy_classes_t {
  std::vector<perm> elements;                       // all group elements
  std::vector<int> class_of;                        // element -> class id
  std::vector<std::vector<int>> members;            // class -> element ids
  std::vector<int> reps;                            // class -> element id
  std::unordered_map<perm, int, perm_hash> elt_index;

  int num_classes() const { return static_cast<int>(reps.size()); }
  std::size_t class_size(int c) const { return members[c].size(); }
  int index_of(const perm &g) const { return elt_index.at(g); }
  // Class of inverses of class c (used for orthogonality).
  int inverse_class(int c) const {
    return class_of[elt_index.at(elements[members[c][0]].inverse())];
  }
};

inline conjugacy_classes_t conjugacy_classes(const perm_group &g,
                                             std::uint64_t cap = 0) {
  conjugacy_classes_t cc;
  cc.elements = g.elements(cap);
  std::sort(cc.elements.begin(), cc.elements.end());
  for (std::size_t i = 0; i < cc.elements.size(); ++i)
    cc.elt_index.emplace(cc.elements[i], static_cast<int>(i));

  std::size_t n = cc.elements.size();
  cc.class_of.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (cc.class_of[i] >= 0)
      continue;
    // Conjugation orbit of element i under the generators.  Elements are
    // sorted, so class ids follow the lex-minimal member: deterministic.
    int cid = static_cast<int>(cc.reps.size());
    cc.reps.push_back(static_cast<int>(i));
    cc.members.emplace_back();
    std::deque<int> q{static_cast<int>(i)};
    cc.class_of[i] = cid;
    while (!q.empty()) {
      int e = q.front();
      q.pop_front();
      cc.members[cid].push_back(e);
      for (const perm &s : g.generators()) {
        perm c = s * cc.elements[e] * s.inverse();
        int j = cc.elt_index.at(c);
        if (cc.class_of[j] < 0) {
          cc.class_of[j] = cid;
          q.push_back(j);
        }
      }
    }
    std::sort(cc.members[cid].begin(), cc.members[cid].end());
  }
  return cc;
}

} // namespace olab
