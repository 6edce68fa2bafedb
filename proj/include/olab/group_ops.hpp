#pragma once

// Operations tying a permutation group to the tree it acts on: fixators,
// setwise stabilizers, transporters, products of subgroups, quotients.

#include <optional>
#include <utility>
#include <vector>

#include "olab/group.hpp"
#include "olab/tree.hpp"

namespace olab {

// Pointwise stabilizer of a vertex set.
inline perm_group fixator(const perm_group &g, const vset &s) {
  return g.pointwise_stabilizer(s);
}

// Transporter {g in G : g(from) is contained in `to`} as a disjoint union of
// cosets rep * Fix(from).  Because Fix(from) is exactly the stabilizer of the
// tuple of `from`'s vertices, the coset reps are the tuple-orbit transversal
// elements whose image tuples land inside `to`; the decomposition is exact.
struct transporter_t {
  std::vector<perm> reps;  // one per coset of Fix(from)
  order_t fix_order = 1;   // |Fix(from)|
  order_t size() const { return fix_order * static_cast<order_t>(reps.size()); }
  bool empty() const { return reps.empty(); }

  // Materialize all elements; capacity-guarded.
  std::vector<perm> elements(const perm_group &fix,
                             std::uint64_t cap = 0) const {
    if (cap == 0)
      cap = global_limits().max_transporter_elements;
    if (size() > static_cast<order_t>(cap))
      throw capacity_error("transporter of size " + order_to_string(size()) +
                           " exceeds cap " + std::to_string(cap));
    std::vector<perm> out;
    fix.for_each_element(
        [&](const perm &u) {
          for (const perm &r : reps)
            out.push_back(r * u);
        },
        cap);
    return out;
  }
};

inline transporter_t transporter_set(const perm_group &g, const vset &from,
                                     const vset &to,
                                     const perm_group *fix_from = nullptr) {
  transporter_t t;
  perm_group fix = fix_from ? *fix_from : fixator(g, from);
  t.fix_order = fix.order();
  auto orb = g.orbit_of_tuple(from);
  for (std::size_t i = 0; i < orb.tuples.size(); ++i) {
    bool inside = true;
    for (int v : orb.tuples[i])
      if (!vcontains(to, v)) {
        inside = false;
        break;
      }
    if (inside)
      t.reps.push_back(orb.reps[i]);
  }
  return t;
}

// Setwise stabilizer: generated by the self-transporter coset reps together
// with the fixator.
inline perm_group setwise_stab(const perm_group &g, const vset &s) {
  perm_group fix = fixator(g, s);
  transporter_t t = transporter_set(g, s, s, &fix);
  std::vector<perm> gens = fix.generators();
  for (const perm &r : t.reps)
    gens.push_back(r);
  return perm_group(g.degree(), gens);
}

// g in V * Fix(tuple-of-u_base)?  Since Fix(u_base) is the pointwise
// stabilizer of the tuple, membership reduces to a tuple-orbit lookup.
inline bool in_product(const perm &g, const perm_group::tuple_orbit_t &v_orbit,
                       const std::vector<int> &u_tuple) {
  std::vector<int> img(u_tuple.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = g[u_tuple[i]];
  return v_orbit.contains(img);
}

inline bool in_product(const perm &g, const perm_group &v,
                       const vset &u_base) {
  return in_product(g, v.orbit_of_tuple(u_base), u_base);
}

// W <= V * U with U = Fix(u_base) <= W: holds iff the W-orbit of the tuple
// is contained in the V-orbit.  On failure returns a witness element of
// W \ V*U (a W-transversal element reaching an uncovered tuple).
struct product_check_t {
  bool holds = false;
  std::uint64_t w_cosets = 0; // [W : U]
  std::optional<perm> witness;
};

inline product_check_t subgroup_in_product(const perm_group &w,
                                           const perm_group &v,
                                           const vset &u_base) {
  product_check_t r;
  auto worb = w.orbit_of_tuple(u_base);
  auto vorb = v.orbit_of_tuple(u_base);
  r.w_cosets = worb.tuples.size();
  for (std::size_t i = 0; i < worb.tuples.size(); ++i)
    if (!vorb.contains(worb.tuples[i])) {
      r.witness = worb.reps[i];
      return r;
    }
  r.holds = true;
  return r;
}

// Image of the setwise stabilizer of a subtree acting on that subtree's
// vertices (reindexed by position in the sorted set).  The kernel of the
// restriction is exactly the fixator; the coset count must match the
// generated image order or the model is inconsistent.
struct quotient_t {
  perm_group group;        // on {0, ..., |s|-1}
  order_t stab_order = 0;  // |Stab_G(s)|
  order_t fix_order = 0;   // |Fix_G(s)| (the kernel)
};

inline quotient_t quotient_on_subtree(const perm_group &g, const vset &s) {
  quotient_t q;
  perm_group fix = fixator(g, s);
  transporter_t t = transporter_set(g, s, s, &fix);
  q.fix_order = fix.order();
  q.stab_order = t.size();
  std::vector<perm> gens;
  for (const perm &r : t.reps) {
    std::vector<int> img(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      int target = r[s[i]];
      img[i] = static_cast<int>(
          std::lower_bound(s.begin(), s.end(), target) - s.begin());
    }
    gens.emplace_back(std::move(img));
  }
  q.group = perm_group(static_cast<int>(s.size()), gens);
  if (q.group.order() * q.fix_order != q.stab_order)
    throw config_error(
        "quotient kernel mismatch: restriction image order " +
        order_to_string(q.group.order()) + " * fixator order " +
        order_to_string(q.fix_order) + " != stabilizer order " +
        order_to_string(q.stab_order));
  return q;
}

} // namespace olab
