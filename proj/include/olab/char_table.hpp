#pragma once

// Exact complex character tables of finite permutation groups.
//
// Method: class-sum matrices act on class functions; their common
// eigenvectors over a prime field F_p with p == 1 (mod exponent) are the
// central characters.  Degrees come out of the first orthogonality relation
// (exact, since chi(1)^2 <= |G| < p), the character values are lifted to
// Z[zeta_e] through eigenvalue multiplicities of power maps, and the
// finished table is verified against the orthogonality relations over the
// cyclotomic integers before it is returned.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "olab/cyclotomic.hpp"
#include "olab/group.hpp"
#include "olab/modp.hpp"

namespace olab {

struct char_table {
  conjugacy_classes_t classes;
  cyc_context ctx;                    // Z[zeta_e], e = exponent of the group
  modp::i64 prime = 0;                // modular world used by the solver
  long long group_order = 0;
  std::vector<long long> degrees;     // one per irreducible, sorted rows
  std::vector<std::vector<cyc>> rows; // rows[r][c] = chi_r on class c
  int trivial = -1;                   // row index of the trivial character

  int num_irreps() const { return static_cast<int>(rows.size()); }
  int num_classes() const { return classes.num_classes(); }
};

namespace detail {

// chi values of one irreducible on every class, recovered exactly from the
// mod-p table through root-of-unity multiplicities.
inline std::vector<cyc> lift_row(const conjugacy_classes_t &cc,
                                 const cyc_context &ctx, modp::i64 p,
                                 modp::i64 root, long long degree,
                                 const std::vector<modp::i64> &chi_p) {
  using namespace modp;
  int k = cc.num_classes();
  std::vector<cyc> out(static_cast<std::size_t>(k), ctx.zero());
  for (int c = 0; c < k; ++c) {
    const perm &rep = cc.elements[static_cast<std::size_t>(cc.reps[c])];
    int m = rep.order();
    // chi(g) = sum_a mu_a zeta_m^a where mu_a counts eigenvalues; recover
    // the mu_a by a discrete Fourier inversion over the cyclic group <g>.
    i64 wm = powm(root, (p - 1) / m, p);
    i64 minv = invm(m, p);
    perm pw(rep.degree());
    std::vector<i64> chi_on_powers(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
      chi_on_powers[static_cast<std::size_t>(t)] = chi_p[static_cast<
          std::size_t>(cc.class_of[static_cast<std::size_t>(
          cc.index_of(pw))])];
      pw = rep * pw;
    }
    cyc val = ctx.zero();
    long long total = 0;
    for (int a = 0; a < m; ++a) {
      i64 acc = 0;
      i64 w = powm(wm, norm(-a, p - 1), p);
      i64 wt = 1;
      for (int t = 0; t < m; ++t) {
        acc = addm(acc, mulm(chi_on_powers[static_cast<std::size_t>(t)], wt,
                             p),
                   p);
        wt = mulm(wt, w, p);
      }
      i64 mu = mulm(acc, minv, p);
      if (mu > degree)
        throw config_error("eigenvalue multiplicity exceeds the degree");
      if (mu != 0) {
        val = ctx.add(std::move(val),
                      ctx.scale(ctx.root_power(static_cast<long long>(a) *
                                               (ctx.e / m)),
                                mu));
        total += mu;
      }
    }
    if (total != degree)
      throw config_error("eigenvalue multiplicities do not sum to the degree");
    out[static_cast<std::size_t>(c)] = std::move(val);
  }
  return out;
}

} // namespace detail

// Build the exact character table.  `forced_prime` (useful for
// cross-checking) must be a prime == 1 mod the group exponent and larger
// than |G|; 0 picks the smallest such prime automatically.
inline char_table build_char_table(const perm_group &g, std::uint64_t cap = 0,
                                   modp::i64 forced_prime = 0) {
  using namespace modp;
  conjugacy_classes_t cc = conjugacy_classes(g, cap);
  int k = cc.num_classes();
  if (k > 200)
    throw capacity_error("too many conjugacy classes for an exact table");
  long long n = static_cast<long long>(cc.elements.size());
  if (!cc.elements[static_cast<std::size_t>(cc.reps[0])].is_identity())
    throw config_error("class 0 is not the identity class");

  long long e = 1;
  for (int c = 0; c < k; ++c)
    e = std::lcm(
        e, static_cast<long long>(
               cc.elements[static_cast<std::size_t>(cc.reps[c])].order()));

  char_table t{std::move(cc), cyc_context(static_cast<int>(e)), 0, n, {}, {},
               -1};

  i64 p = forced_prime ? forced_prime : prime_congruent_one(e, std::max(n, 4ll));
  if (forced_prime && (!is_prime(p) || (p - 1) % e != 0 || p <= n))
    throw config_error("forced prime incompatible with the group");
  t.prime = p;
  i64 root = primitive_root(p);

  // Class-sum structure constants: m[i](j, c) = #{x in C_i : x^{-1} z_c in
  // C_j} for a fixed representative z_c; the central characters are common
  // eigenvectors of every m[i].
  std::vector<matrix> m(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    m[static_cast<std::size_t>(i)] = matrix(k, k);
  std::vector<const perm *> z_reps;
  for (int c = 0; c < k; ++c)
    z_reps.push_back(
        &t.classes.elements[static_cast<std::size_t>(t.classes.reps[c])]);
  for (int i = 0; i < k; ++i)
    for (int ei : t.classes.members[static_cast<std::size_t>(i)]) {
      perm xinv =
          t.classes.elements[static_cast<std::size_t>(ei)].inverse();
      for (int c = 0; c < k; ++c) {
        int j = t.classes.class_of[static_cast<std::size_t>(
            t.classes.index_of(xinv * (*z_reps[c])))];
        ++m[static_cast<std::size_t>(i)].at(j, c);
      }
    }

  // Split F_p^k into the k common one-dimensional eigenspaces.
  rng_t rng(global_limits().rng_seed);
  std::vector<matrix> spaces{matrix::identity(k)}; // rows = basis vectors
  for (int i = 1; i < k; ++i) {
    const matrix &mi = m[static_cast<std::size_t>(i)];
    std::vector<matrix> next;
    for (matrix &sp : spaces) {
      int d = sp.rows;
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Restriction a of m_i to the invariant subspace spanned by sp's rows.
      matrix bt(k, d); // basis transposed: columns are basis vectors
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < k; ++c)
          bt.at(c, r) = sp.at(r, c);
      matrix a(d, d);
      for (int r = 0; r < d; ++r) {
        std::vector<i64> img(static_cast<std::size_t>(k), 0);
        for (int c = 0; c < k; ++c) {
          i64 acc = 0;
          for (int s = 0; s < k; ++s)
            acc = (acc + mi.at(c, s) * sp.at(r, s)) % p;
          img[static_cast<std::size_t>(c)] = acc;
        }
        std::vector<i64> coords = solve(bt, img, p);
        for (int c = 0; c < d; ++c)
          a.at(r, c) = coords[static_cast<std::size_t>(c)];
      }
      // a is recorded acting on coordinate ROW vectors (x -> x a); split by
      // the eigenvalues of its transpose-action via vector minimal
      // polynomials of random seeds until the eigenspaces fill the space.
      std::vector<i64> eigs;
      std::vector<matrix> found;
      int covered = 0;
      while (covered < d) {
        std::vector<i64> u(static_cast<std::size_t>(d));
        for (i64 &x : u)
          x = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
        // Krylov iterates of u under the row action.
        std::vector<std::vector<i64>> it{u};
        poly minpoly;
        for (;;) {
          const std::vector<i64> &last = it.back();
          std::vector<i64> nxt(static_cast<std::size_t>(d), 0);
          for (int c = 0; c < d; ++c) {
            i64 acc = 0;
            for (int r = 0; r < d; ++r)
              acc = (acc + last[static_cast<std::size_t>(r)] * a.at(r, c)) % p;
            nxt[static_cast<std::size_t>(c)] = acc;
          }
          matrix sys(d, static_cast<int>(it.size()));
          for (int r = 0; r < d; ++r)
            for (std::size_t cdx = 0; cdx < it.size(); ++cdx)
              sys.at(r, static_cast<int>(cdx)) =
                  it[cdx][static_cast<std::size_t>(r)];
          bool dependent = true;
          std::vector<i64> coeff;
          try {
            coeff = solve(sys, nxt, p);
          } catch (const config_error &) {
            dependent = false;
          }
          if (dependent) {
            minpoly.assign(it.size() + 1, 0);
            for (std::size_t cdx = 0; cdx < it.size(); ++cdx)
              minpoly[cdx] = norm(-coeff[cdx], p);
            minpoly.back() = 1;
            break;
          }
          it.push_back(std::move(nxt));
        }
        for (i64 lambda : roots_of_split_poly(minpoly, p, rng)) {
          bool known = false;
          for (i64 x : eigs)
            known |= (x == lambda);
          if (known)
            continue;
          eigs.push_back(lambda);
          // Eigenspace rows in sp-coordinates: kernel of (a - lambda I)
          // acting on row vectors, i.e. of its transpose.
          matrix shifted(d, d);
          for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
              shifted.at(r, c) = subm(a.at(c, r), c == r ? lambda : 0, p);
          matrix ker = kernel_basis(shifted, p);
          matrix lifted(ker.rows, k);
          for (int r = 0; r < ker.rows; ++r)
            for (int c = 0; c < k; ++c) {
              i64 acc = 0;
              for (int s = 0; s < d; ++s)
                acc = (acc + ker.at(r, s) * sp.at(s, c)) % p;
              lifted.at(r, c) = acc;
            }
          covered += lifted.rows;
          found.push_back(std::move(lifted));
        }
      }
      for (matrix &f : found)
        next.push_back(std::move(f));
    }
    spaces = std::move(next);
    bool all_split = true;
    for (const matrix &sp : spaces)
      all_split &= (sp.rows == 1);
    if (all_split)
      break;
  }
  if (static_cast<int>(spaces.size()) != k)
    throw config_error("class matrices failed to separate the characters");

  // Normalize each eigenvector to central-character form (value 1 on the
  // identity class), recover the degree, then the mod-p character row.
  std::vector<std::pair<long long, std::vector<i64>>> mod_rows;
  for (const matrix &sp : spaces) {
    std::vector<i64> v(static_cast<std::size_t>(k));
    if (sp.at(0, 0) == 0)
      throw config_error("central character vanishes on the identity class");
    i64 inv0 = invm(sp.at(0, 0), p);
    for (int c = 0; c < k; ++c)
      v[static_cast<std::size_t>(c)] = mulm(sp.at(0, c), inv0, p);
    // 1/degree^2 = sum_c v(c) v(c*) / (|C_c| |G|) from row orthogonality.
    i64 s = 0;
    for (int c = 0; c < k; ++c) {
      i64 sz = static_cast<i64>(t.classes.class_size(c));
      s = addm(s,
               mulm(mulm(v[static_cast<std::size_t>(c)],
                         v[static_cast<std::size_t>(
                             t.classes.inverse_class(c))],
                         p),
                    invm(sz, p), p),
               p);
    }
    i64 deg2 = mulm(norm(n, p), invm(s, p), p);
    long long degree = std::llround(std::sqrt(static_cast<double>(deg2)));
    if (degree * degree != deg2 || degree <= 0 || degree * degree > n)
      throw config_error("character degree is not a small integer square root");
    std::vector<i64> chi(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      i64 sz = static_cast<i64>(t.classes.class_size(c));
      chi[static_cast<std::size_t>(c)] =
          mulm(mulm(v[static_cast<std::size_t>(c)], norm(degree, p), p),
               invm(sz, p), p);
    }
    mod_rows.emplace_back(degree, std::move(chi));
  }

  for (auto &[degree, chi] : mod_rows) {
    t.rows.push_back(
        detail::lift_row(t.classes, t.ctx, p, root, degree, chi));
    t.degrees.push_back(degree);
  }

  // Canonical row order: by degree, then lexicographically by coordinates.
  std::vector<int> idx(t.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (t.degrees[static_cast<std::size_t>(x)] !=
        t.degrees[static_cast<std::size_t>(y)])
      return t.degrees[static_cast<std::size_t>(x)] <
             t.degrees[static_cast<std::size_t>(y)];
    return t.rows[static_cast<std::size_t>(x)] <
           t.rows[static_cast<std::size_t>(y)];
  });
  std::vector<long long> deg2;
  std::vector<std::vector<cyc>> rows2;
  for (int i : idx) {
    deg2.push_back(t.degrees[static_cast<std::size_t>(i)]);
    rows2.push_back(std::move(t.rows[static_cast<std::size_t>(i)]));
  }
  t.degrees = std::move(deg2);
  t.rows = std::move(rows2);

  // Exact verification: degrees, trivial row, and the first orthogonality
  // relation over the cyclotomic integers (which pins the square table).
  long long degsum = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.ctx.int_value(t.rows[r][0]) != t.degrees[r])
      throw config_error("table row does not start with its degree");
    degsum += t.degrees[r] * t.degrees[r];
    bool all_one = true;
    for (const cyc &v : t.rows[r])
      all_one &= (v == t.ctx.from_int(1));
    if (all_one)
      t.trivial = static_cast<int>(r);
  }
  if (degsum != n)
    throw config_error("degree squares do not sum to the group order");
  if (t.trivial < 0)
    throw config_error("trivial character missing from the table");
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t s = r; s < t.rows.size(); ++s) {
      cyc acc = t.ctx.zero();
      for (int c = 0; c < k; ++c)
        acc = t.ctx.add(
            std::move(acc),
            t.ctx.scale(t.ctx.mul(t.rows[r][static_cast<std::size_t>(c)],
                                  t.ctx.conj(
                                      t.rows[s][static_cast<std::size_t>(c)])),
                        static_cast<long long>(t.classes.class_size(c))));
      if (!t.ctx.is_int(acc) ||
          t.ctx.int_value(acc) != (r == s ? n : 0))
        throw config_error("character rows fail orthogonality");
    }
  return t;
}

// --------------------------------------------------------------------------
// Derived quantities.

// Values of the permutation character (fixed-point counts) on each class.
inline std::vector<long long> permutation_character(const char_table &t) {
  std::vector<long long> out;
  for (int c = 0; c < t.num_classes(); ++c) {
    const perm &rep =
        t.classes.elements[static_cast<std::size_t>(t.classes.reps[c])];
    long long fx = 0;
    for (std::size_t i = 0; i < rep.degree(); ++i)
      fx += (rep[static_cast<int>(i)] == static_cast<int>(i));
    out.push_back(fx);
  }
  return out;
}

// Multiplicity of each irreducible in a rational class function, by the
// inner product; throws if the input is not a character combination.
inline std::vector<long long>
decompose_class_function(const char_table &t,
                         const std::vector<long long> &values) {
  std::vector<long long> out;
  for (int r = 0; r < t.num_irreps(); ++r) {
    cyc acc = t.ctx.zero();
    for (int c = 0; c < t.num_classes(); ++c)
      acc = t.ctx.add(
          std::move(acc),
          t.ctx.scale(t.ctx.conj(t.rows[static_cast<std::size_t>(r)]
                                       [static_cast<std::size_t>(c)]),
                      values[static_cast<std::size_t>(c)] *
                          static_cast<long long>(t.classes.class_size(c))));
    out.push_back(
        t.ctx.int_value(t.ctx.divide_int(std::move(acc), t.group_order)));
  }
  return out;
}

// Does the class function decompose as trivial + one other irreducible
// (each once)?  Returns that other row if so.  For the natural permutation
// character this is the classical 2-transitivity criterion.
inline std::optional<int>
splits_as_one_plus_irreducible(const char_table &t,
                               const std::vector<long long> &values) {
  std::vector<long long> mult = decompose_class_function(t, values);
  if (mult[static_cast<std::size_t>(t.trivial)] != 1)
    return std::nullopt;
  int other = -1;
  for (int r = 0; r < t.num_irreps(); ++r) {
    if (r == t.trivial)
      continue;
    if (mult[static_cast<std::size_t>(r)] == 1 && other < 0)
      other = r;
    else if (mult[static_cast<std::size_t>(r)] != 0)
      return std::nullopt;
  }
  if (other < 0)
    return std::nullopt;
  return other;
}

// Multiplicity of the trivial character of a subgroup H in each restricted
// irreducible: (1/|H|) sum_{h in H} chi(h).  Zero exactly when the
// irreducible has no nonzero H-fixed vector.
inline std::vector<long long>
fixed_vector_multiplicity(const char_table &t, const perm_group &h,
                          std::uint64_t cap = 0) {
  std::vector<long long> counts(static_cast<std::size_t>(t.num_classes()), 0);
  h.for_each_element(
      [&](const perm &x) {
        auto it = t.classes.elt_index.find(x);
        if (it == t.classes.elt_index.end())
          throw config_error("subgroup element missing from the parent group");
        ++counts[static_cast<std::size_t>(
            t.classes.class_of[static_cast<std::size_t>(it->second)])];
      },
      cap);
  long long order = 0;
  for (long long c : counts)
    order += c;
  std::vector<long long> out;
  for (int r = 0; r < t.num_irreps(); ++r) {
    cyc acc = t.ctx.zero();
    for (int c = 0; c < t.num_classes(); ++c)
      acc = t.ctx.add(std::move(acc),
                      t.ctx.scale(t.rows[static_cast<std::size_t>(r)]
                                        [static_cast<std::size_t>(c)],
                                  counts[static_cast<std::size_t>(c)]));
    out.push_back(t.ctx.int_value(t.ctx.divide_int(std::move(acc), order)));
  }
  return out;
}

} // namespace olab
