#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "olab/building.hpp"
#include "oracles.hpp"

using namespace olab;

namespace {

// Two free (non-commuting) involutive generators, three colors each: the
// window is a (3,3)-biregular chamber/residue tree with singleton blocks.
coxeter_system two_block_33() {
  coxeter_system c;
  c.gens = {"a", "b"};
  c.commute = {{0, 0}, {0, 0}};
  c.thickness = {3, 3};
  return c;
}

// a and b commute, c is free: blocks {a,b} and {c}, so one residue class
// is a 3x3 grid of chambers and the other a bare 3-panel.
coxeter_system rank3_mixed() {
  coxeter_system c;
  c.gens = {"a", "b", "c"};
  c.commute = {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
  c.thickness = {3, 3, 3};
  return c;
}

std::vector<perm_group> same_locals(int rank, const perm_group &g) {
  return std::vector<perm_group>(static_cast<std::size_t>(rank), g);
}

// Independent word-problem oracle: the canonical form of a word is the
// lexicographically least among the shortest words reachable by swapping
// adjacent commuting letters and cancelling adjacent equal letters.  Two
// words are equal in the group exactly when their canonical forms agree,
// so this decides equality without touching the library's syllable code.
std::vector<int> brute_canonical(const coxeter_system &c,
                                 const std::vector<int> &w) {
  std::set<std::vector<int>> seen{w};
  std::vector<std::vector<int>> stack{w};
  std::vector<int> best = w;
  auto better = [](const std::vector<int> &x, const std::vector<int> &y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  };
  while (!stack.empty()) {
    std::vector<int> v = stack.back();
    stack.pop_back();
    if (better(v, best))
      best = v;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1]) {
        std::vector<int> u = v;
        u.erase(u.begin() + static_cast<long>(i),
                u.begin() + static_cast<long>(i) + 2);
        if (seen.insert(u).second)
          stack.push_back(u);
      } else if (c.commute[v[i]][v[i + 1]]) {
        std::vector<int> u = v;
        std::swap(u[i], u[i + 1]);
        if (seen.insert(u).second)
          stack.push_back(u);
      }
    }
  }
  return best;
}

// Fixed points of a generated group: singleton orbits.
vset fixed_points(const building &b, const perm_group &g) {
  vset out;
  for (int v = 0; v < b.t.n(); ++v)
    if (point_orbit(g.generators(), v).size() == 1)
      out.push_back(v);
  return out;
}

} // namespace

TEST_CASE("commuting generators split into blocks when the relation is "
          "transitive on neighbors") {
  star_partition two = partition_star(two_block_33());
  REQUIRE(two.ok);
  REQUIRE(two.blocks == std::vector<std::vector<int>>{{0}, {1}});

  star_partition mixed = partition_star(rank3_mixed());
  REQUIRE(mixed.ok);
  REQUIRE(mixed.blocks == std::vector<std::vector<int>>{{0, 1}, {2}});

  // a-b and b-c commute but a-c does not: no block partition exists, and
  // the offending triple comes back as the witness.
  coxeter_system chain;
  chain.gens = {"a", "b", "c"};
  chain.commute = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  chain.thickness = {3, 3, 3};
  star_partition bad = partition_star(chain);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.violation == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("system validation rejects thin panels and malformed tables") {
  coxeter_system thin = two_block_33();
  thin.thickness[1] = 2;
  REQUIRE_THROWS_AS(thin.validate(), config_error);
  REQUIRE_THROWS_AS(build_building(thin, 1), config_error);

  coxeter_system empty;
  REQUIRE_THROWS_AS(empty.validate(), config_error);

  coxeter_system ragged = two_block_33();
  ragged.commute.pop_back();
  REQUIRE_THROWS_AS(ragged.validate(), config_error);

  REQUIRE_THROWS_AS(build_building(two_block_33(), -1), config_error);
}

TEST_CASE("normal forms agree with a brute-force rewriting oracle") {
  coxeter_system cx = rank3_mixed();

  // Spot values: within-block letters toggle, across blocks they stack.
  REQUIRE(word_str(cx, normal_form(cx, {0, 1, 0})) == "b");
  REQUIRE(word_str(cx, normal_form(cx, {0, 0})) == "e");
  REQUIRE(normal_form(cx, {}).empty());
  REQUIRE(word_str(cx, normal_form(cx, {0, 2, 0, 2})) == "a.c.a.c");
  REQUIRE(normal_form(cx, {0, 2, 0, 2}).size() == 4);
  REQUIRE(word_str(cx, normal_form(cx, {0, 1, 2, 1, 0})) == "ab.c.ab");
  REQUIRE(normal_form(cx, {0, 1, 2, 1, 0}).size() == 3);

  // The free (non-commuting) pair stacks instead of toggling.
  coxeter_system fr = two_block_33();
  REQUIRE(word_str(fr, normal_form(fr, {0, 1, 0})) == "a.b.a");

  // Exhaustive sweep: words of length <= 6 over three letters.  Group them
  // by the oracle's canonical form; each class must carry exactly one
  // normal form and distinct classes must carry distinct normal forms.
  std::map<std::vector<int>, std::set<std::string>> by_class;
  std::map<std::string, std::set<std::vector<int>>> by_nf;
  std::vector<int> w;
  long long words = 0;
  auto rec = [&](auto &&self, int len) -> void {
    ++words;
    std::vector<int> canon = brute_canonical(cx, w);
    word_nf nf = normal_form(cx, w);
    by_class[canon].insert(word_str(cx, nf));
    by_nf[word_str(cx, nf)].insert(canon);
    // a normal form is reduced: its letter count is the shortest length
    std::size_t letters = 0;
    for (const syllable &s : nf)
      letters += s.letters.size();
    REQUIRE(letters == canon.size());
    // and re-normalizing its own letters reproduces it
    std::vector<int> flat;
    for (const syllable &s : nf)
      for (int x : s.letters)
        flat.push_back(x);
    REQUIRE(normal_form(cx, flat) == nf);
    if (len == 6)
      return;
    for (int x = 0; x < 3; ++x) {
      w.push_back(x);
      self(self, len + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
  REQUIRE(words == 1093);
  REQUIRE(by_class.size() == 85);
  REQUIRE(by_nf.size() == 85);
  for (const auto &[canon, nfs] : by_class)
    REQUIRE(nfs.size() == 1);
  for (const auto &[nf, canons] : by_nf)
    REQUIRE(canons.size() == 1);
}

TEST_CASE("windows grow along gallery depth with the frozen profile") {
  // (vertices, chambers, residues, tree radius) by gallery depth
  const int want[5][4] = {{3, 1, 2, 1},
                          {7, 5, 2, 2},
                          {19, 13, 6, 4},
                          {43, 29, 14, 6},
                          {91, 61, 30, 8}};
  for (int d = 0; d <= 4; ++d) {
    building b = build_building(two_block_33(), d);
    INFO("depth " << d);
    REQUIRE(b.t.n() == want[d][0]);
    REQUIRE(static_cast<int>(b.chambers().size()) == want[d][1]);
    REQUIRE(static_cast<int>(b.residues().size()) == want[d][2]);
    REQUIRE(b.t.radius() == want[d][3]);
    REQUIRE(b.gallery_depth == d);
    REQUIRE(b.is_chamber(b.t.base()));
    // interior residues carry all their chambers; boundary chambers are
    // leaves of the incidence tree
    for (int r : b.residues())
      if (b.t.degree(r) > 1)
        REQUIRE(b.t.degree(r) == b.t.target_degree(r));
  }
  building m = build_building(rank3_mixed(), 2);
  REQUIRE(m.t.n() == 55);
  REQUIRE(m.chambers().size() == 43);
  REQUIRE(m.residues().size() == 12);
  // grid residues hold 9 chambers, bare panels hold 3
  for (int r : m.residues())
    if (m.t.degree(r) > 1)
      REQUIRE(m.t.degree(r) == (m.res_block[r] == 0 ? 9 : 3));
}

TEST_CASE("window colorings are legal at every residue") {
  for (int which = 0; which < 2; ++which) {
    building b = which == 0 ? build_building(two_block_33(), 3)
                            : build_building(rank3_mixed(), 2);
    for (int c : b.chambers()) {
      REQUIRE(b.colors[c].size() == static_cast<std::size_t>(b.cox.rank()));
      for (int i = 0; i < b.cox.rank(); ++i) {
        REQUIRE(b.colors[c][i] >= 0);
        REQUIRE(b.colors[c][i] < b.cox.thickness[i]);
      }
    }
    for (int r : b.residues()) {
      if (b.t.degree(r) < b.t.target_degree(r))
        continue;
      int k = b.res_block[r];
      vset ch = b.residue_chambers(r);
      // restricted to the block, the color tuples are pairwise distinct
      // (and therefore exhaust the product, by counting)
      std::set<std::vector<int>> seen;
      for (int c : ch) {
        std::vector<int> key;
        for (int i : b.blocks[k])
          key.push_back(b.colors[c][i]);
        REQUIRE(seen.insert(key).second);
      }
      // off the block, all chambers of the residue agree
      for (int i = 0; i < b.cox.rank(); ++i) {
        if (b.block_of[i] == k)
          continue;
        for (int c : ch)
          REQUIRE(b.colors[c][i] == b.colors[ch[0]][i]);
      }
    }
  }
}

TEST_CASE("chamber distance words are reduced, reversible, and measure "
          "galleries") {
  for (int which = 0; which < 2; ++which) {
    building b = which == 0 ? build_building(two_block_33(), 3)
                            : build_building(rank3_mixed(), 2);
    for (int c : b.chambers())
      for (int d : b.chambers()) {
        word_nf w = b.delta(c, d);
        // already in normal form
        std::vector<int> flat;
        for (const syllable &s : w)
          for (int x : s.letters)
            flat.push_back(x);
        REQUIRE(normal_form(b.cox, flat) == w);
        // reversal gives the distance word of the swapped pair
        word_nf r = b.delta(d, c);
        std::reverse(r.begin(), r.end());
        REQUIRE(r == w);
        // letter count equals the gallery length
        REQUIRE(static_cast<long long>(flat.size()) ==
                b.gallery_length(c, d));
      }
  }
  building b = build_building(two_block_33(), 2);
  REQUIRE(b.delta(b.t.base(), b.t.base()).empty());
}

TEST_CASE("projection onto a residue is the unique gallery minimizer") {
  building b = build_building(two_block_33(), 2);
  for (int r : b.residues()) {
    if (b.t.degree(r) < b.t.target_degree(r))
      continue;
    vset ch = b.residue_chambers(r);
    for (int d : b.chambers()) {
      int p = projection(b, r, d);
      REQUIRE(vcontains(ch, p));
      for (int f : ch)
        if (f != p)
          REQUIRE(b.gallery_length(d, p) < b.gallery_length(d, f));
      if (vcontains(ch, d))
        REQUIRE(p == d);
    }
  }
  REQUIRE_THROWS_AS(projection(b, b.t.base(), b.t.base()), config_error);
}

TEST_CASE("wings partition the window and intersect letterwise") {
  building m = build_building(rank3_mixed(), 2);
  int base = m.t.base();
  int R = m.chamber_residue(base, 0);
  vset ch = m.residue_chambers(R);
  REQUIRE(ch.size() == 9);

  // full-block wings over the grid residue: one per chamber, disjoint,
  // covering everything; the base keeps the lion's share
  std::vector<vset> wings;
  std::size_t total = 0;
  for (int c : ch) {
    wings.push_back(wing(m, c, {0, 1}));
    total += wings.back().size();
  }
  REQUIRE(total == m.chambers().size());
  for (std::size_t i = 0; i < wings.size(); ++i)
    for (std::size_t j = i + 1; j < wings.size(); ++j)
      REQUIRE(vintersect(wings[i], wings[j]).empty());
  REQUIRE(wing(m, base, {0, 1}).size() == 19);
  for (int c : ch)
    if (c != base)
      REQUIRE(wing(m, c, {0, 1}).size() == 3);

  // single-letter wings are coarser and meet in the full-block wing
  vset xa = wing(m, base, {0});
  vset xb = wing(m, base, {1});
  REQUIRE(xa.size() == 25);
  REQUIRE(xb.size() == 25);
  REQUIRE(vintersect(xa, xb) == wing(m, base, {0, 1}));

  // singleton blocks: the same partition statement on the free pair
  building b = build_building(two_block_33(), 2);
  int Ra = b.chamber_residue(b.t.base(), 0);
  std::size_t tot = 0;
  std::vector<std::size_t> sizes;
  for (int c : b.residue_chambers(Ra)) {
    vset wv = wing(b, c, {0});
    sizes.push_back(wv.size());
    tot += wv.size();
  }
  REQUIRE(tot == b.chambers().size());
  REQUIRE(sizes == std::vector<std::size_t>{7, 3, 3});

  // a boundary chamber lacks its off-parent residue, so that wing has no
  // window to live in
  int boundary = -1;
  for (int c : b.chambers())
    if (b.t.degree(c) == 1)
      boundary = c;
  REQUIRE(boundary >= 0);
  int parent_block = b.res_block[b.t.parent(boundary)];
  vset off{parent_block == 0 ? 1 : 0};
  REQUIRE_THROWS_AS(wing(b, boundary, off), window_error);
  REQUIRE_THROWS_AS(wing(b, b.t.base(), vset{}), config_error);
}

TEST_CASE("locally allowed moves are exactly the generated window group") {
  perm_group s3 = symmetric_group(3);
  perm_group c3 = cyclic_group(3);

  building b1 = build_building(two_block_33(), 1);
  universal_census_t cen = universal_census(b1, same_locals(2, s3));
  REQUIRE(cen.ambient_order == 8);
  REQUIRE(cen.accepted == 4);
  REQUIRE(cen.generated_order == 4);
  REQUIRE(cen.exact);

  universal_census_t cyc = universal_census(b1, same_locals(2, c3));
  REQUIRE(cyc.accepted == 1);
  REQUIRE(cyc.generated_order == 1);
  REQUIRE(cyc.exact);

  building b2 = build_building(two_block_33(), 2);
  universal_census_t cen2 = universal_census(b2, same_locals(2, s3));
  REQUIRE(cen2.ambient_order == 128);
  REQUIRE(cen2.accepted == 64);
  REQUIRE(cen2.generated_order == 64);
  REQUIRE(cen2.exact);
  REQUIRE(universal_census(b2, same_locals(2, c3)).exact);

  building m1 = build_building(rank3_mixed(), 1);
  universal_census_t mix = universal_census(m1, same_locals(3, s3));
  REQUIRE(mix.ambient_order == 80640);
  REQUIRE(mix.accepted == 8);
  REQUIRE(mix.generated_order == 8);
  REQUIRE(mix.exact);

  // the ambient enumeration is capacity-guarded
  building m2 = build_building(rank3_mixed(), 2);
  REQUIRE_THROWS_AS(universal_census(m2, same_locals(3, s3)),
                    capacity_error);

  // membership is a per-panel filter: a transposition move passes the
  // symmetric rule and fails the cyclic one
  std::vector<perm> gens = universal_generators(b2, same_locals(2, s3));
  REQUIRE(gens.size() == 6);
  panel_check rej = universal_member(b2, same_locals(2, c3), gens[0]);
  REQUIRE_FALSE(rej.ok);
  REQUIRE(rej.letter >= 0);
  REQUIRE_FALSE(rej.reason.empty());
  REQUIRE(universal_member(b2, same_locals(2, s3), gens[0]).ok);
  REQUIRE(universal_member(b2, same_locals(2, c3),
                           perm(static_cast<std::size_t>(b2.t.n())))
              .ok);

  // local groups must be transitive for any of this to make sense
  REQUIRE_THROWS_AS(universal_group(b2, same_locals(2, perm_group(3, {}))),
                    config_error);
}

TEST_CASE("window group orders double per new interior panel") {
  perm_group s3 = symmetric_group(3);
  building b3 = build_building(two_block_33(), 3);
  REQUIRE(universal_group(b3, same_locals(2, s3)).order() == 16384);
  building b4 = build_building(two_block_33(), 4);
  REQUIRE(universal_group(b4, same_locals(2, s3)).order() == 1073741824);
}

TEST_CASE("fixing a residue ball factorizes across its half trees") {
  perm_group s3 = symmetric_group(3);
  building b = build_building(two_block_33(), 3);
  perm_group u = universal_group(b, same_locals(2, s3));
  for (int k = 0; k < 2; ++k) {
    ipj_report rep = verify_ipj(b, u, k);
    INFO("block " << k);
    REQUIRE(rep.holds);
    REQUIRE(rep.rows.size() == 7);
    REQUIRE(rep.rows[0].whole == 8192);
    for (const ipj_row &row : rep.rows) {
      REQUIRE(row.holds);
      REQUIRE(row.whole == row.product);
      REQUIRE(row.factors.size() == 3);
    }
  }
  // the ambient shape-preserving group factorizes the same way
  ipj_report amb = verify_ipj(b, truncated_group(b.t, group_spec::full_aut()), 0);
  REQUIRE(amb.holds);
  REQUIRE(amb.rows[0].whole == 8192);
  REQUIRE_THROWS_AS(verify_ipj(b, u, 2), config_error);
}

TEST_CASE("a coordinated two-branch rotation breaks the factorization") {
  // Compose two window generators that act below different chambers of the
  // base residue: the composite fixes the residue ball, but no single half
  // tree fixator can reproduce it.
  perm_group s3 = symmetric_group(3);
  building b = build_building(two_block_33(), 2);
  std::vector<perm> gens = universal_generators(b, same_locals(2, s3));
  int Ra = b.chamber_residue(b.t.base(), 0);
  vset cha = b.residue_chambers(Ra);
  perm rot(static_cast<std::size_t>(b.t.n()));
  int used = 0;
  for (const perm &g : gens) {
    bool fixes_ball = (g[Ra] == Ra);
    for (int c : cha)
      if (g[c] != c)
        fixes_ball = false;
    if (!fixes_ball)
      continue;
    for (int c : cha) {
      if (c == b.t.base())
        continue;
      bool below = false;
      for (int v = 0; v < b.t.n(); ++v)
        if (g[v] != v && b.t.distance(v, c) < b.t.distance(v, b.t.base()))
          below = true;
      if (below && used < 2) {
        rot = rot * g;
        ++used;
        break;
      }
    }
    if (used == 2)
      break;
  }
  REQUIRE(used == 2);
  perm_group rotg(static_cast<std::size_t>(b.t.n()), {rot});
  REQUIRE(rotg.order() == 2);
  ipj_report rep = verify_ipj(b, rotg, 0);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.rows.size() == 3);
  REQUIRE(rep.rows[0].residue == 1);
  REQUIRE(rep.rows[0].whole == 2);
  REQUIRE(rep.rows[0].product == 1);
  REQUIRE_FALSE(rep.rows[0].holds);
  REQUIRE(rep.rows[1].whole == 2);
  REQUIRE(rep.rows[1].product == 2);
  REQUIRE(rep.rows[1].holds);
  REQUIRE(rep.rows[2].holds);
}

TEST_CASE("pinned closures equal group-side fixed points on windows") {
  perm_group s3 = symmetric_group(3);
  for (int which = 0; which < 2; ++which) {
    building b = which == 0 ? build_building(two_block_33(), 2)
                            : build_building(rank3_mixed(), 1);
    std::vector<perm_group> locals = same_locals(b.cox.rank(), s3);
    perm_group u = universal_group(b, locals);
    INFO((which == 0 ? "free pair" : "mixed blocks"));
    for (int v = 0; v < b.t.n(); ++v) {
      perm_group fx = fixator(u, vset{v});
      REQUIRE(fixed_points(b, fx) == fixed_closure(b, locals, vset{v}, true));
    }
    for (int c : b.chambers()) {
      if (b.t.margin(vset{c}) < 2)
        continue;
      vset a0 = b.t.ball(c, 2);
      perm_group fx = fixator(u, a0);
      REQUIRE(fixed_points(b, fx) == fixed_closure(b, locals, a0, true));
    }
    for (std::size_t i = 0; i < b.chambers().size(); i += 3)
      for (std::size_t j = i + 1; j < b.chambers().size(); j += 4) {
        vset a0{b.chambers()[i], b.chambers()[j]};
        std::sort(a0.begin(), a0.end());
        perm_group fx = fixator(u, a0);
        REQUIRE(fixed_points(b, fx) == fixed_closure(b, locals, a0, true));
      }
  }

  // the anchor pins the base and its connecting path; the unanchored
  // closure of a deep ball never reaches back to it
  building b3 = build_building(two_block_33(), 3);
  std::vector<perm_group> locals = same_locals(2, s3);
  int deep = -1;
  for (int c : b3.chambers())
    if (b3.t.depth(c) == 4)
      deep = c;
  vset ball = b3.t.ball(deep, 2);
  vset unanchored = fixed_closure(b3, locals, ball, false);
  vset anchored = fixed_closure(b3, locals, ball, true);
  REQUIRE(vsubset(ball, unanchored));
  REQUIRE(vsubset(unanchored, anchored));
  REQUIRE_FALSE(vcontains(unanchored, b3.t.base()));
  REQUIRE(vcontains(anchored, b3.t.base()));

  // cyclic locals have trivial color stabilizers, so one pinned chamber
  // forces the entire window
  building b2 = build_building(two_block_33(), 2);
  std::vector<perm_group> cyc = same_locals(2, cyclic_group(3));
  REQUIRE(fixed_closure(b2, cyc, vset{2}, false).size() ==
          static_cast<std::size_t>(b2.t.n()));

  REQUIRE_THROWS_AS(fixed_closure(b2, cyc, vset{}, false), config_error);
}

TEST_CASE("fixator-order equivalence holds for 2-transitive locals once "
          "anchor pinning is classified") {
  perm_group s3 = symmetric_group(3);
  std::vector<perm_group> locals = same_locals(2, s3);

  building b2 = build_building(two_block_33(), 2);
  h_v1_report r2 = verify_h_v1(b2, universal_group(b2, locals), locals);
  REQUIRE(r2.holds);
  REQUIRE_FALSE(r2.exploratory);
  REQUIRE_FALSE(r2.vacuous);
  REQUIRE(r2.hyp.pairs_checked == 3);
  REQUIRE(r2.hyp.window_artifacts == 0);
  REQUIRE(r2.hyp.window_clean);

  // one window deeper the anchored scan over-pins eight pairs; all of them
  // are recognized as artifacts of the anchor, none survive as failures
  building b3 = build_building(two_block_33(), 3);
  h_v1_report r3 = verify_h_v1(b3, universal_group(b3, locals), locals);
  REQUIRE(r3.holds);
  REQUIRE(r3.hyp.pairs_checked == 378);
  REQUIRE(r3.hyp.window_artifacts == 8);
  REQUIRE_FALSE(r3.hyp.window_clean);
  REQUIRE(r3.hyp.failures.empty());
  REQUIRE(r3.hyp.max_depth_seen == 5);

  // the smallest window holds no member pair at all
  building b0 = build_building(two_block_33(), 0);
  h_v1_report r0 = verify_h_v1(b0, universal_group(b0, locals), locals);
  REQUIRE(r0.vacuous);
  REQUIRE(r0.holds);
}

TEST_CASE("cyclic locals genuinely break the fixator-order equivalence") {
  std::vector<perm_group> cyc = same_locals(2, cyclic_group(3));
  building b = build_building(two_block_33(), 2);
  h_v1_report rep = verify_h_v1(b, universal_group(b, cyc), cyc);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.exploratory);
  REQUIRE(rep.weak_locals == std::vector<int>{0, 1});
  REQUIRE(rep.hyp.failures.size() == 4);
  for (const hypothesis_failure &f : rep.hyp.failures) {
    REQUIRE(f.kind == "fixator");
    REQUIRE(f.classification == "genuine");
    // genuineness is decided by the unanchored closure, which the trivial
    // color stabilizers blow up to the whole window
    REQUIRE(vsubset(f.sub, fixed_closure(b, cyc, f.sup, false)));
  }
  REQUIRE(rep.hyp.failures[0].sub == vset{0, 1, 2, 3});
  REQUIRE(rep.hyp.failures[0].sup == vset{0, 4, 5, 6});
}

TEST_CASE("equal distance words from the base land in one window orbit") {
  perm_group s3 = symmetric_group(3);
  std::vector<perm_group> locals = same_locals(2, s3);
  building b3 = build_building(two_block_33(), 3);
  perm_group u3 = universal_group(b3, locals);
  const long long pairs[4] = {0, 2, 14, 70};
  for (int r = 1; r <= 3; ++r) {
    delta2t_report rep = delta_two_transitivity(b3, u3, r);
    INFO("radius " << r);
    REQUIRE(rep.holds);
    REQUIRE(rep.pairs == pairs[r]);
  }
  building b4 = build_building(two_block_33(), 4);
  delta2t_report r4 =
      delta_two_transitivity(b4, universal_group(b4, locals), 4);
  REQUIRE(r4.holds);
  REQUIRE(r4.pairs == 310);

  // cyclic locals leave nothing to move chambers with: two base neighbors
  // at the same one-letter distance sit in different orbits
  std::vector<perm_group> cyc = same_locals(2, cyclic_group(3));
  building b2 = build_building(two_block_33(), 2);
  delta2t_report bad =
      delta_two_transitivity(b2, universal_group(b2, cyc), 2);
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness_a == 2);
  REQUIRE(bad.witness_b == 3);
  REQUIRE(word_str(b2.cox, bad.witness_nf) == "a");

  REQUIRE_THROWS_AS(delta_two_transitivity(b2, universal_group(b2, cyc), 3),
                    window_error);
  REQUIRE_THROWS_AS(delta_two_transitivity(b2, universal_group(b2, cyc), -1),
                    config_error);
}

TEST_CASE("one-syllable neighborhoods equal radius-two chamber balls") {
  building b2 = build_building(two_block_33(), 2);
  int margin2 = 0;
  for (int c : b2.chambers()) {
    if (b2.t.margin(vset{c}) < 2)
      continue;
    ++margin2;
    s_delta_result res = s_delta_translation(b2, c);
    REQUIRE(res.equal);
    REQUIRE(res.r_prime.size() == 5);
  }
  REQUIRE(margin2 == 5);

  building b4 = build_building(two_block_33(), 4);
  margin2 = 0;
  for (int c : b4.chambers()) {
    if (b4.t.margin(vset{c}) < 2)
      continue;
    ++margin2;
    s_delta_result res = s_delta_translation(b4, c);
    REQUIRE(res.equal);
    REQUIRE(res.r_prime.size() == 5);
  }
  REQUIRE(margin2 == 29);

  // a grid residue packs nine chambers into one syllable: 1 + 8 + 2
  building m = build_building(rank3_mixed(), 2);
  s_delta_result mres = s_delta_translation(m, m.t.base());
  REQUIRE(mres.equal);
  REQUIRE(mres.r_prime.size() == 11);

  building b0 = build_building(two_block_33(), 0);
  REQUIRE_THROWS_AS(s_delta_translation(b0, b0.t.base()), window_error);
  REQUIRE_THROWS_AS(s_delta_translation(b2, b2.residues()[0]), config_error);
}
